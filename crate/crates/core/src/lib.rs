//! Critical independent sets, ker and diadem.
//!
//! Bipartite graphs are handled in `O((n + m)·√n)` from one maximum matching;
//! every other graph goes through the bounded enumeration oracle.

pub mod bench;
pub mod critical;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod verify;
