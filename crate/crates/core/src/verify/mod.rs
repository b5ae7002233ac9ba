//! The identity battery, the constructive closure steps, and the conjecture
//! search.

pub mod battery;
pub mod closure;
pub mod search;

pub use battery::{run_battery, theorem_battery, BatteryOptions, CheckResult, Group, Status, TheoremReport, CHECKS};
pub use closure::{alternating_closure, lemma_expand, ClosureError};
pub use search::{conjecture_search, SearchError, SearchReport};
