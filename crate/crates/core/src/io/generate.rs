//! Seeded random graphs.
//!
//! The stream is ChaCha8 (`rand_chacha`), seeded with `seed_from_u64(seed)`
//! and positioned with `set_stream(stream)`. Each candidate pair draws one
//! `gen_bool(p)` in lexicographic order: `(u, v)` with `u < v` for general
//! graphs, `(a, b)` with `a` in `0..n_a` and `b` in `n_a..n_a + n_b` for
//! bipartite graphs. The same `(seed, stream, params)` yields the same graph
//! on every platform.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::io::format::GraphDocument;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GraphKind {
    General { n: usize, p: f64 },
    Bipartite { n_a: usize, n_b: usize, p: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("edge probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("average degree {0} is not a finite non-negative number")]
    Degree(f64),
    #[error("{what} must be at least {min}, got {got}")]
    Size { what: &'static str, min: usize, got: usize },
    #[error("{m} edges requested but only {max} fit")]
    TooDense { m: usize, max: usize },
}

impl GraphKind {
    pub fn validate(&self) -> Result<(), GenerateError> {
        let p = match *self {
            GraphKind::General { n, p } => {
                if n == 0 {
                    return Err(GenerateError::Size { what: "n", min: 1, got: n });
                }
                p
            }
            GraphKind::Bipartite { n_a, n_b, p } => {
                if n_a + n_b == 0 {
                    return Err(GenerateError::Size { what: "n_a + n_b", min: 1, got: 0 });
                }
                p
            }
        };
        if !(0.0..=1.0).contains(&p) {
            return Err(GenerateError::Probability(p));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        match *self {
            GraphKind::General { n, .. } => n,
            GraphKind::Bipartite { n_a, n_b, .. } => n_a + n_b,
        }
    }

    /// `gnp-n8-p0.3-s42`, `bip-12x12-p0.3-s7`; a nonzero stream appends `-i<stream>`.
    pub fn name(&self, seed: u64, stream: u64) -> String {
        let base = match *self {
            GraphKind::General { n, p } => format!("gnp-n{n}-p{p}-s{seed}"),
            GraphKind::Bipartite { n_a, n_b, p } => format!("bip-{n_a}x{n_b}-p{p}-s{seed}"),
        };
        if stream == 0 {
            base
        } else {
            format!("{base}-i{stream}")
        }
    }
}

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// The graph for `(kind, seed, stream)`. Bipartite graphs declare side A = `0..n_a`.
pub fn generate(kind: &GraphKind, seed: u64, stream: u64) -> Result<GraphDocument, GenerateError> {
    kind.validate()?;
    let mut r = rng(seed, stream);
    let mut edges = Vec::new();
    let side_a = match *kind {
        GraphKind::General { n, p } => {
            for u in 0..n {
                for v in u + 1..n {
                    if r.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            None
        }
        GraphKind::Bipartite { n_a, n_b, p } => {
            for a in 0..n_a {
                for b in n_a..n_a + n_b {
                    if r.gen_bool(p) {
                        edges.push((a, b));
                    }
                }
            }
            Some(VertexSet::new(n_a + n_b, 0..n_a))
        }
    };
    Ok(GraphDocument {
        name: kind.name(seed, stream),
        n: kind.n(),
        edges,
        side_a,
        names: None,
    })
}

/// A sparse bipartite graph with `round(avg_deg · (n_a + n_b) / 2)` distinct
/// edges drawn uniformly from `A × B`. Side A is `0..n_a`.
pub fn sparse_bipartite(n_a: usize, n_b: usize, avg_deg: f64, seed: u64) -> Result<(Graph, VertexSet), GenerateError> {
    if !(avg_deg.is_finite() && avg_deg >= 0.0) {
        return Err(GenerateError::Degree(avg_deg));
    }
    let m = (avg_deg * (n_a + n_b) as f64 / 2.0).round() as usize;
    let max = n_a.saturating_mul(n_b);
    if m > max {
        return Err(GenerateError::TooDense { m, max });
    }
    let mut r = rng(seed, 0);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let a = r.gen_range(0..n_a);
        let b = n_a + r.gen_range(0..n_b);
        if seen.insert((a, b)) {
            edges.push((a, b));
        }
    }
    let g = Graph::new(n_a + n_b, edges).expect("generated edges are simple");
    Ok((g, VertexSet::new(n_a + n_b, 0..n_a)))
}
