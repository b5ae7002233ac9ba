//! Timing of the bipartite pipeline over doubling sizes.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::critical;
use crate::graph::Bipartition;
use crate::io::generate::{sparse_bipartite, GenerateError};
use crate::matching;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n_a: usize,
    pub n_b: usize,
    pub m: usize,
    pub matching_ms: f64,
    /// ker, diadem, core and corona from the matching.
    pub sets_ms: f64,
    pub total_ms: f64,
    pub mu: usize,
}

/// Times one graph, keeping the fastest of `repeats` runs.
pub fn bench_one(n_a: usize, n_b: usize, avg_deg: f64, seed: u64, repeats: usize) -> Result<BenchRow, GenerateError> {
    let (g, a) = sparse_bipartite(n_a, n_b, avg_deg, seed)?;
    let bp = Bipartition::with_side_a(&g, &a).expect("generated side is valid");
    let mut best: Option<BenchRow> = None;
    for _ in 0..repeats.max(1) {
        let t0 = Instant::now();
        let m = matching::max_matching(&g, &bp);
        let t1 = Instant::now();
        let s = critical::summarize_with_matching(&g, &bp, &m);
        let t2 = Instant::now();
        let row = BenchRow {
            n_a,
            n_b,
            m: g.edge_count(),
            matching_ms: (t1 - t0).as_secs_f64() * 1e3,
            sets_ms: (t2 - t1).as_secs_f64() * 1e3,
            total_ms: (t2 - t0).as_secs_f64() * 1e3,
            mu: s.bundle.mu,
        };
        if best.as_ref().is_none_or(|b| row.total_ms < b.total_ms) {
            best = Some(row);
        }
    }
    Ok(best.unwrap())
}

/// Rows for `(n_a, n_b) / 2^k` with `k = steps − 1, ..., 0`.
pub fn doubling_table(
    n_a: usize,
    n_b: usize,
    avg_deg: f64,
    seed: u64,
    steps: u32,
    repeats: usize,
) -> Result<Vec<BenchRow>, GenerateError> {
    (0..steps.max(1))
        .rev()
        .map(|k| bench_one((n_a >> k).max(1), (n_b >> k).max(1), avg_deg, seed, repeats))
        .collect()
}

/// Growth of total time between consecutive rows, against `n^1.5`.
pub fn render_table(rows: &[BenchRow]) -> String {
    let mut o = String::new();
    writeln!(
        o,
        "{:>9} {:>9} {:>10} {:>12} {:>10} {:>10} {:>8} {:>9}",
        "n_a", "n_b", "m", "matching_ms", "sets_ms", "total_ms", "ratio", "n^1.5"
    )
    .unwrap();
    let mut prev: Option<&BenchRow> = None;
    for r in rows {
        let (ratio, ideal) = match prev {
            Some(p) => {
                let size = (r.n_a + r.n_b) as f64 / (p.n_a + p.n_b) as f64;
                (format!("{:.2}", r.total_ms / p.total_ms.max(1e-9)), format!("{:.2}", size.powf(1.5)))
            }
            None => ("-".into(), "-".into()),
        };
        writeln!(
            o,
            "{:>9} {:>9} {:>10} {:>12.2} {:>10.2} {:>10.2} {:>8} {:>9}",
            r.n_a, r.n_b, r.m, r.matching_ms, r.sets_ms, r.total_ms, ratio, ideal
        )
        .unwrap();
        prev = Some(r);
    }
    o
}
