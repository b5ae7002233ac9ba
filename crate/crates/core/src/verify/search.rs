//! Random search for graphs with `|ker| + |diadem| > 2α`.
//!
//! Instance `i` is generated from `(seed, stream = i)`, so the set of graphs
//! does not depend on how instances are spread over workers. Results are
//! collected in index order, which makes the report byte-identical for any
//! worker count.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::critical;
use crate::io::format::render_graph;
use crate::io::generate::{generate, GenerateError, GraphKind};
use crate::oracle::{self, OracleBounds, OracleError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Params(#[from] GenerateError),
    #[error("general graphs need the oracle: n = {n} exceeds the bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("could not start {0} workers: {1}")]
    Pool(usize, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub index: u64,
    pub slack: i64,
    /// The graph in the text format.
    pub graph: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub index: u64,
    pub detail: String,
    pub graph: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub schema: u32,
    pub seed: u64,
    pub params: GraphKind,
    pub graphs_tested: u64,
    /// Instances whose polynomial values were compared with enumeration.
    pub oracle_checked: u64,
    /// `None` when no graph was tested.
    pub min_slack: Option<i64>,
    pub slack_histogram: BTreeMap<i64, u64>,
    pub counterexamples: Vec<Counterexample>,
    pub disagreements: Vec<Disagreement>,
}

impl SearchReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && self.disagreements.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut o = String::new();
        let params = match self.params {
            GraphKind::General { n, p } => format!("general n={n} p={p}"),
            GraphKind::Bipartite { n_a, n_b, p } => format!("bipartite n_a={n_a} n_b={n_b} p={p}"),
        };
        writeln!(o, "params: {params}").unwrap();
        writeln!(o, "seed: {}", self.seed).unwrap();
        writeln!(o, "graphs_tested: {}", self.graphs_tested).unwrap();
        writeln!(o, "oracle_checked: {}", self.oracle_checked).unwrap();
        match self.min_slack {
            Some(s) => writeln!(o, "min_slack: {s}").unwrap(),
            None => writeln!(o, "min_slack: none").unwrap(),
        }
        for (slack, count) in &self.slack_histogram {
            writeln!(o, "slack {slack}: {count}").unwrap();
        }
        writeln!(o, "counterexamples: {}", self.counterexamples.len()).unwrap();
        for c in &self.counterexamples {
            writeln!(o, "# instance {} slack {}", c.index, c.slack).unwrap();
            o.push_str(&c.graph);
        }
        writeln!(o, "disagreements: {}", self.disagreements.len()).unwrap();
        for d in &self.disagreements {
            writeln!(o, "# instance {}: {}", d.index, d.detail).unwrap();
            o.push_str(&d.graph);
        }
        o
    }
}

struct Outcome {
    slack: i64,
    oracle_checked: bool,
    disagreement: Option<String>,
}

fn slack(alpha: usize, ker: usize, diadem: usize) -> i64 {
    2 * alpha as i64 - ker as i64 - diadem as i64
}

fn run_one(kind: &GraphKind, seed: u64, index: u64, bounds: &OracleBounds) -> Result<Outcome, OracleError> {
    let doc = generate(kind, seed, index).expect("parameters validated");
    let g = doc.graph();
    match kind {
        GraphKind::General { .. } => {
            let s = oracle::oracle_summary(&g, bounds)?;
            Ok(Outcome {
                slack: slack(s.alpha, s.ker.len(), s.diadem.len()),
                oracle_checked: true,
                disagreement: None,
            })
        }
        GraphKind::Bipartite { .. } => {
            let bp = doc
                .declared_bipartition(&g)
                .expect("bipartite generator declares a side")
                .expect("generated side is valid");
            let p = critical::summarize_bipartite(&g, &bp);
            let mut out = Outcome {
                slack: slack(p.bundle.alpha, p.ker.len(), p.diadem.len()),
                oracle_checked: false,
                disagreement: None,
            };
            if g.n() <= bounds.vertices {
                let s = oracle::oracle_summary(&g, bounds)?;
                out.oracle_checked = true;
                let mut diffs = Vec::new();
                if s.alpha != p.bundle.alpha {
                    diffs.push(format!("alpha {} vs {}", p.bundle.alpha, s.alpha));
                }
                for (name, a, b) in [
                    ("ker", &p.ker, &s.ker),
                    ("diadem", &p.diadem, &s.diadem),
                    ("core", &p.core, &s.core),
                    ("corona", &p.corona, &s.corona),
                ] {
                    if a != b {
                        diffs.push(format!("{name} {a} vs {b}"));
                    }
                }
                if !diffs.is_empty() {
                    out.disagreement = Some(format!("polynomial vs oracle: {}", diffs.join("; ")));
                }
            }
            Ok(out)
        }
    }
}

/// Tests `count` instances of `kind` on `workers` threads (0 picks the
/// number of CPUs).
pub fn conjecture_search(
    kind: &GraphKind,
    seed: u64,
    count: u64,
    workers: usize,
    bounds: &OracleBounds,
) -> Result<SearchReport, SearchError> {
    kind.validate()?;
    if let GraphKind::General { n, .. } = *kind {
        if n > bounds.vertices {
            return Err(SearchError::TooLarge { n, bound: bounds.vertices });
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| SearchError::Pool(workers, e.to_string()))?;
    let outcomes: Vec<Outcome> = pool.install(|| {
        (0..count)
            .into_par_iter()
            .map(|i| run_one(kind, seed, i, bounds).expect("sizes validated against the bound"))
            .collect()
    });

    let mut report = SearchReport {
        schema: 1,
        seed,
        params: *kind,
        graphs_tested: count,
        oracle_checked: 0,
        min_slack: None,
        slack_histogram: BTreeMap::new(),
        counterexamples: Vec::new(),
        disagreements: Vec::new(),
    };
    for (i, o) in outcomes.into_iter().enumerate() {
        let index = i as u64;
        report.oracle_checked += o.oracle_checked as u64;
        report.min_slack = Some(report.min_slack.map_or(o.slack, |m| m.min(o.slack)));
        *report.slack_histogram.entry(o.slack).or_default() += 1;
        let graph = || render_graph(&generate(kind, seed, index).expect("parameters validated"));
        if o.slack < 0 {
            report.counterexamples.push(Counterexample {
                index,
                slack: o.slack,
                graph: graph(),
            });
        }
        if let Some(detail) = o.disagreement {
            report.disagreements.push(Disagreement {
                index,
                detail,
                graph: graph(),
            });
        }
    }
    Ok(report)
}

/// Bipartite instances are checked against the oracle only within `bounds`;
/// this reports whether that holds for `kind`.
pub fn oracle_covers(kind: &GraphKind, bounds: &OracleBounds) -> bool {
    kind.n() <= bounds.vertices
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_search() {
        let r = conjecture_search(&GraphKind::General { n: 6, p: 0.5 }, 1, 0, 1, &OracleBounds::default()).unwrap();
        assert_eq!(r.graphs_tested, 0);
        assert_eq!(r.min_slack, None);
        assert!(r.slack_histogram.is_empty());
    }

    #[test]
    fn bipartite_slack_is_zero_and_workers_do_not_matter() {
        let kind = GraphKind::Bipartite { n_a: 5, n_b: 6, p: 0.3 };
        let b = OracleBounds::default();
        let one = conjecture_search(&kind, 9, 60, 1, &b).unwrap();
        let four = conjecture_search(&kind, 9, 60, 4, &b).unwrap();
        assert_eq!(one.to_json(), four.to_json());
        assert_eq!(one.slack_histogram.keys().collect::<Vec<_>>(), vec![&0]);
        assert_eq!(one.oracle_checked, 60);
        assert!(one.is_clean());
    }

    #[test]
    fn general_bound_enforced() {
        let r = conjecture_search(&GraphKind::General { n: 40, p: 0.1 }, 1, 1, 1, &OracleBounds::default());
        assert!(matches!(r, Err(SearchError::TooLarge { .. })));
    }
}
