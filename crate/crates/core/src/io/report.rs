//! Analysis reports. The text and JSON renderings are produced from the same
//! [`AnalysisReport`] value, so they always carry the same numbers and sets.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::critical::{self, CriticalError, CriticalSummary};
use crate::graph::{Bipartition, BipartitionError, VertexSet};
use crate::io::format::GraphDocument;
use crate::oracle::OracleBounds;
use crate::verify::battery::{run_battery, BatteryOptions, CheckResult, Status};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Matching for bipartite graphs, enumeration otherwise.
    #[default]
    Auto,
    /// Enumeration for every graph.
    Oracle,
}

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    pub method: Method,
    /// Append the identity battery.
    pub verify: bool,
    /// Cross-check the polynomial path against enumeration.
    pub oracle: bool,
    pub bounds: OracleBounds,
    pub timing: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            method: Method::Auto,
            verify: false,
            oracle: false,
            bounds: OracleBounds::from_env(),
            timing: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzeError {
    #[error("declared bipartition is invalid: {0}")]
    Bipartition(#[from] BipartitionError),
    #[error("{what} needs enumeration, limited to {bound} vertices; the graph has {n} (raise it with --bound)")]
    TooLarge { what: &'static str, n: usize, bound: usize },
    #[error(transparent)]
    Critical(#[from] CriticalError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub alpha: usize,
    pub mu: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta0_a: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta0_b: Option<usize>,
    pub dc: i64,
    pub idc: i64,
    pub konig_egervary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideSetsNamed {
    pub side_a: Vec<String>,
    pub ker_a: Vec<String>,
    pub ker_b: Vec<String>,
    pub diadem_a: Vec<String>,
    pub diadem_b: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedSets {
    pub ker: Vec<String>,
    pub diadem: Vec<String>,
    pub core: Vec<String>,
    pub corona: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sides: Option<SideSetsNamed>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub agrees: bool,
    /// Quantities that differ, as `name: polynomial vs oracle`.
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremSummary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub bipartite: bool,
    /// `matching` or `oracle`.
    pub method: &'static str,
    pub invariants: Invariants,
    pub sets: NamedSets,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorems: Option<TheoremSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl AnalysisReport {
    /// False when a battery check failed or the oracle disagreed.
    pub fn is_clean(&self) -> bool {
        self.oracle.as_ref().is_none_or(|o| o.agrees) && self.theorems.as_ref().is_none_or(|t| t.failed == 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut o = String::new();
        let set = |v: &[String]| format!("{{{}}}", v.join(", "));
        writeln!(o, "graph: {}", self.graph).unwrap();
        writeln!(o, "n: {}", self.n).unwrap();
        writeln!(o, "m: {}", self.m).unwrap();
        writeln!(o, "bipartite: {}", self.bipartite).unwrap();
        writeln!(o, "method: {}", self.method).unwrap();
        let i = &self.invariants;
        writeln!(o, "alpha: {}", i.alpha).unwrap();
        writeln!(o, "mu: {}", i.mu).unwrap();
        if let Some(d) = i.delta0_a {
            writeln!(o, "delta0_a: {d}").unwrap();
        }
        if let Some(d) = i.delta0_b {
            writeln!(o, "delta0_b: {d}").unwrap();
        }
        writeln!(o, "dc: {}", i.dc).unwrap();
        writeln!(o, "idc: {}", i.idc).unwrap();
        writeln!(o, "konig_egervary: {}", i.konig_egervary).unwrap();
        let s = &self.sets;
        writeln!(o, "ker: {}", set(&s.ker)).unwrap();
        writeln!(o, "diadem: {}", set(&s.diadem)).unwrap();
        writeln!(o, "core: {}", set(&s.core)).unwrap();
        writeln!(o, "corona: {}", set(&s.corona)).unwrap();
        if let Some(sides) = &s.sides {
            writeln!(o, "side_a: {}", set(&sides.side_a)).unwrap();
            writeln!(o, "ker_a: {}", set(&sides.ker_a)).unwrap();
            writeln!(o, "ker_b: {}", set(&sides.ker_b)).unwrap();
            writeln!(o, "diadem_a: {}", set(&sides.diadem_a)).unwrap();
            writeln!(o, "diadem_b: {}", set(&sides.diadem_b)).unwrap();
        }
        if let Some(oc) = &self.oracle {
            writeln!(o, "oracle_agrees: {}", oc.agrees).unwrap();
            for mm in &oc.mismatches {
                writeln!(o, "oracle_mismatch: {mm}").unwrap();
            }
        }
        if let Some(t) = &self.theorems {
            writeln!(o, "checks: {} passed, {} failed, {} skipped", t.passed, t.failed, t.skipped).unwrap();
            for c in &t.checks {
                let (tag, note) = match &c.status {
                    Status::Pass { detail } => ("PASS", detail.clone().unwrap_or_default()),
                    Status::Fail { witness } => ("FAIL", witness.clone()),
                    Status::Skipped { reason } => ("SKIP", reason.clone()),
                };
                if note.is_empty() {
                    writeln!(o, "  {tag} {}: {}", c.id, c.statement).unwrap();
                } else {
                    writeln!(o, "  {tag} {}: {} [{note}]", c.id, c.statement).unwrap();
                }
            }
        }
        if let Some(t) = self.timing_us {
            writeln!(o, "timing_us: {t}").unwrap();
        }
        o
    }
}

fn mismatches(poly: &CriticalSummary, oracle: &CriticalSummary, doc: &GraphDocument) -> Vec<String> {
    let mut out = Vec::new();
    let mut num = |name: &str, a: i64, b: i64| {
        if a != b {
            out.push(format!("{name}: {a} vs {b}"));
        }
    };
    let (p, q) = (&poly.bundle, &oracle.bundle);
    num("alpha", p.alpha as i64, q.alpha as i64);
    num("mu", p.mu as i64, q.mu as i64);
    num("dc", p.dc, q.dc);
    num("idc", p.idc, q.idc);
    let sets: [(&str, &VertexSet, &VertexSet); 4] = [
        ("ker", &poly.ker, &oracle.ker),
        ("diadem", &poly.diadem, &oracle.diadem),
        ("core", &poly.core, &oracle.core),
        ("corona", &poly.corona, &oracle.corona),
    ];
    for (name, a, b) in sets {
        if a != b {
            out.push(format!("{name}: {} vs {}", doc.format_set(a), doc.format_set(b)));
        }
    }
    out
}

fn require_bound(what: &'static str, n: usize, bounds: &OracleBounds) -> Result<(), AnalyzeError> {
    if n > bounds.vertices {
        return Err(AnalyzeError::TooLarge { what, n, bound: bounds.vertices });
    }
    Ok(())
}

/// Computes every invariant of `doc`, optionally with the oracle
/// cross-check and the identity battery.
pub fn analyze(doc: &GraphDocument, opts: &AnalyzeOptions) -> Result<AnalysisReport, AnalyzeError> {
    let start = Instant::now();
    let g = doc.graph();
    let bp = match doc.declared_bipartition(&g) {
        Some(r) => Some(r?),
        None => Bipartition::of(&g).ok(),
    };
    let use_oracle = opts.method == Method::Oracle || bp.is_none();
    let (summary, method) = if use_oracle {
        let what = if bp.is_none() { "a non-bipartite graph" } else { "the oracle method" };
        require_bound(what, g.n(), &opts.bounds)?;
        let mut s = critical::summarize_exhaustive(&g, &opts.bounds)?;
        if let (Some(bp), Some(_)) = (&bp, &s.sides) {
            // Side sets follow the declared bipartition.
            s.sides = critical::summarize_bipartite(&g, bp).sides;
        }
        (s, "oracle")
    } else {
        (critical::summarize_bipartite(&g, bp.as_ref().unwrap()), "matching")
    };

    let oracle = match (opts.oracle, use_oracle) {
        (true, false) => {
            require_bound("the oracle cross-check", g.n(), &opts.bounds)?;
            let exact = critical::summarize_exhaustive(&g, &opts.bounds)?;
            let mm = mismatches(&summary, &exact, doc);
            Some(OracleCheck { agrees: mm.is_empty(), mismatches: mm })
        }
        _ => None,
    };

    let theorems = opts.verify.then(|| {
        let battery = BatteryOptions {
            bounds: opts.bounds,
            ..BatteryOptions::default()
        };
        let labels = doc.names.as_deref();
        let r = run_battery(&g, &doc.name, bp.as_ref(), labels, &battery);
        let failed = r.failures().count();
        TheoremSummary {
            passed: r.passed(),
            failed,
            skipped: r.skipped(),
            checks: r.checks,
        }
    });

    let labels = |x: &VertexSet| doc.set_labels(x);
    let sides = match (&summary.sides, &bp) {
        (Some(s), Some(bp)) => Some(SideSetsNamed {
            side_a: labels(bp.a()),
            ker_a: labels(&s.ker_a),
            ker_b: labels(&s.ker_b),
            diadem_a: labels(&s.diadem_a),
            diadem_b: labels(&s.diadem_b),
        }),
        _ => None,
    };
    let b = &summary.bundle;
    Ok(AnalysisReport {
        schema: SCHEMA,
        graph: doc.name.clone(),
        n: g.n(),
        m: g.edge_count(),
        bipartite: bp.is_some(),
        method,
        invariants: Invariants {
            alpha: b.alpha,
            mu: b.mu,
            delta0_a: b.delta0_a,
            delta0_b: b.delta0_b,
            dc: b.dc,
            idc: b.idc,
            konig_egervary: b.is_konig_egervary(),
        },
        sets: NamedSets {
            ker: labels(&summary.ker),
            diadem: labels(&summary.diadem),
            core: labels(&summary.core),
            corona: labels(&summary.corona),
            sides,
        },
        oracle,
        theorems,
        timing_us: opts.timing.then(|| start.elapsed().as_micros() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{fixture, parse_graph};

    fn opts() -> AnalyzeOptions {
        AnalyzeOptions {
            timing: false,
            bounds: OracleBounds::default(),
            ..AnalyzeOptions::default()
        }
    }

    #[test]
    fn single_vertex() {
        let r = analyze(&parse_graph("graph k1 1 0").unwrap(), &opts()).unwrap();
        assert_eq!((r.invariants.alpha, r.invariants.mu, r.invariants.dc), (1, 0, 1));
        assert_eq!(r.sets.ker, vec!["0"]);
        assert_eq!(r.sets.core, vec!["0"]);
    }

    #[test]
    fn fig2_values() {
        let r = analyze(
            &fixture("fig2").unwrap(),
            &AnalyzeOptions {
                oracle: true,
                ..opts()
            },
        )
        .unwrap();
        let i = &r.invariants;
        assert_eq!((i.delta0_a, i.delta0_b, i.dc, i.alpha, i.mu), (Some(1), Some(2), 3, 8, 5));
        let s = r.sets.sides.as_ref().unwrap();
        assert_eq!(s.ker_a, ["a1", "a2"]);
        assert_eq!(s.diadem_b, ["b2", "b3", "b4", "b5", "b6", "b7"]);
        assert!(r.oracle.as_ref().unwrap().agrees);
        assert!(r.to_text().contains("ker_a: {a1, a2}"));
    }

    #[test]
    fn refuses_large_non_bipartite() {
        let n = 30;
        let edges = (0..n).map(|i| (i, (i + 1) % n)).chain([(0, 2)]).collect::<Vec<_>>();
        let doc = GraphDocument {
            name: "big".into(),
            n,
            edges,
            side_a: None,
            names: None,
        };
        assert!(matches!(analyze(&doc, &opts()), Err(AnalyzeError::TooLarge { n: 30, .. })));
        let wider = AnalyzeOptions {
            bounds: OracleBounds::default().with_vertices(32),
            ..opts()
        };
        assert!(analyze(&doc, &wider).is_ok());
    }

    #[test]
    fn invalid_declared_side() {
        let doc = GraphDocument {
            name: "p3".into(),
            n: 3,
            edges: vec![(0, 1), (1, 2)],
            side_a: Some(VertexSet::new(3, [0, 1])),
            names: None,
        };
        assert!(matches!(analyze(&doc, &opts()), Err(AnalyzeError::Bipartition(_))));
    }
}
