//! Deficiencies, critical difference, ker and diadem (per side and global),
//! core and corona.
//!
//! For bipartite graphs everything derives from one maximum matching `M`:
//!
//! * `ker_S = S ∩ R_S` where `R_S` is alternating-reachable from free `S`
//!   vertices;
//! * `diadem_S = S − R_T` where `T` is the opposite side;
//! * `ker = ker_A ∪ ker_B = core` and `diadem = diadem_A ∪ diadem_B = corona`.
//!
//! General graphs go through [`crate::oracle`].

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Bipartition, BipartitionError, Graph, Side, VertexSet};
use crate::matching::{self, Matching, Saturation};
use crate::oracle::{self, OracleBounds, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalError {
    #[error(transparent)]
    NotBipartite(#[from] BipartitionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0} is not a critical independent set: {1}")]
    NotCriticalIndependent(VertexSet, String),
}

/// Scalar invariants. Side deficiencies exist only for bipartite graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub n: usize,
    pub mu: usize,
    pub alpha: usize,
    pub delta0_a: Option<usize>,
    pub delta0_b: Option<usize>,
    pub dc: i64,
    pub idc: i64,
}

impl InvariantBundle {
    pub fn is_konig_egervary(&self) -> bool {
        self.alpha + self.mu == self.n
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideSets {
    pub ker_a: VertexSet,
    pub ker_b: VertexSet,
    pub diadem_a: VertexSet,
    pub diadem_b: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalSummary {
    /// Present for bipartite graphs.
    pub sides: Option<SideSets>,
    pub ker: VertexSet,
    pub diadem: VertexSet,
    pub core: VertexSet,
    pub corona: VertexSet,
    pub bundle: InvariantBundle,
}

/// `δ0(side) = |side| − μ`.
pub fn delta0(g: &Graph, bp: &Bipartition, side: Side) -> usize {
    let m = matching::max_matching(g, bp);
    delta0_with(bp, &m, side)
}

fn delta0_with(bp: &Bipartition, m: &Matching, side: Side) -> usize {
    bp.vertices(side).len() - m.len()
}

/// `d_c = δ0(A) + δ0(B)`, the number of vertices left free by a maximum matching.
pub fn critical_difference(g: &Graph, bp: &Bipartition) -> i64 {
    let m = matching::max_matching(g, bp);
    (g.n() - 2 * m.len()) as i64
}

/// `d_c` of any graph: the bipartite formula when `g` two-colors, the oracle
/// otherwise.
pub fn critical_difference_any(g: &Graph, bounds: &OracleBounds) -> Result<i64, CriticalError> {
    match Bipartition::of(g) {
        Ok(bp) => Ok(critical_difference(g, &bp)),
        Err(_) => Ok(oracle::oracle_dc(g, bounds)?),
    }
}

/// The unique minimal `side`-critical set.
pub fn ker_side(g: &Graph, bp: &Bipartition, m: &Matching, side: Side) -> VertexSet {
    matching::alternating_reachable(g, bp, m, side).intersection(bp.vertices(side))
}

/// The unique maximal `side`-critical set.
pub fn diadem_side(g: &Graph, bp: &Bipartition, m: &Matching, side: Side) -> VertexSet {
    bp.vertices(side)
        .difference(&matching::alternating_reachable(g, bp, m, side.opposite()))
}

pub fn ker(g: &Graph, bp: &Bipartition) -> VertexSet {
    let m = matching::max_matching(g, bp);
    ker_side(g, bp, &m, Side::A).union(&ker_side(g, bp, &m, Side::B))
}

pub fn diadem(g: &Graph, bp: &Bipartition) -> VertexSet {
    let m = matching::max_matching(g, bp);
    diadem_side(g, bp, &m, Side::A).union(&diadem_side(g, bp, &m, Side::B))
}

/// `core = ker` for bipartite graphs.
pub fn core(g: &Graph, bp: &Bipartition) -> VertexSet {
    ker(g, bp)
}

/// Computes α for a graph and its induced subgraphs.
pub trait AlphaComputer {
    fn alpha(&self, g: &Graph) -> Result<usize, CriticalError>;
}

/// `α = n − μ`. Requires bipartite inputs.
#[derive(Debug, Clone, Copy, Default)]
pub struct KonigAlpha;

impl AlphaComputer for KonigAlpha {
    fn alpha(&self, g: &Graph) -> Result<usize, CriticalError> {
        let bp = Bipartition::of(g)?;
        Ok(g.n() - matching::max_matching(g, &bp).len())
    }
}

/// Branch-and-bound α within the oracle bounds.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExhaustiveAlpha {
    pub bounds: OracleBounds,
}

impl AlphaComputer for ExhaustiveAlpha {
    fn alpha(&self, g: &Graph) -> Result<usize, CriticalError> {
        Ok(oracle::oracle_alpha(g, &self.bounds)?)
    }
}

/// König for bipartite graphs, exhaustive otherwise.
#[derive(Debug, Clone, Copy, Default)]
pub struct AutoAlpha {
    pub bounds: OracleBounds,
}

impl AlphaComputer for AutoAlpha {
    fn alpha(&self, g: &Graph) -> Result<usize, CriticalError> {
        match Bipartition::of(g) {
            Ok(bp) => Ok(g.n() - matching::max_matching(g, &bp).len()),
            Err(_) => Ok(oracle::oracle_alpha(g, &self.bounds)?),
        }
    }
}

/// `{v : α(G − v) < α(G)}`, the intersection of all maximum independent sets.
pub fn core_by_deletion(g: &Graph, alpha: &dyn AlphaComputer) -> Result<VertexSet, CriticalError> {
    let a = alpha.alpha(g)?;
    let mut out = VertexSet::empty(g.n());
    for v in 0..g.n() {
        let sub = g.delete_vertices(&VertexSet::new(g.n(), [v]));
        if alpha.alpha(&sub.graph)? < a {
            out.insert(v);
        }
    }
    Ok(out)
}

/// `{v : α(G − N[v]) = α(G) − 1}`, the union of all maximum independent sets.
pub fn corona(g: &Graph, alpha: &dyn AlphaComputer) -> Result<VertexSet, CriticalError> {
    let a = alpha.alpha(g)?;
    let mut out = VertexSet::empty(g.n());
    for v in 0..g.n() {
        let closed = g.closed_neighborhood(&VertexSet::new(g.n(), [v]));
        let sub = g.delete_vertices(&closed);
        if alpha.alpha(&sub.graph)? + 1 == a {
            out.insert(v);
        }
    }
    Ok(out)
}

/// `x ⊆ side` and `δ(x) = δ0(side)`.
pub fn is_side_critical(g: &Graph, bp: &Bipartition, x: &VertexSet, side: Side) -> bool {
    x.is_subset(bp.vertices(side)) && g.difference(x) == delta0(g, bp, side) as i64
}

/// `d(x) = d_c(G)`.
pub fn is_critical(g: &Graph, x: &VertexSet, bounds: &OracleBounds) -> Result<bool, CriticalError> {
    Ok(g.difference(x) == critical_difference_any(g, bounds)?)
}

pub fn is_critical_independent(g: &Graph, x: &VertexSet, bounds: &OracleBounds) -> Result<bool, CriticalError> {
    Ok(g.is_independent(x) && is_critical(g, x, bounds)?)
}

/// Outcome of [`ker_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KerCertificate {
    /// For every `v ∈ x` there is a matching from `N(x)` into `x − v`, so
    /// `x = ker(G)`.
    Certified,
    /// No matching from `N(x)` into `x − vertex`; `violator ⊆ N(x)` has
    /// `|N(violator) ∩ x| = |violator|`.
    Refuted { vertex: usize, violator: VertexSet },
}

/// Decides whether the critical independent set `x` is `ker(G)`.
pub fn ker_certificate(g: &Graph, x: &VertexSet, bounds: &OracleBounds) -> Result<KerCertificate, CriticalError> {
    if let Some((u, v)) = g.edge_within(x) {
        return Err(CriticalError::NotCriticalIndependent(
            x.clone(),
            format!("edge {u}-{v} inside the set"),
        ));
    }
    let dc = critical_difference_any(g, bounds)?;
    let d = g.difference(x);
    if d != dc {
        return Err(CriticalError::NotCriticalIndependent(
            x.clone(),
            format!("d = {d} but d_c = {dc}"),
        ));
    }
    Ok(ker_certificate_unchecked(g, x))
}

/// [`ker_certificate`] without validating that `x` is critical independent.
pub fn ker_certificate_unchecked(g: &Graph, x: &VertexSet) -> KerCertificate {
    let nx = g.neighborhood(x);
    for v in x.iter() {
        if let Saturation::Violated(h) = matching::saturating_matching(g, &nx, &x.without(v)) {
            return KerCertificate::Refuted {
                vertex: v,
                violator: h.set,
            };
        }
    }
    KerCertificate::Certified
}

/// All bipartite invariants from one maximum matching. The two sides are
/// evaluated concurrently.
pub fn summarize_bipartite(g: &Graph, bp: &Bipartition) -> CriticalSummary {
    let m = matching::max_matching(g, bp);
    summarize_with_matching(g, bp, &m)
}

/// Same as [`summarize_bipartite`] for a caller-supplied maximum matching.
pub fn summarize_with_matching(g: &Graph, bp: &Bipartition, m: &Matching) -> CriticalSummary {
    let (reach_a, reach_b) = rayon::join(
        || matching::alternating_reachable(g, bp, m, Side::A),
        || matching::alternating_reachable(g, bp, m, Side::B),
    );
    let sides = SideSets {
        ker_a: reach_a.intersection(bp.a()),
        ker_b: reach_b.intersection(bp.b()),
        diadem_a: bp.a().difference(&reach_b),
        diadem_b: bp.b().difference(&reach_a),
    };
    let ker = sides.ker_a.union(&sides.ker_b);
    let diadem = sides.diadem_a.union(&sides.diadem_b);
    let mu = m.len();
    let bundle = InvariantBundle {
        n: g.n(),
        mu,
        alpha: g.n() - mu,
        delta0_a: Some(delta0_with(bp, m, Side::A)),
        delta0_b: Some(delta0_with(bp, m, Side::B)),
        dc: (g.n() - 2 * mu) as i64,
        idc: g.difference(&ker),
    };
    CriticalSummary {
        sides: Some(sides),
        core: ker.clone(),
        corona: diadem.clone(),
        ker,
        diadem,
        bundle,
    }
}

/// Invariants of any graph within the oracle bounds, by enumeration.
pub fn summarize_exhaustive(g: &Graph, bounds: &OracleBounds) -> Result<CriticalSummary, CriticalError> {
    let s = oracle::oracle_summary(g, bounds)?;
    let dc = oracle::oracle_dc(g, bounds)?;
    let mu = oracle::oracle_mu(g, bounds)?;
    let sides = Bipartition::of(g).ok().map(|bp| {
        let m = matching::max_matching(g, &bp);
        SideSets {
            ker_a: ker_side(g, &bp, &m, Side::A),
            ker_b: ker_side(g, &bp, &m, Side::B),
            diadem_a: diadem_side(g, &bp, &m, Side::A),
            diadem_b: diadem_side(g, &bp, &m, Side::B),
        }
    });
    let (delta0_a, delta0_b) = match Bipartition::of(g) {
        Ok(bp) => (Some(bp.a().len() - mu), Some(bp.b().len() - mu)),
        Err(_) => (None, None),
    };
    Ok(CriticalSummary {
        sides,
        ker: s.ker,
        diadem: s.diadem,
        core: s.core,
        corona: s.corona,
        bundle: InvariantBundle {
            n: g.n(),
            mu,
            alpha: s.alpha,
            delta0_a,
            delta0_b,
            dc,
            idc: s.idc,
        },
    })
}

/// Bipartite graphs of any size via matching; others via the oracle.
pub fn summarize(g: &Graph, bounds: &OracleBounds) -> Result<CriticalSummary, CriticalError> {
    match Bipartition::of(g) {
        Ok(bp) => Ok(summarize_bipartite(g, &bp)),
        Err(_) => summarize_exhaustive(g, bounds),
    }
}
