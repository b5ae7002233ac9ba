//! Per-graph identity checks.
//!
//! Every check is a row of [`CHECKS`]: an id, a group, the identity it
//! asserts, and a function that returns a pass detail or a failure witness.
//! Group preconditions (bipartite input, oracle bounds) are evaluated by the
//! runner, which marks the whole group skipped with its reason; no check is
//! ever silently dropped.

use std::cell::OnceCell;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::critical::{self, CriticalSummary, KerCertificate, KonigAlpha, SideSets};
use crate::graph::{Bipartition, BipartitionError, Graph, Side, VertexSet};
use crate::matching::{self, Matching, Saturation};
use crate::oracle::{self, OracleBounds, OracleError, OracleSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Group {
    /// Polynomial identities of bipartite graphs.
    Bipartite,
    /// Polynomial results against exhaustive enumeration (bipartite graphs).
    Oracle,
    /// Identities of every graph, checked by enumeration.
    General,
    /// Identities of König-Egerváry graphs, evaluated on every graph.
    KonigEgervary,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::Bipartite => "bipartite",
            Group::Oracle => "oracle",
            Group::General => "general",
            Group::KonigEgervary => "konig-egervary",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Status {
    Pass {
        #[serde(skip_serializing_if = "Option::is_none")]
        detail: Option<String>,
    },
    Fail {
        witness: String,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub group: Group,
    pub statement: &'static str,
    #[serde(flatten)]
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub graph: String,
    pub checks: Vec<CheckResult>,
}

impl TheoremReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| matches!(c.status, Status::Fail { .. }))
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| matches!(c.status, Status::Pass { .. })).count()
    }

    pub fn skipped(&self) -> usize {
        self.checks.iter().filter(|c| matches!(c.status, Status::Skipped { .. })).count()
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Debug, Clone)]
pub struct BatteryOptions {
    pub bipartite: bool,
    pub oracle: bool,
    pub general: bool,
    pub konig_egervary: bool,
    pub bounds: OracleBounds,
    /// Members of large families examined individually.
    pub family_limit: usize,
    /// Supermodularity is checked on all pairs of subsets up to this order.
    pub supermodular_exhaustive: usize,
    pub supermodular_samples: usize,
    /// The no-tight-subset form of the ker certificate is checked
    /// exhaustively when `|N(ker)|` is at most this.
    pub tight_subset_limit: usize,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        BatteryOptions {
            bipartite: true,
            oracle: true,
            general: true,
            konig_egervary: true,
            bounds: OracleBounds::default(),
            family_limit: 64,
            supermodular_exhaustive: 10,
            supermodular_samples: 4096,
            tight_subset_limit: 16,
        }
    }
}

impl BatteryOptions {
    pub fn bipartite_only() -> Self {
        BatteryOptions {
            oracle: false,
            general: false,
            konig_egervary: false,
            ..Self::default()
        }
    }

    fn enabled(&self, group: Group) -> bool {
        match group {
            Group::Bipartite => self.bipartite,
            Group::Oracle => self.oracle,
            Group::General => self.general,
            Group::KonigEgervary => self.konig_egervary,
        }
    }
}

type CheckFn = fn(&Ctx) -> Result<Option<String>, String>;

pub struct CheckSpec {
    pub id: &'static str,
    pub group: Group,
    pub statement: &'static str,
    run: CheckFn,
}

macro_rules! check {
    ($id:literal, $group:ident, $statement:literal, $run:path) => {
        CheckSpec {
            id: $id,
            group: Group::$group,
            statement: $statement,
            run: $run,
        }
    };
}

pub static CHECKS: &[CheckSpec] = &[
    check!("konig-certificate", Bipartite, "M is maximum, its König cover has |M| vertices, and the complement is independent", konig_certificate),
    check!("ore-deficiency", Bipartite, "μ = |A| − δ0(A) = |B| − δ0(B)", ore_deficiency),
    check!("side-critical-extremes", Bipartite, "ker_S ⊆ diadem_S are the unique minimal and maximal S-critical sets", side_critical_extremes),
    check!("dc-side-sum", Bipartite, "d_c = δ0(A) + δ0(B)", dc_side_sum),
    check!("alpha-side-formulas", Bipartite, "α = |A| + δ0(B) = |B| + δ0(A) = μ + d_c", alpha_side_formulas),
    check!("side-union-critical", Bipartite, "X ∪ Y is d-critical for A-critical X and B-critical Y", side_union_critical),
    check!("critical-independent-splits", Bipartite, "Z ∩ A is A-critical and Z ∩ B is B-critical for critical independent Z", critical_independent_splits),
    check!("side-critical-hall", Bipartite, "N(X) matches into X for every side-critical X", side_critical_hall),
    check!("perfect-matching-criterion", Bipartite, "perfect matching ⇔ δ0(A) = 0 = δ0(B)", perfect_matching_criterion),
    check!("cross-side-balance", Bipartite, "|X ∩ N(Y)| = |N(X) ∩ Y| with a perfect matching between them", cross_side_balance),
    check!("ker-side-disjointness", Bipartite, "ker_A ∩ N(Y) = N(ker_A) ∩ Y = ∅ for B-critical Y, and symmetrically", ker_side_disjointness),
    check!("ker-certificate", Bipartite, "ker admits a matching from N(ker) into ker − v for every v; larger critical independent sets do not", ker_certificate_check),
    check!("ker-equals-core", Bipartite, "ker = core", ker_equals_core),
    check!("ker-side-union", Bipartite, "ker = ker_A ∪ ker_B", ker_side_union),
    check!("ker-diadem-sum", Bipartite, "|ker| + |diadem| = 2α", ker_diadem_sum),
    check!("side-cross-sums", Bipartite, "|ker_A| + |diadem_B| = |ker_B| + |diadem_A| = α", side_cross_sums),
    check!("diadem-side-union", Bipartite, "diadem = diadem_A ∪ diadem_B", diadem_side_union),
    check!("corona-core-sum", Bipartite, "|corona| + |core| = 2α", corona_core_sum),
    check!("diadem-equals-corona", Bipartite, "diadem = corona", diadem_equals_corona),
    check!("core-neighborhood", Bipartite, "N(core) = V − corona", core_neighborhood),
    check!("matching-into-mis", Bipartite, "M matches V − S into S and N(core) into core, for S ∈ Ω", matching_into_mis),
    check!("mis-is-critical", Bipartite, "every S ∈ Ω is d-critical and d_c = α − μ = |core| − |N(core)|", mis_is_critical),
    check!("matching-invariance", Bipartite, "all sets are unchanged under a different maximum matching", matching_invariance),
    check!("side-family-extremes", Oracle, "ker_S and diadem_S are the intersection and union of all S-critical sets", side_family_extremes),
    check!("oracle-agreement", Oracle, "matching-based α, μ, d_c, ker, diadem, core, corona equal exhaustive values", oracle_agreement),
    check!("dc-equals-idc", General, "d_c = id_c", dc_equals_idc),
    check!("critical-independent-hall", General, "N(S) matches into S for every critical independent S", critical_independent_hall),
    check!("critical-independent-extends", General, "every critical independent set lies in a maximum independent set", critical_independent_extends),
    check!("difference-supermodular", General, "d(X ∪ Y) + d(X ∩ Y) ≥ d(X) + d(Y)", difference_supermodular),
    check!("critical-family-closure", General, "unions and intersections of d-critical sets are d-critical", critical_family_closure),
    check!("ker-unique-minimal", General, "ker is the unique minimal d-critical set", ker_unique_minimal),
    check!("ker-within-core", General, "ker ⊆ core", ker_within_core),
    check!("conjecture-chain", General, "|ker| + |diadem| ≤ 2α ≤ |core| + |corona|", conjecture_chain),
    check!("ke-corona-core-sum", KonigEgervary, "|corona| + |core| = 2α for König-Egerváry graphs", ke_corona_core_sum),
    check!("ke-diadem-corona", KonigEgervary, "diadem ⊆ corona, with equality for König-Egerváry graphs", ke_diadem_corona),
    check!("ke-ker-diadem-bound", KonigEgervary, "|ker| + |diadem| ≤ 2α for König-Egerváry graphs", ke_ker_diadem_bound),
    check!("ke-core-neighborhood", KonigEgervary, "N(core) = V − corona for König-Egerváry graphs", ke_core_neighborhood),
    check!("ke-mis-critical", KonigEgervary, "every S ∈ Ω is d-critical and d_c = α − μ for König-Egerváry graphs", ke_mis_critical),
];

/// Matching-based data of a bipartite graph.
struct Bip {
    bp: Bipartition,
    m: Matching,
    s: CriticalSummary,
    mis: VertexSet,
    deletion: OnceCell<Result<(VertexSet, VertexSet), String>>,
}

impl Bip {
    fn sides(&self) -> &SideSets {
        self.s.sides.as_ref().expect("bipartite summary has side sets")
    }

    fn d0(&self, side: Side) -> i64 {
        (self.bp.vertices(side).len() - self.m.len()) as i64
    }

    fn alpha(&self) -> usize {
        self.s.bundle.alpha
    }
}

/// Exhaustive data, capped where families can be exponential.
struct Exhaustive {
    summary: OracleSummary,
    dc: i64,
    mu: usize,
    omega_prefix: Vec<VertexSet>,
    critical_prefix: Vec<VertexSet>,
    /// All subsets `X` with `d(X) = d_c`, when `n` is within the subset bound.
    critical_sets: Option<oracle::FamilyScan>,
}

/// The sets the König-Egerváry group reasons about, from whichever source
/// applies.
struct KeData {
    n: usize,
    alpha: usize,
    mu: usize,
    dc: i64,
    ker: VertexSet,
    diadem: VertexSet,
    core: VertexSet,
    corona: VertexSet,
    /// Maximum independent sets to test, with a note on coverage.
    mis: Vec<VertexSet>,
    mis_note: String,
}

pub(crate) struct Ctx<'a> {
    g: &'a Graph,
    names: Option<&'a [String]>,
    opts: &'a BatteryOptions,
    bip: Result<Bip, BipartitionError>,
    exhaustive: OnceCell<Result<Exhaustive, OracleError>>,
    ke: OnceCell<Result<KeData, String>>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, declared: Option<&Bipartition>, names: Option<&'a [String]>, opts: &'a BatteryOptions) -> Self {
        let bp = match declared {
            Some(bp) if bp.is_valid_for(g) => Ok(bp.clone()),
            _ => Bipartition::of(g),
        };
        let bip = bp.map(|bp| {
            let m = matching::max_matching(g, &bp);
            let s = critical::summarize_with_matching(g, &bp, &m);
            let mis = matching::min_vertex_cover(g, &bp, &m).complement();
            Bip {
                bp,
                m,
                s,
                mis,
                deletion: OnceCell::new(),
            }
        });
        Ctx {
            g,
            names,
            opts,
            bip,
            exhaustive: OnceCell::new(),
            ke: OnceCell::new(),
        }
    }

    fn bip(&self) -> &Bip {
        self.bip.as_ref().expect("bipartite group runs on bipartite graphs only")
    }

    /// Core and corona by vertex deletion with König α.
    fn deletion_sets(&self) -> Result<&(VertexSet, VertexSet), String> {
        self.bip()
            .deletion
            .get_or_init(|| {
                let core = critical::core_by_deletion(self.g, &KonigAlpha).map_err(|e| e.to_string())?;
                let corona = critical::corona(self.g, &KonigAlpha).map_err(|e| e.to_string())?;
                Ok((core, corona))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn exhaustive(&self) -> Result<&Exhaustive, &OracleError> {
        self.exhaustive
            .get_or_init(|| {
                let b = &self.opts.bounds;
                let summary = oracle::oracle_summary(self.g, b)?;
                let limit = self.opts.family_limit;
                let omega_prefix = oracle::maximum_independent_prefix(self.g, b, summary.alpha, limit)?;
                let critical_prefix = oracle::critical_independent_prefix(self.g, b, summary.idc, limit)?;
                let critical_sets = if self.g.n() <= b.subsets {
                    Some(oracle::critical_set_scan(self.g, b, limit)?)
                } else {
                    None
                };
                Ok(Exhaustive {
                    dc: oracle::oracle_dc(self.g, b)?,
                    mu: oracle::oracle_mu(self.g, b)?,
                    summary,
                    omega_prefix,
                    critical_prefix,
                    critical_sets,
                })
            })
            .as_ref()
    }

    fn ex(&self) -> &Exhaustive {
        self.exhaustive().expect("group runs within oracle bounds only")
    }

    fn ke(&self) -> Result<&KeData, &String> {
        self.ke
            .get_or_init(|| {
                if self.g.n() <= self.opts.bounds.vertices {
                    let e = self.exhaustive().map_err(|e| e.to_string())?;
                    let total = e.summary.omega_count;
                    return Ok(KeData {
                        n: self.g.n(),
                        alpha: e.summary.alpha,
                        mu: e.mu,
                        dc: e.dc,
                        ker: e.summary.ker.clone(),
                        diadem: e.summary.diadem.clone(),
                        core: e.summary.core.clone(),
                        corona: e.summary.corona.clone(),
                        mis: e.omega_prefix.clone(),
                        mis_note: format!("{} of {} maximum independent sets", e.omega_prefix.len(), total),
                    });
                }
                match &self.bip {
                    Ok(b) => {
                        let (core, corona) = self.deletion_sets()?.clone();
                        Ok(KeData {
                            n: self.g.n(),
                            alpha: b.alpha(),
                            mu: b.m.len(),
                            dc: b.s.bundle.dc,
                            ker: b.s.ker.clone(),
                            diadem: b.s.diadem.clone(),
                            core,
                            corona,
                            mis: vec![b.mis.clone()],
                            mis_note: "the König maximum independent set".into(),
                        })
                    }
                    Err(_) => Err(format!(
                        "non-bipartite graph with n = {} exceeds the oracle bound {}",
                        self.g.n(),
                        self.opts.bounds.vertices
                    )),
                }
            })
            .as_ref()
    }

    fn kd(&self) -> &KeData {
        self.ke().expect("group runs only when its data is available")
    }

    fn fmt(&self, x: &VertexSet) -> String {
        match self.names {
            Some(names) => {
                let parts: Vec<&str> = x.iter().map(|v| names[v].as_str()).collect();
                format!("{{{}}}", parts.join(", "))
            }
            None => x.to_string(),
        }
    }

    fn name(&self, v: usize) -> String {
        match self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    fn skip_reason(&self, group: Group) -> Option<String> {
        let b = &self.opts.bounds;
        let not_bipartite = |e: &BipartitionError| match e {
            BipartitionError::NotBipartite { odd_cycle } => {
                let cycle: Vec<String> = odd_cycle.iter().map(|&v| self.name(v)).collect();
                format!("graph is not bipartite: odd cycle {}", cycle.join("-"))
            }
            e => e.to_string(),
        };
        match group {
            Group::Bipartite => self.bip.as_ref().err().map(not_bipartite),
            Group::Oracle => {
                if let Err(e) = &self.bip {
                    return Some(not_bipartite(e));
                }
                let bp = &self.bip().bp;
                let side = bp.a().len().max(bp.b().len());
                if side > b.side {
                    return Some(format!("side of {side} vertices exceeds the side bound {}", b.side));
                }
                self.exhaustive().err().map(ToString::to_string)
            }
            Group::General => self.exhaustive().err().map(ToString::to_string),
            Group::KonigEgervary => self.ke().err().cloned(),
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn pass() -> Result<Option<String>, String> {
    Ok(None)
}

fn pass_with(detail: String) -> Result<Option<String>, String> {
    Ok(Some(detail))
}

fn same(ctx: &Ctx, label: &str, got: &VertexSet, want: &VertexSet) -> Result<(), String> {
    ensure!(got == want, "{label}: {} ≠ {}", ctx.fmt(got), ctx.fmt(want));
    Ok(())
}

const SIDES: [Side; 2] = [Side::A, Side::B];

fn ker_of(s: &SideSets, side: Side) -> &VertexSet {
    match side {
        Side::A => &s.ker_a,
        Side::B => &s.ker_b,
    }
}

fn diadem_of(s: &SideSets, side: Side) -> &VertexSet {
    match side {
        Side::A => &s.diadem_a,
        Side::B => &s.diadem_b,
    }
}

fn konig_certificate(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, b) = (ctx.g, ctx.bip());
    ensure!(b.m.is_valid_for(g), "M is not a matching of G");
    ensure!(
        !matching::has_augmenting_path(g, &b.bp, &b.m),
        "M with {} edges has an augmenting path",
        b.m.len()
    );
    let cover = matching::min_vertex_cover(g, &b.bp, &b.m);
    ensure!(cover.len() == b.m.len(), "cover {} has {} vertices, |M| = {}", ctx.fmt(&cover), cover.len(), b.m.len());
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| !cover.contains(u) && !cover.contains(v)) {
        return Err(format!("edge {}-{} is not covered", ctx.name(u), ctx.name(v)));
    }
    ensure!(g.is_independent(&b.mis), "complement of the cover {} is not independent", ctx.fmt(&b.mis));
    pass_with(format!("μ = {}, α = {}", b.m.len(), b.mis.len()))
}

fn ore_deficiency(ctx: &Ctx) -> Result<Option<String>, String> {
    // δ(X) ≤ |S| − μ for every X ⊆ S, so attaining it certifies δ0(S).
    let b = ctx.bip();
    for side in SIDES {
        let k = ker_of(b.sides(), side);
        let d = ctx.g.difference(k);
        ensure!(
            d == b.d0(side),
            "δ(ker_{side}) = {d} but |{side}| − μ = {}",
            b.d0(side)
        );
    }
    pass_with(format!("δ0(A) = {}, δ0(B) = {}", b.d0(Side::A), b.d0(Side::B)))
}

/// Whether `x ⊆ side` is a minimal `side`-critical set: a matching from
/// `N(x)` into `x − v` for every `v ∈ x`.
fn minimal_certificate(g: &Graph, x: &VertexSet) -> Option<(usize, VertexSet)> {
    match critical::ker_certificate_unchecked(g, x) {
        KerCertificate::Certified => None,
        KerCertificate::Refuted { vertex, violator } => Some((vertex, violator)),
    }
}

/// Whether `x ⊆ side` is a maximal `side`-critical set: every proper
/// extension has strictly positive surplus, i.e. `side − x` matches into
/// `opposite − N(x) − b` for every such `b`.
fn maximal_certificate(g: &Graph, bp: &Bipartition, x: &VertexSet, side: Side) -> Option<(usize, VertexSet)> {
    let rest = bp.vertices(side).difference(x);
    let room = bp.vertices(side.opposite()).difference(&g.neighborhood(x));
    if rest.is_empty() {
        return None;
    }
    for b in room.iter() {
        if let Saturation::Violated(h) = matching::saturating_matching(g, &rest, &room.without(b)) {
            return Some((b, h.set));
        }
    }
    if room.is_empty() {
        return Some((usize::MAX, rest));
    }
    None
}

fn side_critical_extremes(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, b) = (ctx.g, ctx.bip());
    for side in SIDES {
        let k = ker_of(b.sides(), side);
        let dm = diadem_of(b.sides(), side);
        ensure!(k.is_subset(dm), "ker_{side} = {} ⊄ diadem_{side} = {}", ctx.fmt(k), ctx.fmt(dm));
        ensure!(dm.is_subset(b.bp.vertices(side)), "diadem_{side} leaves side {side}");
        let dd = g.difference(dm);
        ensure!(dd == b.d0(side), "δ(diadem_{side}) = {dd} ≠ δ0({side}) = {}", b.d0(side));
        if let Some((v, y)) = minimal_certificate(g, k) {
            return Err(format!(
                "ker_{side} = {} is not minimal: no matching from N(ker_{side}) into ker_{side} − {} (violator {})",
                ctx.fmt(k),
                ctx.name(v),
                ctx.fmt(&y)
            ));
        }
        if let Some((v, y)) = maximal_certificate(g, &b.bp, dm, side) {
            return Err(format!(
                "diadem_{side} = {} is not maximal (extension through {} with {})",
                ctx.fmt(dm),
                if v == usize::MAX { "-".into() } else { ctx.name(v) },
                ctx.fmt(&y)
            ));
        }
    }
    pass()
}

fn dc_side_sum(ctx: &Ctx) -> Result<Option<String>, String> {
    // d(X) ≤ n − 2μ for every X, so d(ker) = n − 2μ certifies d_c.
    let (g, b) = (ctx.g, ctx.bip());
    let d = g.difference(&b.s.ker);
    let bound = (g.n() - 2 * b.m.len()) as i64;
    ensure!(d == bound, "d(ker) = {d} but n − 2μ = {bound}");
    ensure!(
        d == b.d0(Side::A) + b.d0(Side::B),
        "d_c = {d} ≠ δ0(A) + δ0(B) = {}",
        b.d0(Side::A) + b.d0(Side::B)
    );
    pass_with(format!("d_c = {d}"))
}

fn alpha_side_formulas(ctx: &Ctx) -> Result<Option<String>, String> {
    let b = ctx.bip();
    let alpha = b.mis.len() as i64;
    let (na, nb) = (b.bp.a().len() as i64, b.bp.b().len() as i64);
    let dc = ctx.g.difference(&b.s.ker);
    ensure!(alpha == na + b.d0(Side::B), "α = {alpha} ≠ |A| + δ0(B) = {}", na + b.d0(Side::B));
    ensure!(alpha == nb + b.d0(Side::A), "α = {alpha} ≠ |B| + δ0(A) = {}", nb + b.d0(Side::A));
    ensure!(alpha == b.m.len() as i64 + dc, "α = {alpha} ≠ μ + d_c = {}", b.m.len() as i64 + dc);
    pass()
}

fn side_pairs(s: &SideSets) -> [(&'static str, &VertexSet, &'static str, &VertexSet); 4] {
    [
        ("ker_A", &s.ker_a, "ker_B", &s.ker_b),
        ("ker_A", &s.ker_a, "diadem_B", &s.diadem_b),
        ("diadem_A", &s.diadem_a, "ker_B", &s.ker_b),
        ("diadem_A", &s.diadem_a, "diadem_B", &s.diadem_b),
    ]
}

fn side_union_critical(ctx: &Ctx) -> Result<Option<String>, String> {
    let b = ctx.bip();
    for (xl, x, yl, y) in side_pairs(b.sides()) {
        let d = ctx.g.difference(&x.union(y));
        ensure!(d == b.s.bundle.dc, "d({xl} ∪ {yl}) = {d} ≠ d_c = {}", b.s.bundle.dc);
    }
    pass()
}

/// Critical independent sets available without enumeration.
fn known_critical_independent(b: &Bip) -> Vec<(&'static str, VertexSet)> {
    let s = b.sides();
    vec![
        ("ker", b.s.ker.clone()),
        ("ker_A ∪ diadem_B", s.ker_a.union(&s.diadem_b)),
        ("diadem_A ∪ ker_B", s.diadem_a.union(&s.ker_b)),
        ("S", b.mis.clone()),
    ]
}

fn critical_independent_splits(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, b) = (ctx.g, ctx.bip());
    for (label, z) in known_critical_independent(b) {
        ensure!(g.is_independent(&z), "{label} = {} is not independent", ctx.fmt(&z));
        ensure!(g.difference(&z) == b.s.bundle.dc, "{label} = {} is not d-critical", ctx.fmt(&z));
        for side in SIDES {
            let part = z.intersection(b.bp.vertices(side));
            let d = g.difference(&part);
            ensure!(
                d == b.d0(side),
                "{label} ∩ {side} = {} has δ = {d} ≠ δ0({side}) = {}",
                ctx.fmt(&part),
                b.d0(side)
            );
        }
    }
    pass()
}

fn side_critical_hall(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, b) = (ctx.g, ctx.bip());
    for side in SIDES {
        for (label, x) in [("ker", ker_of(b.sides(), side)), ("diadem", diadem_of(b.sides(), side))] {
            if let Saturation::Violated(h) = matching::saturating_matching(g, &g.neighborhood(x), x) {
                return Err(format!(
                    "no matching from N({label}_{side}) into {label}_{side}: violator {}",
                    ctx.fmt(&h.set)
                ));
            }
        }
    }
    pass()
}

fn perfect_matching_criterion(ctx: &Ctx) -> Result<Option<String>, String> {
    let b = ctx.bip();
    let perfect = b.m.is_perfect();
    let da = ctx.g.difference(&b.sides().ker_a);
    let db = ctx.g.difference(&b.sides().ker_b);
    ensure!(
        perfect == (da == 0 && db == 0),
        "perfect matching: {perfect}, δ0(A) = {da}, δ0(B) = {db}"
    );
    pass_with(format!("perfect matching: {perfect}"))
}

fn cross_side_balance(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, b) = (ctx.g, ctx.bip());
    for (xl, x, yl, y) in side_pairs(b.sides()) {
        let left = x.intersection(&g.neighborhood(y));
        let right = g.neighborhood(x).intersection(y);
        ensure!(
            left.len() == right.len(),
            "|{xl} ∩ N({yl})| = {} ≠ |N({xl}) ∩ {yl}| = {}",
            left.len(),
            right.len()
        );
        if let Saturation::Violated(h) = matching::saturating_matching(g, &right, &left) {
            return Err(format!(
                "no perfect matching between {xl} ∩ N({yl}) and N({xl}) ∩ {yl}: violator {}",
                ctx.fmt(&h.set)
            ));
        }
    }
    pass()
}

fn ker_side_disjointness(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, b) = (ctx.g, ctx.bip());
    let s = b.sides();
    let cases = [
        ("ker_A", &s.ker_a, "ker_B", &s.ker_b),
        ("ker_A", &s.ker_a, "diadem_B", &s.diadem_b),
        ("diadem_A", &s.diadem_a, "ker_B", &s.ker_b),
    ];
    for (xl, x, yl, y) in cases {
        let left = x.intersection(&g.neighborhood(y));
        let right = g.neighborhood(x).intersection(y);
        ensure!(left.is_empty(), "{xl} ∩ N({yl}) = {}", ctx.fmt(&left));
        ensure!(right.is_empty(), "N({xl}) ∩ {yl} = {}", ctx.fmt(&right));
    }
    pass()
}

fn ker_certificate_check(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, b) = (ctx.g, ctx.bip());
    let ker = &b.s.ker;
    if let Some((v, y)) = minimal_certificate(g, ker) {
        return Err(format!(
            "ker = {} refuted at {} with violator {}",
            ctx.fmt(ker),
            ctx.name(v),
            ctx.fmt(&y)
        ));
    }
    let nk = g.neighborhood(ker);
    let mut detail = String::from("certified");
    if nk.len() <= ctx.opts.tight_subset_limit {
        let members = nk.to_vec();
        for mask in 1u32..1 << members.len() {
            let y = VertexSet::new(g.n(), (0..members.len()).filter(|i| mask >> i & 1 == 1).map(|i| members[i]));
            let hit = g.neighborhood(&y).intersection(ker).len();
            ensure!(hit != y.len(), "Y = {} ⊆ N(ker) has |N(Y) ∩ ker| = |Y|", ctx.fmt(&y));
        }
        detail.push_str(&format!("; no tight subset among 2^{} − 1", members.len()));
    }
    let mut refuted = 0;
    for (label, z) in known_critical_independent(b) {
        if z == *ker {
            continue;
        }
        let Some((v, y)) = minimal_certificate(g, &z) else {
            return Err(format!("{label} = {} ≠ ker was certified", ctx.fmt(&z)));
        };
        ensure!(
            y.is_subset(&g.neighborhood(&z)) && g.neighborhood(&y).intersection(&z).len() == y.len(),
            "violator {} for {label} at {} is not tight",
            ctx.fmt(&y),
            ctx.name(v)
        );
        refuted += 1;
    }
    detail.push_str(&format!("; {refuted} larger sets refuted"));
    pass_with(detail)
}

fn ker_equals_core(ctx: &Ctx) -> Result<Option<String>, String> {
    let (core, _) = ctx.deletion_sets()?;
    same(ctx, "ker vs core by deletion", &ctx.bip().s.ker, core)?;
    pass()
}

fn ker_side_union(ctx: &Ctx) -> Result<Option<String>, String> {
    // A critical independent set passing the certificate is ker.
    let (g, b) = (ctx.g, ctx.bip());
    let u = b.sides().ker_a.union(&b.sides().ker_b);
    ensure!(g.is_independent(&u), "ker_A ∪ ker_B = {} is not independent", ctx.fmt(&u));
    let d = g.difference(&u);
    let bound = (g.n() - 2 * b.m.len()) as i64;
    ensure!(d == bound, "d(ker_A ∪ ker_B) = {d} ≠ d_c = {bound}");
    if let Some((v, y)) = minimal_certificate(g, &u) {
        return Err(format!(
            "ker_A ∪ ker_B = {} is not minimal at {} (violator {})",
            ctx.fmt(&u),
            ctx.name(v),
            ctx.fmt(&y)
        ));
    }
    pass()
}

fn ker_diadem_sum(ctx: &Ctx) -> Result<Option<String>, String> {
    let b = ctx.bip();
    let sum = b.s.ker.len() + b.s.diadem.len();
    ensure!(sum == 2 * b.mis.len(), "|ker| + |diadem| = {sum} ≠ 2α = {}", 2 * b.mis.len());
    pass()
}

fn side_cross_sums(ctx: &Ctx) -> Result<Option<String>, String> {
    let b = ctx.bip();
    let s = b.sides();
    let alpha = b.mis.len();
    let ab = s.ker_a.len() + s.diadem_b.len();
    let ba = s.ker_b.len() + s.diadem_a.len();
    ensure!(ab == alpha, "|ker_A| + |diadem_B| = {ab} ≠ α = {alpha}");
    ensure!(ba == alpha, "|ker_B| + |diadem_A| = {ba} ≠ α = {alpha}");
    pass()
}

fn diadem_side_union(ctx: &Ctx) -> Result<Option<String>, String> {
    // Both witnesses are critical independent, so their union lies in
    // diadem ⊆ corona; equality with corona closes the sandwich.
    let (g, b) = (ctx.g, ctx.bip());
    let s = b.sides();
    let w1 = s.ker_a.union(&s.diadem_b);
    let w2 = s.diadem_a.union(&s.ker_b);
    for (label, w) in [("ker_A ∪ diadem_B", &w1), ("diadem_A ∪ ker_B", &w2)] {
        ensure!(g.is_independent(w), "{label} = {} is not independent", ctx.fmt(w));
        ensure!(g.difference(w) == b.s.bundle.dc, "{label} = {} is not d-critical", ctx.fmt(w));
    }
    let u = s.diadem_a.union(&s.diadem_b);
    same(ctx, "union of witnesses vs diadem_A ∪ diadem_B", &w1.union(&w2), &u)?;
    let (_, corona) = ctx.deletion_sets()?;
    same(ctx, "diadem_A ∪ diadem_B vs corona by deletion", &u, corona)?;
    pass()
}

fn corona_core_sum(ctx: &Ctx) -> Result<Option<String>, String> {
    let (core, corona) = ctx.deletion_sets()?;
    let alpha = ctx.bip().mis.len();
    let sum = core.len() + corona.len();
    ensure!(sum == 2 * alpha, "|corona| + |core| = {sum} ≠ 2α = {}", 2 * alpha);
    pass()
}

fn diadem_equals_corona(ctx: &Ctx) -> Result<Option<String>, String> {
    let (_, corona) = ctx.deletion_sets()?;
    same(ctx, "diadem vs corona by deletion", &ctx.bip().s.diadem, corona)?;
    pass()
}

fn core_neighborhood(ctx: &Ctx) -> Result<Option<String>, String> {
    let (core, corona) = ctx.deletion_sets()?;
    same(ctx, "N(core) vs V − corona", &ctx.g.neighborhood(core), &corona.complement())?;
    pass()
}

fn matching_into_mis(ctx: &Ctx) -> Result<Option<String>, String> {
    let b = ctx.bip();
    for v in b.mis.complement().iter() {
        ensure!(
            b.m.mate(v).is_some_and(|w| b.mis.contains(w)),
            "M does not match {} ∉ S into S = {}",
            ctx.name(v),
            ctx.fmt(&b.mis)
        );
    }
    let (core, _) = ctx.deletion_sets()?;
    for v in ctx.g.neighborhood(core).iter() {
        ensure!(
            b.m.mate(v).is_some_and(|w| core.contains(w)),
            "M does not match {} ∈ N(core) into core = {}",
            ctx.name(v),
            ctx.fmt(core)
        );
    }
    pass()
}

fn mis_is_critical(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, b) = (ctx.g, ctx.bip());
    let dc = b.s.bundle.dc;
    let d = g.difference(&b.mis);
    ensure!(d == dc, "d(S) = {d} ≠ d_c = {dc} for S = {}", ctx.fmt(&b.mis));
    let am = (b.mis.len() - b.m.len()) as i64;
    ensure!(am == dc, "α − μ = {am} ≠ d_c = {dc}");
    let (core, _) = ctx.deletion_sets()?;
    let dcore = g.difference(core);
    ensure!(dcore == dc, "|core| − |N(core)| = {dcore} ≠ d_c = {dc}");
    pass()
}

fn matching_invariance(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, b) = (ctx.g, ctx.bip());
    let m2 = matching::max_matching_reversed(g, &b.bp);
    ensure!(m2.len() == b.m.len(), "second matching has {} edges, first {}", m2.len(), b.m.len());
    let s2 = critical::summarize_with_matching(g, &b.bp, &m2);
    let (x, y) = (b.sides(), s2.sides.as_ref().unwrap());
    for side in SIDES {
        same(ctx, &format!("ker_{side} across matchings"), ker_of(x, side), ker_of(y, side))?;
        same(ctx, &format!("diadem_{side} across matchings"), diadem_of(x, side), diadem_of(y, side))?;
    }
    pass_with(format!("matchings differ: {}", m2 != b.m))
}

fn side_family_extremes(ctx: &Ctx) -> Result<Option<String>, String> {
    let b = ctx.bip();
    let mut sizes = Vec::new();
    for side in SIDES {
        let fam = oracle::oracle_side_critical_family(ctx.g, &b.bp, side, &ctx.opts.bounds).map_err(|e| e.to_string())?;
        ensure!(fam.value == b.d0(side), "exhaustive δ0({side}) = {} ≠ {}", fam.value, b.d0(side));
        let min = fam.unique_min().ok_or_else(|| format!("{side}-critical family has no unique minimum"))?;
        let max = fam.unique_max().ok_or_else(|| format!("{side}-critical family has no unique maximum"))?;
        same(ctx, &format!("ker_{side} vs ∩ of {side}-critical sets"), ker_of(b.sides(), side), min)?;
        same(ctx, &format!("diadem_{side} vs ∪ of {side}-critical sets"), diadem_of(b.sides(), side), max)?;
        sizes.push(fam.len());
    }
    pass_with(format!("{} A-critical and {} B-critical sets", sizes[0], sizes[1]))
}

fn oracle_agreement(ctx: &Ctx) -> Result<Option<String>, String> {
    let (b, e) = (ctx.bip(), ctx.ex());
    let o = &e.summary;
    ensure!(o.alpha == b.alpha(), "α: exhaustive {} vs König {}", o.alpha, b.alpha());
    ensure!(e.mu == b.m.len(), "μ: exhaustive {} vs Hopcroft-Karp {}", e.mu, b.m.len());
    ensure!(e.dc == b.s.bundle.dc, "d_c: exhaustive {} vs {}", e.dc, b.s.bundle.dc);
    ensure!(o.idc == b.s.bundle.idc, "id_c: exhaustive {} vs {}", o.idc, b.s.bundle.idc);
    same(ctx, "ker", &b.s.ker, &o.ker)?;
    same(ctx, "diadem", &b.s.diadem, &o.diadem)?;
    same(ctx, "core", &b.s.core, &o.core)?;
    same(ctx, "corona", &b.s.corona, &o.corona)?;
    pass_with(format!(
        "{} independent sets, {} maximum, {} critical",
        o.independent_sets, o.omega_count, o.critical_count
    ))
}

fn dc_equals_idc(ctx: &Ctx) -> Result<Option<String>, String> {
    let e = ctx.ex();
    ensure!(e.dc == e.summary.idc, "d_c = {} ≠ id_c = {}", e.dc, e.summary.idc);
    let how = if ctx.g.n() <= ctx.opts.bounds.subsets {
        "all subsets"
    } else {
        "independent sets plus sampled subsets"
    };
    pass_with(format!("d_c = {} over {how}", e.dc))
}

fn coverage(checked: usize, total: u64) -> String {
    format!("{checked} of {total} critical independent sets")
}

fn critical_independent_hall(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, e) = (ctx.g, ctx.ex());
    for s in &e.critical_prefix {
        if let Saturation::Violated(h) = matching::saturating_matching(g, &g.neighborhood(s), s) {
            return Err(format!("no matching from N(S) into S = {}: violator {}", ctx.fmt(s), ctx.fmt(&h.set)));
        }
    }
    pass_with(coverage(e.critical_prefix.len(), e.summary.critical_count))
}

fn critical_independent_extends(ctx: &Ctx) -> Result<Option<String>, String> {
    let e = ctx.ex();
    for s in &e.critical_prefix {
        let ok = oracle::oracle_extends_to_maximum(ctx.g, s, &ctx.opts.bounds).map_err(|e| e.to_string())?;
        ensure!(ok, "critical independent {} lies in no maximum independent set", ctx.fmt(s));
    }
    ensure!(
        e.summary.diadem.is_subset(&e.summary.corona),
        "diadem {} ⊄ corona {}",
        ctx.fmt(&e.summary.diadem),
        ctx.fmt(&e.summary.corona)
    );
    pass_with(coverage(e.critical_prefix.len(), e.summary.critical_count))
}

fn difference_supermodular(ctx: &Ctx) -> Result<Option<String>, String> {
    let g = ctx.g;
    let n = g.n();
    let mask_of = |m: u64| VertexSet::from_mask(n, m as u128);
    let violation = |x: u64, y: u64, d: &dyn Fn(u64) -> i64| -> Option<String> {
        let (l, r) = (d(x | y) + d(x & y), d(x) + d(y));
        (l < r).then(|| format!("X = {}, Y = {}: {l} < {r}", ctx.fmt(&mask_of(x)), ctx.fmt(&mask_of(y))))
    };
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
    if n <= ctx.opts.supermodular_exhaustive {
        let size = 1usize << n;
        let mut nb = vec![0u64; size];
        for x in 1..size {
            let low = x.trailing_zeros() as usize;
            nb[x] = nb[x & (x - 1)] | adj[low];
        }
        let d = |x: u64| x.count_ones() as i64 - nb[x as usize].count_ones() as i64;
        for x in 0..size as u64 {
            for y in x..size as u64 {
                if let Some(w) = violation(x, y, &d) {
                    return Err(w);
                }
            }
        }
        return pass_with(format!("all {} pairs", size * (size + 1) / 2));
    }
    let d = |x: u64| {
        let mut nbx = 0u64;
        let mut rest = x;
        while rest != 0 {
            nbx |= adj[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        x.count_ones() as i64 - nbx.count_ones() as i64
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ n as u64);
    for _ in 0..ctx.opts.supermodular_samples {
        let (x, y) = (rng.gen::<u64>() & full, rng.gen::<u64>() & full);
        if let Some(w) = violation(x, y, &d) {
            return Err(w);
        }
    }
    pass_with(format!("{} sampled pairs", ctx.opts.supermodular_samples))
}

fn critical_family_closure(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, e) = (ctx.g, ctx.ex());
    let (members, total, what) = match &e.critical_sets {
        Some(scan) => (&scan.members, scan.count, "critical sets"),
        None => (&e.critical_prefix, e.summary.critical_count, "critical independent sets"),
    };
    for (i, x) in members.iter().enumerate() {
        for y in &members[i..] {
            for (op, z) in [("∪", x.union(y)), ("∩", x.intersection(y))] {
                let d = g.difference(&z);
                ensure!(
                    d == e.dc,
                    "{} {op} {} = {} has d = {d} ≠ d_c = {}",
                    ctx.fmt(x),
                    ctx.fmt(y),
                    ctx.fmt(&z),
                    e.dc
                );
            }
        }
    }
    pass_with(format!("pairs among {} of {total} {what}", members.len()))
}

fn ker_unique_minimal(ctx: &Ctx) -> Result<Option<String>, String> {
    let (g, e) = (ctx.g, ctx.ex());
    let ker = &e.summary.ker;
    ensure!(g.is_independent(ker), "ker = {} is not independent", ctx.fmt(ker));
    let d = g.difference(ker);
    ensure!(d == e.dc, "ker = {} has d = {d} ≠ d_c = {}", ctx.fmt(ker), e.dc);
    match &e.critical_sets {
        Some(scan) => {
            same(ctx, "ker vs ∩ of all critical sets", ker, &scan.meet)?;
            pass_with(format!("over all {} critical sets", scan.count))
        }
        None => pass_with(format!("over {} critical independent sets", e.summary.critical_count)),
    }
}

fn ker_within_core(ctx: &Ctx) -> Result<Option<String>, String> {
    let s = &ctx.ex().summary;
    ensure!(s.ker.is_subset(&s.core), "ker = {} ⊄ core = {}", ctx.fmt(&s.ker), ctx.fmt(&s.core));
    let strict = if s.ker == s.core { "equal" } else { "strict" };
    pass_with(format!("{strict}: ker = {}, core = {}", ctx.fmt(&s.ker), ctx.fmt(&s.core)))
}

fn conjecture_chain(ctx: &Ctx) -> Result<Option<String>, String> {
    let s = &ctx.ex().summary;
    let left = s.ker.len() + s.diadem.len();
    let right = s.core.len() + s.corona.len();
    let two_alpha = 2 * s.alpha;
    ensure!(left <= two_alpha, "|ker| + |diadem| = {left} > 2α = {two_alpha}");
    ensure!(two_alpha <= right, "2α = {two_alpha} > |core| + |corona| = {right}");
    pass_with(format!("{left} ≤ {two_alpha} ≤ {right}"))
}

fn ke_note(k: &KeData) -> String {
    if k.alpha + k.mu == k.n {
        "the graph is König-Egerváry".into()
    } else {
        format!("the graph is not König-Egerváry: α + μ = {} + {} ≠ {}", k.alpha, k.mu, k.n)
    }
}

fn ke_corona_core_sum(ctx: &Ctx) -> Result<Option<String>, String> {
    let k = ctx.kd();
    let sum = k.corona.len() + k.core.len();
    ensure!(
        sum == 2 * k.alpha,
        "|corona| + |core| = {} + {} = {sum} ≠ {} = 2α; {}",
        k.corona.len(),
        k.core.len(),
        2 * k.alpha,
        ke_note(k)
    );
    pass()
}

fn ke_diadem_corona(ctx: &Ctx) -> Result<Option<String>, String> {
    let k = ctx.kd();
    ensure!(
        k.diadem.is_subset(&k.corona),
        "diadem = {} ⊄ corona = {}",
        ctx.fmt(&k.diadem),
        ctx.fmt(&k.corona)
    );
    ensure!(
        k.diadem == k.corona,
        "diadem = {} ≠ corona = {}; {}",
        ctx.fmt(&k.diadem),
        ctx.fmt(&k.corona),
        ke_note(k)
    );
    pass()
}

fn ke_ker_diadem_bound(ctx: &Ctx) -> Result<Option<String>, String> {
    let k = ctx.kd();
    let sum = k.ker.len() + k.diadem.len();
    ensure!(sum <= 2 * k.alpha, "|ker| + |diadem| = {sum} > 2α = {}; {}", 2 * k.alpha, ke_note(k));
    pass()
}

fn ke_core_neighborhood(ctx: &Ctx) -> Result<Option<String>, String> {
    let k = ctx.kd();
    let nc = ctx.g.neighborhood(&k.core);
    let rest = k.corona.complement();
    ensure!(
        nc == rest,
        "N(core) = {} ≠ V − corona = {}; {}",
        ctx.fmt(&nc),
        ctx.fmt(&rest),
        ke_note(k)
    );
    pass()
}

fn ke_mis_critical(ctx: &Ctx) -> Result<Option<String>, String> {
    let k = ctx.kd();
    for s in &k.mis {
        let d = ctx.g.difference(s);
        ensure!(d == k.dc, "S = {} has d = {d} ≠ d_c = {}; {}", ctx.fmt(s), k.dc, ke_note(k));
    }
    let am = k.alpha as i64 - k.mu as i64;
    ensure!(am == k.dc, "α − μ = {am} ≠ d_c = {}; {}", k.dc, ke_note(k));
    let dcore = ctx.g.difference(&k.core);
    ensure!(dcore == k.dc, "|core| − |N(core)| = {dcore} ≠ d_c = {}; {}", k.dc, ke_note(k));
    pass_with(k.mis_note.clone())
}

/// Runs every enabled group on `g`, discovering a bipartition.
pub fn theorem_battery(g: &Graph, opts: &BatteryOptions) -> TheoremReport {
    run_battery(g, "graph", None, None, opts)
}

/// Runs the battery with an optional declared bipartition and vertex names
/// (used in witnesses).
pub fn run_battery(
    g: &Graph,
    name: &str,
    declared: Option<&Bipartition>,
    names: Option<&[String]>,
    opts: &BatteryOptions,
) -> TheoremReport {
    let ctx = Ctx::new(g, declared, names, opts);
    let mut checks = Vec::with_capacity(CHECKS.len());
    let mut group_skip: Vec<(Group, Option<String>)> = Vec::new();
    for spec in CHECKS {
        if !opts.enabled(spec.group) {
            continue;
        }
        let skip = match group_skip.iter().find(|(gr, _)| *gr == spec.group) {
            Some((_, s)) => s.clone(),
            None => {
                let s = ctx.skip_reason(spec.group);
                group_skip.push((spec.group, s.clone()));
                s
            }
        };
        let status = match skip {
            Some(reason) => Status::Skipped { reason },
            None => match (spec.run)(&ctx) {
                Ok(detail) => Status::Pass { detail },
                Err(witness) => Status::Fail { witness },
            },
        };
        checks.push(CheckResult {
            id: spec.id,
            group: spec.group,
            statement: spec.statement,
            status,
        });
    }
    TheoremReport {
        graph: name.to_string(),
        checks,
    }
}

/// Looks up a check by id.
pub fn check_spec(id: &str) -> Option<&'static CheckSpec> {
    CHECKS.iter().find(|c| c.id == id)
}
