//! Exhaustive ground truth for small graphs.
//!
//! Everything here enumerates: independent sets, subsets, matchings. Inputs
//! are bounded by [`OracleBounds`]; exceeding a bound is an error, never a
//! silent truncation. Vertex sets are `u64` masks internally, so no bound can
//! exceed [`MAX_ORACLE_VERTICES`].

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Bipartition, Graph, Side, VertexSet};

pub const MAX_ORACLE_VERTICES: usize = 64;

/// Environment variable overriding the default vertex bound.
pub const BOUND_ENV: &str = "CRITSETS_ORACLE_BOUND";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleBounds {
    /// Independent-set enumeration (α, Ω, critical families, μ).
    pub vertices: usize,
    /// Enumeration of all `2^n` subsets for `d_c`.
    pub subsets: usize,
    /// Enumeration of all subsets of one side.
    pub side: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            vertices: 24,
            subsets: 20,
            side: 20,
        }
    }
}

impl OracleBounds {
    /// Defaults, with the vertex bound taken from [`BOUND_ENV`] when set.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        if let Some(v) = std::env::var(BOUND_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            b = b.with_vertices(v);
        }
        b
    }

    pub fn with_vertices(mut self, vertices: usize) -> Self {
        self.vertices = vertices.min(MAX_ORACLE_VERTICES);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} is limited to {bound} vertices by the oracle bound, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        bound: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    MaximumIndependent,
    CriticalIndependent,
    SideCriticalA,
    SideCriticalB,
}

/// A complete family of vertex sets sharing an extremal value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    pub kind: FamilyKind,
    /// α for Ω, `id_c` for critical independent sets, `δ0` for side families.
    pub value: i64,
    universe: usize,
    /// Sorted canonically (`VertexSet` order).
    members: Vec<VertexSet>,
}

impl SetFamily {
    fn from_masks(kind: FamilyKind, value: i64, universe: usize, masks: Vec<u64>) -> Self {
        let mut members: Vec<VertexSet> = masks
            .into_iter()
            .map(|m| VertexSet::from_mask(universe, m as u128))
            .collect();
        members.sort();
        SetFamily {
            kind,
            value,
            universe,
            members,
        }
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &VertexSet) -> bool {
        self.members.binary_search(x).is_ok()
    }

    /// Intersection of all members; the full universe for an empty family.
    pub fn intersection(&self) -> VertexSet {
        self.members
            .iter()
            .fold(VertexSet::full(self.universe), |acc, s| acc.intersection(s))
    }

    pub fn union(&self) -> VertexSet {
        self.members
            .iter()
            .fold(VertexSet::empty(self.universe), |acc, s| acc.union(s))
    }

    /// The member contained in every other member, if one exists.
    pub fn unique_min(&self) -> Option<&VertexSet> {
        let meet = self.intersection();
        self.members.iter().find(|s| **s == meet)
    }

    /// The member containing every other member, if one exists.
    pub fn unique_max(&self) -> Option<&VertexSet> {
        let join = self.union();
        self.members.iter().find(|s| **s == join)
    }
}

/// Enumeration order for independent sets; both must yield the same sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Ascending,
    Descending,
}

/// Everything one pass over all independent sets determines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSummary {
    pub alpha: usize,
    /// `|Ω(G)|`.
    pub omega_count: u64,
    pub core: VertexSet,
    pub corona: VertexSet,
    pub idc: i64,
    /// Number of critical independent sets.
    pub critical_count: u64,
    pub ker: VertexSet,
    pub diadem: VertexSet,
    pub independent_sets: u64,
}

fn masks(g: &Graph, what: &'static str, bound: usize) -> Result<Vec<u64>, OracleError> {
    let bound = bound.min(MAX_ORACLE_VERTICES);
    if g.n() > bound {
        return Err(OracleError::TooLarge {
            what,
            n: g.n(),
            bound,
        });
    }
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_mask(n, mask as u128)
}

fn set_mask(x: &VertexSet) -> u64 {
    x.iter().fold(0u64, |m, v| m | 1 << v)
}

/// Calls `visit(set, N(set))` once for every independent set, including ∅.
fn for_each_independent(adj: &[u64], order: Order, visit: &mut impl FnMut(u64, u64)) {
    try_for_each_independent(adj, order, &mut |s, nb| {
        visit(s, nb);
        true
    });
}

/// As [`for_each_independent`], stopping once `visit` returns `false`.
fn try_for_each_independent(adj: &[u64], order: Order, visit: &mut impl FnMut(u64, u64) -> bool) {
    fn rec(adj: &[u64], order: Order, cand: u64, set: u64, nb: u64, visit: &mut impl FnMut(u64, u64) -> bool) -> bool {
        if !visit(set, nb) {
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = match order {
                Order::Ascending => rest.trailing_zeros() as usize,
                Order::Descending => 63 - rest.leading_zeros() as usize,
            };
            rest &= !(1u64 << v);
            // Only vertices after `v` in the order stay candidates.
            if !rec(adj, order, rest & !adj[v], set | 1 << v, nb | adj[v], visit) {
                return false;
            }
        }
        true
    }
    rec(adj, order, full_mask(adj.len()), 0, 0, visit);
}

/// Greedy clique partition of `cand`; its size bounds α(G[cand]) from above.
fn clique_cover_bound(adj: &[u64], mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut common = cand & adj[v];
        cand &= !(1u64 << v);
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            common &= adj[w];
            cand &= !(1u64 << w);
        }
        cliques += 1;
    }
    cliques
}

fn alpha_bb(adj: &[u64], mut cand: u64, mut size: usize, best: &mut usize) {
    // A vertex of degree ≤ 1 in G[cand] lies in some maximum independent set.
    loop {
        let mut changed = false;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & cand).count_ones() <= 1 {
                size += 1;
                cand &= !(adj[v] | 1u64 << v);
                rest &= cand;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover_bound(adj, cand) <= *best {
        return;
    }
    let mut pick = 0;
    let mut pick_deg = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d > pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    alpha_bb(adj, cand & !(adj[pick] | 1u64 << pick), size + 1, best);
    alpha_bb(adj, cand & !(1u64 << pick), size, best);
}

/// Exact α by branch and bound.
pub fn oracle_alpha(g: &Graph, bounds: &OracleBounds) -> Result<usize, OracleError> {
    let adj = masks(g, "oracle α", bounds.vertices)?;
    let mut best = 0;
    alpha_bb(&adj, full_mask(adj.len()), 0, &mut best);
    Ok(best)
}

/// Ω(G): every maximum independent set.
pub fn oracle_omega(g: &Graph, bounds: &OracleBounds) -> Result<SetFamily, OracleError> {
    let adj = masks(g, "oracle Ω", bounds.vertices)?;
    let alpha = oracle_alpha(g, bounds)?;
    let mut found = Vec::new();
    maximum_sets(&adj, alpha, usize::MAX, &mut found);
    Ok(SetFamily::from_masks(
        FamilyKind::MaximumIndependent,
        alpha as i64,
        g.n(),
        found,
    ))
}

/// Collects up to `limit` independent sets of size `alpha`, pruning branches
/// that cannot reach that size.
fn maximum_sets(adj: &[u64], alpha: usize, limit: usize, out: &mut Vec<u64>) {
    fn rec(adj: &[u64], alpha: usize, limit: usize, cand: u64, set: u64, out: &mut Vec<u64>) -> bool {
        let size = set.count_ones() as usize;
        if size == alpha {
            out.push(set);
            return out.len() < limit;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + (rest.count_ones() as usize) < alpha {
                break;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !rec(adj, alpha, limit, rest & !adj[v], set | 1 << v, out) {
                return false;
            }
        }
        true
    }
    if limit > 0 {
        rec(adj, alpha, limit, full_mask(adj.len()), 0, out);
    }
}

/// One pass over all independent sets in ascending order.
pub fn oracle_summary(g: &Graph, bounds: &OracleBounds) -> Result<OracleSummary, OracleError> {
    oracle_summary_ordered(g, bounds, Order::Ascending)
}

pub fn oracle_summary_ordered(
    g: &Graph,
    bounds: &OracleBounds,
    order: Order,
) -> Result<OracleSummary, OracleError> {
    let adj = masks(g, "oracle enumeration", bounds.vertices)?;
    let n = adj.len();
    let mut alpha = 0u32;
    let (mut omega_count, mut core, mut corona) = (0u64, u64::MAX, 0u64);
    let mut idc = 0i64;
    let (mut critical_count, mut ker, mut diadem) = (0u64, u64::MAX, 0u64);
    let mut independent_sets = 0u64;
    for_each_independent(&adj, order, &mut |set, nb| {
        independent_sets += 1;
        let size = set.count_ones();
        if size > alpha {
            alpha = size;
            (omega_count, core, corona) = (0, u64::MAX, 0);
        }
        if size == alpha {
            omega_count += 1;
            core &= set;
            corona |= set;
        }
        let d = size as i64 - nb.count_ones() as i64;
        if d > idc {
            idc = d;
            (critical_count, ker, diadem) = (0, u64::MAX, 0);
        }
        if d == idc {
            critical_count += 1;
            ker &= set;
            diadem |= set;
        }
    });
    Ok(OracleSummary {
        alpha: alpha as usize,
        omega_count,
        core: to_set(n, core),
        corona: to_set(n, corona),
        idc,
        critical_count,
        ker: to_set(n, ker),
        diadem: to_set(n, diadem),
        independent_sets,
    })
}

/// Every independent set `I` with `d(I) = id_c(G)`.
pub fn oracle_critical_independent_family(
    g: &Graph,
    bounds: &OracleBounds,
) -> Result<SetFamily, OracleError> {
    let adj = masks(g, "oracle critical family", bounds.vertices)?;
    let mut idc = 0i64;
    let mut found = Vec::new();
    for_each_independent(&adj, Order::Ascending, &mut |set, nb| {
        let d = set.count_ones() as i64 - nb.count_ones() as i64;
        if d > idc {
            idc = d;
            found.clear();
        }
        if d == idc {
            found.push(set);
        }
    });
    Ok(SetFamily::from_masks(
        FamilyKind::CriticalIndependent,
        idc,
        g.n(),
        found,
    ))
}

/// Every subset `X` of `V` with `d(X) = d_c(G)`. Needs `n ≤ bounds.subsets`.
pub fn oracle_critical_family(g: &Graph, bounds: &OracleBounds) -> Result<(i64, Vec<VertexSet>), OracleError> {
    let adj = masks(g, "oracle critical-set family", bounds.subsets)?;
    let mut best = 0i64;
    let mut found = Vec::new();
    for_each_subset(&adj, full_mask(adj.len()), &mut |set, nb| {
        let d = set.count_ones() as i64 - nb.count_ones() as i64;
        if d > best {
            best = d;
            found.clear();
        }
        if d == best {
            found.push(set);
        }
    });
    let mut sets: Vec<VertexSet> = found.into_iter().map(|m| to_set(g.n(), m)).collect();
    sets.sort();
    Ok((best, sets))
}

/// Calls `visit(X, N(X))` for every subset `X` of `within`.
fn for_each_subset(adj: &[u64], within: u64, visit: &mut impl FnMut(u64, u64)) {
    fn rec(adj: &[u64], rest: u64, set: u64, nb: u64, visit: &mut impl FnMut(u64, u64)) {
        if rest == 0 {
            visit(set, nb);
            return;
        }
        let v = rest.trailing_zeros() as usize;
        let rest = rest & (rest - 1);
        rec(adj, rest, set, nb, visit);
        rec(adj, rest, set | 1 << v, nb | adj[v], visit);
    }
    rec(adj, within, 0, 0, visit);
}

/// Aggregate of a family too large to list: its extremal value, size,
/// intersection, union, and the first members in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyScan {
    pub value: i64,
    pub count: u64,
    pub meet: VertexSet,
    pub join: VertexSet,
    pub members: Vec<VertexSet>,
}

/// All subsets `X` with `d(X) = d_c(G)`, listing at most `limit` of them.
/// Needs `n ≤ bounds.subsets`.
pub fn critical_set_scan(g: &Graph, bounds: &OracleBounds, limit: usize) -> Result<FamilyScan, OracleError> {
    let adj = masks(g, "oracle critical-set scan", bounds.subsets)?;
    let (mut value, mut count, mut meet, mut join) = (0i64, 0u64, u64::MAX, 0u64);
    let mut members = Vec::new();
    for_each_subset(&adj, full_mask(adj.len()), &mut |set, nb| {
        let d = set.count_ones() as i64 - nb.count_ones() as i64;
        if d > value {
            (value, count, meet, join) = (d, 0, u64::MAX, 0);
            members.clear();
        }
        if d == value {
            count += 1;
            meet &= set;
            join |= set;
            if members.len() < limit {
                members.push(set);
            }
        }
    });
    Ok(FamilyScan {
        value,
        count,
        meet: to_set(g.n(), meet),
        join: to_set(g.n(), join),
        members: members.into_iter().map(|m| to_set(g.n(), m)).collect(),
    })
}

/// The first `limit` maximum independent sets (of size `alpha`) in
/// ascending enumeration order.
pub fn maximum_independent_prefix(
    g: &Graph,
    bounds: &OracleBounds,
    alpha: usize,
    limit: usize,
) -> Result<Vec<VertexSet>, OracleError> {
    let adj = masks(g, "oracle Ω", bounds.vertices)?;
    let mut out = Vec::new();
    maximum_sets(&adj, alpha, limit, &mut out);
    Ok(out.into_iter().map(|m| to_set(g.n(), m)).collect())
}

/// The first `limit` independent sets with `d = idc` in ascending
/// enumeration order.
pub fn critical_independent_prefix(
    g: &Graph,
    bounds: &OracleBounds,
    idc: i64,
    limit: usize,
) -> Result<Vec<VertexSet>, OracleError> {
    let adj = masks(g, "oracle critical family", bounds.vertices)?;
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    try_for_each_independent(&adj, Order::Ascending, &mut |set, nb| {
        if set.count_ones() as i64 - nb.count_ones() as i64 == idc {
            out.push(to_set(g.n(), set));
        }
        out.len() < limit
    });
    Ok(out)
}

/// Number of random subsets sampled by [`oracle_dc`] above the subset bound.
pub const DC_SPOT_CHECKS: usize = 4096;

/// Exact `d_c(G) = max d(X)` over all subsets when `n ≤ bounds.subsets`.
///
/// Above that (up to `bounds.vertices`) the value is `id_c(G)` maximized
/// with `d` of the pairwise unions of critical independent sets and of
/// [`DC_SPOT_CHECKS`] seeded random subsets.
pub fn oracle_dc(g: &Graph, bounds: &OracleBounds) -> Result<i64, OracleError> {
    if g.n() <= bounds.subsets.min(MAX_ORACLE_VERTICES) {
        let adj = masks(g, "oracle d_c", bounds.subsets)?;
        let mut best = 0i64;
        for_each_subset(&adj, full_mask(adj.len()), &mut |set, nb| {
            best = best.max(set.count_ones() as i64 - nb.count_ones() as i64);
        });
        return Ok(best);
    }
    let adj = masks(g, "oracle d_c", bounds.vertices)?;
    let d = |x: u64| {
        let mut nb = 0u64;
        let mut rest = x;
        while rest != 0 {
            nb |= adj[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        x.count_ones() as i64 - nb.count_ones() as i64
    };
    let family = oracle_critical_independent_family(g, bounds)?;
    let crit: Vec<u64> = family.members().iter().take(64).map(set_mask).collect();
    let mut best = family.value;
    for (i, &x) in crit.iter().enumerate() {
        for &y in &crit[i..] {
            best = best.max(d(x | y));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(g.n() as u64 ^ (g.edge_count() as u64) << 8);
    let all = full_mask(adj.len());
    for _ in 0..DC_SPOT_CHECKS {
        best = best.max(d(rng.gen::<u64>() & all));
    }
    Ok(best)
}

/// Every `X ⊆ side` with `δ(X) = δ0(side)`.
pub fn oracle_side_critical_family(
    g: &Graph,
    bp: &Bipartition,
    side: Side,
    bounds: &OracleBounds,
) -> Result<SetFamily, OracleError> {
    let adj = masks(g, "oracle side enumeration", MAX_ORACLE_VERTICES)?;
    let side_set = bp.vertices(side);
    if side_set.len() > bounds.side {
        return Err(OracleError::TooLarge {
            what: "oracle side family",
            n: side_set.len(),
            bound: bounds.side,
        });
    }
    let mut best = 0i64;
    let mut found = Vec::new();
    for_each_subset(&adj, set_mask(side_set), &mut |set, nb| {
        let d = set.count_ones() as i64 - nb.count_ones() as i64;
        if d > best {
            best = d;
            found.clear();
        }
        if d == best {
            found.push(set);
        }
    });
    let kind = match side {
        Side::A => FamilyKind::SideCriticalA,
        Side::B => FamilyKind::SideCriticalB,
    };
    Ok(SetFamily::from_masks(kind, best, g.n(), found))
}

/// Exact matching number of any graph, by memoized recursion on the lowest
/// remaining vertex (matched to a neighbor or left unmatched).
pub fn oracle_mu(g: &Graph, bounds: &OracleBounds) -> Result<usize, OracleError> {
    let adj = masks(g, "oracle μ", bounds.vertices)?;
    fn rec(adj: &[u64], alive: u64, memo: &mut HashMap<u64, u8>) -> u8 {
        // Vertices without live neighbors never matter.
        let mut live = alive;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & alive == 0 {
                live &= !(1u64 << v);
            }
        }
        if live == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&live) {
            return r;
        }
        let v = live.trailing_zeros() as usize;
        let without = live & !(1u64 << v);
        let mut best = rec(adj, without, memo);
        let mut nbrs = adj[v] & live;
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            best = best.max(1 + rec(adj, without & !(1u64 << w), memo));
        }
        memo.insert(live, best);
        best
    }
    Ok(rec(&adj, full_mask(adj.len()), &mut HashMap::new()) as usize)
}

/// Whether `x` lies in some maximum independent set of `g`.
pub fn oracle_extends_to_maximum(g: &Graph, x: &VertexSet, bounds: &OracleBounds) -> Result<bool, OracleError> {
    let adj = masks(g, "oracle extension", bounds.vertices)?;
    let xm = set_mask(x);
    let mut nb = 0u64;
    for v in x.iter() {
        if adj[v] & xm != 0 {
            return Ok(false);
        }
        nb |= adj[v];
    }
    let alpha = oracle_alpha(g, bounds)?;
    let mut best = 0;
    alpha_bb(&adj, full_mask(adj.len()) & !xm & !nb, 0, &mut best);
    Ok(best + x.len() == alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> OracleBounds {
        OracleBounds::default()
    }

    fn p4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn star() -> Graph {
        Graph::new(4, [(0, 3), (1, 3), (2, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .map(|m| VertexSet::from_mask(g.n(), m as u128))
            .filter(|s| g.is_independent(s))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(oracle_alpha(&p4(), &b()).unwrap(), 2);
        assert_eq!(oracle_mu(&p4(), &b()).unwrap(), 2);
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(oracle_mu(&tri, &b()).unwrap(), 1);
        assert_eq!(oracle_alpha(&tri, &b()).unwrap(), 1);
        assert_eq!(oracle_dc(&c4(), &b()).unwrap(), 0);
        assert_eq!(oracle_dc(&star(), &b()).unwrap(), 2);
        assert_eq!(oracle_alpha(&Graph::empty(0), &b()).unwrap(), 0);
    }

    #[test]
    fn omega_of_p4_and_star() {
        let om = oracle_omega(&p4(), &b()).unwrap();
        let got: Vec<Vec<usize>> = om.members().iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
        assert!(om.intersection().is_empty());
        assert_eq!(om.union().len(), 4);

        let om = oracle_omega(&star(), &b()).unwrap();
        assert_eq!(om.len(), 1);
        assert_eq!(om.members()[0].to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn side_families() {
        let g = c4();
        let bp = Bipartition::of(&g).unwrap();
        let fam = oracle_side_critical_family(&g, &bp, Side::A, &b()).unwrap();
        assert_eq!(fam.value, 0);
        assert_eq!(fam.unique_min().unwrap().len(), 0);
        assert_eq!(fam.unique_max().unwrap(), bp.a());

        let g = star();
        let bp = Bipartition::of(&g).unwrap();
        let fam = oracle_side_critical_family(&g, &bp, Side::A, &b()).unwrap();
        assert_eq!(fam.value, 2);
        assert_eq!(fam.len(), 1);
        assert_eq!(fam.members()[0].to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn bounds_are_enforced() {
        let g = Graph::empty(30);
        let err = oracle_alpha(&g, &b()).unwrap_err();
        assert_eq!(
            err,
            OracleError::TooLarge {
                what: "oracle α",
                n: 30,
                bound: 24
            }
        );
        assert_eq!(oracle_alpha(&g, &b().with_vertices(30)).unwrap(), 30);
        assert_eq!(b().with_vertices(1000).vertices, MAX_ORACLE_VERTICES);
    }

    #[test]
    fn dc_above_subset_bound_uses_independent_sets() {
        // 22 vertices: disjoint stars K1,3 plus a path.
        let mut edges = Vec::new();
        for s in 0..5 {
            let c = 4 * s;
            edges.extend([(c, c + 1), (c, c + 2), (c, c + 3)]);
        }
        edges.push((20, 21));
        let g = Graph::new(22, edges).unwrap();
        assert_eq!(oracle_dc(&g, &b()).unwrap(), 10);
        let small = OracleBounds {
            subsets: 22,
            ..b()
        };
        assert_eq!(oracle_dc(&g, &small).unwrap(), 10);
    }

    #[test]
    fn exhaustive_agreement_on_all_graphs_with_five_vertices() {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::new(5, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
            let alpha = brute_alpha(&g);
            assert_eq!(oracle_alpha(&g, &b()).unwrap(), alpha);
            let up = oracle_summary_ordered(&g, &b(), Order::Ascending).unwrap();
            let down = oracle_summary_ordered(&g, &b(), Order::Descending).unwrap();
            assert_eq!(up, down);
            assert_eq!(up.alpha, alpha);
            let om = oracle_omega(&g, &b()).unwrap();
            assert_eq!(om.len() as u64, up.omega_count);
            assert_eq!(om.intersection(), up.core);
            assert_eq!(om.union(), up.corona);
            let crit = oracle_critical_independent_family(&g, &b()).unwrap();
            assert_eq!(crit.len() as u64, up.critical_count);
            assert_eq!(crit.intersection(), up.ker);
            assert_eq!(crit.union(), up.diadem);
            assert_eq!(oracle_dc(&g, &b()).unwrap(), up.idc);
        }
    }

    #[test]
    fn extension_to_maximum() {
        let g = p4();
        assert!(oracle_extends_to_maximum(&g, &VertexSet::new(4, [0]), &b()).unwrap());
        let path5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!oracle_extends_to_maximum(&path5, &VertexSet::new(5, [1]), &b()).unwrap());
        assert!(!oracle_extends_to_maximum(&g, &VertexSet::new(4, [0, 1]), &b()).unwrap());
    }
}
