//! Maximum bipartite matching (Hopcroft-Karp), König covers, maximum
//! independent sets, alternating reachability, and Hall-condition
//! certificates.
//!
//! All routines iterate vertices and adjacency lists in ascending id order,
//! so the returned matching (not only its size) is reproducible.

use std::collections::VecDeque;

use crate::graph::{Bipartition, Graph, Side, VertexSet};

const NONE: usize = usize::MAX;

/// A matching stored as a symmetric mate map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<usize>,
    size: usize,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![NONE; n],
            size: 0,
        }
    }

    /// Builds a matching from vertex pairs. Returns `None` if a vertex is
    /// used twice or an endpoint is out of range.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Option<Self> {
        let mut m = Matching::empty(n);
        for (u, v) in pairs {
            if u >= n || v >= n || u == v || m.mate[u] != NONE || m.mate[v] != NONE {
                return None;
            }
            m.mate[u] = v;
            m.mate[v] = u;
            m.size += 1;
        }
        Some(m)
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        match self.mate[v] {
            NONE => None,
            w => Some(w),
        }
    }

    pub fn is_matched(&self, v: usize) -> bool {
        self.mate[v] != NONE
    }

    /// Number of matched pairs.
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn n(&self) -> usize {
        self.mate.len()
    }

    /// Pairs `(u, v)` with `u < v`, ascending.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(u, &v)| v != NONE && u < v)
            .map(|(u, &v)| (u, v))
    }

    /// `M(X)`: mates of the matched members of `x`.
    pub fn mates_of(&self, x: &VertexSet) -> VertexSet {
        VertexSet::new(self.n(), x.iter().filter_map(|v| self.mate(v)))
    }

    pub fn matched_vertices(&self) -> VertexSet {
        VertexSet::new(self.n(), (0..self.n()).filter(|&v| self.is_matched(v)))
    }

    /// Whether the mate map is symmetric and every pair is an edge of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.n() == g.n()
            && (0..self.n()).all(|u| match self.mate(u) {
                None => true,
                Some(v) => self.mate[v] == u && g.has_edge(u, v),
            })
            && self.pairs().count() == self.size
    }

    pub fn is_perfect(&self) -> bool {
        2 * self.size == self.n()
    }
}

/// Hopcroft-Karp over an explicit left vertex list; right vertices are the
/// neighbors of left vertices accepted by `allow`.
struct HopcroftKarp<'g, F> {
    g: &'g Graph,
    left: Vec<usize>,
    allow: F,
    matching: Matching,
    dist: Vec<u32>,
    cursor: Vec<usize>,
}

const INF: u32 = u32::MAX;

impl<'g, F: Fn(usize) -> bool> HopcroftKarp<'g, F> {
    fn new(g: &'g Graph, left: Vec<usize>, allow: F) -> Self {
        let n = g.n();
        HopcroftKarp {
            g,
            left,
            allow,
            matching: Matching::empty(n),
            dist: vec![INF; n],
            cursor: vec![0; n],
        }
    }

    fn run(mut self) -> Matching {
        while let Some(limit) = self.layer() {
            for i in 0..self.left.len() {
                let u = self.left[i];
                if self.matching.mate[u] == NONE {
                    self.augment_from(u, limit);
                }
            }
        }
        self.matching
    }

    /// BFS layering from free left vertices. Returns the length of the
    /// shortest augmenting path in left-layers, or `None` if there is none.
    fn layer(&mut self) -> Option<u32> {
        let mut queue = VecDeque::new();
        for &u in &self.left {
            if self.matching.mate[u] == NONE {
                self.dist[u] = 0;
                queue.push_back(u);
            } else {
                self.dist[u] = INF;
            }
        }
        let mut limit = INF;
        while let Some(u) = queue.pop_front() {
            if self.dist[u] >= limit {
                continue;
            }
            for &w in self.g.neighbors(u) {
                if !(self.allow)(w) {
                    continue;
                }
                match self.matching.mate[w] {
                    NONE => limit = limit.min(self.dist[u] + 1),
                    x if self.dist[x] == INF => {
                        self.dist[x] = self.dist[u] + 1;
                        queue.push_back(x);
                    }
                    _ => {}
                }
            }
        }
        for &u in &self.left {
            self.cursor[u] = 0;
        }
        (limit != INF).then_some(limit)
    }

    /// Iterative layered DFS. Returns whether an augmenting path was applied.
    fn augment_from(&mut self, root: usize, limit: u32) -> bool {
        // (left vertex, right vertex used to leave it)
        let mut stack: Vec<(usize, usize)> = vec![(root, NONE)];
        while let Some(&(u, _)) = stack.last() {
            let adj = self.g.neighbors(u);
            let mut advanced = false;
            while self.cursor[u] < adj.len() {
                let w = adj[self.cursor[u]];
                self.cursor[u] += 1;
                if !(self.allow)(w) {
                    continue;
                }
                let x = self.matching.mate[w];
                if x == NONE {
                    if self.dist[u] + 1 == limit {
                        stack.last_mut().unwrap().1 = w;
                        self.flip(&stack);
                        return true;
                    }
                } else if self.dist[x] == self.dist[u] + 1 {
                    stack.last_mut().unwrap().1 = w;
                    stack.push((x, NONE));
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                self.dist[u] = INF;
                stack.pop();
            }
        }
        false
    }

    fn flip(&mut self, path: &[(usize, usize)]) {
        for &(u, w) in path {
            self.matching.mate[u] = w;
            self.matching.mate[w] = u;
        }
        self.matching.size += 1;
    }
}

/// A maximum matching of a bipartite graph.
pub fn max_matching(g: &Graph, bp: &Bipartition) -> Matching {
    max_matching_ordered(g, bp, false)
}

/// Same as [`max_matching`] but scanning free `A` vertices in descending id
/// order. Used to obtain a second, generally different maximum matching.
pub fn max_matching_reversed(g: &Graph, bp: &Bipartition) -> Matching {
    max_matching_ordered(g, bp, true)
}

fn max_matching_ordered(g: &Graph, bp: &Bipartition, reversed: bool) -> Matching {
    debug_assert!(bp.is_valid_for(g));
    let mut left: Vec<usize> = bp.a().iter().collect();
    if reversed {
        left.reverse();
    }
    HopcroftKarp::new(g, left, |_| true).run()
}

/// Vertices reachable from the unmatched vertices of `from` by alternating
/// paths (non-matching edge out of `from`, matching edge back), seeds included.
pub fn alternating_reachable(g: &Graph, bp: &Bipartition, m: &Matching, from: Side) -> VertexSet {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for u in bp.vertices(from).iter() {
        if !m.is_matched(u) {
            seen[u] = true;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            // A free `w` would be an augmenting path; `m` is maximum.
            if let Some(x) = m.mate(w) {
                if !seen[x] {
                    seen[x] = true;
                    queue.push_back(x);
                }
            }
        }
    }
    VertexSet::from_flags(&seen)
}

/// König cover `(A - Z) ∪ (B ∩ Z)` where `Z` is reachable from free `A`.
pub fn min_vertex_cover(g: &Graph, bp: &Bipartition, m: &Matching) -> VertexSet {
    let z = alternating_reachable(g, bp, m, Side::A);
    bp.a().difference(&z).union(&bp.b().intersection(&z))
}

/// Complement of the König cover: a maximum independent set.
pub fn max_independent_set(g: &Graph, bp: &Bipartition) -> VertexSet {
    let m = max_matching(g, bp);
    min_vertex_cover(g, bp, &m).complement()
}

/// Whether some free `A` vertex reaches a free `B` vertex alternately.
pub fn has_augmenting_path(g: &Graph, bp: &Bipartition, m: &Matching) -> bool {
    let z = alternating_reachable(g, bp, m, Side::A);
    bp.b().iter().any(|b| z.contains(b) && !m.is_matched(b))
}

/// A set `U` of source vertices with `|N(U) ∩ target| < |U|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallViolator {
    pub set: VertexSet,
    /// `N(U) ∩ target`.
    pub neighbors_in_target: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Saturation {
    /// A matching covering every source vertex, using only source–target edges.
    Saturated(Matching),
    Violated(HallViolator),
}

impl Saturation {
    pub fn is_saturated(&self) -> bool {
        matches!(self, Saturation::Saturated(_))
    }
}

/// Either a matching saturating `source` into `target`, or a Hall violator.
///
/// Only edges between `source` and `target` are used. The violator is the
/// source side of the alternating forest grown from the smallest unsaturated
/// source vertex of a maximum matching, so `|N(U) ∩ target| = |U| - 1`.
///
/// Panics if `source` and `target` intersect.
pub fn saturating_matching(g: &Graph, source: &VertexSet, target: &VertexSet) -> Saturation {
    assert!(source.is_disjoint(target), "source and target must be disjoint");
    let left: Vec<usize> = source.iter().collect();
    let in_target = target.to_flags();
    let m = HopcroftKarp::new(g, left, |w| in_target[w]).run();
    let Some(seed) = source.iter().find(|&u| !m.is_matched(u)) else {
        return Saturation::Saturated(m);
    };
    let n = g.n();
    let mut left_seen = vec![false; n];
    let mut right_seen = vec![false; n];
    left_seen[seed] = true;
    let mut queue = VecDeque::from([seed]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !in_target[w] || right_seen[w] {
                continue;
            }
            right_seen[w] = true;
            let x = m.mate(w).expect("maximum matching has no augmenting path");
            if !left_seen[x] {
                left_seen[x] = true;
                queue.push_back(x);
            }
        }
    }
    Saturation::Violated(HallViolator {
        set: VertexSet::from_flags(&left_seen),
        neighbors_in_target: VertexSet::from_flags(&right_seen),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bip(n: usize, edges: &[(usize, usize)]) -> (Graph, Bipartition) {
        let g = Graph::new(n, edges.iter().copied()).unwrap();
        let bp = Bipartition::of(&g).unwrap();
        (g, bp)
    }

    fn fig2() -> (Graph, Bipartition) {
        let e = [
            (0, 6),
            (1, 6),
            (2, 6),
            (2, 7),
            (3, 7),
            (2, 8),
            (3, 8),
            (4, 8),
            (4, 9),
            (5, 9),
            (5, 10),
            (5, 11),
            (5, 12),
        ];
        bip(13, &e)
    }

    /// Exhaustive matching number by recursion on the lowest vertex.
    fn brute_mu(g: &Graph) -> usize {
        fn rec(g: &Graph, alive: &mut Vec<bool>) -> usize {
            let Some(v) = (0..g.n()).find(|&v| alive[v] && g.neighbors(v).iter().any(|&w| alive[w]))
            else {
                return 0;
            };
            alive[v] = false;
            let mut best = rec(g, alive);
            for &w in g.neighbors(v) {
                if alive[w] {
                    alive[w] = false;
                    best = best.max(1 + rec(g, alive));
                    alive[w] = true;
                }
            }
            alive[v] = true;
            best
        }
        rec(g, &mut vec![true; g.n()])
    }

    #[test]
    fn small_examples() {
        let (g, bp) = bip(4, &[(0, 1), (1, 2), (2, 3)]);
        let m = max_matching(&g, &bp);
        assert_eq!(m.len(), 2);
        assert!(m.is_perfect());
        assert_eq!(min_vertex_cover(&g, &bp, &m).len(), 2);
        let mis = max_independent_set(&g, &bp);
        assert_eq!(mis.len(), 2);
        assert!(g.is_independent(&mis));

        // Star K1,3 with the center (3) on side B.
        let (g, bp) = bip(4, &[(0, 3), (1, 3), (2, 3)]);
        assert_eq!(bp.side(3), Side::B);
        let m = max_matching(&g, &bp);
        assert_eq!(m.len(), 1);
        assert_eq!(max_independent_set(&g, &bp).to_vec(), vec![0, 1, 2]);
        assert_eq!(alternating_reachable(&g, &bp, &m, Side::A).len(), 4);

        let (g, bp) = bip(3, &[]);
        let m = max_matching(&g, &bp);
        assert!(min_vertex_cover(&g, &bp, &m).is_empty());
    }

    #[test]
    fn fig2_matching_and_reach() {
        let (g, bp) = fig2();
        let m = max_matching(&g, &bp);
        assert_eq!(m.len(), 5);
        assert!(m.is_valid_for(&g));
        assert!(!has_augmenting_path(&g, &bp, &m));
        assert_eq!(
            alternating_reachable(&g, &bp, &m, Side::A).to_vec(),
            vec![0, 1, 6]
        );
        let cover = min_vertex_cover(&g, &bp, &m);
        assert_eq!(cover.len(), 5);
        assert!(cover.contains(6));
        assert_eq!(max_independent_set(&g, &bp).len(), 8);
    }

    #[test]
    fn c4_has_no_unmatched_seeds() {
        let (g, bp) = bip(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let m = max_matching(&g, &bp);
        assert!(alternating_reachable(&g, &bp, &m, Side::A).is_empty());
        assert!(alternating_reachable(&g, &bp, &m, Side::B).is_empty());
    }

    #[test]
    fn saturating_examples() {
        let (g, _) = fig2();
        // source {a6}, target {b5,b6,b7}
        let s = saturating_matching(&g, &VertexSet::new(13, [5]), &VertexSet::new(13, [10, 11, 12]));
        let Saturation::Saturated(m) = s else { panic!() };
        assert_eq!(m.mate(5), Some(10));

        let (p4, _) = bip(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(saturating_matching(&p4, &VertexSet::new(4, [1]), &VertexSet::new(4, [0, 2])).is_saturated());

        // u=0, v=1 both only adjacent to w=2.
        let (g, _) = bip(3, &[(0, 2), (1, 2)]);
        let Saturation::Violated(h) =
            saturating_matching(&g, &VertexSet::new(3, [0, 1]), &VertexSet::new(3, [2]))
        else {
            panic!()
        };
        assert_eq!(h.set.to_vec(), vec![0, 1]);
        assert_eq!(h.neighbors_in_target.to_vec(), vec![2]);
    }

    #[test]
    fn matches_brute_force_on_all_small_bipartite_graphs() {
        // Every graph on 6 vertices that is bipartite.
        let pairs: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = Graph::new(6, edges).unwrap();
            let Ok(bp) = Bipartition::of(&g) else { continue };
            let m = max_matching(&g, &bp);
            assert!(m.is_valid_for(&g));
            assert_eq!(m.len(), brute_mu(&g), "{g:?}");
            assert_eq!(max_matching_reversed(&g, &bp).len(), m.len());
            let cover = min_vertex_cover(&g, &bp, &m);
            assert_eq!(cover.len(), m.len());
            assert!(g.edges().iter().all(|&(u, v)| cover.contains(u) || cover.contains(v)));
            assert!(g.is_independent(&cover.complement()));
        }
    }
}
