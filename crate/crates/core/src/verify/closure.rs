//! The alternating expansion step and its fixed point.
//!
//! Given a maximum independent set `S`, a matching `M` that matches `V − S`
//! into `S`, and an independent seed `X ⊆ V − S`, one step is
//!
//! ```text
//! X¹ = X ∪ M((N(X) ∩ S) − M(X))
//! ```
//!
//! Iterating to a fixed point `Z∞` yields a new maximum independent set
//! `(S − M(Z∞)) ∪ Z∞` containing the seed.

use thiserror::Error;

use crate::graph::{Bipartition, Graph, VertexSet};
use crate::matching::{self, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("bipartition does not fit the graph")]
    InvalidBipartition,
    #[error("M is not a matching of G")]
    InvalidMatching,
    #[error("M is not a perfect matching ({size} edges on {n} vertices)")]
    NotPerfect { size: usize, n: usize },
    #[error("M is not maximum ({size} edges, μ = {mu})")]
    NotMaximum { size: usize, mu: usize },
    #[error("S is not independent: edge {0}-{1}")]
    SNotIndependent(usize, usize),
    #[error("S is not maximum: |S| = {size}, α = {alpha}")]
    SNotMaximum { size: usize, alpha: usize },
    #[error("X is not independent: edge {0}-{1}")]
    XNotIndependent(usize, usize),
    #[error("X is not contained in V − S: vertex {0} lies in S")]
    XMeetsS(usize),
    #[error("G[X ∪ M(X)] is not connected")]
    NotConnected,
    #[error("M does not match V − S into S at vertex {0}")]
    NotIntoS(usize),
    #[error("expansion reached vertex {0} of S, which M leaves unmatched")]
    UnmatchedFrontier(usize),
    #[error("(S − M(Z∞)) ∪ Z∞ is not independent: edge {0}-{1}")]
    ResultNotIndependent(usize, usize),
}

fn check_common(g: &Graph, bp: &Bipartition, m: &Matching, s: &VertexSet) -> Result<(), ClosureError> {
    if !bp.is_valid_for(g) {
        return Err(ClosureError::InvalidBipartition);
    }
    if !m.is_valid_for(g) {
        return Err(ClosureError::InvalidMatching);
    }
    if let Some((u, v)) = g.edge_within(s) {
        return Err(ClosureError::SNotIndependent(u, v));
    }
    Ok(())
}

fn check_seed(g: &Graph, s: &VertexSet, x: &VertexSet) -> Result<(), ClosureError> {
    if let Some((u, v)) = g.edge_within(x) {
        return Err(ClosureError::XNotIndependent(u, v));
    }
    if let Some(v) = x.intersection(s).iter().next() {
        return Err(ClosureError::XMeetsS(v));
    }
    Ok(())
}

/// `(N(X) ∩ S) − M(X)`.
fn frontier(g: &Graph, m: &Matching, s: &VertexSet, x: &VertexSet) -> VertexSet {
    g.neighborhood(x).intersection(s).difference(&m.mates_of(x))
}

/// One expansion step. Requires a perfect matching `m`, `s ∈ Ω(G)`, an
/// independent `x ⊆ V − s` and a connected `G[x ∪ M(x)]`.
pub fn lemma_expand(
    g: &Graph,
    bp: &Bipartition,
    m: &Matching,
    s: &VertexSet,
    x: &VertexSet,
) -> Result<VertexSet, ClosureError> {
    check_common(g, bp, m, s)?;
    if !m.is_perfect() {
        return Err(ClosureError::NotPerfect { size: m.len(), n: g.n() });
    }
    // A perfect matching is maximum, so α = n − |M|.
    let alpha = g.n() - m.len();
    if s.len() != alpha {
        return Err(ClosureError::SNotMaximum { size: s.len(), alpha });
    }
    check_seed(g, s, x)?;
    if !g.is_connected_within(&x.union(&m.mates_of(x))) {
        return Err(ClosureError::NotConnected);
    }
    Ok(x.union(&m.mates_of(&frontier(g, m, s, x))))
}

/// Iterates the expansion from `z0` to its fixed point `Z∞` and returns
/// `(Z∞, (s − M(Z∞)) ∪ Z∞)`.
///
/// Requires a maximum matching `m` that matches `V − s` into `s`, `s ∈ Ω(G)`
/// and an independent `z0 ⊆ V − s`.
pub fn alternating_closure(
    g: &Graph,
    bp: &Bipartition,
    m: &Matching,
    s: &VertexSet,
    z0: &VertexSet,
) -> Result<(VertexSet, VertexSet), ClosureError> {
    check_common(g, bp, m, s)?;
    let mu = matching::max_matching(g, bp).len();
    if m.len() != mu {
        return Err(ClosureError::NotMaximum { size: m.len(), mu });
    }
    let alpha = g.n() - mu;
    if s.len() != alpha {
        return Err(ClosureError::SNotMaximum { size: s.len(), alpha });
    }
    for v in s.complement().iter() {
        if !m.mate(v).is_some_and(|w| s.contains(w)) {
            return Err(ClosureError::NotIntoS(v));
        }
    }
    check_seed(g, s, z0)?;
    let mut z = z0.clone();
    loop {
        let front = frontier(g, m, s, &z);
        if let Some(v) = front.iter().find(|&v| !m.is_matched(v)) {
            return Err(ClosureError::UnmatchedFrontier(v));
        }
        let next = z.union(&m.mates_of(&front));
        if next == z {
            break;
        }
        z = next;
    }
    let new_mis = s.difference(&m.mates_of(&z)).union(&z);
    if let Some((u, v)) = g.edge_within(&new_mis) {
        return Err(ClosureError::ResultNotIndependent(u, v));
    }
    Ok((z, new_mis))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::new(n, ids.iter().copied())
    }

    // C4: a=0 b=1 c=2 d=3, cycle a-b-c-d-a.
    fn c4() -> (Graph, Bipartition, Matching) {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let bp = Bipartition::of(&g).unwrap();
        let m = Matching::from_pairs(4, [(0, 1), (2, 3)]).unwrap();
        (g, bp, m)
    }

    #[test]
    fn c4_expansion_and_closure() {
        let (g, bp, m) = c4();
        let s = set(4, &[1, 3]);
        // N(a) ∩ S − M(a) = {d}, M(d) = c.
        assert_eq!(lemma_expand(&g, &bp, &m, &s, &set(4, &[0])).unwrap().to_vec(), vec![0, 2]);
        let (z, mis) = alternating_closure(&g, &bp, &m, &s, &set(4, &[0])).unwrap();
        assert_eq!(z.to_vec(), vec![0, 2]);
        assert_eq!(mis.to_vec(), vec![0, 2]);
    }

    #[test]
    fn fixed_points() {
        let (g, bp, m) = c4();
        let s = set(4, &[1, 3]);
        // N(X) ∩ S = M(X): already closed.
        let x = set(4, &[0, 2]);
        assert_eq!(lemma_expand(&g, &bp, &m, &s, &x).unwrap(), x);
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let bp2 = Bipartition::of(&split).unwrap();
        assert_eq!(
            lemma_expand(&split, &bp2, &m, &s, &x),
            Err(ClosureError::NotConnected)
        );
        let (z, mis) = alternating_closure(&g, &bp, &m, &s, &VertexSet::empty(4)).unwrap();
        assert!(z.is_empty());
        assert_eq!(mis, s);

        // P4 a-b-c-d, S = {b, d}, M = {ab, cd}: N(a) ∩ S = {b} = M(a).
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let bp = Bipartition::of(&p4).unwrap();
        let m = Matching::from_pairs(4, [(0, 1), (2, 3)]).unwrap();
        let s = set(4, &[1, 3]);
        assert_eq!(lemma_expand(&p4, &bp, &m, &s, &set(4, &[0])).unwrap().to_vec(), vec![0]);
        // From c: N(c) ∩ S = {b, d}, M(c) = d, so b's mate a joins.
        assert_eq!(lemma_expand(&p4, &bp, &m, &s, &set(4, &[2])).unwrap().to_vec(), vec![0, 2]);
    }

    #[test]
    fn preconditions_are_named() {
        let (g, bp, m) = c4();
        let s = set(4, &[1, 3]);
        assert_eq!(
            lemma_expand(&g, &bp, &m, &s, &set(4, &[1])),
            Err(ClosureError::XMeetsS(1))
        );
        assert_eq!(
            lemma_expand(&g, &bp, &m, &set(4, &[1]), &set(4, &[0])),
            Err(ClosureError::SNotMaximum { size: 1, alpha: 2 })
        );
        assert_eq!(
            lemma_expand(&g, &bp, &m, &set(4, &[0, 1]), &set(4, &[2])),
            Err(ClosureError::SNotIndependent(0, 1))
        );
        let half = Matching::from_pairs(4, [(0, 1)]).unwrap();
        assert_eq!(
            lemma_expand(&g, &bp, &half, &s, &set(4, &[0])),
            Err(ClosureError::NotPerfect { size: 1, n: 4 })
        );
        assert_eq!(
            alternating_closure(&g, &bp, &half, &s, &set(4, &[0])),
            Err(ClosureError::NotMaximum { size: 1, mu: 2 })
        );
        let bogus = Matching::from_pairs(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(
            lemma_expand(&g, &bp, &bogus, &s, &set(4, &[0])),
            Err(ClosureError::InvalidMatching)
        );
    }

    #[test]
    fn closure_without_perfect_matching() {
        // FIG2: a1..a6 = 0..5, b1..b7 = 6..12.
        let g = Graph::new(
            13,
            [
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
            ],
        )
        .unwrap();
        let bp = Bipartition::of(&g).unwrap();
        let m = matching::max_matching(&g, &bp);
        let s = matching::max_independent_set(&g, &bp);
        let corona = crate::critical::diadem(&g, &bp);
        for v in s.complement().iter() {
            match alternating_closure(&g, &bp, &m, &s, &set(13, &[v])) {
                Ok((z, mis)) => {
                    assert!(corona.contains(v));
                    assert!(z.contains(v));
                    assert!(mis.contains(v));
                    assert_eq!(mis.len(), 8);
                    assert!(g.is_independent(&mis));
                }
                // Seeds outside every maximum independent set reach a free vertex of S.
                Err(ClosureError::UnmatchedFrontier(_)) => assert!(!corona.contains(v)),
                Err(e) => panic!("{e}"),
            }
        }
    }
}
