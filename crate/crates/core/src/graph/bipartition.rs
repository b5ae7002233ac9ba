use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use super::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipartitionError {
    /// The graph has an odd cycle, listed in traversal order.
    #[error("graph is not bipartite: odd cycle {odd_cycle:?}")]
    NotBipartite { odd_cycle: Vec<usize> },
    #[error("edge {u}-{v} has both endpoints on side {side}")]
    Monochromatic { u: usize, v: usize, side: Side },
    #[error("side set is over {got} vertices, graph has {expected}")]
    Universe { expected: usize, got: usize },
}

/// A two-coloring `(A, B)` of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side_of: Vec<Side>,
    a: VertexSet,
    b: VertexSet,
}

impl Bipartition {
    /// Two-colors `g`. Within each component the smallest id goes to `A`, so
    /// isolated vertices land in `A`. Fails with an odd cycle otherwise.
    pub fn of(g: &Graph) -> Result<Self, BipartitionError> {
        let n = g.n();
        let mut color: Vec<Option<Side>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(Side::A);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in g.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(cu.opposite());
                            parent[w] = u;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Err(BipartitionError::NotBipartite {
                                odd_cycle: odd_cycle(&parent, u, w),
                            });
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let side_of: Vec<Side> = color.into_iter().map(Option::unwrap).collect();
        Ok(Self::from_sides(side_of))
    }

    /// Validates a declared side `A`; every other vertex is on side `B`.
    pub fn with_side_a(g: &Graph, a: &VertexSet) -> Result<Self, BipartitionError> {
        if a.universe() != g.n() {
            return Err(BipartitionError::Universe {
                expected: g.n(),
                got: a.universe(),
            });
        }
        let side_of: Vec<Side> = (0..g.n())
            .map(|v| if a.contains(v) { Side::A } else { Side::B })
            .collect();
        for &(u, v) in g.edges() {
            if side_of[u] == side_of[v] {
                return Err(BipartitionError::Monochromatic {
                    u,
                    v,
                    side: side_of[u],
                });
            }
        }
        Ok(Self::from_sides(side_of))
    }

    fn from_sides(side_of: Vec<Side>) -> Self {
        let a_flags: Vec<bool> = side_of.iter().map(|&s| s == Side::A).collect();
        let b_flags: Vec<bool> = a_flags.iter().map(|f| !f).collect();
        Bipartition {
            a: VertexSet::from_flags(&a_flags),
            b: VertexSet::from_flags(&b_flags),
            side_of,
        }
    }

    pub fn side(&self, v: usize) -> Side {
        self.side_of[v]
    }

    pub fn vertices(&self, side: Side) -> &VertexSet {
        match side {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    pub fn a(&self) -> &VertexSet {
        &self.a
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.side_of.len()
    }

    /// Whether this bipartition is valid for `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.n() == g.n()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.side_of[u] != self.side_of[v])
    }

    /// Restriction to an induced subgraph.
    pub fn restrict(&self, new_to_old: &[usize]) -> Bipartition {
        Self::from_sides(new_to_old.iter().map(|&v| self.side_of[v]).collect())
    }
}

/// Cycle closed by the non-tree edge `u-w` between two same-colored vertices
/// of a BFS forest.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    // Same color in a BFS tree means equal depth, so the paths meet at the
    // same offset from the root.
    let mut i = pu.len();
    let mut j = pw.len();
    while i > 0 && j > 0 && pu[i - 1] == pw[j - 1] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pu[..=i].to_vec();
    cycle.extend(pw[..j].iter().rev());
    cycle
}
