//! Simple undirected graphs over dense vertex ids, vertex-set algebra,
//! neighborhoods and the difference function `d(X) = |X| - |N(X)|`.

mod bipartition;
mod vertex_set;

pub use bipartition::{Bipartition, BipartitionError, Side};
pub use vertex_set::{Iter, VertexSet, BITMASK_LIMIT};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
}

/// An immutable simple graph stored as compressed adjacency lists.
///
/// Adjacency lists are sorted ascending. Graphs with at most
/// [`BITMASK_LIMIT`] vertices also carry per-vertex neighbor masks.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    masks: Option<Vec<u128>>,
}

impl Graph {
    /// Normalizes an edge list into a graph. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut norm = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();
        Ok(Self::from_normalized(n, norm))
    }

    /// `edges` must be sorted, deduplicated, `u < v`, in range.
    fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0usize; 2 * edges.len()];
        // Sorted edge order yields sorted adjacency lists.
        for &(u, v) in &edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        let masks = (n <= BITMASK_LIMIT).then(|| {
            (0..n)
                .map(|v| {
                    targets[offsets[v]..offsets[v + 1]]
                        .iter()
                        .fold(0u128, |m, &w| m | (1u128 << w))
                })
                .collect()
        });
        Graph {
            n,
            edges,
            offsets,
            targets,
            masks,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Neighbor mask of `v`, for graphs with at most 128 vertices.
    pub fn neighbor_mask(&self, v: usize) -> Option<u128> {
        self.masks.as_ref().map(|m| m[v])
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N(X) = {v : N(v) ∩ X ≠ ∅}`. May intersect `X`.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        assert_eq!(x.universe(), self.n, "vertex set over a different universe");
        if let (Some(masks), Some(bits)) = (&self.masks, x.as_mask()) {
            let mut out = 0u128;
            let mut rest = bits;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out |= masks[v];
            }
            return VertexSet::from_mask(self.n, out);
        }
        let mut mark = vec![false; self.n];
        for v in x.iter() {
            for &w in self.neighbors(v) {
                mark[w] = true;
            }
        }
        VertexSet::from_flags(&mark)
    }

    /// `N[X] = N(X) ∪ X`.
    pub fn closed_neighborhood(&self, x: &VertexSet) -> VertexSet {
        self.neighborhood(x).union(x)
    }

    /// `d(X) = |X| - |N(X)|`, with `d(∅) = 0`.
    pub fn difference(&self, x: &VertexSet) -> i64 {
        x.len() as i64 - self.neighborhood(x).len() as i64
    }

    pub fn is_independent(&self, x: &VertexSet) -> bool {
        if let (Some(masks), Some(bits)) = (&self.masks, x.as_mask()) {
            let mut rest = bits;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if masks[v] & bits != 0 {
                    return false;
                }
            }
            return true;
        }
        x.iter()
            .all(|v| self.neighbors(v).iter().all(|&w| !x.contains(w)))
    }

    /// First edge with both endpoints in `x`, if any.
    pub fn edge_within(&self, x: &VertexSet) -> Option<(usize, usize)> {
        x.iter().find_map(|v| {
            self.neighbors(v)
                .iter()
                .find(|&&w| w > v && x.contains(w))
                .map(|&w| (v, w))
        })
    }

    /// `G[X]` with vertices renumbered in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> InducedSubgraph {
        let new_to_old: Vec<usize> = keep.iter().collect();
        let mut old_to_new = vec![None; self.n];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((old_to_new[u]?, old_to_new[v]?)))
            .collect();
        // Order-preserving renumbering keeps the edge list normalized.
        let graph = Graph::from_normalized(new_to_old.len(), edges);
        InducedSubgraph {
            graph,
            new_to_old,
            old_to_new,
        }
    }

    /// `G - W`: the subgraph induced by `V - W`.
    pub fn delete_vertices(&self, w: &VertexSet) -> InducedSubgraph {
        self.induced(&w.complement())
    }

    /// Whether `G[X]` is connected. The empty set counts as connected.
    pub fn is_connected_within(&self, x: &VertexSet) -> bool {
        let Some(start) = x.iter().next() else {
            return true;
        };
        let mut seen = VertexSet::empty(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if x.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == x.len()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// An induced subgraph together with its id remapping.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// New id → original id.
    pub new_to_old: Vec<usize>,
    /// Original id → new id, `None` for deleted vertices.
    pub old_to_new: Vec<Option<usize>>,
}

impl InducedSubgraph {
    /// Maps a set of the subgraph back to original ids.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        VertexSet::new(self.old_to_new.len(), set.iter().map(|v| self.new_to_old[v]))
    }
}
