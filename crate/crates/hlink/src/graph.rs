//! Simple undirected graphs with adjacency stored as bit rows.
//!
//! Graphs are immutable once frozen; every algorithm in this crate treats
//! them as shared read-only values. Vertices are dense indices
//! `0..vertex_count`.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(usize),
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
}

/// Simple, loopless, undirected graph. Adjacency is symmetric by
/// construction and duplicate edge insertion is idempotent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>, // n rows of `words` words each
}

impl Graph {
    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn words_per_row(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.bits[u * self.words + (v >> 6)] >> (v & 63)) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, ascending lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Copy of this graph with the edge `uv` removed (no-op if absent).
    pub(crate) fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.bits[u * g.words + (v >> 6)] &= !(1 << (v & 63));
        g.bits[v * g.words + (u >> 6)] &= !(1 << (u & 63));
        g
    }

    /// Build directly from adjacency bit rows; rows must already be
    /// symmetric and loop-free.
    pub(crate) fn from_rows(n: usize, rows: &[u64]) -> Graph {
        debug_assert!(n <= 64);
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            let mut w = rows[u];
            while w != 0 {
                let v = w.trailing_zeros() as usize;
                w &= w - 1;
                if u < v {
                    b.add_edge(u, v);
                }
            }
        }
        b.freeze()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// Mutable accumulator for a [`Graph`]; single-owner until frozen.
pub struct GraphBuilder {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        GraphBuilder {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Insert an edge; duplicates are ignored. Panics on loops or
    /// out-of-range endpoints (generator bugs, not user input).
    pub fn add_edge(&mut self, u: usize, v: usize) -> &mut Self {
        assert!(u != v, "loop edge ({u},{u})");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        self.bits[u * self.words + (v >> 6)] |= 1 << (v & 63);
        self.bits[v * self.words + (u >> 6)] |= 1 << (u & 63);
        self
    }

    pub fn add_clique(&mut self, verts: &[usize]) -> &mut Self {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                self.add_edge(u, v);
            }
        }
        self
    }

    pub fn add_path(&mut self, verts: &[usize]) -> &mut Self {
        for w in verts.windows(2) {
            self.add_edge(w[0], w[1]);
        }
        self
    }

    pub fn freeze(self) -> Graph {
        Graph {
            n: self.n,
            words: self.words,
            bits: self.bits,
        }
    }
}

/// Validating constructor from an edge list. Duplicate edges collapse.
pub fn build_graph(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    let mut b = GraphBuilder::new(vertex_count);
    for &(u, v) in edges {
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        for x in [u, v] {
            if x >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    n: vertex_count,
                });
            }
        }
        b.add_edge(u, v);
    }
    Ok(b.freeze())
}

pub fn complete_graph(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    let all: Vec<usize> = (0..n).collect();
    b.add_clique(&all);
    b.freeze()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_by_hand() {
        let g = build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        for v in 0..3 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn single_vertex() {
        let g = build_graph(1, &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = build_graph(4, &[(0, 1), (0, 1), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn invalid_edges_rejected() {
        assert_eq!(
            build_graph(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(build_graph(3, &[(1, 1)]), Err(GraphError::LoopEdge(1)));
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(complete_graph(5).edge_count(), 10);
        assert_eq!(complete_graph(0).vertex_count(), 0);
        let k7 = complete_graph(7);
        assert!((0..7).all(|v| k7.degree(v) == 6));
    }

    #[test]
    fn neighbors_ascending() {
        let g = build_graph(5, &[(2, 4), (2, 0), (2, 3)]).unwrap();
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![0, 3, 4]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (2, 3), (2, 4)]);
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        // deterministic pseudo-random masks, no rng dependency needed here
        let mut seed = 0x9e3779b97f4a7c15u64;
        for n in [0usize, 1, 2, 5, 9, 17, 40] {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if seed >> 62 == 3 {
                        edges.push((u, v));
                    }
                }
            }
            let g = build_graph(n, &edges).unwrap();
            let degsum: usize = (0..n).map(|v| g.degree(v)).sum();
            assert_eq!(degsum, 2 * g.edge_count());
        }
    }
}
