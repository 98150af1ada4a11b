//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is kept twice: as one bitset row per vertex (constant-time
//! membership, one word per row when `n <= 64`) and as sorted neighbor lists
//! for iteration. A [`Graph`] never changes after construction; operations
//! that add edges return a new value.

mod dot;
pub mod generators;
mod graph6;

use std::fmt;

use thiserror::Error;

pub use dot::export_dot;
pub use generators::{Attachment, LobsterLayout, LobsterSpec};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};

/// Largest order accepted anywhere in the crate. Rows are dense, so memory
/// grows with the square of the order.
pub const MAX_ORDER: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    ZeroOrder,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid {family} parameters: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        Self::from_edges(order, std::iter::empty())
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(GraphError::ZeroOrder);
        }
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        let words = order.div_ceil(64);
        let mut rows = vec![0u64; order * words];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        Ok(Self::from_rows(order, words, rows))
    }

    fn from_rows(order: usize, words: usize, rows: Vec<u64>) -> Self {
        let mut neighbors = Vec::with_capacity(order);
        let mut degree_sum = 0;
        for v in 0..order {
            let row = &rows[v * words..(v + 1) * words];
            let list: Vec<usize> = BitIter::new(row).collect();
            degree_sum += list.len();
            neighbors.push(list);
        }
        Graph {
            order,
            words,
            rows,
            neighbors,
            edge_count: degree_sum / 2,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Bitset row of `v`: bit `w` is set iff `vw` is an edge.
    pub fn neighbor_bits(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Number of 64-bit words in one adjacency row.
    pub fn row_words(&self) -> usize {
        self.words
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.neighbors.iter().map(Vec::len)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.degrees().all(|x| x == d)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// A copy of this graph with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(self.order, self.edges().chain(std::iter::once((u, v))))
    }

    /// A copy of this graph with `count` new vertices appended.
    pub fn with_vertices(&self, count: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(self.order + count, self.edges())
    }

    /// Subgraph induced by `keep` (in the given order). Vertex `i` of the
    /// result corresponds to `keep[i]`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph, GraphError> {
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: self.order,
                });
            }
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        Graph::from_edges(keep.len(), edges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.neighbors[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Two-colours the graph if it is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.order];
        for s in 0..self.order {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = colour[v].unwrap();
                for &w in &self.neighbors[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterates the set bits of a little-endian word slice.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}
