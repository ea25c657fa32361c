//! Finite simple undirected graphs on densely indexed vertices.

use std::collections::BTreeSet;
use std::fmt;

use crate::connectivity;
use crate::error::{Error, Result};

/// Vertices are the integers `0..n`.
pub type VertexId = usize;

/// An undirected edge, always stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Canonicalizes the endpoint order. Rejects loops.
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::LoopEdge(a)),
        }
    }

    pub fn u(self) -> VertexId {
        self.u
    }

    pub fn v(self) -> VertexId {
        self.v
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// A simple graph: no loops, no parallel edges. Isolated vertices are allowed
/// and count toward the vertex total.
///
/// Edges are kept sorted, so two graphs with the same edge set compare equal
/// and iterate in the same order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push(Edge { u, v });
            }
        }
        Graph { n, edges }
    }

    /// Builds a graph from raw endpoint pairs, collapsing duplicates.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_pairs(n, pairs.iter().copied())
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, n });
                }
            }
            set.insert(Edge::new(a, b)?);
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// Builds a graph from already-canonical edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        Self::from_pairs(n, edges.into_iter().map(Edge::endpoints))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        Edge::new(a, b).map(|e| self.contains(e)).unwrap_or(false)
    }

    /// `G - S`. Every edge of `removed` must be present.
    pub fn remove_edges<'a, I>(&self, removed: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut drop = BTreeSet::new();
        for &e in removed {
            if !self.contains(e) {
                return Err(Error::UnknownEdge(e));
            }
            drop.insert(e);
        }
        Ok(Graph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !drop.contains(e))
                .collect(),
        })
    }

    /// `G + S`. Edges already present are ignored.
    pub fn add_edges<'a, I>(&self, added: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        Self::from_edges(
            self.n,
            self.edges.iter().copied().chain(added.into_iter().copied()),
        )
    }

    /// Neighbour lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        connectivity::is_connected(self)
    }

    /// True iff the graph has more than `k` vertices and no set of fewer than
    /// `k` vertices disconnects it. `K_{k+1}` is `k`-connected.
    pub fn is_k_connected(&self, k: usize) -> bool {
        connectivity::is_k_connected(self, k)
    }
}
