//! Incremental independence oracle for the generic planar rigidity matroid.
//!
//! An edge set is independent when every nonempty subset `E'` spanning the
//! vertex set `V'` satisfies `|E'| <= 2|V'| - 3`. Independence is certified
//! with the (2,3) pebble game: each vertex owns two pebbles, every accepted
//! edge is covered by one pebble of its tail and directed away from it, and
//! an edge `uv` is accepted iff four pebbles can be gathered on `u` and `v`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

const PEBBLES_PER_VERTEX: u8 = 2;
const GATHER_TARGET: u8 = 4;

#[derive(Debug, Clone)]
pub struct RigidityOracle<'g> {
    host: &'g Graph,
    pebbles: Vec<u8>,
    /// Heads of the directed accepted edges leaving each vertex.
    out: Vec<Vec<VertexId>>,
    accepted: Vec<Edge>,
    rejected: Vec<Edge>,
    processed: HashSet<Edge>,
    // Scratch for the depth-first searches.
    mark: Vec<u32>,
    epoch: u32,
    parent: Vec<VertexId>,
}

impl<'g> RigidityOracle<'g> {
    pub fn new(host: &'g Graph) -> Self {
        let n = host.vertex_count();
        RigidityOracle {
            host,
            pebbles: vec![PEBBLES_PER_VERTEX; n],
            out: vec![Vec::new(); n],
            accepted: Vec::new(),
            rejected: Vec::new(),
            processed: HashSet::new(),
            mark: vec![0; n],
            epoch: 0,
            parent: vec![0; n],
        }
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    /// The independent set built so far, in insertion order.
    pub fn accepted(&self) -> &[Edge] {
        &self.accepted
    }

    /// Edges that were dependent on the accepted set when inserted.
    pub fn rejected(&self) -> &[Edge] {
        &self.rejected
    }

    pub fn rank(&self) -> usize {
        self.accepted.len()
    }

    /// Offers `e` to the independent set. Returns whether it was accepted.
    pub fn insert(&mut self, e: Edge) -> Result<bool> {
        Ok(self.insert_with_circuit(e)?.is_none())
    }

    /// Like [`insert`](Self::insert), but on rejection returns the unique
    /// circuit of `accepted + e`, with `e` itself as the last element.
    ///
    /// `None` means the edge was accepted.
    pub fn insert_with_circuit(&mut self, e: Edge) -> Result<Option<Vec<Edge>>> {
        if !self.host.contains(e) {
            return Err(Error::UnknownEdge(e));
        }
        if !self.processed.insert(e) {
            return Err(Error::DuplicateInsert(e));
        }
        let (u, v) = e.endpoints();
        while self.pebbles[u] < PEBBLES_PER_VERTEX && self.fetch_pebble(u, v) {}
        while self.pebbles[v] < PEBBLES_PER_VERTEX && self.fetch_pebble(v, u) {}

        if self.pebbles[u] + self.pebbles[v] == GATHER_TARGET {
            self.pebbles[u] -= 1;
            self.out[u].push(v);
            self.accepted.push(e);
            return Ok(None);
        }

        self.rejected.push(e);
        Ok(Some(self.circuit_of(u, v, e)))
    }

    /// Tries to move one free pebble onto `root` along a directed path that
    /// avoids `keep`, reversing the path's edges.
    fn fetch_pebble(&mut self, root: VertexId, keep: VertexId) -> bool {
        self.epoch += 1;
        let epoch = self.epoch;
        self.mark[root] = epoch;
        self.mark[keep] = epoch;

        let mut stack = vec![root];
        let mut found = None;
        'search: while let Some(x) = stack.pop() {
            for i in 0..self.out[x].len() {
                let y = self.out[x][i];
                if self.mark[y] == epoch {
                    continue;
                }
                self.mark[y] = epoch;
                self.parent[y] = x;
                if self.pebbles[y] > 0 {
                    found = Some(y);
                    break 'search;
                }
                stack.push(y);
            }
        }

        let Some(source) = found else {
            return false;
        };
        self.pebbles[source] -= 1;
        let mut y = source;
        while y != root {
            let x = self.parent[y];
            self.reverse(x, y);
            y = x;
        }
        self.pebbles[root] += 1;
        true
    }

    fn reverse(&mut self, tail: VertexId, head: VertexId) {
        let list = &mut self.out[tail];
        let pos = list
            .iter()
            .position(|&h| h == head)
            .expect("reversed edge must exist");
        list.swap_remove(pos);
        self.out[head].push(tail);
    }

    /// After a failed gather the vertices reachable from `u` and `v` form the
    /// smallest tight set containing both; its accepted edges plus `e` are the
    /// circuit.
    fn circuit_of(&mut self, u: VertexId, v: VertexId, e: Edge) -> Vec<Edge> {
        self.epoch += 1;
        let epoch = self.epoch;
        let mut stack = vec![u, v];
        self.mark[u] = epoch;
        self.mark[v] = epoch;
        let mut circuit = Vec::new();
        let mut free = 0u32;
        while let Some(x) = stack.pop() {
            free += u32::from(self.pebbles[x]);
            for &y in &self.out[x] {
                circuit.push(Edge::new(x, y).expect("accepted edges are not loops"));
                if self.mark[y] != epoch {
                    self.mark[y] = epoch;
                    stack.push(y);
                }
            }
        }
        debug_assert_eq!(free, u32::from(GATHER_TARGET) - 1);
        circuit.sort_unstable();
        circuit.push(e);
        circuit
    }
}

/// Rank of a subset of the host's edges. The edges must be distinct.
pub(crate) fn rank_of(host: &Graph, edges: impl IntoIterator<Item = Edge>) -> usize {
    let mut oracle = RigidityOracle::new(host);
    for e in edges {
        oracle.insert(e).expect("edges come from the host graph");
    }
    oracle.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn triangle_all_accepted() {
        let g = Graph::complete(3);
        let mut o = RigidityOracle::new(&g);
        for &x in g.edges() {
            assert!(o.insert(x).unwrap());
        }
        assert_eq!(o.rank(), 3);
    }

    #[test]
    fn k4_rejects_exactly_one() {
        let g = Graph::complete(4);
        let mut o = RigidityOracle::new(&g);
        let accepted = g.edges().iter().filter(|&&x| o.insert(x).unwrap()).count();
        assert_eq!(accepted, 5);
        assert_eq!(o.rejected().len(), 1);
    }

    #[test]
    fn k4_reverse_order() {
        let g = Graph::complete(4);
        let mut o = RigidityOracle::new(&g);
        for &x in g.edges().iter().rev() {
            o.insert(x).unwrap();
        }
        assert_eq!(o.rank(), 5);
        // The circuit of the last edge is all of K4.
        assert_eq!(o.rejected(), &[e(0, 1)]);
    }

    #[test]
    fn edge_inside_rigid_cluster_rejected() {
        // 0..=3 already carries K4 minus one edge, which is rigid, so the
        // missing chord closes a K4 circuit. The pendant edge 3-4 is not in it.
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (0, 3), (3, 4)])
            .unwrap();
        let mut o = RigidityOracle::new(&g);
        for x in [e(0, 1), e(1, 2), e(0, 2), e(1, 3), e(2, 3), e(3, 4)] {
            assert!(o.insert(x).unwrap());
        }
        let circuit = o.insert_with_circuit(e(0, 3)).unwrap().unwrap();
        assert_eq!(circuit.len(), 6);
        assert_eq!(*circuit.last().unwrap(), e(0, 3));
        assert!(!circuit.contains(&e(3, 4)));
    }

    #[test]
    fn duplicate_insert_is_an_error() {
        let g = Graph::complete(3);
        let mut o = RigidityOracle::new(&g);
        o.insert(e(0, 1)).unwrap();
        assert_eq!(o.insert(e(0, 1)), Err(Error::DuplicateInsert(e(0, 1))));
    }

    #[test]
    fn foreign_edge_is_an_error() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        let mut o = RigidityOracle::new(&g);
        assert_eq!(o.insert(e(1, 2)), Err(Error::UnknownEdge(e(1, 2))));
    }
}
