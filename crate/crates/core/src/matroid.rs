//! Rank, bases, and Laman verdicts of the generic planar rigidity matroid.

use crate::graph::{Edge, Graph};
use crate::oracle::{rank_of, RigidityOracle};

/// `2n - 3`, the rank of a rigid graph on `n >= 2` vertices.
pub fn full_rank(n: usize) -> usize {
    (2 * n).saturating_sub(3)
}

/// Size of a maximum independent edge subset of `g`.
pub fn matroid_rank(g: &Graph) -> usize {
    rank_of(g, g.edges().iter().copied())
}

/// A maximum independent subset, chosen greedily in canonical edge order.
/// Bases are not unique; only the size and independence are meaningful.
pub fn independent_basis(g: &Graph) -> Vec<Edge> {
    let mut oracle = RigidityOracle::new(g);
    for &e in g.edges() {
        oracle.insert(e).expect("edges come from the host graph");
    }
    let mut basis = oracle.accepted().to_vec();
    basis.sort_unstable();
    basis
}

/// Whether the whole edge set of `g` is independent.
pub fn is_independent(g: &Graph) -> bool {
    matroid_rank(g) == g.edge_count()
}

/// Generic rigidity in the plane. Graphs on at most one vertex are rigid.
pub fn is_rigid(g: &Graph) -> bool {
    let n = g.vertex_count();
    n <= 1 || matroid_rank(g) == full_rank(n)
}

/// Laman: exactly `2n - 3` edges and the edge set is independent.
pub fn is_minimally_rigid(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 2 && g.edge_count() == full_rank(n) && is_independent(g)
}
