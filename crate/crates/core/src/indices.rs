//! Rigidity index `K_r`, redundancy indices `K_u` and `K_u^k`, and the
//! aggregated per-graph report.
//!
//! `K_r(G) = rank(G) / (2|V| - 3)`. An edge is a *generalized redundant edge*
//! when removing it leaves `K_r` unchanged; since removal does not touch the
//! denominator, that is decided by comparing integer ranks. `K_u` is the
//! fraction of such edges and `K_u^k` the fraction of rank-preserving
//! `k`-subsets of edges.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matroid::{full_rank, matroid_rank};
use crate::oracle::{rank_of, RigidityOracle};
use crate::ratio::RatioValue;

/// `rank / (2n - 3)`, or `1` when `n <= 1`.
pub fn rigidity_index(g: &Graph) -> RatioValue {
    index_from_rank(g.vertex_count(), matroid_rank(g))
}

fn index_from_rank(n: usize, rank: usize) -> RatioValue {
    if n <= 1 {
        RatioValue::ONE
    } else {
        RatioValue::new(rank as u64, full_rank(n) as u64)
    }
}

/// Whether `rank(G - e) == rank(G)`.
pub fn is_generalized_redundant(g: &Graph, e: Edge) -> Result<bool> {
    if !g.contains(e) {
        return Err(Error::UnknownEdge(e));
    }
    let without = g.edges().iter().copied().filter(|&f| f != e);
    Ok(rank_of(g, without) == matroid_rank(g))
}

/// The generalized redundant edges of `g`, in canonical order.
///
/// An edge keeps the rank on removal iff it lies on some circuit. Every edge
/// outside a greedy basis lies on its fundamental circuit, and a basis edge is
/// redundant iff it appears in one of those circuits, so a single pass of the
/// oracle reports them all.
pub fn redundant_edge_set(g: &Graph) -> Vec<Edge> {
    scan(g).redundant
}

/// Reference route for [`redundant_edge_set`]: one fresh rank computation per
/// removed edge.
pub fn redundant_edge_set_by_removal(g: &Graph) -> Vec<Edge> {
    let rank = matroid_rank(g);
    g.edges()
        .iter()
        .copied()
        .filter(|&e| rank_of(g, g.edges().iter().copied().filter(|&f| f != e)) == rank)
        .collect()
}

struct Scan {
    rank: usize,
    redundant: Vec<Edge>,
}

fn scan(g: &Graph) -> Scan {
    let mut oracle = RigidityOracle::new(g);
    let mut on_circuit = std::collections::HashSet::new();
    for &e in g.edges() {
        if let Some(circuit) = oracle
            .insert_with_circuit(e)
            .expect("edges come from the host graph")
        {
            on_circuit.extend(circuit);
        }
    }
    Scan {
        rank: oracle.rank(),
        redundant: g
            .edges()
            .iter()
            .copied()
            .filter(|e| on_circuit.contains(e))
            .collect(),
    }
}

/// `|E_u| / |E|`, with `0` for an edgeless graph.
pub fn redundancy_index(g: &Graph) -> RatioValue {
    redundancy_from_count(redundant_edge_set(g).len(), g.edge_count())
}

fn redundancy_from_count(redundant: usize, m: usize) -> RatioValue {
    if m == 0 {
        RatioValue::ZERO
    } else {
        RatioValue::new(redundant as u64, m as u64)
    }
}

/// Largest admissible order for [`redundancy_index_k`]: `|E| - rank`.
pub fn max_redundancy_order(g: &Graph) -> usize {
    g.edge_count() - matroid_rank(g)
}

/// Every `k`-subset of edges whose removal preserves the rank, in
/// lexicographic order of edge positions. Unlike [`redundancy_index_k`]
/// this accepts any `k <= |E|`.
pub fn redundant_k_subsets(g: &Graph, k: usize) -> Vec<Vec<Edge>> {
    let rank = matroid_rank(g);
    let edges = g.edges();
    (0..edges.len())
        .combinations(k)
        .filter(|removed| rank_without(g, removed) == rank)
        .map(|removed| removed.into_iter().map(|i| edges[i]).collect())
        .collect()
}

fn rank_without(g: &Graph, removed: &[usize]) -> usize {
    let mut skip = removed.iter().copied().peekable();
    let kept = g.edges().iter().enumerate().filter_map(|(i, &e)| {
        if skip.peek() == Some(&i) {
            skip.next();
            None
        } else {
            Some(e)
        }
    });
    rank_of(g, kept)
}

/// `K_u^k = |E_u^k| / C(|E|, k)` for `1 <= k <= |E| - rank`.
pub fn redundancy_index_k(g: &Graph, k: usize) -> Result<RatioValue> {
    let max = max_redundancy_order(g);
    if k == 0 || k > max {
        return Err(Error::KOutOfRange { k, max });
    }
    let rank = matroid_rank(g);
    let count = (0..g.edge_count())
        .combinations(k)
        .filter(|removed| rank_without(g, removed) == rank)
        .count();
    Ok(RatioValue::new(count as u64, binomial(g.edge_count(), k)))
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("subset count exceeds u64")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HigherOrderIndex {
    pub k: usize,
    pub value: RatioValue,
}

/// Everything this crate knows how to say about one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    pub rank: usize,
    pub k_r: RatioValue,
    pub redundant_edges: Vec<Edge>,
    pub k_u: RatioValue,
    pub rigid: bool,
    pub minimally_rigid: bool,
    pub redundantly_rigid: bool,
    pub three_connected: bool,
    pub globally_rigid: bool,
    /// Present when an order was requested; holds the range error otherwise.
    pub higher_order: Option<Result<HigherOrderIndex>>,
}

/// Fills an [`IndexReport`]. A bad `with_k` only affects `higher_order`.
pub fn analyze(g: &Graph, with_k: Option<usize>) -> IndexReport {
    let n = g.vertex_count();
    let m = g.edge_count();
    let Scan { rank, redundant } = scan(g);
    let k_r = index_from_rank(n, rank);
    let k_u = redundancy_from_count(redundant.len(), m);
    let rigid = k_r.is_one();
    let minimally_rigid = n >= 2 && m == full_rank(n) && rank == m;
    let redundantly_rigid = rigid && k_u.is_one();
    let three_connected = g.is_k_connected(3);
    let higher_order =
        with_k.map(|k| redundancy_index_k(g, k).map(|value| HigherOrderIndex { k, value }));
    IndexReport {
        n,
        m,
        rank,
        k_r,
        redundant_edges: redundant,
        k_u,
        rigid,
        minimally_rigid,
        redundantly_rigid,
        three_connected,
        globally_rigid: three_connected && redundantly_rigid,
        higher_order,
    }
}

/// `(K_r, K_u)` from one oracle pass; the hot path of the sweeps.
pub fn index_pair(g: &Graph) -> (RatioValue, RatioValue) {
    let Scan { rank, redundant } = scan(g);
    (
        index_from_rank(g.vertex_count(), rank),
        redundancy_from_count(redundant.len(), g.edge_count()),
    )
}
