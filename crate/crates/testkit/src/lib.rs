//! Test-only oracles. Nothing here calls the pebble game, the rigidity matrix,
//! or the max-flow code it is used to check.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rigidity_core::{Edge, Graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `|F| <= 2 |V(F)| - 3` for a nonempty edge subset given as a bitmask over
/// `edges`.
fn count_ok(edges: &[Edge], mask: u32) -> bool {
    let mut support: u64 = 0;
    for (i, e) in edges.iter().enumerate() {
        if mask >> i & 1 == 1 {
            support |= 1 << e.u() | 1 << e.v();
        }
    }
    mask.count_ones() as i64 <= 2 * support.count_ones() as i64 - 3
}

/// Independence of every edge subset by dynamic programming over bitmasks:
/// a set is independent iff it satisfies the count and so does every subset
/// obtained by dropping one edge.
pub fn independence_table(edges: &[Edge]) -> Vec<bool> {
    assert!(edges.len() <= 20, "brute force limited to 20 edges");
    assert!(edges.iter().all(|e| e.v() < 64));
    let size = 1usize << edges.len();
    let mut indep = vec![false; size];
    indep[0] = true;
    for mask in 1..size {
        let m = mask as u32;
        indep[mask] = count_ok(edges, m)
            && (0..edges.len())
                .filter(|&i| m >> i & 1 == 1)
                .all(|i| indep[mask ^ (1 << i)]);
    }
    indep
}

/// Largest independent edge subset, by exhaustive enumeration.
pub fn brute_rank(g: &Graph) -> usize {
    brute_rank_of(g.edges())
}

pub fn brute_rank_of(edges: &[Edge]) -> usize {
    independence_table(edges)
        .iter()
        .enumerate()
        .filter(|(_, &ok)| ok)
        .map(|(mask, _)| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Direct check of the subset condition on one edge set.
pub fn brute_is_independent(edges: &[Edge]) -> bool {
    *independence_table(edges).last().unwrap()
}

fn connected_without(g: &Graph, removed: u64) -> bool {
    let n = g.vertex_count();
    let alive: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen: u64 = 1 << start;
    let mut frontier = vec![start];
    while let Some(x) = frontier.pop() {
        for e in g.edges() {
            let (a, b) = e.endpoints();
            let y = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            if removed >> y & 1 == 0 && seen >> y & 1 == 0 {
                seen |= 1 << y;
                frontier.push(y);
            }
        }
    }
    alive.iter().all(|&v| seen >> v & 1 == 1)
}

/// `n > k` and deleting any set of fewer than `k` vertices leaves the graph
/// connected.
pub fn brute_is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    assert!(n <= 16);
    if n <= k {
        return false;
    }
    (0u64..1 << n)
        .filter(|s| (s.count_ones() as usize) < k)
        .all(|s| connected_without(g, s))
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
    let chosen: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::from_edge_list(n, &chosen).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            rec(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// One representative per isomorphism class of graphs on `n <= 6` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canon = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &(a, b))| acc | 1 << index(p[a], p[b]))
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            reps.push(graph_from_mask(n, &pairs, canon));
        }
    }
    reps
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Uniform graph with exactly `m` edges on `n` vertices.
pub fn random_graph_m(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// A rigid graph: a Henneberg vertex-addition sequence (each new vertex joined
/// to two earlier ones) plus `extra` random chords.
pub fn random_rigid_graph(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    assert!(n >= 2);
    let mut pairs = vec![(0, 1)];
    for v in 2..n {
        let a = rng.random_range(0..v);
        let mut b = rng.random_range(0..v - 1);
        if b >= a {
            b += 1;
        }
        pairs.push((a, v));
        pairs.push((b, v));
    }
    let mut added = 0;
    while added < extra && pairs.len() < n * (n - 1) / 2 {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a != b
            && !pairs.contains(&(a.min(b), a.max(b)))
            && !pairs.contains(&(a.max(b), a.min(b)))
        {
            pairs.push((a, b));
            added += 1;
        }
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

pub fn edge(a: usize, b: usize) -> Edge {
    Edge::new(a, b).unwrap()
}

/// Two triangles sharing vertex 2.
pub fn bowtie() -> Graph {
    Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
}

/// Two disjoint triangles joined by the single edge 2-3.
pub fn bridged_triangles() -> Graph {
    Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
}

pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Cycle on `rim` vertices plus a hub adjacent to all of them.
pub fn wheel(rim: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..rim {
        pairs.push((i, (i + 1) % rim));
        pairs.push((i, rim));
    }
    Graph::from_edge_list(rim + 1, &pairs).unwrap()
}
