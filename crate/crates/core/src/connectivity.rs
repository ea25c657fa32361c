//! Vertex connectivity via unit-capacity max-flow on the vertex-split digraph.

use std::collections::VecDeque;

use crate::graph::Graph;

pub(crate) fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    let adj = g.adjacency();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

pub(crate) fn is_k_connected(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "connectivity order must be at least 1");
    let n = g.vertex_count();
    if n <= k {
        return false;
    }
    if k == 1 {
        return is_connected(g);
    }
    let adj = g.adjacency();
    let mut net = SplitNetwork::new(n, &adj);
    // Any separator S with |S| < k misses one of the first k vertices; that
    // vertex is separated from some vertex outside S, so checking pairs whose
    // first member is among 0..k suffices.
    for s in 0..k {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            if net.max_disjoint_paths(s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Number of internally vertex-disjoint `s`–`t` paths, stopping once `cap`
/// is reached. `s` and `t` must be distinct and non-adjacent.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let adj = g.adjacency();
    SplitNetwork::new(g.vertex_count(), &adj).max_disjoint_paths(s, t, cap)
}

/// Vertex `x` becomes arc `x_in -> x_out` of capacity one; each undirected
/// edge `xy` becomes arcs `x_out -> y_in` and `y_out -> x_in`.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u8>,
    out: Vec<Vec<usize>>,
    base_cap: Vec<u8>,
}

impl SplitNetwork {
    fn new(n: usize, adj: &[Vec<usize>]) -> Self {
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); 2 * n],
            base_cap: Vec::new(),
        };
        for x in 0..n {
            net.arc(2 * x, 2 * x + 1, 1);
        }
        for (x, list) in adj.iter().enumerate() {
            for &y in list {
                if x < y {
                    net.arc(2 * x + 1, 2 * y, 1);
                    net.arc(2 * y + 1, 2 * x, 1);
                }
            }
        }
        net.base_cap = net.cap.clone();
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u8) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn max_disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.base_cap);
        let source = 2 * s + 1;
        let sink = 2 * t;
        let nodes = self.out.len();
        let mut flow = 0;
        let mut via = vec![usize::MAX; nodes];
        while flow < limit {
            via.fill(usize::MAX);
            let mut queue = VecDeque::from([source]);
            via[source] = usize::MAX - 1;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for &a in &self.out[x] {
                    let y = self.head[a];
                    if self.cap[a] > 0 && via[y] == usize::MAX {
                        via[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if via[sink] == usize::MAX {
                break;
            }
            let mut x = sink;
            while x != source {
                let a = via[x];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                x = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}
