#![allow(dead_code)]

use pvc5_core::compression::{RuleId, SearchObserver};
use pvc5_core::p5::ComponentKind;
use pvc5_core::{Graph, VertexId};

/// Every labelled graph on `n` vertices, one per edge subset.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

/// Scans all ordered 5-tuples of distinct alive vertices.
pub fn naive_has_p5(g: &Graph) -> bool {
    let vs: Vec<_> = g.vertices().collect();
    let n = vs.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        let t = [vs[a], vs[b], vs[c], vs[d], vs[e]];
                        let distinct = (0..5).all(|i| (i + 1..5).all(|j| t[i] != t[j]));
                        if distinct && t.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

pub fn naive_connected(g: &Graph) -> bool {
    let vs: Vec<_> = g.vertices().collect();
    let Some(&start) = vs.first() else { return false };
    let mut seen = vec![start];
    let mut i = 0;
    while i < seen.len() {
        for &u in g.neighbors(seen[i]) {
            if !seen.contains(&u) {
                seen.push(u);
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

fn has_c4(g: &Graph) -> bool {
    let vs: Vec<_> = g.vertices().collect();
    for &a in &vs {
        for &b in &vs {
            for &c in &vs {
                for &d in &vs {
                    let t = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| t[i] != t[j]));
                    if distinct && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Shape of a connected P5-free graph from vertex count, edge count, a
/// 4-cycle scan and the maximum degree.
pub fn shape_oracle(g: &Graph) -> ComponentKind {
    let n = g.alive_count();
    let m = g.edge_count();
    let max_deg = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);
    match (n, m) {
        (1, _) => ComponentKind::IsolatedVertex,
        (2, _) => ComponentKind::IsolatedEdge,
        (3, 2) => ComponentKind::P3,
        (3, _) => ComponentKind::Triangle,
        _ if has_c4(g) => ComponentKind::C4Kind,
        _ if max_deg == n - 1 && m == n - 1 => ComponentKind::Star,
        _ if max_deg == n - 1 => ComponentKind::StarWithTriangle,
        _ => ComponentKind::DiStar,
    }
}

/// Splits an observed event stream into disjoint-routine runs (a run starts
/// at every depth-0 node) and records runs whose leaf count exceeds
/// `3^max(k, 0)` for the run's initial budget `k`.
#[derive(Default)]
pub struct LeafBound {
    current: Option<(i64, u64)>,
    pub runs: u64,
    pub violations: Vec<(i64, u64)>,
    pub nodes: u64,
    pub no_rule: u64,
}

impl LeafBound {
    pub fn finish(&mut self) {
        if let Some((k, leaves)) = self.current.take() {
            self.runs += 1;
            if leaves > 3u64.pow(k.max(0) as u32) {
                self.violations.push((k, leaves));
            }
        }
    }
}

impl SearchObserver for LeafBound {
    fn node_entered(&mut self, _rule: RuleId, budget: i64, depth: usize) {
        self.nodes += 1;
        if depth == 0 {
            self.finish();
            self.current = Some((budget, 0));
        }
    }

    fn leaf_reached(&mut self, _found: bool) {
        if let Some((_, leaves)) = &mut self.current {
            *leaves += 1;
        }
    }
}
