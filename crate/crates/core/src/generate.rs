//! Instance generators: seeded random graphs, paths, cycles, and one small
//! bipartition instance per leaf rule on which that rule fires first.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::compression::{BipartitionInstance, InstanceError, RuleId};
use crate::graph::{Graph, GraphError, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("edge probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

/// G(n, p) random graph. Pairs `(u, v)` with `u < v` are visited in
/// lexicographic order, each drawing one `f64` from ChaCha8 seeded with
/// `seed`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenerateError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("path edges are valid")
}

/// Cycle on `n` vertices; for `n < 3` this is a path.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    Graph::new(n, &edges).expect("cycle edges are valid")
}

/// A bipartition instance built so that `rule` is the first rule to fire.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub rule: RuleId,
    pub graph: Graph,
    pub red: VertexSet,
    pub budget: i64,
}

impl Gadget {
    pub fn instance(&self) -> Result<BipartitionInstance, InstanceError> {
        BipartitionInstance::with_red(self.graph.clone(), self.red.clone(), self.budget)
    }
}

#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    red: Vec<VertexId>,
}

impl Builder {
    fn vertex(&mut self) -> VertexId {
        self.n += 1;
        self.n - 1
    }

    fn vertices<const N: usize>(&mut self) -> [VertexId; N] {
        std::array::from_fn(|_| self.vertex())
    }

    fn red(&mut self) -> VertexId {
        let w = self.vertex();
        self.red.push(w);
        w
    }

    fn edge(&mut self, u: VertexId, v: VertexId) {
        self.edges.push((u, v));
    }

    fn join(&mut self, w: VertexId, vs: &[VertexId]) {
        for &v in vs {
            self.edge(w, v);
        }
    }

    fn path(&mut self, vs: &[VertexId]) {
        for p in vs.windows(2) {
            self.edge(p[0], p[1]);
        }
    }

    /// Di-star with centres `s < s2` allocated first, then the leaves.
    fn distar(&mut self, leaves: usize, leaves2: usize) -> (VertexId, VertexId, Vec<VertexId>, Vec<VertexId>) {
        let [s, s2] = self.vertices();
        self.edge(s, s2);
        let l: Vec<_> = (0..leaves).map(|_| self.vertex()).collect();
        let l2: Vec<_> = (0..leaves2).map(|_| self.vertex()).collect();
        for &x in &l {
            self.edge(s, x);
        }
        for &x in &l2 {
            self.edge(s2, x);
        }
        (s, s2, l, l2)
    }

    /// A blue P4 whose first centre is joined to `w`. On its own this
    /// component only triggers late rules, so it serves as the "outside"
    /// neighbourhood of `w`.
    fn outside(&mut self, w: VertexId) {
        let (s, _, _, _) = self.distar(1, 1);
        self.edge(w, s);
    }

    fn finish(self, rule: RuleId) -> Gadget {
        Gadget {
            rule,
            graph: Graph::new(self.n, &self.edges).expect("gadget edges are valid"),
            red: self.red.into_iter().collect(),
            budget: 3,
        }
    }
}

/// A random instance shaped like the ones the compression step meets after
/// preprocessing: a few P5-free blue components of the classified shapes and
/// a few red vertices with random attachments. Ids are shuffled.
pub fn structured_instance(seed: u64) -> BipartitionInstance {
    use rand::seq::SliceRandom;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Builder::default();
    let mut blue = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let start = b.n;
        match rng.gen_range(0..8) {
            0 => {
                b.vertex();
            }
            1 => {
                let [u, v] = b.vertices();
                b.edge(u, v);
            }
            2 => {
                let vs: [_; 3] = b.vertices();
                b.path(&vs);
            }
            3 => {
                let [t, u, v] = b.vertices();
                b.path(&[t, u, v, t]);
            }
            4 => {
                let vs: [_; 4] = b.vertices();
                b.path(&[vs[0], vs[1], vs[2], vs[3], vs[0]]);
                if rng.gen_bool(0.4) {
                    b.edge(vs[0], vs[2]);
                }
                if rng.gen_bool(0.3) {
                    b.edge(vs[1], vs[3]);
                }
            }
            5 => {
                let s = b.vertex();
                for _ in 0..rng.gen_range(2..=4) {
                    let l = b.vertex();
                    b.edge(s, l);
                }
            }
            6 => {
                let [s, t1, t2] = b.vertices();
                b.path(&[s, t1, t2, s]);
                for _ in 0..rng.gen_range(1..=3) {
                    let l = b.vertex();
                    b.edge(s, l);
                }
            }
            _ => {
                b.distar(rng.gen_range(1..=3), rng.gen_range(1..=3));
            }
        }
        blue.extend(start..b.n);
    }
    let reds: Vec<_> = (0..rng.gen_range(1..=3)).map(|_| b.red()).collect();
    let q = [0.15, 0.3, 0.45][rng.gen_range(0..3)];
    for &w in &reds {
        for &v in &blue {
            if rng.gen_bool(q) {
                b.edge(w, v);
            }
        }
    }
    for (i, &w) in reds.iter().enumerate() {
        for &w2 in &reds[i + 1..] {
            if rng.gen_bool(0.15) {
                b.edge(w, w2);
            }
        }
    }
    let mut perm: Vec<VertexId> = (0..b.n).collect();
    perm.shuffle(&mut rng);
    let edges: Vec<_> = b.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    let graph = Graph::new(b.n, &edges).expect("generated edges are valid");
    let red: VertexSet = b.red.iter().map(|&w| perm[w]).collect();
    let budget = rng.gen_range(0..=3);
    BipartitionInstance::with_red(graph, red, budget).expect("blue shapes and at most three reds are P5-free")
}

/// A random gadget with a few extra red-blue edges, shuffled ids and a
/// random budget.
pub fn perturbed_gadget(seed: u64) -> BipartitionInstance {
    use rand::seq::SliceRandom;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rule = *RuleId::ALL.choose(&mut rng).expect("rule list is non-empty");
    let g = gadget(rule);
    let mut edges: Vec<_> = g.graph.edges().collect();
    let red = g.red.to_vec();
    let blue: Vec<_> = g.graph.vertices().filter(|v| !g.red.contains(*v)).collect();
    for _ in 0..rng.gen_range(0..=2) {
        if let (Some(&w), Some(&v)) = (red.choose(&mut rng), blue.choose(&mut rng)) {
            edges.push((w, v));
        }
    }
    let n = g.graph.capacity();
    let mut perm: Vec<VertexId> = (0..n).collect();
    perm.shuffle(&mut rng);
    let edges: Vec<_> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    let graph = Graph::new(n, &edges).expect("generated edges are valid");
    let red: VertexSet = red.iter().map(|&w| perm[w]).collect();
    BipartitionInstance::with_red(graph, red, rng.gen_range(0..=3)).expect("red-blue edges keep both sides P5-free")
}

/// Builds the gadget for `rule`. Every leaf rule has one.
pub fn gadget(rule: RuleId) -> Gadget {
    use RuleId::*;
    let mut b = Builder::default();
    match rule {
        R0 => {
            let vs: [VertexId; 4] = b.vertices();
            b.path(&vs);
        }
        R1 => {
            let [p1, p2] = b.vertices();
            let w = b.red();
            let [p4, p5, _isolated] = b.vertices();
            b.path(&[p1, p2, w, p4, p5]);
        }
        R2 => {
            let p1 = b.vertex();
            let w1 = b.red();
            let p3 = b.vertex();
            let w2 = b.red();
            let p5 = b.vertex();
            b.path(&[p1, w1, p3, w2, p5]);
        }
        R3 => {
            let v = b.vertex();
            let w = b.red();
            let [c, l1, l2, l3] = b.vertices();
            b.join(c, &[l1, l2, l3]);
            b.path(&[v, w, l1]);
        }
        R4 => {
            let [u, v] = b.vertices();
            let w = b.red();
            b.edge(u, v);
            b.edge(w, v);
            b.outside(w);
        }
        R5_1 | R5_2 | R5_3 | R5_4 => {
            let [t, u, v] = b.vertices();
            let w = b.red();
            b.path(&[t, u, v]);
            let attach: &[VertexId] = match rule {
                R5_1 => &[v],
                R5_2 => &[u, v],
                R5_3 => &[u],
                _ => &[t, v],
            };
            b.join(w, attach);
            b.outside(w);
        }
        R6_1 | R6_2 | R6_3 => {
            let [t, u, v] = b.vertices();
            let w = b.red();
            b.path(&[t, u, v, t]);
            let attach: &[VertexId] = match rule {
                R6_1 => &[v],
                R6_2 => &[u, v],
                _ => &[t, u, v],
            };
            b.join(w, attach);
            b.outside(w);
        }
        R7_1 => {
            let q: [VertexId; 4] = b.vertices();
            b.path(&[q[0], q[1], q[2], q[3], q[0]]);
            let w1 = b.red();
            let w2 = b.red();
            b.join(q[0], &[w1, w2]);
        }
        R7_2_1 | R7_2_2 | R7_2_3 => {
            let q: [VertexId; 4] = b.vertices();
            b.path(&[q[0], q[1], q[2], q[3], q[0]]);
            let w = b.red();
            let attach: &[VertexId] = match rule {
                R7_2_1 => &[q[0]],
                R7_2_2 => &[q[0], q[2]],
                _ => &[q[0], q[1]],
            };
            b.join(w, attach);
        }
        R7_2_4 | R7_2_5 => {
            let q: [VertexId; 4] = b.vertices();
            b.path(&[q[0], q[1], q[2], q[3], q[0]]);
            b.edge(q[0], q[2]);
            let w = b.red();
            b.join(w, &[q[0], q[1]]);
            if rule == R7_2_5 {
                b.outside(w);
            }
        }
        R8_1 | R8_2 | R8_3 => {
            let [s, l1, l2, l3] = b.vertices();
            b.join(s, &[l1, l2, l3]);
            let w = b.red();
            match rule {
                R8_1 => b.join(w, &[l1, l2]),
                R8_2 => b.join(w, &[s]),
                _ => b.join(w, &[l1]),
            }
            if rule != R8_1 {
                b.outside(w);
            }
        }
        R9_1 | R9_2 | R9_3 | R9_4 => {
            let [s, t1, t2, l1] = b.vertices();
            b.path(&[s, t1, t2, s, l1]);
            let w = b.red();
            match rule {
                R9_1 => b.join(w, &[t1, t2]),
                R9_2 => b.join(w, &[t1]),
                R9_3 => b.join(w, &[l1]),
                _ => {
                    b.join(w, &[s]);
                    b.outside(w);
                }
            }
        }
        R10 => {
            let (_, _, l, _) = b.distar(2, 1);
            let w = b.red();
            b.join(w, &l);
        }
        R11_1_1 | R11_1_2 | R11_1_3 | R11_1_4 => {
            let (s, s2, l, l2) = b.distar(1, 1);
            let w = b.red();
            match rule {
                R11_1_1 => b.join(w, &[s, s2]),
                R11_1_2 => b.join(w, &[s, s2, l[0]]),
                _ => b.join(w, &[s, s2, l[0], l2[0]]),
            }
            if rule == R11_1_3 {
                b.outside(w);
            }
        }
        R11_2_1 | R11_2_2 | R11_2_3 | R11_2_4 => {
            let (s, s2, l, l2) = b.distar(2, 1);
            let w = b.red();
            b.join(w, &[s, s2]);
            match rule {
                R11_2_2 => b.join(w, &[l[0]]),
                R11_2_3 => b.join(w, &[l2[0]]),
                R11_2_4 => b.join(w, &[l[0], l2[0]]),
                _ => {}
            }
        }
        R11_3 => {
            let (s, s2, _, _) = b.distar(2, 2);
            let w = b.red();
            b.join(w, &[s, s2]);
        }
        R12_1 | R12_2 => {
            let (s, s2, l, _) = b.distar(1, 1);
            let w = b.red();
            b.join(w, &[l[0], if rule == R12_1 { s } else { s2 }]);
        }
        R12_3_1 | R12_3_2 | R12_3_3 | R12_3_4 => {
            let (sizes, outside) = match rule {
                R12_3_1 => ((1, 1), true),
                R12_3_2 => ((1, 1), false),
                R12_3_3 => ((2, 1), false),
                _ => ((2, 2), false),
            };
            let (_, _, l, l2) = b.distar(sizes.0, sizes.1);
            let w = b.red();
            b.join(w, &[l[0], l2[0]]);
            if outside {
                b.outside(w);
            }
        }
        R13_1 | R13_2 | R13_3 | R13_4 => {
            let (sizes, outside) = match rule {
                R13_1 => ((1, 1), true),
                R13_2 => ((1, 1), false),
                R13_3 => ((2, 1), false),
                _ => ((1, 2), false),
            };
            let (s, _, l, l2) = b.distar(sizes.0, sizes.1);
            let w = b.red();
            b.join(w, &[l[0], s, l2[0]]);
            if outside {
                b.outside(w);
            }
        }
        R14_1 => {
            let (_, _, l, _) = b.distar(1, 1);
            let w = b.red();
            b.join(w, &[l[0]]);
        }
        R14_2 => {
            let (s, _, _, _) = b.distar(1, 1);
            let w = b.red();
            b.join(w, &[s]);
            b.outside(w);
        }
        R15 => {
            let (_, _, l, _) = b.distar(1, 1);
            let w1 = b.red();
            let w2 = b.red();
            b.join(l[0], &[w1, w2]);
        }
        R16 => {
            // Two P4s sharing a red vertex between leaves; the other leaf of
            // each carries a red vertex that sees nothing else.
            let (_, _, l, l2) = b.distar(1, 1);
            let (_, _, m, m2) = b.distar(1, 1);
            let w1 = b.red();
            let shared = b.red();
            let w3 = b.red();
            b.join(w1, &[l[0]]);
            b.join(shared, &[l2[0], m[0]]);
            b.join(w3, &[m2[0]]);
        }
        R17 | R18 => {
            let (_, _, l, l2) = if rule == R17 { b.distar(2, 1) } else { b.distar(1, 1) };
            let (_, _, m, m2) = b.distar(1, 1);
            let w = b.red();
            let w2 = b.red();
            b.join(w, &[l[0], m[0]]);
            b.join(w2, &[l2[0], m2[0]]);
        }
    }
    b.finish(rule)
}
