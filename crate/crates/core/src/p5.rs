//! Path-on-five-vertices detection and the structure of connected P5-free graphs.
//!
//! Paths are not required to be induced. All searches walk neighbours in
//! ascending id order, so "first found" is the lexicographically smallest
//! tuple.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId, VertexSet};

/// An ordered 5-tuple of distinct vertices, consecutive ones adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path5(pub [VertexId; 5]);

impl Path5 {
    pub fn vertices(&self) -> &[VertexId; 5] {
        &self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// The orientation whose first endpoint is the smaller one.
    pub fn canonical(self) -> Path5 {
        if self.0[0] > self.0[4] {
            let mut r = self.0;
            r.reverse();
            Path5(r)
        } else {
            self
        }
    }

    pub fn is_path_in(&self, g: &Graph) -> bool {
        let p = &self.0;
        let distinct = (0..5).all(|i| (i + 1..5).all(|j| p[i] != p[j]));
        distinct && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

impl fmt::Display for Path5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = self.0;
        write!(f, "({a},{b},{c},{d},{e})")
    }
}

pub(crate) enum Walk {
    Continue,
    Prune,
    Stop,
}

/// Depth-first walk over simple paths starting at `start` with at most `len`
/// vertices. `visit` sees every prefix. Vertices flagged in `marks` are never
/// entered; the slice is restored before returning. Returns true if stopped.
pub(crate) fn walk_paths<F>(
    g: &Graph,
    start: VertexId,
    len: usize,
    marks: &mut [bool],
    visit: &mut F,
) -> bool
where
    F: FnMut(&[VertexId]) -> Walk,
{
    fn step<F>(g: &Graph, path: &mut Vec<VertexId>, len: usize, marks: &mut [bool], visit: &mut F) -> bool
    where
        F: FnMut(&[VertexId]) -> Walk,
    {
        match visit(path) {
            Walk::Stop => return true,
            Walk::Prune => return false,
            Walk::Continue => {}
        }
        if path.len() == len {
            return false;
        }
        let last = path[path.len() - 1];
        for &u in g.neighbors(last) {
            if marks[u] {
                continue;
            }
            marks[u] = true;
            path.push(u);
            let stopped = step(g, path, len, marks, visit);
            path.pop();
            marks[u] = false;
            if stopped {
                return true;
            }
        }
        false
    }

    let mut path = Vec::with_capacity(len);
    path.push(start);
    let was = marks[start];
    marks[start] = true;
    let stopped = step(g, &mut path, len, marks, visit);
    marks[start] = was;
    stopped
}

/// Visits every P5 once, in its canonical orientation, in lexicographic order.
/// `admit` may prune partial paths (return false to skip all extensions).
pub fn for_each_p5<A, V>(g: &Graph, mut admit: A, mut visit: V)
where
    A: FnMut(&[VertexId]) -> bool,
    V: FnMut(Path5) -> std::ops::ControlFlow<()>,
{
    let mut marks = vec![false; g.capacity()];
    for start in g.vertices() {
        let stopped = walk_paths(g, start, 5, &mut marks, &mut |p| {
            if !admit(p) {
                return Walk::Prune;
            }
            if p.len() == 5 && p[4] > p[0] {
                let path = Path5([p[0], p[1], p[2], p[3], p[4]]);
                if visit(path).is_break() {
                    return Walk::Stop;
                }
            }
            Walk::Continue
        });
        if stopped {
            return;
        }
    }
}

/// The lexicographically smallest P5 (first endpoint < last endpoint).
pub fn find_p5(g: &Graph) -> Option<Path5> {
    let mut found = None;
    for_each_p5(
        g,
        |_| true,
        |p| {
            found = Some(p);
            std::ops::ControlFlow::Break(())
        },
    );
    found
}

pub fn is_p5_free(g: &Graph) -> bool {
    is_p5_free_excluding(g, &vec![false; g.capacity()])
}

/// P5-freeness of `g` minus the vertices flagged in `excluded`, without
/// building the subgraph.
pub fn is_p5_free_excluding(g: &Graph, excluded: &[bool]) -> bool {
    let mut marks = excluded.to_vec();
    for start in g.vertices() {
        if excluded[start] {
            continue;
        }
        if walk_paths(g, start, 5, &mut marks, &mut |p| {
            if p.len() == 5 {
                Walk::Stop
            } else {
                Walk::Continue
            }
        }) {
            return false;
        }
    }
    true
}

/// All simple paths from `v` with exactly `edges` edges, in lexicographic order.
fn arms(g: &Graph, v: VertexId, edges: usize, marks: &mut [bool]) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    walk_paths(g, v, edges + 1, marks, &mut |p| {
        if p.len() == edges + 1 {
            out.push(p.to_vec());
        }
        Walk::Continue
    });
    out
}

/// Whether some P5 of `g` uses `v`. Faster than [`find_p5_through`] because it
/// stops at the first witness.
pub fn lies_on_p5(g: &Graph, v: VertexId) -> bool {
    if !g.is_alive(v) {
        return false;
    }
    let mut marks = vec![false; g.capacity()];
    if walk_paths(g, v, 5, &mut marks, &mut |p| {
        if p.len() == 5 {
            Walk::Stop
        } else {
            Walk::Continue
        }
    }) {
        return true;
    }
    // v in position 2 or 3: two internally disjoint arms of total length 4.
    for left in 1..=2 {
        let right = 4 - left;
        for arm in arms(g, v, left, &mut marks) {
            for &u in &arm[1..] {
                marks[u] = true;
            }
            let hit = walk_paths(g, v, right + 1, &mut marks, &mut |p| {
                if p.len() == right + 1 {
                    Walk::Stop
                } else {
                    Walk::Continue
                }
            });
            for &u in &arm[1..] {
                marks[u] = false;
            }
            if hit {
                return true;
            }
        }
    }
    false
}

/// The lexicographically smallest canonical P5 that uses `v`.
pub fn find_p5_through(g: &Graph, v: VertexId) -> Result<Option<Path5>, GraphError> {
    if v >= g.capacity() {
        return Err(GraphError::OutOfRange {
            id: v,
            n: g.capacity(),
        });
    }
    if !g.is_alive(v) {
        return Err(GraphError::NotAlive(v));
    }
    let mut marks = vec![false; g.capacity()];
    let mut best: Option<Path5> = None;
    for left in 0..=4 {
        let right = 4 - left;
        for arm in arms(g, v, left, &mut marks) {
            for &u in &arm[1..] {
                marks[u] = true;
            }
            walk_paths(g, v, right + 1, &mut marks, &mut |p| {
                if p.len() == right + 1 {
                    let mut seq: Vec<VertexId> = arm.iter().rev().copied().collect();
                    seq.extend_from_slice(&p[1..]);
                    let cand = Path5([seq[0], seq[1], seq[2], seq[3], seq[4]]).canonical();
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
                Walk::Continue
            });
            for &u in &arm[1..] {
                marks[u] = false;
            }
        }
    }
    Ok(best)
}

/// Shape of a connected P5-free graph, with its vertices labelled by role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentClass {
    IsolatedVertex {
        v: VertexId,
    },
    IsolatedEdge {
        u: VertexId,
        v: VertexId,
    },
    /// Path `t - u - v` with `t < v`.
    P3 {
        t: VertexId,
        u: VertexId,
        v: VertexId,
    },
    Triangle {
        vertices: [VertexId; 3],
    },
    /// A subgraph of K4 containing the 4-cycle `v1 v2 v3 v4`.
    /// `diagonals[0]` is the edge `{v1,v3}`, `diagonals[1]` is `{v2,v4}`.
    C4Kind {
        cycle: [VertexId; 4],
        diagonals: [bool; 2],
    },
    Star {
        center: VertexId,
        leaves: VertexSet,
    },
    StarWithTriangle {
        center: VertexId,
        triangle: [VertexId; 2],
        leaves: VertexSet,
    },
    /// Two adjacent centers `s < s2`; `leaves` hang off `s`, `leaves2` off `s2`.
    DiStar {
        s: VertexId,
        s2: VertexId,
        leaves: VertexSet,
        leaves2: VertexSet,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    IsolatedVertex,
    IsolatedEdge,
    P3,
    Triangle,
    C4Kind,
    Star,
    StarWithTriangle,
    DiStar,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("component is empty")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex set is not a connected component")]
    NotAComponent,
    #[error("component contains the path {0}")]
    ContainsP5(Path5),
    #[error("component does not match any P5-free shape")]
    Unrecognised,
}

impl ComponentClass {
    pub fn kind(&self) -> ComponentKind {
        match self {
            ComponentClass::IsolatedVertex { .. } => ComponentKind::IsolatedVertex,
            ComponentClass::IsolatedEdge { .. } => ComponentKind::IsolatedEdge,
            ComponentClass::P3 { .. } => ComponentKind::P3,
            ComponentClass::Triangle { .. } => ComponentKind::Triangle,
            ComponentClass::C4Kind { .. } => ComponentKind::C4Kind,
            ComponentClass::Star { .. } => ComponentKind::Star,
            ComponentClass::StarWithTriangle { .. } => ComponentKind::StarWithTriangle,
            ComponentClass::DiStar { .. } => ComponentKind::DiStar,
        }
    }

    pub fn vertices(&self) -> VertexSet {
        match self {
            ComponentClass::IsolatedVertex { v } => VertexSet::from([*v]),
            ComponentClass::IsolatedEdge { u, v } => VertexSet::from([*u, *v]),
            ComponentClass::P3 { t, u, v } => VertexSet::from([*t, *u, *v]),
            ComponentClass::Triangle { vertices } => VertexSet::from(*vertices),
            ComponentClass::C4Kind { cycle, .. } => VertexSet::from(*cycle),
            ComponentClass::Star { center, leaves } => {
                let mut s = leaves.clone();
                s.insert(*center);
                s
            }
            ComponentClass::StarWithTriangle {
                center,
                triangle,
                leaves,
            } => {
                let mut s = leaves.clone();
                s.insert(*center);
                s.extend(triangle.iter().copied());
                s
            }
            ComponentClass::DiStar {
                s,
                s2,
                leaves,
                leaves2,
            } => {
                let mut out = leaves.union(leaves2);
                out.insert(*s);
                out.insert(*s2);
                out
            }
        }
    }

    /// Edge set implied by the role labels, as sorted `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let e = |a: VertexId, b: VertexId| (a.min(b), a.max(b));
        let mut out = match self {
            ComponentClass::IsolatedVertex { .. } => vec![],
            ComponentClass::IsolatedEdge { u, v } => vec![e(*u, *v)],
            ComponentClass::P3 { t, u, v } => vec![e(*t, *u), e(*u, *v)],
            ComponentClass::Triangle { vertices: [a, b, c] } => vec![e(*a, *b), e(*b, *c), e(*a, *c)],
            ComponentClass::C4Kind { cycle, diagonals } => {
                let [a, b, c, d] = *cycle;
                let mut v = vec![e(a, b), e(b, c), e(c, d), e(d, a)];
                if diagonals[0] {
                    v.push(e(a, c));
                }
                if diagonals[1] {
                    v.push(e(b, d));
                }
                v
            }
            ComponentClass::Star { center, leaves } => leaves.iter().map(|l| e(*center, l)).collect(),
            ComponentClass::StarWithTriangle {
                center,
                triangle: [t1, t2],
                leaves,
            } => {
                let mut v = vec![e(*center, *t1), e(*center, *t2), e(*t1, *t2)];
                v.extend(leaves.iter().map(|l| e(*center, l)));
                v
            }
            ComponentClass::DiStar {
                s,
                s2,
                leaves,
                leaves2,
            } => {
                let mut v = vec![e(*s, *s2)];
                v.extend(leaves.iter().map(|l| e(*s, l)));
                v.extend(leaves2.iter().map(|l| e(*s2, l)));
                v
            }
        };
        out.sort_unstable();
        out
    }
}

/// Classifies the connected component `c` of `g`, which must be P5-free.
pub fn classify_component(g: &Graph, c: &VertexSet) -> Result<ComponentClass, ClassifyError> {
    if c.is_empty() {
        return Err(ClassifyError::Empty);
    }
    for v in c {
        if !g.is_alive(v) {
            return Err(GraphError::NotAlive(v).into());
        }
        if g.neighbors(v).iter().any(|&u| !c.contains(u)) {
            return Err(ClassifyError::NotAComponent);
        }
    }
    let h = g.induced(c);
    if !h.is_connected_set(c) {
        return Err(ClassifyError::NotAComponent);
    }
    if let Some(p) = find_p5(&h) {
        return Err(ClassifyError::ContainsP5(p));
    }
    let class = shape_of(&h, c).ok_or(ClassifyError::Unrecognised)?;
    if class.edges() != h.edges().collect::<Vec<_>>() {
        return Err(ClassifyError::Unrecognised);
    }
    Ok(class)
}

fn shape_of(h: &Graph, c: &VertexSet) -> Option<ComponentClass> {
    let vs = c.to_vec();
    let n = vs.len();
    let m = h.edge_count();
    let deg = |v: VertexId| h.degree(v);
    match n {
        1 => return Some(ComponentClass::IsolatedVertex { v: vs[0] }),
        2 => return Some(ComponentClass::IsolatedEdge { u: vs[0], v: vs[1] }),
        3 => {
            if m == 3 {
                return Some(ComponentClass::Triangle {
                    vertices: [vs[0], vs[1], vs[2]],
                });
            }
            let u = *vs.iter().find(|&&v| deg(v) == 2)?;
            let ends: Vec<_> = vs.iter().copied().filter(|&v| v != u).collect();
            return Some(ComponentClass::P3 {
                t: ends[0],
                u,
                v: ends[1],
            });
        }
        _ => {}
    }

    let has_c4 = n == 4 && (m >= 5 || (m == 4 && vs.iter().all(|&v| deg(v) == 2)));
    if has_c4 {
        let cycle = match m {
            4 => {
                let v1 = vs[0];
                let nb = h.neighbors(v1);
                let (v2, v4) = (nb[0], nb[1]);
                let v3 = *vs.iter().find(|&&v| v != v1 && !h.has_edge(v1, v))?;
                [v1, v2, v3, v4]
            }
            5 => {
                let hubs: Vec<_> = vs.iter().copied().filter(|&v| deg(v) == 3).collect();
                let rims: Vec<_> = vs.iter().copied().filter(|&v| deg(v) == 2).collect();
                if hubs.len() != 2 || rims.len() != 2 {
                    return None;
                }
                [hubs[0], rims[0], hubs[1], rims[1]]
            }
            _ => [vs[0], vs[1], vs[2], vs[3]],
        };
        let diagonals = [h.has_edge(cycle[0], cycle[2]), h.has_edge(cycle[1], cycle[3])];
        return Some(ComponentClass::C4Kind { cycle, diagonals });
    }

    let hub = vs.iter().copied().find(|&v| deg(v) == n - 1);
    if m == n {
        // exactly one triangle through the hub
        let center = hub?;
        let tri: Vec<_> = vs.iter().copied().filter(|&v| deg(v) == 2).collect();
        if tri.len() != 2 {
            return None;
        }
        let leaves: VertexSet = vs.iter().copied().filter(|&v| deg(v) == 1).collect();
        return Some(ComponentClass::StarWithTriangle {
            center,
            triangle: [tri[0], tri[1]],
            leaves,
        });
    }
    if m != n - 1 {
        return None;
    }
    if let Some(center) = hub {
        let leaves = vs.iter().copied().filter(|&v| v != center).collect();
        return Some(ComponentClass::Star { center, leaves });
    }
    let inner: Vec<_> = vs.iter().copied().filter(|&v| deg(v) > 1).collect();
    if inner.len() != 2 {
        return None;
    }
    let (s, s2) = (inner[0], inner[1]);
    let leaves = h.neighbors(s).iter().copied().filter(|&v| v != s2).collect();
    let leaves2 = h.neighbors(s2).iter().copied().filter(|&v| v != s).collect();
    Some(ComponentClass::DiStar {
        s,
        s2,
        leaves,
        leaves2,
    })
}
