//! Rule selection. Each leaf rule has its own predicate; a rule fires only if
//! no earlier rule applies to any part of the instance.
//!
//! Rules from R3 on look at one blue component at a time. The fired rule is
//! the earliest rule that applies to some component, and among components the
//! one with the smallest vertex id wins.

use std::ops::{ControlFlow, RangeInclusive};

use crate::graph::{Graph, VertexId, VertexSet};
use crate::p5::{classify_component, for_each_p5, is_p5_free, lies_on_p5, walk_paths, ComponentClass, ComponentKind, Walk};

use super::instance::{BipartitionInstance, RuleDecision};
use super::rules::RuleId;
use super::EngineError;

pub(crate) struct Component {
    pub vertices: VertexSet,
    pub class: ComponentClass,
    /// Red vertices with a neighbour in the component, ascending.
    pub reds: Vec<VertexId>,
}

/// Blue components of an instance with their classification.
pub(crate) struct Snapshot<'a> {
    inst: &'a BipartitionInstance,
    is_red: Vec<bool>,
    is_blue: Vec<bool>,
    pub comps: Vec<Component>,
}

impl<'a> Snapshot<'a> {
    pub fn build(inst: &'a BipartitionInstance) -> Result<Self, EngineError> {
        let g = inst.graph();
        let n = g.capacity();
        let mut is_red = vec![false; n];
        let mut is_blue = vec![false; n];
        for v in inst.red() {
            is_red[v] = true;
        }
        for v in inst.blue() {
            is_blue[v] = true;
        }
        let blue_graph = g.induced(inst.blue());
        let mut comps = Vec::new();
        for vertices in blue_graph.connected_components() {
            let class = classify_component(&blue_graph, &vertices)
                .map_err(|e| EngineError::InvariantViolation(format!("blue component {vertices}: {e}")))?;
            let mut reds: Vec<VertexId> = vertices
                .iter()
                .flat_map(|v| g.neighbors(v).iter().copied())
                .filter(|&u| is_red[u])
                .collect();
            reds.sort_unstable();
            reds.dedup();
            comps.push(Component { vertices, class, reds });
        }
        Ok(Snapshot {
            inst,
            is_red,
            is_blue,
            comps,
        })
    }

    fn graph(&self) -> &Graph {
        self.inst.graph()
    }

    fn attach(&self, w: VertexId, c: &Component) -> VertexSet {
        self.graph().neighbors(w).iter().copied().filter(|&u| c.vertices.contains(u)).collect()
    }

    fn confined(&self, w: VertexId, c: &Component) -> bool {
        self.graph().neighbors(w).iter().all(|&u| c.vertices.contains(u))
    }

    fn blue_neighbor(&self, x: VertexId) -> Option<VertexId> {
        self.graph().neighbors(x).iter().copied().find(|&u| self.is_blue[u])
    }

    /// Smallest blue neighbour of `w` outside `c`.
    fn outside_x(&self, w: VertexId, c: &Component) -> Option<VertexId> {
        self.graph()
            .neighbors(w)
            .iter()
            .copied()
            .find(|&u| self.is_blue[u] && !c.vertices.contains(u))
    }

    /// Smallest blue neighbour `x` of `w` outside `c` that has a blue
    /// neighbour, together with its smallest such neighbour `y`.
    fn outside_xy(&self, w: VertexId, c: &Component) -> Option<(VertexId, VertexId)> {
        self.graph()
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&u| self.is_blue[u] && !c.vertices.contains(u))
            .find_map(|x| self.blue_neighbor(x).map(|y| (x, y)))
    }
}

fn sole_red(c: &Component) -> Option<VertexId> {
    match c.reds.as_slice() {
        [w] => Some(*w),
        _ => None,
    }
}

fn set<const N: usize>(vs: [VertexId; N]) -> VertexSet {
    VertexSet::from(vs)
}

fn rules_for(kind: ComponentKind) -> RangeInclusive<RuleId> {
    use RuleId::*;
    match kind {
        ComponentKind::IsolatedVertex => R3..=R3,
        ComponentKind::IsolatedEdge => R4..=R4,
        ComponentKind::P3 => R5_1..=R5_4,
        ComponentKind::Triangle => R6_1..=R6_3,
        ComponentKind::C4Kind => R7_1..=R7_2_5,
        ComponentKind::Star => R8_1..=R8_3,
        ComponentKind::StarWithTriangle => R9_1..=R9_4,
        ComponentKind::DiStar => R10..=R18,
    }
}

fn rules_in(range: &RangeInclusive<RuleId>) -> impl Iterator<Item = RuleId> + '_ {
    RuleId::ALL[range.start().index()..=range.end().index()].iter().copied()
}

/// Evaluates a single leaf rule on a single component.
fn leaf_rule(id: RuleId, snap: &Snapshot, c: &Component) -> Option<RuleDecision> {
    match &c.class {
        ComponentClass::IsolatedVertex { v } => isolated_vertex_rule(id, snap, *v),
        ComponentClass::IsolatedEdge { u, v } => isolated_edge_rule(id, snap, c, *u, *v),
        ComponentClass::P3 { t, u, v } => p3_rule(id, snap, c, *t, *u, *v),
        ComponentClass::Triangle { vertices } => triangle_rule(id, snap, c, *vertices),
        ComponentClass::C4Kind { cycle, diagonals } => four_cycle_rule(id, snap, c, *cycle, *diagonals),
        ComponentClass::Star { center, leaves } => star_rule(id, snap, c, *center, leaves),
        ComponentClass::StarWithTriangle {
            center,
            triangle,
            leaves,
        } => star_triangle_rule(id, snap, c, *center, *triangle, leaves),
        ComponentClass::DiStar { s, s2, leaves, leaves2 } => {
            let d = DiStar {
                s: *s,
                s2: *s2,
                l: leaves,
                l2: leaves2,
            };
            distar_rule(id, snap, c, &d)
        }
    }
}

fn isolated_vertex_rule(id: RuleId, snap: &Snapshot, v: VertexId) -> Option<RuleDecision> {
    if id != RuleId::R3 {
        return None;
    }
    let g = snap.graph();
    let mut marks = vec![false; g.capacity()];
    let mut found = None;
    walk_paths(g, v, 5, &mut marks, &mut |p| {
        let last = p[p.len() - 1];
        let ok = match p.len() {
            1 => true,
            2 => snap.is_red[last],
            _ => snap.is_blue[last],
        };
        if !ok {
            return Walk::Prune;
        }
        if p.len() == 5 {
            found = Some([p[2], p[3], p[4]]);
            return Walk::Stop;
        }
        Walk::Continue
    });
    found.map(|xyz| RuleDecision::branch_on(&xyz))
}

fn isolated_edge_rule(id: RuleId, snap: &Snapshot, c: &Component, u: VertexId, v: VertexId) -> Option<RuleDecision> {
    if id != RuleId::R4 {
        return None;
    }
    let w = sole_red(c)?;
    let a = snap.attach(w, c);
    let target = if a.len() == 1 { a.first()? } else { u.min(v) };
    let (x, y) = snap.outside_xy(w, c)?;
    Some(RuleDecision::branch_on(&[target, x, y]))
}

fn p3_rule(id: RuleId, snap: &Snapshot, c: &Component, t: VertexId, u: VertexId, v: VertexId) -> Option<RuleDecision> {
    use RuleId::*;
    let w = sole_red(c)?;
    let a = snap.attach(w, c);
    let ends: Vec<VertexId> = a.iter().filter(|&e| e != u).collect();
    match id {
        R5_1 if !a.contains(u) && ends.len() == 1 => {
            let x = snap.outside_x(w, c)?;
            Some(RuleDecision::branch_on(&[ends[0], x]))
        }
        R5_2 if a.contains(u) && ends.len() == 1 => {
            let x = snap.outside_x(w, c)?;
            Some(RuleDecision::branch_on(&[u, ends[0], x]))
        }
        R5_3 if a == set([u]) => {
            let (x, y) = snap.outside_xy(w, c)?;
            Some(RuleDecision::branch_on(&[u, x, y]))
        }
        R5_4 if a.contains(t) && a.contains(v) => {
            let x = snap.outside_x(w, c)?;
            Some(RuleDecision::branch_on(&[u, t.min(v), x]))
        }
        _ => None,
    }
}

fn triangle_rule(id: RuleId, snap: &Snapshot, c: &Component, tri: [VertexId; 3]) -> Option<RuleDecision> {
    use RuleId::*;
    let w = sole_red(c)?;
    let a = snap.attach(w, c);
    match (id, a.len()) {
        (R6_1, 1) | (R6_3, 3) => {
            let x = snap.outside_x(w, c)?;
            Some(RuleDecision::branch_on(&[a.first()?, x]))
        }
        (R6_2, 2) => {
            let t = *tri.iter().find(|&&z| !a.contains(z))?;
            let x = snap.outside_x(w, c)?;
            Some(RuleDecision::branch_on(&[t, a.first()?, x]))
        }
        _ => None,
    }
}

fn four_cycle_rule(
    id: RuleId,
    snap: &Snapshot,
    c: &Component,
    cycle: [VertexId; 4],
    diagonals: [bool; 2],
) -> Option<RuleDecision> {
    use RuleId::*;
    let qmin = c.vertices.first()?;
    if id == R7_1 {
        return (c.reds.len() >= 2).then(|| RuleDecision::delete(qmin));
    }
    let w = sole_red(c)?;
    let x = snap.attach(w, c);
    let complete = diagonals == [true, true];
    let single_diagonal = diagonals[0] != diagonals[1];
    let sorted = |a: VertexId, b: VertexId| (a.min(b), a.max(b));
    let diagonal_pairs = [sorted(cycle[0], cycle[2]), sorted(cycle[1], cycle[3])];
    let is_diagonal = |p: (VertexId, VertexId)| diagonal_pairs.contains(&p);
    let xs = x.to_vec();
    match id {
        R7_2_1 if x.len() == 1 => Some(RuleDecision::delete(xs[0])),
        R7_2_2 => {
            let pairs: Vec<(VertexId, VertexId)> = if complete {
                if xs.len() >= 3 {
                    vec![(xs[0], xs[1])]
                } else {
                    vec![]
                }
            } else {
                diagonal_pairs
                    .iter()
                    .copied()
                    .filter(|&(a, b)| x.contains(a) && x.contains(b))
                    .collect()
            };
            let (a, b) = pairs.into_iter().min()?;
            let rest: Vec<VertexId> = c.vertices.iter().filter(|&z| z != a && z != b).collect();
            Some(RuleDecision::branch_on(&[a, rest[0], rest[1]]))
        }
        R7_2_3 if xs.len() == 2 && (complete || diagonals == [false, false]) => {
            let (v1, v2) = (xs[0], xs[1]);
            if !complete && is_diagonal((v1, v2)) {
                return None;
            }
            let (v3, v4) = if complete {
                let rest: Vec<VertexId> = c.vertices.iter().filter(|&z| z != v1 && z != v2).collect();
                (rest[0], rest[1])
            } else {
                let opposite = |v: VertexId| {
                    let i = cycle.iter().position(|&z| z == v).unwrap_or(0);
                    cycle[(i + 2) % 4]
                };
                (opposite(v1), opposite(v2))
            };
            Some(RuleDecision::branch_on(&[v1, v3, v4]))
        }
        R7_2_4 | R7_2_5 if single_diagonal && xs.len() == 2 && !is_diagonal((xs[0], xs[1])) => {
            if id == R7_2_4 {
                snap.confined(w, c).then(|| RuleDecision::delete(qmin))
            } else {
                let (ox, oy) = snap.outside_xy(w, c)?;
                Some(RuleDecision::branch([x.clone(), set([ox]), set([oy])]))
            }
        }
        _ => None,
    }
}

fn star_rule(id: RuleId, snap: &Snapshot, c: &Component, s: VertexId, leaves: &VertexSet) -> Option<RuleDecision> {
    use RuleId::*;
    let w = sole_red(c)?;
    let a = snap.attach(w, c);
    let al = a.intersection(leaves).to_vec();
    match id {
        R8_1 if al.len() >= 2 => {
            let rest = leaves.difference(&set([al[0], al[1]]));
            Some(RuleDecision::branch([set([al[0]]), set([s]), rest]))
        }
        R8_2 if a == set([s]) => {
            let (x, y) = snap.outside_xy(w, c)?;
            Some(RuleDecision::branch_on(&[s, x, y]))
        }
        R8_3 if al.len() == 1 => {
            let x = snap.outside_x(w, c)?;
            Some(RuleDecision::branch_on(&[s, al[0], x]))
        }
        _ => None,
    }
}

fn star_triangle_rule(
    id: RuleId,
    snap: &Snapshot,
    c: &Component,
    s: VertexId,
    tri: [VertexId; 2],
    leaves: &VertexSet,
) -> Option<RuleDecision> {
    use RuleId::*;
    let g = snap.graph();
    let hits = |w: VertexId| tri.iter().filter(|&&t| g.has_edge(w, t)).count();
    match id {
        R9_1 => c
            .reds
            .iter()
            .any(|&w| hits(w) == 2)
            .then(|| RuleDecision::branch([set([tri[0].min(tri[1])]), set([s]), leaves.clone()])),
        R9_2 => {
            let w = *c.reds.iter().find(|&&w| hits(w) == 1)?;
            let t1 = *tri.iter().find(|&&t| g.has_edge(w, t))?;
            Some(RuleDecision::branch([set([t1]), set([s]), leaves.clone()]))
        }
        R9_3 => {
            let l1 = leaves.iter().find(|&l| g.neighbors(l).iter().any(|&u| snap.is_red[u]))?;
            Some(RuleDecision::branch_on(&[l1, s]))
        }
        R9_4 => c
            .reds
            .iter()
            .filter(|&&w| snap.attach(w, c) == set([s]))
            .find_map(|&w| snap.outside_x(w, c))
            .map(|x| RuleDecision::branch_on(&[s, x])),
        _ => None,
    }
}

struct DiStar<'a> {
    s: VertexId,
    s2: VertexId,
    l: &'a VertexSet,
    l2: &'a VertexSet,
}

impl DiStar<'_> {
    fn is_center(&self, v: VertexId) -> bool {
        v == self.s || v == self.s2
    }

    fn other(&self, center: VertexId) -> VertexId {
        if center == self.s {
            self.s2
        } else {
            self.s
        }
    }

    fn center_of(&self, leaf: VertexId) -> VertexId {
        if self.l.contains(leaf) {
            self.s
        } else {
            self.s2
        }
    }

    fn leaves_of(&self, center: VertexId) -> &VertexSet {
        if center == self.s {
            self.l
        } else {
            self.l2
        }
    }

    fn big(&self, center: VertexId) -> bool {
        self.leaves_of(center).len() >= 2
    }
}

fn distar_rule(id: RuleId, snap: &Snapshot, c: &Component, d: &DiStar) -> Option<RuleDecision> {
    use RuleId::*;
    let (s, s2) = (d.s, d.s2);
    let dmin = c.vertices.first()?;
    if id == R10 {
        return c.reds.iter().find_map(|&w| {
            let a = snap.attach(w, c);
            let a1 = a.intersection(d.l);
            let a2 = a.intersection(d.l2);
            if a1.len() >= 2 {
                Some(RuleDecision::branch_on(&[a1.first()?, s, s2]))
            } else if a2.len() >= 2 {
                Some(RuleDecision::branch_on(&[a2.first()?, s2, s]))
            } else {
                None
            }
        });
    }
    if id >= R15 {
        return distar_multi_red_rule(id, snap, c, d);
    }
    let w = sole_red(c)?;
    let a = snap.attach(w, c);
    let al = a.intersection(d.l).to_vec();
    let al2 = a.intersection(d.l2).to_vec();
    let centers: Vec<VertexId> = a.iter().filter(|&v| d.is_center(v)).collect();
    let (big1, big2) = (d.big(s), d.big(s2));

    match id {
        R11_1_1 | R11_1_2 | R11_1_3 | R11_1_4 if centers.len() == 2 && !big1 && !big2 => {
            let (l1, m1) = (d.l.first()?, d.l2.first()?);
            match (id, a.len()) {
                (R11_1_1, 2) => Some(RuleDecision::branch_on(&[s, s2])),
                (R11_1_2, 3) => {
                    let leaf = a.iter().find(|&v| !d.is_center(v))?;
                    let own = d.center_of(leaf);
                    Some(RuleDecision::branch_on(&[leaf, own, d.other(own)]))
                }
                (R11_1_3, 4) => {
                    let (x, y) = snap.outside_xy(w, c)?;
                    Some(RuleDecision::branch([
                        set([x]),
                        set([y]),
                        set([l1, s2]),
                        set([s, m1]),
                        set([s, s2]),
                    ]))
                }
                (R11_1_4, 4) => snap.confined(w, c).then(|| RuleDecision::delete(dmin)),
                _ => None,
            }
        }
        R11_2_1 | R11_2_2 | R11_2_3 | R11_2_4 if centers.len() == 2 && big1 != big2 => {
            let (big_c, small_c, a_big, a_small) = if big1 { (s, s2, &al, &al2) } else { (s2, s, &al2, &al) };
            match (id, a_big.len(), a_small.len()) {
                (R11_2_1, 0, 0) => Some(RuleDecision::branch_on(&[big_c, small_c])),
                (R11_2_2, 1, 0) | (R11_2_4, 1, 1) => Some(RuleDecision::branch_on(&[a_big[0], big_c, small_c])),
                (R11_2_3, 0, 1) => Some(RuleDecision::branch_on(&[a_small[0], big_c, small_c])),
                _ => None,
            }
        }
        R11_3 if centers.len() == 2 && big1 && big2 => {
            Some(RuleDecision::branch([d.l.clone(), set([s]), set([s2]), d.l2.clone()]))
        }
        R12_1 | R12_2 if a.len() == 2 && centers.len() == 1 => {
            let leaf = a.iter().find(|&v| !d.is_center(v))?;
            let own = d.center_of(leaf);
            match id {
                R12_1 if centers[0] == own => Some(RuleDecision::branch_on(&[leaf, own])),
                R12_2 if centers[0] != own => Some(RuleDecision::branch_on(&[leaf, own, centers[0]])),
                _ => None,
            }
        }
        R12_3_1 | R12_3_2 | R12_3_3 | R12_3_4 if a.len() == 2 && al.len() == 1 && al2.len() == 1 => {
            let (l1, m1) = (al[0], al2[0]);
            match id {
                R12_3_1 if !big1 && !big2 => {
                    let (x, y) = snap.outside_xy(w, c)?;
                    Some(RuleDecision::branch([set([x]), set([y]), set([l1, m1])]))
                }
                R12_3_2 if !big1 && !big2 => snap.confined(w, c).then(|| RuleDecision::delete(dmin)),
                R12_3_3 if big1 != big2 => {
                    let (big_c, big_leaf, other_leaf) = if big1 { (s, l1, m1) } else { (s2, m1, l1) };
                    Some(RuleDecision::branch_on(&[big_leaf, big_c, other_leaf]))
                }
                R12_3_4 if big1 && big2 => Some(RuleDecision::branch([set([s]), set([s2]), set([l1, m1])])),
                _ => None,
            }
        }
        R13_1 | R13_2 | R13_3 | R13_4 if a.len() == 3 && centers.len() == 1 && al.len() == 1 && al2.len() == 1 => {
            let cw = centers[0];
            let co = d.other(cw);
            let (own_leaf, far_leaf) = if cw == s { (al[0], al2[0]) } else { (al2[0], al[0]) };
            let (big_w, big_o) = (d.big(cw), d.big(co));
            match id {
                R13_1 if !big_w && !big_o => {
                    let (x, y) = snap.outside_xy(w, c)?;
                    Some(RuleDecision::branch([
                        set([x]),
                        set([y]),
                        set([own_leaf, co]),
                        set([cw, far_leaf]),
                    ]))
                }
                R13_2 if !big_w && !big_o => snap.confined(w, c).then(|| RuleDecision::delete(dmin)),
                R13_3 if big_w => Some(RuleDecision::branch_on(&[own_leaf, cw, far_leaf])),
                R13_4 if big_o => Some(RuleDecision::branch_on(&[own_leaf, co, far_leaf])),
                _ => None,
            }
        }
        R14_1 | R14_2 if a.len() == 1 => {
            let v = a.first()?;
            match id {
                R14_1 if !d.is_center(v) => Some(RuleDecision::delete(v)),
                R14_2 if d.is_center(v) => {
                    let x = snap.outside_x(w, c)?;
                    Some(RuleDecision::branch_on(&[v, x]))
                }
                _ => None,
            }
        }
        _ => None,
    }
}

/// Rules for di-stars with several red vertices, each joined by a single edge.
fn distar_multi_red_rule(id: RuleId, snap: &Snapshot, c: &Component, d: &DiStar) -> Option<RuleDecision> {
    use RuleId::*;
    if c.reds.len() < 2 {
        return None;
    }
    let mut targets = Vec::with_capacity(c.reds.len());
    for &w in &c.reds {
        let a = snap.attach(w, c);
        if a.len() != 1 {
            return None;
        }
        targets.push(a.first()?);
    }
    let spots: VertexSet = targets.iter().copied().collect();
    if id == R15 {
        let v = spots.first()?;
        return (spots.len() == 1 && !d.is_center(v)).then(|| RuleDecision::delete(v));
    }
    let l1 = spots.iter().find(|&v| d.l.contains(v))?;
    let m1 = spots.iter().find(|&v| d.l2.contains(v))?;
    if spots.len() != 2 {
        return None;
    }
    let (s, s2) = (d.s, d.s2);
    match id {
        R16 => {
            let all_confined = |leaf: VertexId| {
                c.reds
                    .iter()
                    .zip(&targets)
                    .filter(|&(_, &t)| t == leaf)
                    .all(|(&w, _)| snap.confined(w, c))
            };
            if all_confined(l1) {
                Some(RuleDecision::branch_on(&[s2, m1]))
            } else if all_confined(m1) {
                Some(RuleDecision::branch_on(&[s, l1]))
            } else {
                None
            }
        }
        R17 if c.reds.len() == 2 && (d.big(s) || d.big(s2)) => {
            let (big_c, other_leaf) = if d.big(s) { (s, m1) } else { (s2, l1) };
            Some(RuleDecision::branch_on(&[big_c, d.other(big_c), other_leaf]))
        }
        R18 if c.reds.len() == 2 && !d.big(s) && !d.big(s2) => Some(RuleDecision::branch_on(&[l1, m1])),
        _ => None,
    }
}

/// Earliest rule within `range` that applies to some component.
fn first_component_rule(snap: &Snapshot, range: RangeInclusive<RuleId>) -> Option<(RuleId, RuleDecision)> {
    let mut best: Option<(RuleId, RuleDecision)> = None;
    for c in &snap.comps {
        let own = rules_for(c.class.kind());
        let lo = (*own.start()).max(*range.start());
        let hi = (*own.end()).min(*range.end());
        if lo > hi {
            continue;
        }
        for id in rules_in(&(lo..=hi)) {
            if best.as_ref().is_some_and(|(b, _)| *b <= id) {
                break;
            }
            if let Some(d) = leaf_rule(id, snap, c) {
                best = Some((id, d));
                break;
            }
        }
    }
    best
}

fn blue_mask(inst: &BipartitionInstance) -> Vec<bool> {
    let mut mask = vec![false; inst.graph().capacity()];
    for v in inst.blue() {
        mask[v] = true;
    }
    mask
}

fn r2(inst: &BipartitionInstance) -> Option<RuleDecision> {
    let blue = blue_mask(inst);
    let mut found = None;
    for_each_p5(
        inst.graph(),
        |p| p.iter().filter(|&&v| blue[v]).count() <= 3,
        |p| {
            found = Some(p);
            ControlFlow::Break(())
        },
    );
    found.map(|p| {
        let xs: Vec<VertexId> = p.vertices().iter().copied().filter(|&v| blue[v]).collect();
        RuleDecision::branch_on(&xs)
    })
}

/// Stopping conditions, removal of vertices on no P5, and branching on a P5
/// with at most three blue vertices.
pub fn preprocessing_rules(inst: &BipartitionInstance) -> Option<(RuleId, RuleDecision)> {
    let g = inst.graph();
    if inst.budget() < 0 {
        return Some((RuleId::R0, RuleDecision::Halt { answer: None }));
    }
    if is_p5_free(g) {
        return Some((
            RuleId::R0,
            RuleDecision::Halt {
                answer: Some(inst.partial_solution().clone()),
            },
        ));
    }
    if inst.budget() == 0 {
        return Some((RuleId::R0, RuleDecision::Halt { answer: None }));
    }
    if let Some(v) = g.vertices().find(|&v| !lies_on_p5(g, v)) {
        return Some((RuleId::R1, RuleDecision::remove(v)));
    }
    r2(inst).map(|d| (RuleId::R2, d))
}

fn group(inst: &BipartitionInstance, range: RangeInclusive<RuleId>) -> Result<Option<(RuleId, RuleDecision)>, EngineError> {
    let snap = Snapshot::build(inst)?;
    Ok(first_component_rule(&snap, range))
}

/// Isolated vertices, edges, paths on three vertices and triangles.
pub fn small_component_rules(inst: &BipartitionInstance) -> Result<Option<(RuleId, RuleDecision)>, EngineError> {
    group(inst, RuleId::R3..=RuleId::R6_3)
}

/// Components that are subgraphs of K4 containing a 4-cycle.
pub fn four_cycle_rules(inst: &BipartitionInstance) -> Result<Option<(RuleId, RuleDecision)>, EngineError> {
    group(inst, RuleId::R7_1..=RuleId::R7_2_5)
}

/// Stars and stars with a triangle.
pub fn star_rules(inst: &BipartitionInstance) -> Result<Option<(RuleId, RuleDecision)>, EngineError> {
    group(inst, RuleId::R8_1..=RuleId::R9_4)
}

pub fn distar_rules(inst: &BipartitionInstance) -> Result<Option<(RuleId, RuleDecision)>, EngineError> {
    group(inst, RuleId::R10..=RuleId::R18)
}

/// The first applicable rule. Failing to find one is a bug, reported as
/// [`EngineError::NoRuleApplicable`].
pub fn select_rule(inst: &BipartitionInstance) -> Result<(RuleId, RuleDecision), EngineError> {
    if let Some(hit) = preprocessing_rules(inst) {
        return Ok(hit);
    }
    let snap = Snapshot::build(inst)?;
    first_component_rule(&snap, RuleId::R3..=RuleId::R18).ok_or_else(|| EngineError::NoRuleApplicable {
        budget: inst.budget(),
        vertices: inst.graph().alive_count(),
    })
}

/// Every leaf rule whose own condition holds, each evaluated on its own
/// rather than through the selection shortcut.
pub fn applicable_rules(inst: &BipartitionInstance) -> Result<Vec<RuleId>, EngineError> {
    let g = inst.graph();
    let mut out = Vec::new();
    if inst.budget() <= 0 || is_p5_free(g) {
        out.push(RuleId::R0);
    }
    if g.vertices().any(|v| !lies_on_p5(g, v)) {
        out.push(RuleId::R1);
    }
    if r2(inst).is_some() {
        out.push(RuleId::R2);
    }
    let snap = Snapshot::build(inst)?;
    for id in rules_in(&(RuleId::R3..=RuleId::R18)) {
        if snap.comps.iter().any(|c| leaf_rule(id, &snap, c).is_some()) {
            out.push(id);
        }
    }
    Ok(out)
}

/// Checks the structure guaranteed once the preprocessing rules stop
/// applying: the red side has no edges and every P5 has exactly one red
/// vertex.
pub fn check_preprocessed(inst: &BipartitionInstance) -> Result<(), EngineError> {
    let g = inst.graph();
    let red = inst.red();
    if let Some((u, v)) = g.edges().find(|&(u, v)| red.contains(u) && red.contains(v)) {
        return Err(EngineError::InvariantViolation(format!("red edge {{{u},{v}}} survives preprocessing")));
    }
    let mut bad = None;
    for_each_p5(
        g,
        |_| true,
        |p| {
            if p.vertices().iter().filter(|&&v| red.contains(v)).count() != 1 {
                bad = Some(p);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
    );
    match bad {
        Some(p) => Err(EngineError::InvariantViolation(format!(
            "path {p} does not use exactly one red vertex"
        ))),
        None => Ok(()),
    }
}
