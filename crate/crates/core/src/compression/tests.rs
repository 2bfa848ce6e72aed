use super::*;
use crate::generate::{gadget, path};
use crate::graph::{Graph, VertexId, VertexSet};

fn inst(n: usize, edges: &[(VertexId, VertexId)], red: &[VertexId], k: i64) -> BipartitionInstance {
    let g = Graph::new(n, edges).unwrap();
    BipartitionInstance::with_red(g, red.iter().copied().collect(), k).unwrap()
}

fn set(vs: &[VertexId]) -> VertexSet {
    vs.iter().copied().collect()
}

fn branch(sets: &[&[VertexId]]) -> RuleDecision {
    RuleDecision::branch(sets.iter().map(|s| set(s)))
}

/// A blue P4 `a - x - y - b` on ids `first..first + 4`, with `x = first` and
/// `y = first + 1`, used as the far side of a red vertex.
fn outside_p4(first: VertexId) -> Vec<(VertexId, VertexId)> {
    vec![(first + 2, first), (first, first + 1), (first + 1, first + 3)]
}

fn with_outside(mut edges: Vec<(VertexId, VertexId)>, w: VertexId, first: VertexId) -> Vec<(VertexId, VertexId)> {
    edges.extend(outside_p4(first));
    edges.push((w, first));
    edges
}

#[test]
fn r0_p5_free_halts_with_partial_solution() {
    let i = inst(4, &[(0, 1), (1, 2), (2, 3)], &[], 2);
    assert_eq!(
        select_rule(&i).unwrap(),
        (RuleId::R0, RuleDecision::Halt { answer: Some(VertexSet::new()) })
    );
}

#[test]
fn r1_removes_vertex_on_no_p5() {
    let i = inst(6, &[(0, 1), (1, 2), (2, 3), (3, 4)], &[2], 1);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R1, RuleDecision::remove(5)));
}

#[test]
fn r2_branches_on_blue_path_vertices() {
    let i = inst(5, &[(0, 1), (1, 2), (2, 3), (3, 4)], &[1, 3], 1);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R2, RuleDecision::branch_on(&[0, 2, 4])));
}

#[test]
fn r4_isolated_edges() {
    let i = inst(5, &[(0, 1), (1, 2), (2, 3), (3, 4)], &[2], 1);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R4, RuleDecision::branch_on(&[1, 3, 4])));
    assert_eq!(applicable_rules(&i).unwrap()[0], RuleId::R4);
}

#[test]
fn r5_1_p3_attached_at_an_end() {
    let e = with_outside(vec![(0, 1), (1, 2), (3, 2)], 3, 4);
    let i = inst(8, &e, &[3], 2);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R5_1, RuleDecision::branch_on(&[2, 4])));
}

#[test]
fn r6_2_triangle_attached_twice() {
    let e = with_outside(vec![(0, 1), (1, 2), (0, 2), (3, 1), (3, 2)], 3, 4);
    let i = inst(8, &e, &[3], 2);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R6_2, RuleDecision::branch_on(&[0, 1, 4])));
}

#[test]
fn r7_2_1_plain_c4_single_attachment() {
    let i = inst(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0)], &[4], 1);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R7_2_1, RuleDecision::delete(0)));
}

#[test]
fn r7_2_4_and_r7_2_5_diamond() {
    let diamond = vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 0), (4, 1)];
    let i = inst(5, &diamond, &[4], 1);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R7_2_4, RuleDecision::delete(0)));

    let i = inst(9, &with_outside(diamond, 4, 5), &[4], 2);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R7_2_5, branch(&[&[0, 1], &[5], &[6]])));
}

#[test]
fn r8_1_star_two_leaves() {
    let i = inst(5, &[(0, 1), (0, 2), (0, 3), (4, 1), (4, 2)], &[4], 2);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R8_1, branch(&[&[1], &[0], &[3]])));
}

#[test]
fn r9_star_with_triangle() {
    let swt = vec![(0, 1), (0, 2), (1, 2), (0, 3)];
    let mut e = swt.clone();
    e.extend([(4, 1), (4, 2)]);
    let i = inst(5, &e, &[4], 2);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R9_1, branch(&[&[1], &[0], &[3]])));

    let mut e = swt;
    e.push((4, 0));
    let i = inst(9, &with_outside(e, 4, 5), &[4], 2);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R9_4, RuleDecision::branch_on(&[0, 5])));
}

#[test]
fn r11_1_4_confined_full_attachment() {
    let i = inst(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)], &[4], 1);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R11_1_4, RuleDecision::delete(0)));
}

#[test]
fn r13_1_three_edges_with_outside() {
    let e = with_outside(vec![(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 3)], 4, 5);
    let i = inst(9, &e, &[4], 3);
    assert_eq!(
        select_rule(&i).unwrap(),
        (RuleId::R13_1, branch(&[&[5], &[6], &[0, 2], &[1, 3]]))
    );
}

#[test]
fn r14_1_single_leaf_edge() {
    let i = inst(5, &[(0, 1), (1, 2), (2, 3), (4, 0)], &[4], 1);
    assert_eq!(select_rule(&i).unwrap(), (RuleId::R14_1, RuleDecision::delete(0)));
}

#[test]
fn r18_opposite_leaves() {
    let g = gadget(RuleId::R18);
    let (rule, decision) = select_rule(&g.instance().unwrap()).unwrap();
    assert_eq!(rule, RuleId::R18);
    assert_eq!(decision.branch_vector(), Some(vec![1, 1]));
}

#[test]
fn every_gadget_fires_its_rule() {
    for rule in RuleId::ALL {
        let g = gadget(rule);
        let i = g.instance().unwrap();
        let (fired, decision) = select_rule(&i).unwrap();
        assert_eq!(fired, rule, "gadget for {rule} fired {fired} with {decision:?}");
        assert_eq!(applicable_rules(&i).unwrap().first(), Some(&rule));
    }
}

#[test]
fn gadget_firings_match_hand_traces() {
    let cases: [(RuleId, RuleDecision); 8] = [
        (RuleId::R1, RuleDecision::remove(5)),
        (RuleId::R2, RuleDecision::branch_on(&[0, 2, 4])),
        (RuleId::R3, RuleDecision::branch_on(&[3, 2, 4])),
        (RuleId::R4, RuleDecision::branch_on(&[1, 3, 4])),
        (RuleId::R8_1, branch(&[&[1], &[0], &[3]])),
        (RuleId::R14_2, RuleDecision::branch_on(&[0, 5])),
        (RuleId::R16, RuleDecision::branch_on(&[1, 3])),
        (RuleId::R17, RuleDecision::branch_on(&[0, 1, 4])),
    ];
    for (rule, expected) in cases {
        let i = gadget(rule).instance().unwrap();
        assert_eq!(select_rule(&i).unwrap(), (rule, expected), "{rule}");
    }
}

#[test]
fn disjoint_r_examples() {
    let p5 = path(5);
    let i = BipartitionInstance::with_red(p5.clone(), set(&[2]), 1).unwrap();
    let f = disjoint_r(&i).unwrap().unwrap();
    assert!(f == set(&[1]) || f == set(&[3]), "{f}");

    let i = BipartitionInstance::with_red(p5, set(&[2]), 0).unwrap();
    assert_eq!(disjoint_r(&i).unwrap(), None);

    let i = inst(4, &[(0, 1), (1, 2), (2, 3)], &[1], 0);
    assert_eq!(disjoint_r(&i).unwrap(), Some(VertexSet::new()));
}

#[test]
fn stats_count_nodes_and_leaves() {
    let i = gadget(RuleId::R11_1_3).instance().unwrap();
    let mut stats = SolveStats::default();
    disjoint_r_with(&i, &mut stats, EngineOptions { check_invariants: true }).unwrap();
    assert!(stats.leaves <= stats.nodes);
    assert!(stats.leaves <= 27);
    assert_eq!(stats.per_rule.values().sum::<u64>(), stats.nodes);
}

#[test]
fn prunable_set_examples() {
    let star = inst(5, &[(0, 1), (0, 2), (0, 3), (4, 0)], &[4], 1);
    assert!(is_prunable(&star, &set(&[1, 2, 3])));
    assert!(!is_prunable(&star, &set(&[0])));
    assert!(!is_prunable(&star, &set(&[4])));
    assert!(!is_prunable(&star, &VertexSet::new()));

    let p3 = inst(4, &[(0, 1), (1, 2), (3, 2)], &[3], 1);
    assert!(is_prunable(&p3, &set(&[0, 1])));
    assert!(!is_prunable(&p3, &set(&[1, 2])));
}

#[test]
fn preprocessed_structure_after_r2() {
    let i = gadget(RuleId::R14_2).instance().unwrap();
    check_preprocessed(&i).unwrap();
}
