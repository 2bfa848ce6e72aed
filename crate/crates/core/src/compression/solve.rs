use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::VertexSet;
use crate::p5::is_p5_free;

use super::instance::{BipartitionInstance, RuleDecision};
use super::rules::RuleId;
use super::select::{applicable_rules, check_preprocessed, select_rule};
use super::EngineError;

/// Receives search-tree events from [`disjoint_r_with`].
pub trait SearchObserver {
    /// A rule was applied at a node `depth` levels below the root.
    fn node_entered(&mut self, _rule: RuleId, _budget: i64, _depth: usize) {}

    /// A node finished without children.
    fn leaf_reached(&mut self, _found: bool) {}
}

impl SearchObserver for () {}

/// Search-tree counters. Every rule application is one node; a leaf is a node
/// that halts or whose branches all exceed the remaining budget.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub leaves: u64,
    pub per_rule: BTreeMap<RuleId, u64>,
    pub max_depth: u64,
}

impl SolveStats {
    pub fn merge(&mut self, other: &SolveStats) {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        for (r, n) in &other.per_rule {
            *self.per_rule.entry(*r).or_default() += n;
        }
        self.max_depth = self.max_depth.max(other.max_depth);
    }
}

impl SearchObserver for SolveStats {
    fn node_entered(&mut self, rule: RuleId, _budget: i64, depth: usize) {
        self.nodes += 1;
        *self.per_rule.entry(rule).or_default() += 1;
        self.max_depth = self.max_depth.max(depth as u64);
    }

    fn leaf_reached(&mut self, _found: bool) {
        self.leaves += 1;
    }
}

impl<O: SearchObserver + ?Sized> SearchObserver for &mut O {
    fn node_entered(&mut self, rule: RuleId, budget: i64, depth: usize) {
        (**self).node_entered(rule, budget, depth)
    }

    fn leaf_reached(&mut self, found: bool) {
        (**self).leaf_reached(found)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineOptions {
    /// Re-check rule order and the post-preprocessing structure at every
    /// node. Slow; meant for tests on small instances.
    pub check_invariants: bool,
}

/// Finds `F' ⊆ blue` with `|F'| ≤ budget` such that deleting it leaves no P5.
/// Returns the accumulated partial solution extended by `F'`.
pub fn disjoint_r(inst: &BipartitionInstance) -> Result<Option<VertexSet>, EngineError> {
    disjoint_r_with(inst, &mut (), EngineOptions::default())
}

pub fn disjoint_r_with<O: SearchObserver>(
    inst: &BipartitionInstance,
    observer: &mut O,
    options: EngineOptions,
) -> Result<Option<VertexSet>, EngineError> {
    let found = search(inst.clone(), 0, observer, options)?;
    if let Some(f) = &found {
        check_solution(inst, f)?;
    }
    Ok(found)
}

fn check_solution(inst: &BipartitionInstance, f: &VertexSet) -> Result<(), EngineError> {
    if !inst.partial_solution().is_subset(f) {
        return Err(EngineError::UnsoundSolution(format!(
            "{f} drops part of the partial solution {}",
            inst.partial_solution()
        )));
    }
    let added = f.difference(inst.partial_solution());
    if !added.is_subset(inst.blue()) {
        return Err(EngineError::UnsoundSolution(format!("{added} is not blue")));
    }
    if added.len() as i64 > inst.budget() {
        return Err(EngineError::UnsoundSolution(format!(
            "{added} exceeds budget {}",
            inst.budget()
        )));
    }
    let rest = inst
        .graph()
        .remove_vertices(&added)
        .map_err(|e| EngineError::UnsoundSolution(e.to_string()))?;
    if !is_p5_free(&rest) {
        return Err(EngineError::UnsoundSolution(format!("a P5 survives deleting {added}")));
    }
    Ok(())
}

fn search<O: SearchObserver>(
    mut inst: BipartitionInstance,
    mut depth: usize,
    observer: &mut O,
    options: EngineOptions,
) -> Result<Option<VertexSet>, EngineError> {
    loop {
        let (rule, decision) = select_rule(&inst)?;
        observer.node_entered(rule, inst.budget(), depth);
        if options.check_invariants {
            audit(&inst, rule)?;
        }
        match decision {
            RuleDecision::Halt { answer } => {
                observer.leaf_reached(answer.is_some());
                return Ok(answer);
            }
            RuleDecision::Reduce { remove, delete } => {
                if remove.is_empty() && delete.is_empty() {
                    return Err(EngineError::InvariantViolation(format!("{rule} reduced nothing")));
                }
                inst = inst.remove(&remove)?.delete(&delete)?;
                depth += 1;
            }
            RuleDecision::Branch { branches } => {
                if let Some(bad) = branches.iter().find(|b| b.is_empty() || !b.is_subset(inst.blue())) {
                    return Err(EngineError::InvariantViolation(format!(
                        "{rule} branches on {bad}, which is empty or not blue"
                    )));
                }
                let affordable: Vec<VertexSet> = branches
                    .into_iter()
                    .filter(|b| b.len() as i64 <= inst.budget())
                    .collect();
                if affordable.is_empty() {
                    observer.leaf_reached(false);
                    return Ok(None);
                }
                for b in &affordable {
                    if let Some(f) = search(inst.delete(b)?, depth + 1, observer, options)? {
                        return Ok(Some(f));
                    }
                }
                return Ok(None);
            }
        }
    }
}

fn audit(inst: &BipartitionInstance, fired: RuleId) -> Result<(), EngineError> {
    let all = applicable_rules(inst)?;
    if all.first() != Some(&fired) {
        return Err(EngineError::InvariantViolation(format!(
            "{fired} fired but the applicable rules are {all:?}"
        )));
    }
    if fired > RuleId::R2 {
        check_preprocessed(inst)?;
    }
    Ok(())
}
