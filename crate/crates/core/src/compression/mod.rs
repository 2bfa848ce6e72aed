//! The disjoint compression routine: a red/blue bipartitioned graph where only
//! blue vertices may be deleted, solved by an ordered list of reduction and
//! branching rules.

mod instance;
mod rules;
mod select;
mod solve;

use thiserror::Error;

pub use instance::{BipartitionInstance, InstanceError, RuleDecision};
pub use rules::{RuleId, RuleKind, UnknownRule};
pub use select::{
    applicable_rules, check_preprocessed, distar_rules, four_cycle_rules, preprocessing_rules, select_rule,
    small_component_rules, star_rules,
};
pub use solve::{disjoint_r, disjoint_r_with, EngineOptions, SearchObserver, SolveStats};

use crate::graph::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("no rule applies (budget {budget}, {vertices} vertices left)")]
    NoRuleApplicable { budget: i64, vertices: usize },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("unsound solution: {0}")]
    UnsoundSolution(String),
}

impl From<crate::graph::GraphError> for EngineError {
    fn from(e: crate::graph::GraphError) -> Self {
        EngineError::Instance(e.into())
    }
}

/// True iff `x` is blue, has no red neighbour, and has exactly one blue
/// neighbour outside itself. Such a set never needs to be touched by a
/// solution: its single outside neighbour can stand in for it.
pub fn is_prunable(inst: &BipartitionInstance, x: &VertexSet) -> bool {
    if x.is_empty() || !x.is_subset(inst.blue()) {
        return false;
    }
    let nx = inst.graph().set_neighborhood(x);
    nx.is_disjoint(inst.red()) && nx.intersection(inst.blue()).len() == 1
}

#[cfg(test)]
mod tests;
