use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::p5::{find_p5, Path5};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("red and blue sets overlap on {0}")]
    Overlap(VertexSet),
    #[error("vertices {0} are alive but neither red nor blue")]
    Uncoloured(VertexSet),
    #[error("vertices {0} are coloured but not alive")]
    DeadColoured(VertexSet),
    #[error("red side contains the path {0}")]
    RedP5(Path5),
    #[error("blue side contains the path {0}")]
    BlueP5(Path5),
    #[error("partial solution {0} intersects the graph")]
    SolutionAlive(VertexSet),
    #[error("vertices {0} are not blue")]
    NotBlue(VertexSet),
}

/// A graph with a red/blue bipartition in which only blue vertices may be
/// deleted. Both colour classes induce P5-free graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitionInstance {
    graph: Graph,
    red: VertexSet,
    blue: VertexSet,
    partial_solution: VertexSet,
    budget: i64,
}

impl BipartitionInstance {
    pub fn new(
        graph: Graph,
        red: VertexSet,
        blue: VertexSet,
        partial_solution: VertexSet,
        budget: i64,
    ) -> Result<Self, InstanceError> {
        let overlap = red.intersection(&blue);
        if !overlap.is_empty() {
            return Err(InstanceError::Overlap(overlap));
        }
        let coloured = red.union(&blue);
        let dead: VertexSet = coloured.iter().filter(|&v| !graph.is_alive(v)).collect();
        if !dead.is_empty() {
            return Err(InstanceError::DeadColoured(dead));
        }
        let missing = graph.vertex_set().difference(&coloured);
        if !missing.is_empty() {
            return Err(InstanceError::Uncoloured(missing));
        }
        let alive_sol: VertexSet = partial_solution.iter().filter(|&v| graph.is_alive(v)).collect();
        if !alive_sol.is_empty() {
            return Err(InstanceError::SolutionAlive(alive_sol));
        }
        if let Some(p) = find_p5(&graph.induced(&red)) {
            return Err(InstanceError::RedP5(p));
        }
        if let Some(p) = find_p5(&graph.induced(&blue)) {
            return Err(InstanceError::BlueP5(p));
        }
        Ok(BipartitionInstance {
            graph,
            red,
            blue,
            partial_solution,
            budget,
        })
    }

    /// Instance with every vertex outside `red` coloured blue and an empty
    /// partial solution.
    pub fn with_red(graph: Graph, red: VertexSet, budget: i64) -> Result<Self, InstanceError> {
        let blue = graph.vertex_set().difference(&red);
        Self::new(graph, red, blue, VertexSet::new(), budget)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn red(&self) -> &VertexSet {
        &self.red
    }

    pub fn blue(&self) -> &VertexSet {
        &self.blue
    }

    pub fn partial_solution(&self) -> &VertexSet {
        &self.partial_solution
    }

    pub fn budget(&self) -> i64 {
        self.budget
    }

    /// Takes `x` out of the graph and adds it to the solution.
    pub fn delete(&self, x: &VertexSet) -> Result<Self, InstanceError> {
        let not_blue = x.difference(&self.blue);
        if !not_blue.is_empty() {
            return Err(InstanceError::NotBlue(not_blue));
        }
        Ok(BipartitionInstance {
            graph: self.graph.remove_vertices(x)?,
            red: self.red.clone(),
            blue: self.blue.difference(x),
            partial_solution: self.partial_solution.union(x),
            budget: self.budget - x.len() as i64,
        })
    }

    /// Takes `x` out of the graph without charging the budget.
    pub fn remove(&self, x: &VertexSet) -> Result<Self, InstanceError> {
        Ok(BipartitionInstance {
            graph: self.graph.remove_vertices(x)?,
            red: self.red.difference(x),
            blue: self.blue.difference(x),
            partial_solution: self.partial_solution.clone(),
            budget: self.budget,
        })
    }
}

/// Outcome of evaluating the rule list on an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleDecision {
    Halt { answer: Option<VertexSet> },
    Reduce { remove: VertexSet, delete: VertexSet },
    Branch { branches: Vec<VertexSet> },
}

impl RuleDecision {
    pub fn delete(v: crate::graph::VertexId) -> Self {
        RuleDecision::Reduce {
            remove: VertexSet::new(),
            delete: VertexSet::singleton(v),
        }
    }

    pub fn remove(v: crate::graph::VertexId) -> Self {
        RuleDecision::Reduce {
            remove: VertexSet::singleton(v),
            delete: VertexSet::new(),
        }
    }

    pub fn branch<I: IntoIterator<Item = VertexSet>>(branches: I) -> Self {
        RuleDecision::Branch {
            branches: branches.into_iter().collect(),
        }
    }

    /// Branch on single vertices, in the given order.
    pub fn branch_on(vs: &[crate::graph::VertexId]) -> Self {
        Self::branch(vs.iter().map(|&v| VertexSet::singleton(v)))
    }

    /// Sizes of the branch sets, if this is a branching decision.
    pub fn branch_vector(&self) -> Option<Vec<usize>> {
        match self {
            RuleDecision::Branch { branches } => Some(branches.iter().map(VertexSet::len).collect()),
            _ => None,
        }
    }
}
