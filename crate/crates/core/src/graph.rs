//! Simple undirected graphs with stable vertex identities.
//!
//! Vertices are dense ids in `[0, n)` fixed at construction. Removing vertices
//! marks them dead instead of renumbering, so a vertex keeps its id across every
//! subinstance produced during the search.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    OutOfRange { id: VertexId, n: usize },
    #[error("vertex {0} is not alive")]
    NotAlive(VertexId),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(VertexId),
}

/// An ordered set of vertex ids. Iteration is always ascending.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: VertexId) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.union(&other.0).copied().collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.0.difference(&other.0).copied().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.0.intersection(&other.0).copied().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn extend_from(&mut self, other: &VertexSet) {
        self.0.extend(other.iter());
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[VertexId; N]> for VertexSet {
    fn from(arr: [VertexId; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl Extend<VertexId> for VertexSet {
    fn extend<I: IntoIterator<Item = VertexId>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Simple undirected graph. Values are immutable once built; removals return a
/// new graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    /// Sorted neighbour lists, restricted to alive vertices.
    adj: Vec<Vec<VertexId>>,
    alive: Vec<bool>,
    alive_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges are collapsed.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::OutOfRange { id, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            adj,
            alive: vec![true; n],
            alive_count: n,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            alive: vec![true; n],
            alive_count: n,
        }
    }

    /// Number of vertex ids ever allocated (alive or not).
    pub fn capacity(&self) -> usize {
        self.adj.len()
    }

    pub fn alive_count(&self) -> usize {
        self.alive_count
    }

    pub fn is_alive(&self, v: VertexId) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter_map(|(v, &a)| a.then_some(v))
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Alive neighbours of `v`, ascending. Empty for dead or unknown ids.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        if self.is_alive(v) {
            &self.adj[v]
        } else {
            &[]
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.adj[v].len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    fn check_alive(&self, v: VertexId) -> Result<(), GraphError> {
        if v >= self.capacity() {
            Err(GraphError::OutOfRange {
                id: v,
                n: self.capacity(),
            })
        } else if !self.alive[v] {
            Err(GraphError::NotAlive(v))
        } else {
            Ok(())
        }
    }

    /// `G \ S`: the subgraph induced by the alive vertices outside `s`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        for v in s {
            self.check_alive(v)?;
        }
        Ok(self.without_unchecked(s))
    }

    pub fn remove_vertex(&self, v: VertexId) -> Result<Graph, GraphError> {
        self.remove_vertices(&VertexSet::singleton(v))
    }

    /// `G[S]` for `s` a subset of the alive vertices (other ids are ignored).
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let drop: VertexSet = self.vertices().filter(|&v| !s.contains(v)).collect();
        self.without_unchecked(&drop)
    }

    fn without_unchecked(&self, s: &VertexSet) -> Graph {
        if s.is_empty() {
            return self.clone();
        }
        let mut g = self.clone();
        for v in s {
            if g.alive[v] {
                g.alive[v] = false;
                g.alive_count -= 1;
                g.adj[v].clear();
            }
        }
        for u in 0..g.adj.len() {
            if g.alive[u] && g.adj[u].iter().any(|&x| s.contains(x)) {
                g.adj[u].retain(|&x| !s.contains(x));
            }
        }
        g
    }

    /// Open neighbourhood of a set: `N(X) \ X`.
    pub fn set_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in x {
            out.extend(self.neighbors(v).iter().copied().filter(|&u| !x.contains(u)));
        }
        out
    }

    /// Connected components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.capacity()];
        let mut comps = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        let comps = self.induced(s).connected_components();
        comps.len() == 1 && comps[0] == *s
    }

    /// Twins: `N(x) \ {y} = N(y) \ {x}`.
    pub fn are_twins(&self, x: VertexId, y: VertexId) -> Result<bool, GraphError> {
        self.check_alive(x)?;
        self.check_alive(y)?;
        if x == y {
            return Err(GraphError::SameVertex(x));
        }
        let nx = self.adj[x].iter().filter(|&&v| v != y);
        let ny = self.adj[y].iter().filter(|&&v| v != x);
        Ok(nx.eq(ny))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_set())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
