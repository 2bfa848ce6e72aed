//! Iterative compression for 5-Path Vertex Cover.
//!
//! Vertices are added one at a time in ascending id order. Whenever the
//! running solution reaches `k + 1` vertices it is compressed: for each split
//! of the solution into a kept part `X` and a replaced part `Y`, the disjoint
//! routine looks for at most `|Y| - 1` replacements outside `Y`.

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::compression::{
    disjoint_r_with, BipartitionInstance, EngineError, EngineOptions, SearchObserver, SolveStats,
};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::p5::{find_p5, is_p5_free};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("solution to compress has {got} vertices, expected {expected}")]
    WrongSize { expected: usize, got: usize },
    #[error("{0} is not a solution of the active graph")]
    NotASolution(VertexSet),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Shrinks a solution `f` of size `k + 1` to one of size at most `k`, or
/// returns `None` if `f` is already minimum.
pub fn compress(g_active: &Graph, f: &VertexSet, k: usize) -> Result<Option<VertexSet>, SolveError> {
    compress_with(g_active, f, k, &mut (), EngineOptions::default())
}

pub fn compress_with<O: SearchObserver>(
    g_active: &Graph,
    f: &VertexSet,
    k: usize,
    observer: &mut O,
    options: EngineOptions,
) -> Result<Option<VertexSet>, SolveError> {
    if f.len() != k + 1 {
        return Err(SolveError::WrongSize {
            expected: k + 1,
            got: f.len(),
        });
    }
    if !is_p5_free(&g_active.remove_vertices(f)?) {
        return Err(SolveError::NotASolution(f.clone()));
    }
    let members = f.to_vec();
    for size in 1..=members.len() {
        for y in members.iter().copied().combinations(size) {
            let y: VertexSet = y.into_iter().collect();
            if find_p5(&g_active.induced(&y)).is_some() {
                continue;
            }
            let x = f.difference(&y);
            let reduced = g_active.remove_vertices(&x)?;
            let inst = BipartitionInstance::with_red(reduced, y.clone(), y.len() as i64 - 1)
                .map_err(EngineError::from)?;
            if let Some(replacement) = disjoint_r_with(&inst, observer, options)? {
                return Ok(Some(x.union(&replacement)));
            }
        }
    }
    Ok(None)
}

/// A solution of size at most `k`, or `None` if there is none.
pub fn solve_5pvc(g: &Graph, k: usize) -> Result<Option<VertexSet>, SolveError> {
    solve_5pvc_with(g, k, &mut (), EngineOptions::default())
}

pub fn solve_5pvc_with<O: SearchObserver>(
    g: &Graph,
    k: usize,
    observer: &mut O,
    options: EngineOptions,
) -> Result<Option<VertexSet>, SolveError> {
    if is_p5_free(g) {
        return Ok(Some(VertexSet::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut active = VertexSet::new();
    let mut f = VertexSet::new();
    for v in g.vertices() {
        active.insert(v);
        f.insert(v);
        if f.len() == k + 1 {
            match compress_with(&g.induced(&active), &f, k, observer, options)? {
                Some(smaller) => f = smaller,
                None => return Ok(None),
            }
        }
    }
    Ok(Some(f))
}

/// Minimum solution size and a witness, by trying `k = 0, 1, 2, ...`.
pub fn min_5pvc(g: &Graph) -> Result<(usize, VertexSet), SolveError> {
    min_5pvc_with(g, &mut (), EngineOptions::default())
}

pub fn min_5pvc_with<O: SearchObserver>(
    g: &Graph,
    observer: &mut O,
    options: EngineOptions,
) -> Result<(usize, VertexSet), SolveError> {
    for k in 0..=g.alive_count() {
        if let Some(f) = solve_5pvc_with(g, k, observer, options)? {
            return Ok((k, f));
        }
    }
    unreachable!("deleting every vertex always leaves a P5-free graph")
}

/// Solution plus search-tree counters, aggregated over every disjoint-routine
/// call made while solving.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub solution: Option<VertexSet>,
    pub stats: SolveStats,
}

pub fn solve_report(g: &Graph, k: usize) -> Result<SolveReport, SolveError> {
    let mut stats = SolveStats::default();
    let solution = solve_5pvc_with(g, k, &mut stats, EngineOptions::default())?;
    Ok(SolveReport { solution, stats })
}
