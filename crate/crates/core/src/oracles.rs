//! Independent baselines: exhaustive minimum search, the plain five-way
//! branching solver, and solution checking.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::p5::{find_p5, is_p5_free, is_p5_free_excluding};

pub const BRUTE_FORCE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {0} vertices; exhaustive search is limited to {BRUTE_FORCE_LIMIT}, use the iterative-compression solver")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub min_size: usize,
    pub witness: VertexSet,
    pub subsets_examined: u64,
}

/// Minimum solution by trying all subsets, smallest first and in
/// lexicographic order within a size.
pub fn brute_force_min_pvc(g: &Graph) -> Result<OracleResult, OracleError> {
    let n = g.alive_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(OracleError::TooLarge(n));
    }
    let vs: Vec<_> = g.vertices().collect();
    let mut excluded = vec![false; g.capacity()];
    let mut examined = 0u64;
    for size in 0..=n {
        for subset in vs.iter().copied().combinations(size) {
            examined += 1;
            for &v in &subset {
                excluded[v] = true;
            }
            let ok = is_p5_free_excluding(g, &excluded);
            for &v in &subset {
                excluded[v] = false;
            }
            if ok {
                return Ok(OracleResult {
                    min_size: size,
                    witness: subset.into_iter().collect(),
                    subsets_examined: examined,
                });
            }
        }
    }
    unreachable!("the empty graph is P5-free")
}

/// Whether some blue subset of size at most `k` hits every P5.
pub fn exists_blue_solution(g: &Graph, blue: &VertexSet, k: i64) -> Option<VertexSet> {
    if k < 0 {
        return None;
    }
    let vs = blue.to_vec();
    let mut excluded = vec![false; g.capacity()];
    for size in 0..=(k as usize).min(vs.len()) {
        for subset in vs.iter().copied().combinations(size) {
            for &v in &subset {
                excluded[v] = true;
            }
            let ok = is_p5_free_excluding(g, &excluded);
            for &v in &subset {
                excluded[v] = false;
            }
            if ok {
                return Some(subset.into_iter().collect());
            }
        }
    }
    None
}

/// Counters for [`trivial_branching_counted`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TrivialStats {
    pub nodes: u64,
    pub leaves: u64,
}

/// Branch on each vertex of the lexicographically smallest P5.
pub fn trivial_branching(g: &Graph, k: usize) -> Option<VertexSet> {
    trivial_branching_counted(g, k, &mut TrivialStats::default())
}

pub fn trivial_branching_counted(g: &Graph, k: usize, stats: &mut TrivialStats) -> Option<VertexSet> {
    stats.nodes += 1;
    let Some(p) = find_p5(g) else {
        stats.leaves += 1;
        return Some(VertexSet::new());
    };
    if k == 0 {
        stats.leaves += 1;
        return None;
    }
    for &v in p.vertices() {
        let rest = g.remove_vertex(v).expect("path vertices are alive");
        if let Some(mut f) = trivial_branching_counted(&rest, k - 1, stats) {
            f.insert(v);
            return Some(f);
        }
    }
    None
}

/// `|f| <= k` and deleting `f` leaves no P5.
pub fn verify_solution(g: &Graph, f: &VertexSet, k: usize) -> Result<bool, OracleError> {
    let rest = g.remove_vertices(f)?;
    Ok(f.len() <= k && is_p5_free(&rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path};

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_min_pvc(&cycle(5)).unwrap().min_size, 1);
        assert_eq!(brute_force_min_pvc(&complete(5)).unwrap().min_size, 1);
        let k15 = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let r = brute_force_min_pvc(&k15).unwrap();
        assert_eq!((r.min_size, r.subsets_examined), (0, 1));
        assert!(matches!(brute_force_min_pvc(&path(17)), Err(OracleError::TooLarge(17))));
    }

    #[test]
    fn brute_force_witness_is_lexicographically_first() {
        // every single vertex of C5 works, so the first one is chosen
        assert_eq!(brute_force_min_pvc(&cycle(5)).unwrap().witness, VertexSet::from([0]));
    }

    #[test]
    fn trivial_examples() {
        assert_eq!(trivial_branching(&path(5), 1).map(|f| f.len()), Some(1));
        assert_eq!(trivial_branching(&path(4), 0), Some(VertexSet::new()));
        assert_eq!(trivial_branching(&path(5), 0), None);
    }

    #[test]
    fn verify_examples() {
        let p5 = path(5);
        assert!(verify_solution(&p5, &VertexSet::from([2]), 1).unwrap());
        assert!(!verify_solution(&p5, &VertexSet::new(), 0).unwrap());
        assert!(!verify_solution(&cycle(5), &VertexSet::from([0]), 0).unwrap());
        assert!(verify_solution(&p5, &VertexSet::from([9]), 1).is_err());
    }

    #[test]
    fn blue_search_respects_colours() {
        let p5 = path(5);
        assert_eq!(exists_blue_solution(&p5, &VertexSet::from([0, 4]), 1), Some(VertexSet::from([0])));
        assert_eq!(exists_blue_solution(&p5, &VertexSet::from([0, 4]), 0), None);
        assert_eq!(exists_blue_solution(&p5, &VertexSet::new(), 5), None);
    }
}
