//! Exact solvers for 5-Path Vertex Cover: delete at most `k` vertices so that
//! no path on five vertices remains.
//!
//! [`iterative::solve_5pvc`] is the main entry point. It grows the graph one
//! vertex at a time and shrinks oversized solutions with the rule-driven
//! search in [`compression`]. [`oracles`] holds the independent baselines
//! used to cross-check it.

pub mod branching;
pub mod compression;
pub mod generate;
pub mod graph;
pub mod io;
pub mod iterative;
pub mod oracles;
pub mod p5;

pub use graph::{Graph, GraphError, VertexId, VertexSet};
