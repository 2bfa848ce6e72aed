//! Plain-text graph formats.
//!
//! Edge list: the first non-comment line is `n m`, followed by `m` lines
//! `u v` with 0-based ids. DIMACS: a `p edge n m` header and `e u v` lines
//! with 1-based ids. `#` (edge list) and `c` (DIMACS) start comments.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input: no header line")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: malformed edge {text:?}")]
    BadEdge { line: usize, text: String },
    #[error("line {line}: {error}")]
    Graph { line: usize, error: GraphError },
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
}

/// DIMACS if the first meaningful line starts with `p` or `c`, else edge list.
pub fn detect_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with('p') || l.starts_with("c ") || l == "c" => Format::Dimacs,
        _ => Format::EdgeList,
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    match detect_format(text) {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn numbers<const N: usize>(fields: &[&str]) -> Option<[usize; N]> {
    if fields.len() != N {
        return None;
    }
    let mut out = [0; N];
    for (o, f) in out.iter_mut().zip(fields) {
        *o = f.parse().ok()?;
    }
    Some(out)
}

fn check_edge(line: usize, n: usize, u: VertexId, v: VertexId) -> Result<(VertexId, VertexId), ParseError> {
    for id in [u, v] {
        if id >= n {
            return Err(ParseError::Graph {
                line,
                error: GraphError::OutOfRange { id, n },
            });
        }
    }
    if u == v {
        return Err(ParseError::Graph {
            line,
            error: GraphError::SelfLoop(u),
        });
    }
    Ok((u, v))
}

fn finish(n: usize, expected: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Graph, ParseError> {
    if edges.len() != expected {
        return Err(ParseError::EdgeCount {
            expected,
            found: edges.len(),
        });
    }
    Graph::new(n, &edges).map_err(|error| ParseError::Graph { line: 0, error })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match header {
            None => {
                let [n, m] = numbers(&fields).ok_or_else(|| ParseError::BadHeader {
                    line,
                    text: content.to_string(),
                })?;
                header = Some((n, m));
            }
            Some((n, _)) => {
                let [u, v] = numbers(&fields).ok_or_else(|| ParseError::BadEdge {
                    line,
                    text: content.to_string(),
                })?;
                edges.push(check_edge(line, n, u, v)?);
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    finish(n, m, edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields.first().copied() {
            None | Some("c") => continue,
            Some("p") if header.is_none() => {
                let bad = || ParseError::BadHeader {
                    line,
                    text: content.to_string(),
                };
                if fields.get(1) != Some(&"edge") && fields.get(1) != Some(&"col") {
                    return Err(bad());
                }
                let [n, m] = numbers(&fields[2..]).ok_or_else(bad)?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                let bad = || ParseError::BadEdge {
                    line,
                    text: content.to_string(),
                };
                let [u, v] = numbers(&fields[1..]).ok_or_else(bad)?;
                if u == 0 || v == 0 {
                    return Err(bad());
                }
                edges.push(check_edge(line, n, u - 1, v - 1)?);
            }
            Some(_) if header.is_none() => {
                return Err(ParseError::BadHeader {
                    line,
                    text: content.to_string(),
                })
            }
            Some(_) => {
                return Err(ParseError::BadEdge {
                    line,
                    text: content.to_string(),
                })
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    finish(n, m, edges)
}

/// Edge list over the graph's id range. Removed vertices are written as
/// isolated.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.capacity(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}

pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.capacity(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String cannot fail");
    }
    out
}

pub fn emit(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => emit_edge_list(g),
        Format::Dimacs => emit_dimacs(g),
    }
}
