use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use pvc5_core::branching::{factor_table, max_factor, verify_factor_table};
use pvc5_core::compression::{EngineOptions, RuleId, SolveStats};
use pvc5_core::generate::{cycle, gadget, gnp, path};
use pvc5_core::io::{emit, parse_graph, Format};
use pvc5_core::iterative::{min_5pvc_with, solve_5pvc_with};
use pvc5_core::oracles::{brute_force_min_pvc, trivial_branching_counted, verify_solution, TrivialStats};
use pvc5_core::{Graph, VertexSet};

#[derive(Parser)]
#[command(name = "pvc5", version, about = "Exact solver for 5-Path Vertex Cover")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    /// Iterative compression with the rule-based disjoint routine.
    Ic,
    /// Five-way branching on a P5.
    Trivial,
    /// Exhaustive subset search (at most 16 vertices).
    Bruteforce,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    EdgeList,
    Dimacs,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::EdgeList => Format::EdgeList,
            OutFormat::Dimacs => Format::Dimacs,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether at most K deletions make the graph P5-free.
    Solve {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "ic")]
        algo: Algo,
        /// Write a JSON run report here.
        #[arg(long)]
        stats: Option<PathBuf>,
        file: PathBuf,
    },
    /// Find a minimum solution.
    Min {
        #[arg(long, value_enum, default_value = "ic")]
        algo: Algo,
        #[arg(long)]
        stats: Option<PathBuf>,
        file: PathBuf,
    },
    /// Check a proposed solution.
    Verify {
        /// Comma-separated vertex ids.
        #[arg(long, allow_hyphen_values = true)]
        solution: String,
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
    /// Print a generated graph.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, value_enum, default_value = "edge-list", global = true)]
        format: OutFormat,
    },
    /// Print the branching-factor table.
    Factors {
        /// Exit nonzero unless every row reproduces its reference value.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Instance on which the given rule (e.g. R7.2.5) fires first. The red
    /// side and budget are written as comments.
    Gadget { rule: RuleId },
}

struct Run {
    solution: Option<VertexSet>,
    k: usize,
    nodes: u64,
    leaves: u64,
    per_rule: BTreeMap<RuleId, u64>,
    max_depth: u64,
}

impl Run {
    fn from_stats(solution: Option<VertexSet>, k: usize, s: SolveStats) -> Self {
        Run {
            solution,
            k,
            nodes: s.nodes,
            leaves: s.leaves,
            per_rule: s.per_rule,
            max_depth: s.max_depth,
        }
    }

    fn from_trivial(solution: Option<VertexSet>, k: usize, s: TrivialStats) -> Self {
        Run {
            solution,
            k,
            nodes: s.nodes,
            leaves: s.leaves,
            per_rule: BTreeMap::new(),
            max_depth: 0,
        }
    }
}

fn read_graph(file: &Path) -> Result<Graph> {
    let text = fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    parse_graph(&text).with_context(|| format!("cannot parse {}", file.display()))
}

fn solve(g: &Graph, k: usize, algo: Algo) -> Result<Run> {
    Ok(match algo {
        Algo::Ic => {
            let mut stats = SolveStats::default();
            let f = solve_5pvc_with(g, k, &mut stats, EngineOptions::default())?;
            Run::from_stats(f, k, stats)
        }
        Algo::Trivial => {
            let mut stats = TrivialStats::default();
            let f = trivial_branching_counted(g, k, &mut stats);
            Run::from_trivial(f, k, stats)
        }
        Algo::Bruteforce => {
            let r = brute_force_min_pvc(g)?;
            let f = (r.min_size <= k).then_some(r.witness);
            Run::from_trivial(
                f,
                k,
                TrivialStats {
                    nodes: r.subsets_examined,
                    leaves: r.subsets_examined,
                },
            )
        }
    })
}

fn minimum(g: &Graph, algo: Algo) -> Result<Run> {
    Ok(match algo {
        Algo::Ic => {
            let mut stats = SolveStats::default();
            let (k, f) = min_5pvc_with(g, &mut stats, EngineOptions::default())?;
            Run::from_stats(Some(f), k, stats)
        }
        Algo::Trivial => {
            let mut stats = TrivialStats::default();
            let (k, f) = (0..=g.alive_count())
                .find_map(|k| trivial_branching_counted(g, k, &mut stats).map(|f| (k, f)))
                .expect("deleting every vertex is a solution");
            Run::from_trivial(Some(f), k, stats)
        }
        Algo::Bruteforce => {
            let r = brute_force_min_pvc(g)?;
            Run::from_trivial(
                Some(r.witness),
                r.min_size,
                TrivialStats {
                    nodes: r.subsets_examined,
                    leaves: r.subsets_examined,
                },
            )
        }
    })
}

fn answer_line(f: Option<&VertexSet>) -> String {
    match f {
        Some(f) => {
            let ids: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            format!("YES {} {}", f.len(), ids.join(" ")).trim_end().to_string()
        }
        None => "NO".to_string(),
    }
}

fn report(g: &Graph, run: &Run, started: Instant, stats: Option<&Path>) -> Result<()> {
    if let Some(f) = &run.solution {
        if !verify_solution(g, f, run.k)? {
            bail!("internal error: solver returned {f}, which fails verification");
        }
    }
    println!("{}", answer_line(run.solution.as_ref()));
    if let Some(path) = stats {
        let wall_ms = started.elapsed().as_secs_f64() * 1000.0;
        let doc = json!({
            "answer": if run.solution.is_some() { "yes" } else { "no" },
            "solution": run.solution,
            "k": run.k,
            "nodes": run.nodes,
            "leaves": run.leaves,
            "per_rule": run.per_rule,
            "max_depth": run.max_depth,
            "wall_ms": wall_ms,
        });
        fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn parse_solution(s: &str) -> Result<VertexSet> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().with_context(|| format!("bad vertex id {t:?}")))
        .collect()
}

fn factors(check: bool) -> Result<bool> {
    println!("{:<8} {:<12} {:>10} {:>8} {:>7}", "rule", "vector", "computed", "table", "match");
    for e in factor_table() {
        println!(
            "{:<8} {:<12} {:>10.6} {:>8} {:>7}",
            e.rule.to_string(),
            e.vector.to_string(),
            e.computed_lambda,
            e.table_lambda,
            if e.matches() { "yes" } else { "NO" }
        );
    }
    println!("max {:.6}", max_factor());
    if check {
        if let Err(e) = verify_factor_table() {
            eprintln!("{e}");
            return Ok(false);
        }
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Solve { k, algo, stats, file } => {
            let g = read_graph(&file)?;
            let started = Instant::now();
            let r = solve(&g, k, algo)?;
            report(&g, &r, started, stats.as_deref())?;
        }
        Command::Min { algo, stats, file } => {
            let g = read_graph(&file)?;
            let started = Instant::now();
            let r = minimum(&g, algo)?;
            report(&g, &r, started, stats.as_deref())?;
        }
        Command::Verify { solution, k, file } => {
            let g = read_graph(&file)?;
            let f = parse_solution(&solution)?;
            let ok = verify_solution(&g, &f, k)?;
            println!("{}", answer_line(ok.then_some(&f)));
        }
        Command::Gen { kind, format } => {
            let format = Format::from(format);
            let text = match kind {
                GenKind::Gnp { n, p, seed } => emit(&gnp(n, p, seed)?, format),
                GenKind::Path { n } => emit(&path(n), format),
                GenKind::Cycle { n } => emit(&cycle(n), format),
                GenKind::Gadget { rule } => {
                    let gd = gadget(rule);
                    let (comment, base) = if format == Format::Dimacs { ("c", 1) } else { ("#", 0) };
                    let red: Vec<String> = gd.red.iter().map(|v| (v + base).to_string()).collect();
                    format!(
                        "{comment} rule {rule}\n{comment} red {}\n{comment} budget {}\n{}",
                        red.join(","),
                        gd.budget,
                        emit(&gd.graph, format)
                    )
                }
            };
            print!("{text}");
        }
        Command::Factors { check } => return factors(check),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
