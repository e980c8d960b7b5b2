//! The `cactus` command line.

pub mod format;

use std::collections::BTreeSet;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::compression::Compressor;
use crate::generator::{gen_class_graph, plant, GenConfig};
use crate::graph::VertexId;
use crate::measure::{branching_factor_root, AuditRecord, JsonLinesSink, MeasureParams};
use crate::oracle::{min_deletion_set_with_limit, DEFAULT_MAX_VERTICES};
use crate::recognizer::ClassMode;
use crate::solution::Solution;
use format::{parse_graph, write_graph, GraphFile};

pub const ORACLE_CAP_ENV: &str = "CACTUS_ORACLE_CAP";

/// Exit status for a "yes" answer.
pub const EXIT_YES: u8 = 0;
/// Exit status for a well-formed "no" answer.
pub const EXIT_NO: u8 = 1;
/// Exit status for bad input or internal errors.
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cactus",
    version,
    about = "Cactus vertex deletion and even cycle transversal"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether at most K deletions suffice, or find the minimum with --min.
    Solve {
        file: PathBuf,
        #[arg(long, required_unless_present = "min")]
        k: Option<usize>,
        /// Search k = 0, 1, ... (up to --k if given).
        #[arg(long)]
        min: bool,
        /// Override the problem named in the file header.
        #[arg(long)]
        mode: Option<ClassMode>,
        /// Write one JSON audit record per rule application.
        #[arg(long)]
        audit: Option<PathBuf>,
        #[arg(long)]
        stats: bool,
        #[arg(long, default_value_t = MeasureParams::default().alpha)]
        alpha: f64,
        #[arg(long, default_value_t = MeasureParams::default().beta)]
        beta: f64,
        #[arg(long, default_value_t = MeasureParams::default().gamma)]
        gamma: f64,
    },
    /// Exhaustive minimum deletion set, for small graphs.
    Oracle {
        file: PathBuf,
        /// Largest set size to try; defaults to $CACTUS_ORACLE_CAP, then n.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        #[arg(long)]
        mode: Option<ClassMode>,
    },
    /// Check a deletion set given as JSON with a `solution` or `witness` array.
    Verify {
        file: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        mode: Option<ClassMode>,
    },
    /// Generate a class graph, optionally with planted extra vertices.
    Gen {
        #[arg(long)]
        mode: ClassMode,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        plant: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Root of the branching polynomial for a vector of measure drops.
    Root {
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        factors: Vec<f64>,
    },
    /// Check every record of an audit log against its bound.
    AuditCheck { path: PathBuf },
}

fn load(path: &Path, mode: Option<ClassMode>) -> anyhow::Result<GraphFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut file = parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
    match (file.mode, mode) {
        (ClassMode::Cactus, Some(ClassMode::OddCactus)) => {
            bail!(
                "{} is a cvd file and carries no edge weights",
                path.display()
            )
        }
        (_, Some(m)) => file.mode = m,
        _ => {}
    }
    Ok(file)
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string(value).expect("json output"));
}

pub fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Solve {
            file,
            k,
            min,
            mode,
            audit,
            stats,
            alpha,
            beta,
            gamma,
        } => {
            let gf = load(&file, mode)?;
            let params = MeasureParams::new(alpha, beta, gamma)?;
            let mut sink = match &audit {
                Some(p) => Some(JsonLinesSink::new(BufWriter::new(
                    fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
                ))),
                None => None,
            };
            let start = Instant::now();
            let (result, search) = {
                let mut solver = match sink.as_mut() {
                    Some(s) => Compressor::with_audit(params, s),
                    None => Compressor::new(params),
                };
                let result = if min {
                    solver.find_min(&gf.graph, gf.mode, k)?.map(|(_, s)| s)
                } else {
                    solver.solve(&gf.graph, k.expect("clap enforces --k"), gf.mode)?
                };
                (result, solver.stats())
            };
            let elapsed = start.elapsed();
            if let Some(s) = sink {
                s.finish().context("writing audit log")?;
            }
            if let Some(sol) = &result {
                if !sol.verify(&gf.graph, gf.mode)?.member {
                    bail!("internal error: solution failed verification");
                }
            }
            let k_out = match (&result, k) {
                (Some(s), _) if min => s.len(),
                (_, Some(k)) => k,
                (None, None) => gf.graph.vertex_count(),
                (Some(s), None) => s.len(),
            };
            print_json(&json!({
                "feasible": result.is_some(),
                "k": k_out,
                "solution": result.as_ref().map(|s| s.vertices.iter().collect::<Vec<_>>()),
                "nodes": search.nodes,
                "time_ms": elapsed.as_secs_f64() * 1e3,
            }));
            eprintln!(
                "{}: n={} m={} {} (k={}) in {:.1} ms, {} search nodes",
                gf.mode.problem_name(),
                gf.graph.vertex_count(),
                gf.graph.edge_count(),
                if result.is_some() {
                    "feasible"
                } else {
                    "infeasible"
                },
                k_out,
                elapsed.as_secs_f64() * 1e3,
                search.nodes
            );
            if stats {
                eprintln!(
                    "nodes={} branch_nodes={} reductions={}",
                    search.nodes, search.branch_nodes, search.reductions
                );
            }
            Ok(if result.is_some() { EXIT_YES } else { EXIT_NO })
        }
        Command::Oracle {
            file,
            cap,
            max_vertices,
            mode,
        } => {
            let gf = load(&file, mode)?;
            let cap = match cap {
                Some(c) => Some(c),
                None => match std::env::var(ORACLE_CAP_ENV) {
                    Ok(s) => Some(
                        s.trim()
                            .parse()
                            .with_context(|| format!("{ORACLE_CAP_ENV}={s} is not a number"))?,
                    ),
                    Err(_) => None,
                },
            };
            let r = min_deletion_set_with_limit(&gf.graph, gf.mode, cap, max_vertices)?;
            print_json(&json!({
                "min_size": r.min_size,
                "witness": r.min_size.map(|_| r.witness.iter().collect::<Vec<_>>()),
            }));
            Ok(if r.min_size.is_some() {
                EXIT_YES
            } else {
                EXIT_NO
            })
        }
        Command::Verify {
            file,
            solution,
            mode,
        } => {
            let gf = load(&file, mode)?;
            let text = fs::read_to_string(&solution)
                .with_context(|| format!("reading {}", solution.display()))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", solution.display()))?;
            let list = value
                .get("solution")
                .or_else(|| value.get("witness"))
                .context("expected a `solution` or `witness` array")?;
            let vertices: BTreeSet<VertexId> = serde_json::from_value(list.clone())
                .context("`solution` must be an array of vertex labels")?;
            let verdict = Solution::new(vertices).verify(&gf.graph, gf.mode)?;
            print_json(&json!({
                "valid": verdict.member,
                "violating_block": verdict.witness,
            }));
            Ok(if verdict.member { EXIT_YES } else { EXIT_NO })
        }
        Command::Gen {
            mode,
            n,
            plant: r,
            seed,
            out,
        } => {
            let cfg = GenConfig::new(seed, n, mode);
            let base = gen_class_graph(&cfg)?;
            let mut comments = vec![format!("gen mode={mode} n={n} plant={r} seed={seed}")];
            let graph = if r > 0 {
                let (g, planted) = plant(&base, r, &cfg)?;
                let ids: Vec<String> = planted.iter().map(|v| v.to_string()).collect();
                comments.push(format!("planted {}", ids.join(" ")));
                g
            } else {
                base
            };
            let text = write_graph(&GraphFile {
                mode,
                graph,
                comments,
            })?;
            match out {
                Some(p) => {
                    fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?
                }
                None => print!("{text}"),
            }
            Ok(EXIT_YES)
        }
        Command::Root { factors } => {
            println!("{:.6}", branching_factor_root(&factors)?);
            Ok(EXIT_YES)
        }
        Command::AuditCheck { path } => {
            let f = fs::File::open(&path).with_context(|| format!("opening {}", path.display()))?;
            let mut records = 0u64;
            let mut violations = 0u64;
            let mut branch_nodes = 0u64;
            for (i, line) in BufReader::new(f).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: AuditRecord = serde_json::from_str(&line).with_context(|| {
                    format!("{}:{}: malformed audit record", path.display(), i + 1)
                })?;
                records += 1;
                if rec.rule.is_branching() && rec.child_index == 0 {
                    branch_nodes += 1;
                }
                if !rec.meets_bound() {
                    violations += 1;
                    eprintln!(
                        "line {}: {} child {} dropped {:.6}, bound {:.6}",
                        i + 1,
                        rec.rule.as_str(),
                        rec.child_index,
                        rec.drop(),
                        rec.bound
                    );
                }
            }
            print_json(&json!({
                "records": records,
                "branch_nodes": branch_nodes,
                "violations": violations,
            }));
            Ok(if violations == 0 { EXIT_YES } else { EXIT_NO })
        }
    }
}
