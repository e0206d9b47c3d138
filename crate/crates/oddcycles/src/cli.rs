//! Command-line front door: argument parsing, graph I/O, dispatch, JSON
//! reporting.
//!
//! Exit codes: 0 success or verified; 1 a checked claim or bound was
//! violated, or a probe produced findings under `--strict`; 2 usage or
//! input error.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num::BigUint;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::format::{parse_edge_list, parse_graph6, write_graph6};
use crate::graph::{BlowupSpec, Graph, OddGirth};
use crate::proof::verify_theorem;
use crate::search::{
    conjecture_probe, exhaustive_search, exhaustive_search_over, hill_climb, Constraint,
    CountMode, ProbeSpec,
};
use crate::ser;

#[derive(Parser, Debug)]
#[command(
    name = "oddcycles",
    version,
    about = "Count k-cycles, verify the (n/k)^k bound, construct blow-ups, search extremal graphs"
)]
struct Cli {
    /// Emit one JSON document on stdout instead of human-readable lines
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for counting (results are identical for any value)
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Exit nonzero when a conjecture probe reports findings
    #[arg(long, global = true)]
    strict: bool,

    /// Read graphs from this file instead of standard input
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Input format
    #[arg(long, global = true, value_enum, default_value_t = GraphFormat::G6)]
    format: GraphFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    /// graph6, one record per line
    G6,
    /// edge list: first line "n m", then m lines "u v"
    Edges,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count k-cycles (or induced k-cycles) per input graph
    Count {
        #[arg(long)]
        k: usize,
        /// Count chordless cycles only
        #[arg(long)]
        induced: bool,
    },
    /// Print the odd girth per input graph ("inf" for bipartite)
    OddGirth,
    /// Emit the graph6 record of a cycle blow-up
    Blowup {
        /// Pattern cycle length
        #[arg(long)]
        cycle: usize,
        /// Explicit blob sizes, comma separated
        #[arg(long, value_delimiter = ',', conflicts_with = "balanced")]
        blobs: Option<Vec<usize>>,
        /// Total order of an as-balanced-as-possible blow-up
        #[arg(long)]
        balanced: Option<usize>,
    },
    /// Run the full bound-verification pipeline per input graph
    Verify {
        #[arg(long)]
        k: usize,
        /// Keep per-cycle ledgers and bound chains in the report
        #[arg(long)]
        per_cycle: bool,
    },
    /// Search a constraint class for count-maximizing graphs
    Search {
        #[command(subcommand)]
        method: SearchCmd,
    },
    /// Probe a conjectured bound and report findings
    Conjecture {
        #[command(subcommand)]
        which: ConjectureCmd,
    },
}

#[derive(Subcommand, Debug)]
enum SearchCmd {
    /// Exact maximum over every isomorphism class (built-in generation, or
    /// a filtered external graph6 stream when --input is given)
    Exhaustive {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_constraint_name)]
        constraint: ConstraintName,
        #[arg(long)]
        induced: bool,
    },
    /// Seeded stochastic local search over edge toggles
    Hillclimb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_constraint_name)]
        constraint: ConstraintName,
        #[arg(long)]
        induced: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
}

#[derive(Subcommand, Debug)]
enum ConjectureCmd {
    /// Max induced C_k over triangle-free graphs on n vertices
    #[command(name = "1")]
    One {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Blow-up leading-coefficient fit for forbidden C_l, counted C_k
    #[command(name = "2")]
    Two {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 4)]
        t_max: usize,
    },
    /// Max induced C_k over the observation class on n vertices
    Observation {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ConstraintName {
    OddGirth,
    TriangleFree,
    Observation,
    Unconstrained,
}

fn parse_constraint_name(s: &str) -> std::result::Result<ConstraintName, String> {
    match s {
        "odd-girth" => Ok(ConstraintName::OddGirth),
        "triangle-free" => Ok(ConstraintName::TriangleFree),
        "observation" => Ok(ConstraintName::Observation),
        "none" | "unconstrained" => Ok(ConstraintName::Unconstrained),
        other => Err(format!(
            "unknown constraint {other:?} (expected odd-girth, triangle-free, observation or none)"
        )),
    }
}

impl ConstraintName {
    fn with_k(self, k: usize) -> Constraint {
        match self {
            ConstraintName::OddGirth => Constraint::OddGirthAtLeast(k),
            ConstraintName::TriangleFree => Constraint::TriangleFree,
            ConstraintName::Observation => Constraint::ObservationClass(k),
            ConstraintName::Unconstrained => Constraint::Unconstrained,
        }
    }
}

/// Parse arguments, dispatch, return the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    if cli.workers == 0 {
        eprintln!("error: --workers must be at least 1");
        return 2;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    tool: &'static str,
    version: &'static str,
    subcommand: &'static str,
    inputs_digest: String,
    workers: usize,
    results: T,
}

fn emit_json<T: Serialize>(
    subcommand: &'static str,
    digest_source: &str,
    workers: usize,
    results: T,
) -> Result<()> {
    let envelope = Envelope {
        tool: "oddcycles",
        version: env!("CARGO_PKG_VERSION"),
        subcommand,
        inputs_digest: digest(digest_source),
        workers,
        results,
    };
    let doc = serde_json::to_string_pretty(&envelope)
        .map_err(|e| Error::Io(format!("serializing report: {e}")))?;
    println!("{doc}");
    Ok(())
}

fn digest(source: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(source.as_bytes());
    let hex: String = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

fn read_raw_input(input: &Option<PathBuf>) -> Result<String> {
    match input {
        Some(path) if path.as_os_str() != "-" => Ok(std::fs::read_to_string(path)?),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn parse_graphs(raw: &str, format: GraphFormat) -> Result<Vec<Graph>> {
    match format {
        GraphFormat::G6 => raw
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(parse_graph6)
            .collect(),
        GraphFormat::Edges => Ok(vec![parse_edge_list(raw)?]),
    }
}

#[derive(Serialize)]
struct CountResult {
    index: usize,
    n: usize,
    graph6: String,
    k: usize,
    induced: bool,
    #[serde(serialize_with = "ser::biguint")]
    count: BigUint,
}

#[derive(Serialize)]
struct OddGirthResult {
    index: usize,
    n: usize,
    graph6: String,
    odd_girth: OddGirth,
}

#[derive(Serialize)]
struct BlowupResult {
    pattern_length: usize,
    blobs: Vec<usize>,
    n: usize,
    graph6: String,
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Count { k, induced } => {
            let raw = read_raw_input(&cli.input)?;
            let graphs = parse_graphs(&raw, cli.format)?;
            let mut results = Vec::new();
            for (index, g) in graphs.iter().enumerate() {
                let count = if *induced {
                    crate::cycles::count_induced_cycles(g, *k)?
                } else {
                    crate::cycles::count_cycles(g, *k)?
                };
                if !cli.json {
                    println!("{count}");
                }
                results.push(CountResult {
                    index,
                    n: g.n(),
                    graph6: write_graph6(g)?,
                    k: *k,
                    induced: *induced,
                    count,
                });
            }
            if cli.json {
                emit_json(
                    "count",
                    &format!("count k={k} induced={induced}\n{raw}"),
                    cli.workers,
                    results,
                )?;
            }
            Ok(0)
        }
        Command::OddGirth => {
            let raw = read_raw_input(&cli.input)?;
            let graphs = parse_graphs(&raw, cli.format)?;
            let mut results = Vec::new();
            for (index, g) in graphs.iter().enumerate() {
                let og = g.odd_girth();
                if !cli.json {
                    println!("{og}");
                }
                results.push(OddGirthResult {
                    index,
                    n: g.n(),
                    graph6: write_graph6(g)?,
                    odd_girth: og,
                });
            }
            if cli.json {
                emit_json("odd-girth", &format!("odd-girth\n{raw}"), cli.workers, results)?;
            }
            Ok(0)
        }
        Command::Blowup { cycle, blobs, balanced } => {
            let pattern = Graph::cycle(*cycle)?;
            let spec = match (blobs, balanced) {
                (Some(blobs), None) => BlowupSpec::new(pattern, blobs.clone())?,
                (None, Some(total)) => BlowupSpec::balanced(pattern, *total)?,
                _ => {
                    return Err(Error::Io(
                        "blowup needs exactly one of --blobs or --balanced".into(),
                    ))
                }
            };
            let g = spec.build()?;
            let record = write_graph6(&g)?;
            if cli.json {
                let result = BlowupResult {
                    pattern_length: *cycle,
                    blobs: spec.blobs.clone(),
                    n: g.n(),
                    graph6: record,
                };
                emit_json(
                    "blowup",
                    &format!("blowup cycle={cycle} blobs={:?}", spec.blobs),
                    cli.workers,
                    result,
                )?;
            } else {
                println!("{record}");
            }
            Ok(0)
        }
        Command::Verify { k, per_cycle } => {
            let raw = read_raw_input(&cli.input)?;
            let graphs = parse_graphs(&raw, cli.format)?;
            let mut results = Vec::new();
            let mut all_pass = true;
            for g in &graphs {
                let report = verify_theorem(g, *k, *per_cycle)?;
                all_pass &= report.verdict;
                if !cli.json {
                    print_verify_summary(&report);
                }
                results.push(report);
            }
            if cli.json {
                emit_json("verify", &format!("verify k={k}\n{raw}"), cli.workers, results)?;
            }
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Search { method } => {
            let report = match method {
                SearchCmd::Exhaustive { n, k, constraint, induced } => {
                    let constraint = constraint.with_k(*k);
                    let mode = if *induced { CountMode::InducedCycles } else { CountMode::Cycles };
                    if cli.input.is_some() {
                        let raw = read_raw_input(&cli.input)?;
                        let graphs = parse_graphs(&raw, cli.format)?;
                        exhaustive_search_over(*n, *k, constraint, mode, graphs)?
                    } else {
                        exhaustive_search(*n, *k, constraint, mode)?
                    }
                }
                SearchCmd::Hillclimb { n, k, constraint, induced, seed, budget } => {
                    let constraint = constraint.with_k(*k);
                    let mode = if *induced { CountMode::InducedCycles } else { CountMode::Cycles };
                    hill_climb(*n, *k, constraint, mode, *seed, *budget)?
                }
            };
            if cli.json {
                let line = format!(
                    "search n={} k={} constraint={} mode={:?} seed={:?} budget={:?}",
                    report.n, report.k, report.constraint, report.mode, report.seed, report.budget
                );
                emit_json("search", &line, cli.workers, &report)?;
            } else {
                println!(
                    "n={} k={} constraint={} best={} floor={} classes={} extremal={}",
                    report.n,
                    report.k,
                    report.constraint,
                    report.best_count,
                    report.bound_floor,
                    report.graphs_examined,
                    report.extremal_graphs.len()
                );
                for g6 in &report.extremal_graphs {
                    println!("{g6}");
                }
            }
            Ok(0)
        }
        Command::Conjecture { which } => {
            let spec = match which {
                ConjectureCmd::One { n, k } => ProbeSpec::Conjecture1 { n: *n, k: *k },
                ConjectureCmd::Two { k, l, t_max } => {
                    ProbeSpec::Conjecture2 { k: *k, l: *l, t_max: *t_max }
                }
                ConjectureCmd::Observation { n, k } => ProbeSpec::Observation { n: *n, k: *k },
            };
            let report = conjecture_probe(spec)?;
            let findings = report.findings().len();
            if cli.json {
                emit_json("conjecture", &format!("conjecture {spec:?}"), cli.workers, &report)?;
            } else {
                print_probe_summary(&report);
            }
            Ok(if cli.strict && findings > 0 { 1 } else { 0 })
        }
    }
}

fn print_verify_summary(report: &crate::proof::TheoremReport) {
    println!(
        "n={} k={} odd_girth={} cycles={}",
        report.n, report.k, report.odd_girth, report.cycle_count
    );
    if !report.precondition_ok {
        println!(
            "precondition failed: odd girth {} is below k={}",
            report.odd_girth, report.k
        );
    }
    if let Some(c1) = &report.claim1 {
        println!(
            "claim1 total={} holds={}",
            ser::rational_string(&c1.total),
            c1.holds
        );
    }
    if let Some(e) = &report.claim1_error {
        println!("claim1 error: {e}");
    }
    println!(
        "claim2_all={} chains_all={} bound_holds={} floor={} equality={}",
        report.claim2_all_hold,
        report.chains_all_ok,
        report.bound_holds,
        report.floor_bound,
        report.bound_equality
    );
    if let Some(b) = &report.blowup {
        println!(
            "extremal structure: blow-up of C{} with blobs {:?} (balanced={})",
            b.pattern_length, b.blob_sizes, b.balanced
        );
    }
    println!("verdict: {}", if report.verdict { "pass" } else { "fail" });
}

fn print_probe_summary(report: &crate::search::ProbeReport) {
    match report {
        crate::search::ProbeReport::Conjecture1(r) | crate::search::ProbeReport::Observation(r) => {
            println!(
                "n={} k={} classes={} max_induced={} floor={} holds={}",
                r.n, r.k, r.classes_examined, r.max_count, r.bound_floor, r.holds
            );
        }
        crate::search::ProbeReport::Conjecture2(r) => {
            println!(
                "k={} l={} binomial_sum={} walk_reference={}",
                r.k,
                r.l,
                r.coefficient.binomial_sum,
                ser::rational_string(&r.coefficient.walk_reference)
            );
            for row in &r.fit {
                println!(
                    "t={} n={} count={} ratio={}",
                    row.t,
                    row.n,
                    row.exact_count,
                    ser::rational_string(&row.ratio)
                );
            }
            println!("{}", r.note);
        }
    }
    for finding in report.findings() {
        println!("finding: {finding}");
    }
}
