//! `sssp` — run, verify and demonstrate floating point shortest-path
//! solvers built on monotone integer priority queues.

mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{GraphSummary, RunReport, SolverReport, FORMAT_VERSION};
use sssp_core::{
    adversarial_zero_delta_run, bellman_ford_oracle, build_ladder, check_delta_po, check_fo,
    dijkstra_float_via_int, dijkstra_standard, generate_random, LadderParams, Graph, GraphError,
    QueueKind, SolverError, SsspResult,
};

// exit codes: 0 ok, 2 usage (also clap's), 3 i/o, 4 zero-delta boundary,
// 5 verification failure, 6 failed demonstration
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_ZERO_DELTA: u8 = 4;
pub(crate) const EXIT_VERIFY: u8 = 5;
const EXIT_DEMO: u8 = 6;

pub(crate) struct CmdError {
    code: u8,
    msg: String,
}

impl CmdError {
    pub(crate) fn new(code: u8, msg: impl Into<String>) -> Self {
        CmdError {
            code,
            msg: msg.into(),
        }
    }
}

impl From<GraphError> for CmdError {
    fn from(e: GraphError) -> Self {
        let code = match e {
            GraphError::Io(_) => EXIT_IO,
            _ => EXIT_USAGE,
        };
        CmdError::new(code, e.to_string())
    }
}

impl From<SolverError> for CmdError {
    fn from(e: SolverError) -> Self {
        let code = match e {
            SolverError::ZeroDeltaRefused => EXIT_ZERO_DELTA,
            _ => EXIT_USAGE,
        };
        CmdError::new(code, e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "sssp", version, about = "Floating point SSSP over integer priority queues")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random graph and write it in DIMACS format
    Gen(GenArgs),
    /// Solve a graph with the requested queues and report results
    Run(RunArgs),
    /// Randomized batch verification against the oracle
    Verify(verify::VerifyArgs),
    /// Demonstrate the zero-edge failure of the integer-queue construction
    Counterexample(CounterexampleArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Minimum edge weight (strictly positive)
    #[arg(long)]
    delta: f64,
    /// Maximum edge weight
    #[arg(long)]
    cmax: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    /// DIMACS .gr file to solve
    #[arg(long, conflicts_with = "gen")]
    file: Option<PathBuf>,
    /// Generator spec, e.g. n=100,m=500,delta=0.01,cmax=10,seed=1
    #[arg(long)]
    gen: Option<String>,
    #[arg(long, default_value_t = 0)]
    source: usize,
    /// Comma-separated queue list: binheap, dial, radix, twolevel:B=16
    #[arg(long, default_value = "binheap,dial,radix,twolevel:B=16")]
    queues: String,
    /// Report path; stdout when omitted
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct CounterexampleArgs {
    /// Ladder size (>= 3)
    #[arg(long, default_value_t = 6)]
    n: usize,
    /// Span of the solid-edge weights
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    /// Surrogate delta forced on the adapter
    #[arg(long, default_value_t = 0.2)]
    surrogate: f64,
}

fn parse_queue_spec(spec: &str) -> Result<(String, QueueKind), CmdError> {
    let spec = spec.trim();
    match spec {
        "binheap" => Ok(("binheap".into(), QueueKind::BinaryHeapFloat)),
        "dial" => Ok(("dial".into(), QueueKind::DialViaAdapter)),
        "radix" => Ok(("radix".into(), QueueKind::RadixViaAdapter)),
        _ => {
            if let Some(rest) = spec.strip_prefix("twolevel:B=") {
                let b: u64 = rest.parse().map_err(|_| {
                    CmdError::new(EXIT_USAGE, format!("bad bucket width in `{spec}`"))
                })?;
                Ok((spec.to_string(), QueueKind::TwoLevelViaAdapter { b }))
            } else {
                Err(CmdError::new(EXIT_USAGE, format!("unknown queue `{spec}`")))
            }
        }
    }
}

fn parse_gen_spec(spec: &str) -> Result<Graph, CmdError> {
    let mut n = None;
    let mut m = None;
    let mut delta = None;
    let mut cmax = None;
    let mut seed = 0u64;
    for part in spec.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| CmdError::new(EXIT_USAGE, format!("bad generator field `{part}`")))?;
        let bad = || CmdError::new(EXIT_USAGE, format!("bad value in `{part}`"));
        match key.trim() {
            "n" => n = Some(value.parse().map_err(|_| bad())?),
            "m" => m = Some(value.parse().map_err(|_| bad())?),
            "delta" => delta = Some(value.parse().map_err(|_| bad())?),
            "cmax" => cmax = Some(value.parse().map_err(|_| bad())?),
            "seed" => seed = value.parse().map_err(|_| bad())?,
            other => {
                return Err(CmdError::new(
                    EXIT_USAGE,
                    format!("unknown generator field `{other}`"),
                ))
            }
        }
    }
    let missing = |name: &str| CmdError::new(EXIT_USAGE, format!("generator spec missing `{name}`"));
    Ok(generate_random(
        n.ok_or_else(|| missing("n"))?,
        m.ok_or_else(|| missing("m"))?,
        delta.ok_or_else(|| missing("delta"))?,
        cmax.ok_or_else(|| missing("cmax"))?,
        seed,
    )?)
}

fn max_rel_error(result: &SsspResult, oracle: &SsspResult) -> f64 {
    result
        .dist
        .iter()
        .zip(&oracle.dist)
        .map(|(&a, &b)| {
            if a == b {
                0.0
            } else if !a.is_finite() || !b.is_finite() {
                f64::INFINITY
            } else {
                (a - b).abs() / a.abs().max(b.abs()).max(1.0)
            }
        })
        .fold(0.0, f64::max)
}

fn cmd_gen(args: GenArgs) -> Result<(), CmdError> {
    let g = generate_random(args.n, args.m, args.delta, args.cmax, args.seed)?;
    match args.out {
        Some(path) => g.write_dimacs(&path)?,
        None => print!("{}", g.to_dimacs()),
    }
    Ok(())
}

fn graph_summary(g: &Graph) -> GraphSummary {
    let (lo, hi) = match g.min_max_edge_weight() {
        Ok(pair) => (Some(pair.0), Some(pair.1)),
        Err(_) => (None, None),
    };
    GraphSummary {
        nodes: g.node_count(),
        edges: g.edge_count(),
        min_weight: lo,
        max_weight: hi,
        weight_ratio: lo.zip(hi).map(|(lo, hi)| hi / lo),
        variant: g.classify(),
    }
}

fn cmd_run(args: RunArgs) -> Result<(), CmdError> {
    let graph = match (&args.file, &args.gen) {
        (Some(path), None) => Graph::load_dimacs(path)?,
        (None, Some(spec)) => parse_gen_spec(spec)?,
        _ => {
            return Err(CmdError::new(
                EXIT_USAGE,
                "exactly one of --file and --gen is required",
            ))
        }
    };
    let oracle = bellman_ford_oracle(&graph, args.source)?;
    let true_delta = graph.min_weight();
    let mut solvers = Vec::new();
    for spec in args.queues.split(',') {
        let (name, kind) = parse_queue_spec(spec)?;
        let started = Instant::now();
        let (result, delta, stats) = if kind.uses_adapter() {
            let run = dijkstra_float_via_int(&graph, args.source, kind, None)?;
            (run.result, Some(run.delta), Some(run.queue_stats))
        } else {
            (dijkstra_standard(&graph, args.source)?, None, None)
        };
        let wall_time_ns = started.elapsed().as_nanos();
        let fo = check_fo(&result.trace);
        let delta_po = true_delta
            .filter(|&d| d > 0.0)
            .map(|d| check_delta_po(&result.trace, d));
        let err = max_rel_error(&result, &oracle);
        let order_ok = if kind.uses_adapter() {
            delta_po.unwrap_or(true)
        } else {
            fo
        };
        let pass = err <= 1e-9 && order_ok;
        solvers.push(SolverReport {
            queue: name,
            wall_time_ns,
            delta,
            queue_stats: stats,
            fo,
            delta_po,
            oracle_max_rel_error: err,
            pass,
        });
    }
    let report = RunReport {
        format_version: FORMAT_VERSION,
        graph: graph_summary(&graph),
        source: args.source,
        solvers,
    };
    let rendered = match args.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
    };
    match args.output {
        Some(path) => std::fs::write(path, rendered).map_err(|e| CmdError::new(EXIT_IO, e.to_string()))?,
        None => println!("{rendered}"),
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(CmdError::new(EXIT_VERIFY, "one or more solver checks failed"))
    }
}

fn cmd_counterexample(args: CounterexampleArgs) -> Result<(), CmdError> {
    let g = build_ladder(LadderParams {
        n: args.n,
        epsilon: args.epsilon,
        base: 1.0,
    })?;
    let outcome = adversarial_zero_delta_run(&g, 0, args.surrogate)?;
    let standard = dijkstra_standard(&g, 0)?;
    println!(
        "ladder n={}, epsilon={}, surrogate delta={} (adversarial schedule, largest float key first)",
        args.n, args.epsilon, args.surrogate
    );
    println!("{:>5} {:>14} {:>14} {:>14}  flag", "node", "oracle", "standard", "adversarial");
    for v in 0..g.node_count() {
        let flag = if outcome.mismatch.contains(&v) { "WRONG" } else { "" };
        println!(
            "{:>5} {:>14.8} {:>14.8} {:>14.8}  {}",
            v, outcome.oracle.dist[v], standard.dist[v], outcome.run.result.dist[v], flag
        );
    }
    let standard_exact = standard
        .dist
        .iter()
        .zip(&outcome.oracle.dist)
        .all(|(&a, &b)| a == b);
    if outcome.mismatch.is_empty() {
        return Err(CmdError::new(
            EXIT_DEMO,
            "demonstration failed: adversarial run unexpectedly matched the oracle",
        ));
    }
    if !standard_exact {
        return Err(CmdError::new(
            EXIT_DEMO,
            "demonstration failed: the standard solver disagreed with the oracle",
        ));
    }
    println!(
        "adversarial schedule settled {} node(s) with wrong distances; the full-ordering solver is exact",
        outcome.mismatch.len()
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Run(args) => cmd_run(args),
        Command::Verify(args) => verify::cmd_verify(args),
        Command::Counterexample(args) => cmd_counterexample(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError { code, msg }) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
