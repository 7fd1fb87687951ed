//! `sdd` — compute variable symmetric division deg indices on graphs,
//! verify the classical bounds on them, and run random-graph ensemble
//! sweeps with reproducible seeds.
//!
//! Exit codes: 0 success; 1 usage, I/O or parse error; 2 bad command line
//! (from the argument parser); 3 edgeless input graph; 4 verification or
//! certification found violations.

mod grid;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use grid::parse_grid;
use sdd_core::bounds::{check_all, TheoremCheck};
use sdd_core::ensembles::{
    collapse, collapse_points_to_csv, default_replicas, fmt_f64, parse_sweep_csv, sweep,
    sweep_rows_to_csv, SweepModel, SweepRow, DEFAULT_SEED,
};
use sdd_core::enumerate::{
    certify, labeled_graphs_with_edges, random_labeled_graphs, CertifySummary,
};
use sdd_core::graph::{parse_edge_list, Graph};
use sdd_core::indices::{
    isd_a, isi, log_nk_star, m1_alpha, m2_alpha, sdd_alpha, Exponent, IndexKind, IndexResult,
};

const EXIT_ERROR: u8 = 1;
const EXIT_NO_EDGES: u8 = 3;
const EXIT_VIOLATIONS: u8 = 4;

/// Replica budget override when `--replicas` is absent.
const REPLICAS_ENV: &str = "SDD_REPLICAS";

#[derive(Parser)]
#[command(
    name = "sdd",
    version,
    about = "Degree-based graph indices: computation, bound verification, random-graph ensembles",
    after_help = "Exit codes: 0 ok, 1 error, 2 bad arguments, 3 edgeless graph, 4 violations found.\n\
                  Grids accept comma lists (0.5,1,2), linear ranges (0..4:0.5) and log ranges (log:1e-3..1:25)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute indices on an edge-list file
    Compute(ComputeArgs),
    /// Evaluate every applicable bound on a graph and report satisfaction
    Verify(VerifyArgs),
    /// Run a random-graph ensemble sweep over edge probabilities
    #[command(subcommand)]
    Sweep(SweepCmd),
    /// Merge sweep CSVs into collapsed (mean degree, alpha) points
    Collapse(CollapseArgs),
    /// Certify all bounds over exhaustively enumerated small graphs
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Args)]
struct IoArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path, or "-" for standard output
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Args)]
struct ComputeArgs {
    /// Edge-list file to read
    #[arg(long)]
    input: PathBuf,
    /// Comma list of indices: sdd, m1, m2, isd, isi, log_nk_star
    #[arg(long, default_value = "sdd")]
    index: String,
    /// Exponent grid for the exponent-carrying indices
    #[arg(
        long,
        visible_alias = "alpha",
        default_value = "1",
        allow_hyphen_values = true
    )]
    alphas: String,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Edge-list file to read
    #[arg(long)]
    input: PathBuf,
    /// Exponent grid (all entries must be positive)
    #[arg(long, visible_alias = "alpha", default_value = "1")]
    alphas: String,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Subcommand)]
enum SweepCmd {
    /// Erdos-Renyi model G(n, p)
    Er {
        /// Number of vertices
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: SweepArgs,
    },
    /// Bipartite model G(n1, n2, p)
    Br {
        /// Vertices in side one
        #[arg(long)]
        n1: usize,
        /// Vertices in side two
        #[arg(long)]
        n2: usize,
        #[command(flatten)]
        common: SweepArgs,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// Single edge probability (shorthand for a one-point grid)
    #[arg(long, conflicts_with = "p_grid")]
    p: Option<f64>,
    /// Edge-probability grid; defaults to 25 log-spaced points on [1e-3, 1]
    #[arg(long)]
    p_grid: Option<String>,
    /// Exponent grid
    #[arg(long, default_value = "0..4:0.5")]
    alphas: String,
    /// Replicas per (p, alpha) cell; defaults to SDD_REPLICAS or ceil(1e6/n)
    #[arg(long)]
    replicas: Option<usize>,
    /// Master seed (replica r draws from stream r of this seed)
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (output is identical for any value)
    #[arg(long)]
    threads: Option<usize>,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct CollapseArgs {
    /// Sweep CSV files to merge
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest vertex count to cover (exhaustive through 5, sampled at 6-7)
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Exponent grid (all entries must be positive)
    #[arg(long, default_value = "0.25,0.5,1,2,4")]
    alphas: String,
    /// Random graphs per order for orders 6 and 7
    #[arg(long, default_value_t = 250)]
    samples: usize,
    /// Seed for the sampled orders
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(flatten)]
    io: IoArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let edgeless = err
                .chain()
                .any(|cause| matches!(cause.downcast_ref(), Some(sdd_core::Error::NoEdges)));
            ExitCode::from(if edgeless { EXIT_NO_EDGES } else { EXIT_ERROR })
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(cmd) => cmd_sweep(cmd),
        Command::Collapse(args) => cmd_collapse(args),
        Command::Enumerate(args) => cmd_enumerate(args),
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let parsed =
        parse_edge_list(&text).with_context(|| format!("cannot parse {}", path.display()))?;
    Ok(parsed.graph)
}

fn parse_alphas(spec: &str) -> Result<Vec<Exponent>> {
    parse_grid(spec)?
        .into_iter()
        .map(|a| Exponent::new(a).map_err(Into::into))
        .collect()
}

fn write_output(out: &str, content: &str) -> Result<()> {
    if out == "-" {
        print!("{content}");
        Ok(())
    } else {
        fs::write(out, content).with_context(|| format!("cannot write {out}"))
    }
}

fn fmt_opt_f64(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

fn fmt_opt_bool(v: Option<bool>) -> String {
    v.map(|b| b.to_string()).unwrap_or_default()
}

// --- compute ----------------------------------------------------------------

fn parse_index_kinds(spec: &str) -> Result<Vec<IndexKind>> {
    spec.split(',')
        .map(|token| match token.trim().to_ascii_lowercase().as_str() {
            "sdd" => Ok(IndexKind::Sdd),
            "m1" => Ok(IndexKind::M1),
            "m2" => Ok(IndexKind::M2),
            "isd" => Ok(IndexKind::Isd),
            "isi" => Ok(IndexKind::Isi),
            "log_nk_star" | "lognk" => Ok(IndexKind::LogNkStar),
            other => bail!("unknown index {other:?} (expected sdd, m1, m2, isd, isi, log_nk_star)"),
        })
        .collect()
}

fn cmd_compute(args: ComputeArgs) -> Result<ExitCode> {
    let graph = load_graph(&args.input)?;
    let kinds = parse_index_kinds(&args.index)?;
    let alphas = parse_alphas(&args.alphas)?;

    let mut results: Vec<IndexResult> = Vec::new();
    for kind in kinds {
        match kind {
            IndexKind::Sdd => results.extend(alphas.iter().map(|&a| sdd_alpha(&graph, a))),
            IndexKind::M1 => {
                for &a in &alphas {
                    results.push(m1_alpha(&graph, a)?);
                }
            }
            IndexKind::M2 => results.extend(alphas.iter().map(|&a| m2_alpha(&graph, a))),
            IndexKind::Isd => results.extend(alphas.iter().map(|&a| isd_a(&graph, a))),
            IndexKind::Isi => results.push(isi(&graph)),
            IndexKind::LogNkStar => results.push(log_nk_star(&graph)),
        }
    }

    let content = match args.io.format {
        Format::Csv => {
            let mut out = String::from("index,alpha,value\n");
            for r in &results {
                out.push_str(&format!(
                    "{},{},{}\n",
                    r.kind,
                    fmt_opt_f64(r.alpha),
                    fmt_f64(r.value)
                ));
            }
            out
        }
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&results)?),
    };
    write_output(&args.io.out, &content)?;
    Ok(ExitCode::SUCCESS)
}

// --- verify -----------------------------------------------------------------

const VERIFY_CSV_HEADER: &str = "theorem,alpha,beta,status,lower,value,upper,satisfied,\
equality_lower,equality_upper,slack_lower,slack_upper,isolated_vertices,note";

fn verify_csv(checks: &[TheoremCheck]) -> String {
    let mut out = String::from(VERIFY_CSV_HEADER);
    out.push('\n');
    for check in checks {
        match check {
            TheoremCheck::Evaluated(r) => out.push_str(&format!(
                "{},{},{},evaluated,{},{},{},{},{},{},{},{},{},\n",
                r.theorem,
                fmt_f64(r.alpha),
                fmt_opt_f64(r.beta),
                fmt_opt_f64(r.lower),
                fmt_f64(r.value),
                fmt_opt_f64(r.upper),
                r.satisfied,
                fmt_opt_bool(r.equality_lower),
                fmt_opt_bool(r.equality_upper),
                fmt_opt_f64(r.slack_lower),
                fmt_opt_f64(r.slack_upper),
                r.isolated_count,
            )),
            TheoremCheck::Skipped {
                theorem,
                alpha,
                reason,
            } => out.push_str(&format!(
                "{},{},,skipped,,,,,,,,,,{}\n",
                theorem,
                fmt_opt_f64(*alpha),
                reason.replace(',', ";"),
            )),
        }
    }
    out
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let graph = load_graph(&args.input)?;
    let alphas = parse_alphas(&args.alphas)?;
    let checks = check_all(&graph, &alphas)?;

    let content = match args.io.format {
        Format::Csv => verify_csv(&checks),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&checks)?),
    };
    write_output(&args.io.out, &content)?;

    let all_satisfied = checks
        .iter()
        .filter_map(|c| c.report())
        .all(|r| r.satisfied);
    Ok(if all_satisfied {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATIONS)
    })
}

// --- sweep ------------------------------------------------------------------

fn resolve_replicas(flag: Option<usize>, order: usize) -> Result<usize> {
    if let Some(replicas) = flag {
        ensure!(replicas >= 1, "--replicas must be at least 1");
        return Ok(replicas);
    }
    if let Ok(raw) = std::env::var(REPLICAS_ENV) {
        let replicas: usize = raw
            .trim()
            .parse()
            .with_context(|| format!("invalid {REPLICAS_ENV} value {raw:?}"))?;
        ensure!(replicas >= 1, "{REPLICAS_ENV} must be at least 1");
        return Ok(replicas);
    }
    Ok(default_replicas(order))
}

fn cmd_sweep(cmd: SweepCmd) -> Result<ExitCode> {
    let (model, common) = match cmd {
        SweepCmd::Er { n, common } => (SweepModel::Er { n }, common),
        SweepCmd::Br { n1, n2, common } => (SweepModel::Bipartite { n1, n2 }, common),
    };
    let order = match model {
        SweepModel::Er { n } => n,
        SweepModel::Bipartite { n1, n2 } => n1 + n2,
    };

    let p_grid = match (&common.p, &common.p_grid) {
        (Some(p), _) => vec![*p],
        (None, Some(spec)) => parse_grid(spec)?,
        (None, None) => parse_grid("log:1e-3..1:25")?,
    };
    let alphas = parse_alphas(&common.alphas)?;
    let replicas = resolve_replicas(common.replicas, order)?;

    let run = || sweep(model, &p_grid, &alphas, replicas, common.seed);
    let rows: Vec<SweepRow> = match common.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .context("cannot build thread pool")?
            .install(run)?,
        None => run()?,
    };

    let content = match common.io.format {
        Format::Csv => sweep_rows_to_csv(&rows),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows)?),
    };
    write_output(&common.io.out, &content)?;
    Ok(ExitCode::SUCCESS)
}

// --- collapse ---------------------------------------------------------------

fn cmd_collapse(args: CollapseArgs) -> Result<ExitCode> {
    let mut rows: Vec<SweepRow> = Vec::new();
    for path in &args.inputs {
        let text =
            fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let parsed =
            parse_sweep_csv(&text).with_context(|| format!("cannot parse {}", path.display()))?;
        rows.extend(parsed);
    }
    let points = collapse(&rows);
    let content = match args.io.format {
        Format::Csv => collapse_points_to_csv(&points),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&points)?),
    };
    write_output(&args.io.out, &content)?;
    Ok(ExitCode::SUCCESS)
}

// --- enumerate --------------------------------------------------------------

fn merge_summary(total: &mut CertifySummary, part: CertifySummary) {
    total.graphs += part.graphs;
    total.evaluated += part.evaluated;
    total.skipped += part.skipped;
    total.bound_violations += part.bound_violations;
    total.equality_mismatches += part.equality_mismatches;
    total.exactness_failures += part.exactness_failures;
    total.parity_violations += part.parity_violations;
    total.examples.extend(part.examples);
    total.examples.truncate(16);
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode> {
    ensure!(
        (2..=7).contains(&args.max_n),
        "--max-n must be between 2 and 7, got {}",
        args.max_n
    );
    let alphas = parse_alphas(&args.alphas)?;

    let mut total = CertifySummary::default();
    for n in 2..=args.max_n.min(5) {
        merge_summary(&mut total, certify(labeled_graphs_with_edges(n), &alphas)?);
    }
    for n in 6..=args.max_n {
        let graphs = random_labeled_graphs(n, args.samples, args.seed);
        merge_summary(&mut total, certify(graphs, &alphas)?);
    }

    let content = match args.io.format {
        Format::Csv => format!(
            "metric,value\ngraphs,{}\nevaluated,{}\nskipped,{}\nbound_violations,{}\n\
             equality_mismatches,{}\nexactness_failures,{}\nparity_violations,{}\nviolations,{}\n",
            total.graphs,
            total.evaluated,
            total.skipped,
            total.bound_violations,
            total.equality_mismatches,
            total.exactness_failures,
            total.parity_violations,
            total.total_violations(),
        ),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&total)?),
    };
    write_output(&args.io.out, &content)?;

    Ok(if total.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATIONS)
    })
}
