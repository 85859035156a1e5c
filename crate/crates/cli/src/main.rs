use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use corona_antimagic::bounds::{corona_lower_bound, odd_cycle_threshold_table, threshold_table_csv};
use corona_antimagic::constructions::{construct, ConstructionError};
use corona_antimagic::dot::to_dot;
use corona_antimagic::interchange::{GraphDocument, LabelingDocument};
use corona_antimagic::oracle::{self, OracleError, SearchBudget};
use corona_antimagic::{corona, verify, CoronaSpec, Family};

mod sweep;

/// Exit codes other than 0 (success) and 1 (usage or I/O error).
pub const EXIT_UNSUPPORTED: u8 = 2;
pub const EXIT_VERIFICATION: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;
pub const EXIT_INCONSISTENT: u8 = 5;

/// An error that maps to a specific exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub reason: &'static str,
    pub message: String,
}

impl Failure {
    fn new(code: u8, reason: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code,
            reason,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.reason, self.message)
    }
}

impl std::error::Error for Failure {}

#[derive(Parser)]
#[command(name = "corona-la", version, about = "Local antimagic labelings of corona products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a verified labeling for a corona product.
    Construct {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a labeling document (file or `-` for stdin).
    Verify {
        input: PathBuf,
    },
    /// Compute the exact local antimagic chromatic number by exhaustive search.
    Exact {
        #[command(flatten)]
        spec: OptionalSpecArgs,
        /// Graph document `{"vertex_count": .., "edges": [[u, v], ..]}` instead of a corona.
        #[arg(long, conflicts_with_all = ["family", "n", "m"])]
        graph: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Search even above --max-edges.
        #[arg(long)]
        force: bool,
    },
    /// Construct, verify and bound a range of instances.
    Sweep(sweep::SweepArgs),
    /// Print the odd-cycle threshold table as CSV.
    Table {
        #[arg(long, default_value_t = 15)]
        m_max: usize,
    },
    /// Print the known bounds for an instance.
    Bounds {
        #[command(flatten)]
        spec: SpecArgs,
    },
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long)]
    family: Family,
    #[arg(short = 'n')]
    n: usize,
    #[arg(short = 'm', default_value_t = 1)]
    m: usize,
}

impl SpecArgs {
    fn spec(&self) -> Result<CoronaSpec> {
        CoronaSpec::new(self.family, self.n, self.m)
            .map_err(|e| Failure::new(EXIT_UNSUPPORTED, "unsupported", e.to_string()).into())
    }
}

#[derive(Args)]
struct OptionalSpecArgs {
    #[arg(long, required_unless_present = "graph")]
    family: Option<Family>,
    #[arg(short = 'n', required_unless_present = "graph")]
    n: Option<usize>,
    #[arg(short = 'm')]
    m: Option<usize>,
}

#[derive(Args, Clone, Copy)]
pub struct BudgetArgs {
    /// 0 tries labels in increasing order; other values shuffle it.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    pub max_nodes: u64,
    #[arg(long, default_value_t = SearchBudget::default().max_edges)]
    pub max_edges: usize,
}

impl BudgetArgs {
    pub fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_edges: self.max_edges,
            max_nodes: self.max_nodes,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
pub fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            match e.downcast_ref::<Failure>() {
                Some(f) => {
                    eprintln!("error: {f}");
                    ExitCode::from(f.code)
                }
                None => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(1)
                }
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Construct { spec, format } => cmd_construct(spec.spec()?, format),
        Command::Verify { input } => cmd_verify(&input),
        Command::Exact {
            spec,
            graph,
            budget,
            force,
        } => {
            let mut budget = budget.budget();
            if force {
                budget.max_edges = usize::MAX;
            }
            match graph {
                Some(path) => cmd_exact_graph(&path, &budget),
                None => {
                    let (family, n) = (spec.family.expect("required"), spec.n.expect("required"));
                    let spec = SpecArgs {
                        family,
                        n,
                        m: spec.m.unwrap_or(1),
                    }
                    .spec()?;
                    cmd_exact(spec, &budget)
                }
            }
        }
        Command::Sweep(args) => sweep::run(args),
        Command::Table { m_max } => {
            emit(&threshold_table_csv(&odd_cycle_threshold_table(m_max)))?;
            Ok(0)
        }
        Command::Bounds { spec } => {
            let spec = spec.spec()?;
            let bounds = corona_lower_bound(&spec)
                .map_err(|e| Failure::new(EXIT_UNSUPPORTED, "unsupported", e.to_string()))?;
            emit(&format!("{}\n", serde_json::to_string_pretty(&bounds)?))?;
            Ok(0)
        }
    }
}

pub fn construction_failure(e: ConstructionError) -> Failure {
    match e {
        ConstructionError::Rejected { .. } => Failure::new(EXIT_VERIFICATION, "verification", e.to_string()),
        _ => Failure::new(EXIT_UNSUPPORTED, "unsupported", e.to_string()),
    }
}

fn cmd_construct(spec: CoronaSpec, format: Format) -> Result<u8> {
    let result = construct(spec).map_err(construction_failure)?;
    match format {
        Format::Json => emit(&format!("{}\n", result.document().to_json_pretty()))?,
        Format::Dot => {
            let g = corona(spec)?;
            emit(&to_dot(&g, Some(&result.labeling)))?;
        }
    }
    Ok(0)
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    spec: String,
    edges: usize,
    #[serde(flatten)]
    report: &'a corona_antimagic::VerificationReport,
}

fn cmd_verify(input: &Path) -> Result<u8> {
    let text = read_input(input)?;
    let doc = LabelingDocument::from_json(&text).with_context(|| format!("parsing {}", input.display()))?;
    let (g, labeling) = doc.to_labeling().with_context(|| format!("checking {}", input.display()))?;
    let report = verify(g.graph(), &labeling)?;

    eprintln!("{}: {} edges", g.spec(), g.graph().edge_count());
    if report.is_bijection {
        eprintln!("bijection: yes");
    } else {
        eprintln!("bijection: no (missing or repeated {:?})", report.duplicate_or_missing);
    }
    if report.conflicting_pairs.is_empty() {
        eprintln!("adjacent sums distinct: yes");
    } else {
        eprintln!("adjacent sums distinct: no {:?}", report.conflicting_pairs);
    }
    eprintln!("palette size: {}", report.palette_size);

    let out = VerifyOutput {
        spec: g.spec().to_string(),
        edges: g.graph().edge_count(),
        report: &report,
    };
    emit(&format!("{}\n", serde_json::to_string_pretty(&out)?))?;
    Ok(if report.is_local_antimagic { 0 } else { EXIT_VERIFICATION })
}

fn oracle_failure(e: OracleError) -> Failure {
    match e {
        OracleError::TooManyEdges { .. } | OracleError::BudgetExceeded(_) => {
            Failure::new(EXIT_BUDGET, "budget", e.to_string())
        }
        _ => Failure::new(EXIT_UNSUPPORTED, "unsupported", e.to_string()),
    }
}

#[derive(Serialize)]
struct ExactOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    spec: Option<String>,
    chi_la: usize,
    exhausted: bool,
    nodes_explored: u64,
    certificate: serde_json::Value,
}

fn cmd_exact(spec: CoronaSpec, budget: &SearchBudget) -> Result<u8> {
    let g = corona(spec)?;
    let r = oracle::exact_corona(&g, budget).map_err(oracle_failure)?;
    let doc = LabelingDocument::from_labeling(&g, &r.certificate);
    emit_exact(Some(spec.to_string()), &r, serde_json::to_value(doc)?)
}

fn cmd_exact_graph(path: &Path, budget: &SearchBudget) -> Result<u8> {
    let text = read_input(path)?;
    let graph = GraphDocument::from_json(&text)
        .with_context(|| format!("parsing {}", path.display()))?
        .to_graph()
        .map_err(|e| Failure::new(EXIT_UNSUPPORTED, "unsupported", e.to_string()))?;
    let r = oracle::exact_chi_la(&graph, budget).map_err(oracle_failure)?;
    emit_exact(None, &r, serde_json::to_value(&r.certificate)?)
}

fn emit_exact(spec: Option<String>, r: &oracle::ExactResult, certificate: serde_json::Value) -> Result<u8> {
    let out = ExactOutput {
        spec,
        chi_la: r.chi_la,
        exhausted: r.exhausted,
        nodes_explored: r.nodes_explored,
        certificate,
    };
    emit(&format!("{}\n", serde_json::to_string_pretty(&out)?))?;
    Ok(if r.exhausted { 0 } else { EXIT_BUDGET })
}
