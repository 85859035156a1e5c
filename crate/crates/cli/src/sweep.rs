//! `corona-la sweep`: one row per instance with the claimed value, what the
//! construction achieved, the bound interval and, for small instances, the
//! exact search.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use corona_antimagic::bounds::corona_lower_bound;
use corona_antimagic::constructions::{construct, ConstructionError};
use corona_antimagic::oracle::{exact_corona, SearchBudget};
use corona_antimagic::{corona, verify, CoronaSpec, Family};

use crate::{emit, Failure, EXIT_INCONSISTENT};

#[derive(Args)]
pub struct SweepArgs {
    /// TOML file with any of the fields below; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated, e.g. `path,cycle`.
    #[arg(long, value_delimiter = ',')]
    families: Option<Vec<Family>>,
    /// Inclusive, e.g. `4-20` or `7`.
    #[arg(long)]
    n_range: Option<IntRange>,
    #[arg(long)]
    m_range: Option<IntRange>,
    /// Run the exact search on instances with at most this many edges.
    #[arg(long)]
    oracle_max_edges: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<SweepFormat>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50_000_000)]
    max_nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SweepFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]")]
pub struct IntRange {
    pub lo: usize,
    pub hi: usize,
}

impl TryFrom<[usize; 2]> for IntRange {
    type Error = String;

    fn try_from([lo, hi]: [usize; 2]) -> Result<Self, String> {
        if lo > hi {
            return Err(format!("empty range [{lo}, {hi}]"));
        }
        Ok(IntRange { lo, hi })
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
        let (lo, hi) = match s.split_once('-').or_else(|| s.split_once("..=")) {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        IntRange::try_from([lo, hi])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub n_range: IntRange,
    pub m_range: IntRange,
    pub oracle_max_edges: usize,
    pub format: SweepFormat,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            families: Family::ALL.to_vec(),
            n_range: IntRange { lo: 2, hi: 12 },
            m_range: IntRange { lo: 1, hi: 4 },
            oracle_max_edges: 10,
            format: SweepFormat::Csv,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Row {
    family: Family,
    n: usize,
    m: usize,
    edges: usize,
    claimed: Option<usize>,
    achieved: Option<usize>,
    lower: Option<usize>,
    upper: Option<usize>,
    oracle: Option<String>,
    errata: String,
    status: &'static str,
}

pub fn run(args: SweepArgs) -> Result<u8> {
    let mut config = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        None => SweepConfig::default(),
    };
    if let Some(f) = args.families {
        config.families = f;
    }
    if let Some(r) = args.n_range {
        config.n_range = r;
    }
    if let Some(r) = args.m_range {
        config.m_range = r;
    }
    if let Some(e) = args.oracle_max_edges {
        config.oracle_max_edges = e;
    }
    if let Some(f) = args.format {
        config.format = f;
    }
    if config.families.is_empty() {
        bail!("no families selected");
    }
    let budget = SearchBudget {
        max_edges: config.oracle_max_edges,
        max_nodes: args.max_nodes,
        seed: args.seed,
    };

    let mut rows = Vec::new();
    let mut problems = Vec::new();
    for &family in &config.families {
        for n in config.n_range.lo.max(family.min_order())..=config.n_range.hi {
            for m in config.m_range.lo.max(1)..=config.m_range.hi {
                let spec = CoronaSpec::new(family, n, m)?;
                let (row, problem) = evaluate(spec, &budget, config.oracle_max_edges);
                if let Some(p) = problem {
                    problems.push(format!("{spec}: {p}"));
                }
                rows.push(row);
            }
        }
    }

    match config.format {
        SweepFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &rows {
                w.serialize(row)?;
            }
            emit(&String::from_utf8(w.into_inner()?)?)?;
        }
        SweepFormat::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&rows)?))?,
    }

    if problems.is_empty() {
        return Ok(0);
    }
    for p in &problems {
        eprintln!("inconsistent: {p}");
    }
    Err(Failure::new(
        EXIT_INCONSISTENT,
        "inconsistent",
        format!("{} of {} rows", problems.len(), rows.len()),
    )
    .into())
}

/// The row for `spec` and, if it is inconsistent, why.
pub fn evaluate(spec: CoronaSpec, budget: &SearchBudget, oracle_max_edges: usize) -> (Row, Option<String>) {
    let bounds = corona_lower_bound(&spec).ok();
    let mut row = Row {
        family: spec.family,
        n: spec.n,
        m: spec.m,
        edges: spec.edge_count(),
        claimed: None,
        achieved: None,
        lower: bounds.as_ref().map(|b| b.lower),
        upper: bounds.as_ref().and_then(|b| b.upper),
        oracle: None,
        errata: String::new(),
        status: "ok",
    };
    let result = match construct(spec) {
        Ok(r) => r,
        Err(ConstructionError::Unsupported { .. } | ConstructionError::Spec(_)) => {
            row.status = "unsupported";
            return (row, None);
        }
        Err(e) => {
            row.status = "inconsistent";
            return (row, Some(e.to_string()));
        }
    };
    row.claimed = Some(result.claimed_palette_size);
    row.errata = result
        .errata_applied
        .iter()
        .map(|e| e.id())
        .collect::<Vec<_>>()
        .join(";");

    let g = corona(spec).expect("constructed specs are valid");
    let report = verify(g.graph(), &result.labeling).expect("constructed labelings fit");
    row.achieved = Some(report.palette_size);
    let claimed = result.claimed_palette_size;

    let mut problem = None;
    if !report.is_local_antimagic {
        problem = Some("labeling does not verify".to_string());
    } else if report.palette_size != claimed {
        problem = Some(format!("{} colors, claimed {claimed}", report.palette_size));
    } else if let Some(b) = &bounds {
        if !b.admits(claimed) || b.exact_claimed.is_some_and(|e| e != claimed) {
            problem = Some(format!("claimed {claimed} outside bounds"));
        }
    }

    if spec.edge_count() <= oracle_max_edges {
        match exact_corona(&g, budget) {
            Ok(r) if r.exhausted => {
                row.oracle = Some(r.chi_la.to_string());
                let lower = bounds.as_ref().map_or(0, |b| b.lower);
                let exact = bounds.as_ref().and_then(|b| b.exact_claimed);
                if r.chi_la > claimed || r.chi_la < lower || exact.is_some_and(|e| e != r.chi_la) {
                    problem.get_or_insert(format!("exact search gives {}", r.chi_la));
                }
            }
            _ => row.oracle = Some("budget".into()),
        }
    }
    if problem.is_some() {
        row.status = "inconsistent";
    }
    (row, problem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("4-20".parse::<IntRange>().unwrap(), IntRange { lo: 4, hi: 20 });
        assert_eq!("3..=5".parse::<IntRange>().unwrap(), IntRange { lo: 3, hi: 5 });
        assert_eq!("7".parse::<IntRange>().unwrap(), IntRange { lo: 7, hi: 7 });
        assert!("9-3".parse::<IntRange>().is_err());
        assert!("x".parse::<IntRange>().is_err());
    }

    #[test]
    fn config_file_fields() {
        let c: SweepConfig = toml::from_str("families = [\"cycle\"]\nn_range = [5, 9]\n").unwrap();
        assert_eq!(c.families, vec![Family::Cycle]);
        assert_eq!(c.n_range, IntRange { lo: 5, hi: 9 });
        assert_eq!(c.m_range, SweepConfig::default().m_range);
        assert!(toml::from_str::<SweepConfig>("n_range = [9, 5]").is_err());
        assert!(toml::from_str::<SweepConfig>("colour = 1").is_err());
    }

    #[test]
    fn unsupported_rows_are_not_inconsistent() {
        let spec = CoronaSpec::new(Family::Complete, 2, 3).unwrap();
        let (row, problem) = evaluate(spec, &SearchBudget::default(), 10);
        assert_eq!(row.status, "unsupported");
        assert!(problem.is_none());
    }

    #[test]
    fn small_rows_run_the_oracle() {
        let spec = CoronaSpec::new(Family::Cycle, 4, 1).unwrap();
        let (row, problem) = evaluate(spec, &SearchBudget::default(), 10);
        assert!(problem.is_none(), "{problem:?}");
        assert_eq!(row.oracle.as_deref(), Some("6"));
        assert_eq!((row.claimed, row.achieved), (Some(6), Some(6)));
    }
}
