//! Command-line front end: argument types and dispatch.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{bound_report, coeff_gk2, BoundReport, Rational, CSV_COLUMNS};
use crate::combinatorics::binomial_u128;
use crate::constructions::{construct, CoverStats, Method};
use crate::domination::{check_domination_capped, validate_levels, DominatingPair, DEFAULT_VIOLATION_CAP};
use crate::exact::{exact_gamma, exact_turan_ex};
use crate::Error;

pub const SCHEMA: &str = "levelcover/1";
pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "levelcover",
    version,
    about = "Dominating sets of the level graphs G_{k,l} of the n-cube"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a dominating pair with one of the explicit constructions.
    Construct(ConstructArgs),
    /// Check a dominating pair and list violations.
    Check(CheckArgs),
    /// Exact domination number by branch and bound.
    Exact(ExactArgs),
    /// Exact Turán number ex(n, K_k^(l)).
    Turan(ExactArgs),
    /// Evaluate every counting bound on a pair of G_{k,2}.
    Bounds(BoundsArgs),
    /// Tabulate construction sizes over a range of n.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
pub struct Levels {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long, short = 'l')]
    pub l: u32,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub levels: Levels,
    #[arg(long, value_parser = parse_method)]
    pub method: Method,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub emit_cover_stats: bool,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long)]
    pub pair: PathBuf,
    #[arg(long, default_value_t = DEFAULT_VIOLATION_CAP)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct ExactArgs {
    #[command(flatten)]
    pub levels: Levels,
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    pub node_limit: u64,
    /// Write the certificate (or witness) here as well.
    #[arg(long)]
    pub cert_out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub pair: PathBuf,
    #[arg(long, default_value_t = 10)]
    pub s: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// Upper level; implied by g53 and g43.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, value_delimiter = ',', value_parser = parse_method, default_value = "gk2")]
    pub methods: Vec<Method>,
    /// Values of n: a list `30,60,90` or a range `lo..hi` / `lo..hi:step`
    /// (inclusive).
    #[arg(long, value_parser = parse_n_values)]
    pub n: NValues,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NValues(pub Vec<u32>);

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

pub fn parse_n_values(s: &str) -> Result<NValues, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(NValues(Vec::new()));
    }
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("bad number {t:?} in n values"))
    };
    if let Some((lo, rest)) = s.split_once("..") {
        let (hi, step) = match rest.split_once(':') {
            Some((hi, step)) => (num(hi)?, num(step)?),
            None => (num(rest)?, 1),
        };
        if step == 0 {
            return Err("range step must be positive".into());
        }
        return Ok(NValues((num(lo)?..=hi).step_by(step as usize).collect()));
    }
    s.split(',').map(num).collect::<Result<_, _>>().map(NValues)
}

/// A failed run: domain errors exit with 1, I/O and input-format errors
/// with 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Io(_) => 2,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Serializes an object with a leading `"schema"` field.
pub fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    let body = serde_json::to_string(value).map_err(|e| CliError::Io(format!("serialization failed: {e}")))?;
    let rest = body
        .strip_prefix('{')
        .ok_or_else(|| CliError::Io("expected a JSON object".into()))?;
    let sep = if rest == "}" { "" } else { "," };
    Ok(format!("{{\"schema\":\"{SCHEMA}\"{sep}{rest}\n"))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn read_pair(path: &Path) -> CliResult<DominatingPair> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Io(format!("{} is not a valid pair: {e}", path.display())))
}

#[derive(Serialize)]
struct ConstructOut<'a> {
    #[serde(flatten)]
    pair: &'a DominatingPair,
    #[serde(skip_serializing_if = "Option::is_none")]
    cover: Option<CoverStats>,
}

/// Runs one command, returning what goes to standard output.
pub fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Construct(a) => {
            let c = construct(a.method, a.levels.n, a.levels.k, a.levels.l)?;
            let out = to_json(&ConstructOut {
                pair: &c.pair,
                cover: if a.emit_cover_stats { c.cover } else { None },
            })?;
            match &a.out {
                Some(path) => {
                    write_file(path, &out)?;
                    Ok(String::new())
                }
                None => Ok(out),
            }
        }
        Command::Check(a) => {
            let pair = read_pair(&a.pair)?;
            to_json(&check_domination_capped(&pair, a.cap)?)
        }
        Command::Exact(a) => {
            let Levels { n, k, l } = a.levels;
            let res = exact_gamma(n, k, l, Some(a.node_limit))?;
            if let (Some(path), Some(cert)) = (&a.cert_out, &res.certificate) {
                write_file(path, &to_json(cert)?)?;
            }
            to_json(&res)
        }
        Command::Turan(a) => {
            let Levels { n, k, l } = a.levels;
            let res = exact_turan_ex(n, k, l, Some(a.node_limit))?;
            if let (Some(path), Some(w)) = (&a.cert_out, &res.witness) {
                write_file(path, &to_json(w)?)?;
            }
            to_json(&res)
        }
        Command::Bounds(a) => {
            let pair = read_pair(&a.pair)?;
            let report = bound_report(&pair, a.s)?;
            match a.format {
                Format::Json => to_json(&report),
                Format::Csv => bounds_csv(&[report]),
            }
        }
        Command::Report(a) => {
            let out = report_csv(a.k, &a.methods, &a.n.0)?;
            match &a.out {
                Some(path) => {
                    write_file(path, &out)?;
                    Ok(String::new())
                }
                None => Ok(out),
            }
        }
    }
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(format!("csv output failed: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Io(format!("csv output failed: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

pub fn bounds_csv(reports: &[BoundReport]) -> CliResult<String> {
    csv_text(CSV_COLUMNS, reports.iter().map(|r| r.csv_record()))
}

pub const REPORT_COLUMNS: &[&str] = &[
    "n",
    "k",
    "l",
    "method",
    "lsets",
    "ksets",
    "size",
    "scale",
    "size_over_scale",
    "size_over_scale_f64",
    "target",
    "target_f64",
    "residual",
    "residual_f64",
    "cover_N",
    "cover_m",
    "cover_blocks",
    "cover_ratio",
];

/// Scale and limiting coefficient the size is compared against.
fn scale_and_target(method: Method, n: u32, k: u32) -> crate::Result<(&'static str, u128, Rational)> {
    Ok(match method {
        Method::Gk1 => ("n", n as u128, Rational::one()),
        Method::Gk2 => ("n^2", n as u128 * n as u128, coeff_gk2(k)?),
        Method::G53 => ("C(n,3)", binomial_u128(n as u64, 3)?, Rational::new(1, 3)?),
        Method::G43 => ("C(n,3)", binomial_u128(n as u64, 3)?, Rational::new(17, 27)?),
    })
}

/// One row per `(n, method)`, `n` outer, methods in the order given.
pub fn report_rows(k: Option<u32>, methods: &[Method], ns: &[u32]) -> crate::Result<Vec<Vec<String>>> {
    let mut levels = Vec::new();
    for &m in methods {
        let (mk, ml) = match (m.fixed_levels(), k) {
            (Some((fk, fl)), Some(k)) if k != fk => {
                return Err(crate::error::invalid(format!(
                    "method {m} builds pairs for k={fk} l={fl}, not k={k}"
                )))
            }
            (Some(fixed), _) => fixed,
            (None, Some(k)) => (k, if m == Method::Gk1 { 1 } else { 2 }),
            (None, None) => return Err(crate::error::invalid(format!("method {m} needs --k"))),
        };
        levels.push((m, mk, ml));
    }
    let mut rows = Vec::new();
    for &n in ns {
        for &(m, k, l) in &levels {
            validate_levels(n, k, l)?;
            let c = construct(m, n, k, l)?;
            let (scale_name, scale, target) = scale_and_target(m, n, k)?;
            let ratio = &Rational::integer(c.pair.size()) / &Rational::integer(scale);
            let residual = &ratio - &target;
            let (cn, cm, cb, cr) = match c.cover {
                Some(s) => (
                    s.universe_size.to_string(),
                    s.m.to_string(),
                    s.blocks_chosen.to_string(),
                    format!("{:.6}", s.ratio),
                ),
                None => Default::default(),
            };
            rows.push(vec![
                n.to_string(),
                k.to_string(),
                l.to_string(),
                m.to_string(),
                c.pair.lsets().len().to_string(),
                c.pair.ksets().len().to_string(),
                c.pair.size().to_string(),
                scale_name.to_string(),
                ratio.to_string(),
                format!("{:.6}", ratio.to_f64()),
                target.to_string(),
                format!("{:.6}", target.to_f64()),
                residual.to_string(),
                format!("{:.6}", residual.to_f64()),
                cn,
                cm,
                cb,
                cr,
            ]);
        }
    }
    Ok(rows)
}

pub fn report_csv(k: Option<u32>, methods: &[Method], ns: &[u32]) -> CliResult<String> {
    let rows = report_rows(k, methods, ns)?;
    csv_text(REPORT_COLUMNS, rows)
}
