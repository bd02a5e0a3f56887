//! Command-line front end.
//!
//! Every command validates its whole configuration before sampling, builds
//! the complete output in memory and only then writes it, so a failed run
//! leaves no partial file behind.

mod commands;
pub mod output;
pub mod parse;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagnostics::DiagnosticsError;
use crate::measures::{BaseMeasure, MeasureError};

// Aliases keep clap from treating list-valued flags as repeated flags.
type Floats = Vec<f64>;
type Indices = Vec<usize>;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "randmeasure", version, about = "Simulate random probability measures and compare constructions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample CDF paths of one process on a grid.
    Sample(SampleArgs),
    /// Max mean / sd errors of the monotone and stick-breaking constructions.
    Compare(CompareArgs),
    /// Exact probability that consecutive stick-breaking weights are out of order.
    LemmaProb(LemmaArgs),
    /// Simulated probability that weight i+1 is smaller than weight i.
    OrderProb(OrderArgs),
    /// Mean, variance and Chebyshev bound of P(A).
    Moments(MomentsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProcessKind {
    DpNew,
    StableNew,
    PdpNew,
    PdpStick,
    NigpNew,
    NigpStick,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Pdp,
    Nigp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads; results do not depend on this.
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ProcessArgs {
    #[arg(long, value_enum)]
    pub process: ProcessKind,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    /// Truncation level (stick length for stick-breaking).
    #[arg(long)]
    pub n: Option<usize>,
    /// Stable vector length for pdp-new.
    #[arg(long)]
    pub m: Option<usize>,
    /// Epsilon stopping rule for pdp-stick instead of a fixed n.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Maximum stick length under the epsilon rule.
    #[arg(long)]
    pub cap: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub process: ProcessArgs,
    #[arg(long)]
    pub paths: Option<usize>,
    #[arg(long, default_value = "uniform:0,1", value_parser = parse::base)]
    pub base: BaseMeasure,
    #[arg(long, default_value = "0.1:1.0:0.1", value_parser = parse::grid)]
    pub grid: Floats,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[arg(long, value_enum, default_value_t = Family::Pdp)]
    pub family: Family,
    /// Discount values (pdp only), comma separated.
    #[arg(long, value_parser = parse::list)]
    pub alphas: Option<Floats>,
    /// Concentration values, comma separated.
    #[arg(long, value_parser = parse::list)]
    pub thetas: Option<Floats>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Stick length for the stick-breaking side.
    #[arg(long)]
    pub stick_n: Option<usize>,
    #[arg(long)]
    pub paths: Option<usize>,
    #[arg(long, default_value = "uniform:0,1", value_parser = parse::base)]
    pub base: BaseMeasure,
    #[arg(long, default_value = "0.1:1.0:0.1", value_parser = parse::grid)]
    pub grid: Floats,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LemmaArgs {
    #[arg(long, value_parser = parse::index_list)]
    pub i: Indices,
    #[arg(long, value_parser = parse::list)]
    pub alpha: Floats,
    #[arg(long, value_parser = parse::list, allow_negative_numbers = true)]
    pub theta: Floats,
    /// Add a Monte Carlo column with this many replications.
    #[arg(long)]
    pub mc_reps: Option<usize>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OrderArgs {
    #[command(flatten)]
    pub process: ProcessArgs,
    #[arg(long, value_parser = parse::index_list)]
    pub i: Indices,
    #[arg(long, default_value_t = 500)]
    pub reps: usize,
    #[arg(long, default_value = "uniform:0,1", value_parser = parse::base)]
    pub base: BaseMeasure,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Args)]
pub struct MomentsArgs {
    #[arg(long, value_enum)]
    pub process: Family,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub theta: f64,
    #[arg(long = "hA", alias = "ha", value_parser = parse::list, default_value = "0.5")]
    pub h_a: Floats,
    /// Add Chebyshev bounds at these deviations.
    #[arg(long, value_parser = parse::list)]
    pub eps: Option<Floats>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Numeric(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Numeric(_) => EXIT_NUMERIC,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<MeasureError> for CliError {
    fn from(e: MeasureError) -> Self {
        match e {
            MeasureError::InvalidParameter(_) | MeasureError::BoundaryProcess(..) => CliError::Config(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<DiagnosticsError> for CliError {
    fn from(e: DiagnosticsError) -> Self {
        match e {
            DiagnosticsError::Measure(m) => m.into(),
            e if e.is_config_error() => CliError::Config(e.to_string()),
            e => CliError::Numeric(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Output goes to stdout or `--out`; diagnostics to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let mut stderr = std::io::stderr().lock();
    match commands::execute(cli.command, &mut stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
