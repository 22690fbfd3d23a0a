use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "ortho-l1",
    version,
    about = "L¹ norms and absolute moments of Laguerre, Hermite and Jacobi functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Absolute moments ∫|t|^i/i!·|q_n(t)| dt by the zero-sum rules.
    Moment(MomentArgs),
    /// Reproduce the reference integrals and compare with their exact values.
    Examples(ExamplesArgs),
    /// Zeros of Q_n, optionally with Christoffel numbers.
    Zeros(ZerosArgs),
    /// Evaluate a parameter grid and write every row to a file.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Laguerre,
    Hermite,
    Jacobi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FileFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IMode {
    /// every 0 <= i <= n-1
    All,
    /// i = 0 only
    Zero,
    /// i = n-1 only
    Top,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Laguerre α or Jacobi α.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Jacobi β.
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
}

#[derive(Debug, Args)]
pub struct MomentArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Degree(s), comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    /// Moment order(s), comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub i: Vec<usize>,
    /// Also run the brute-force oracle and report the discrepancy.
    #[arg(long)]
    pub verify: bool,
    /// Skip the rules and report only the oracle (allows i >= n and n = 0).
    #[arg(long, conflicts_with = "verify")]
    pub oracle_only: bool,
    /// Include the per-zero terms (json and table only).
    #[arg(long)]
    pub ledger: bool,
    /// Relative discrepancy above which --verify fails.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExamplesArgs {
    /// Largest accepted relative difference from the exact value.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub n: usize,
    /// Print Christoffel numbers and the Gauss exactness self-check.
    #[arg(long)]
    pub christoffel: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// α grid, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub alpha: Vec<f64>,
    /// β grid, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub beta: Vec<f64>,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "all")]
    pub i_mode: IMode,
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FileFormat,
}
