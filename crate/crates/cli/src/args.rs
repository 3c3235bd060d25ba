use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Weak and strong Lefschetz properties of monomial complete intersections"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide the weak Lefschetz property.
    Wlp(DecideArgs),
    /// Decide the strong Lefschetz property.
    Slp(DecideArgs),
    /// Factor the peak determinant of an odd-socle tuple.
    Det(DetArgs),
    /// Tabulate verdicts over a range of tuples and primes.
    Census(CensusArgs),
    /// Cross-check independent routes over a range.
    Verify(VerifyArgs),
    /// Print the result-to-code concordance.
    Concordance(ConcordanceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Wlp,
    Slp,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::Wlp => "wlp",
            Property::Slp => "slp",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    /// Closed forms first, rank oracle last.
    Auto,
    Oracle,
    Det,
    Syzgap,
    /// Closed forms only; undecided is an error.
    Theorem,
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    /// Comma-separated exponents, e.g. 5,5,5.
    #[arg(long, allow_hyphen_values = true)]
    pub degrees: String,
    /// 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
    pub method: MethodChoice,
    /// Print the decision trace to stderr.
    #[arg(long)]
    pub trace: bool,
    /// Accept exponents equal to 1.
    #[arg(long)]
    pub allow_unit: bool,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub degrees: String,
    /// Also compute the signed determinant by elimination.
    #[arg(long)]
    pub bruteforce: bool,
    #[arg(long)]
    pub allow_unit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Jsonl,
    Csv,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Tuples have n + 1 entries.
    #[arg(long)]
    pub n: Option<usize>,
    /// Largest exponent; the smallest is 2.
    #[arg(long)]
    pub dmax: Option<u32>,
    /// Largest prime characteristic.
    #[arg(long)]
    pub pmax: Option<u64>,
    #[arg(long, value_enum)]
    pub property: Option<Property>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Worker threads.
    #[arg(long, env = "LEFSCHETZ_JOBS")]
    pub jobs: Option<usize>,
    /// TOML preset; flags override its keys.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write runtime_micros as 0.
    #[arg(long)]
    pub deterministic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    DetVsOracle,
    ClassifyVsOracle,
    MgdVsOracle,
    SyzgapVsOracle,
    Conjectures,
}

impl VerifyMode {
    pub fn as_str(self) -> &'static str {
        match self {
            VerifyMode::DetVsOracle => "det-vs-oracle",
            VerifyMode::ClassifyVsOracle => "classify-vs-oracle",
            VerifyMode::MgdVsOracle => "mgd-vs-oracle",
            VerifyMode::SyzgapVsOracle => "syzgap-vs-oracle",
            VerifyMode::Conjectures => "conjectures",
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub mode: VerifyMode,
    /// Tuples have up to n + 1 entries.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 4)]
    pub dmax: u32,
    /// Largest prime; the determinant mode checks every prime up to the socle degree instead.
    #[arg(long, default_value_t = 7)]
    pub pmax: u64,
    #[arg(long, env = "LEFSCHETZ_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ConcordanceArgs {
    /// Write to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
