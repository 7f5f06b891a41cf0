use clap::{Parser, ValueEnum};

/// Exact coefficient scans, bound thresholds and asymptotic main terms for
/// truncated theta quotients.
#[derive(Debug, Parser)]
#[command(name = "thetacheck", version)]
pub struct Cli {
    /// What to run.
    #[arg(value_enum)]
    pub command: CommandName,
    /// Reproduction target (`reproduce` only).
    #[arg(value_enum)]
    pub target: Option<ReproduceTarget>,
    /// Normalised modulus r.
    #[arg(long)]
    pub r: Option<u64>,
    /// Normalised residue s (gcd(r, s) = 1, s < r/2).
    #[arg(long)]
    pub s: Option<u64>,
    /// Truncation k ≥ 1.
    #[arg(long)]
    pub k: Option<u64>,
    /// Raw modulus R; normalised together with --S.
    #[arg(long = "R")]
    pub big_r: Option<u64>,
    /// Raw residue S.
    #[arg(long = "S")]
    pub big_s: Option<u64>,
    /// Series to scan.
    #[arg(long, value_enum, default_value = "full")]
    pub series: SeriesArg,
    /// Lower truncation ℓ of the generalised series.
    #[arg(long)]
    pub ell: Option<u64>,
    /// Number of terms (scan: last exponent; asymptotic: n).
    #[arg(long)]
    pub terms: Option<u64>,
    /// Largest exponent scanned by `bound`, and the exact-table budget of
    /// `asymptotic`.
    #[arg(long = "scan-budget", default_value_t = 10_000)]
    pub scan_budget: usize,
    /// Block choice for the four-part stage-2 constant.
    #[arg(long, value_enum, default_value = "formula")]
    pub policy: PolicyArg,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    /// Worker threads (0: one per core). Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Significant decimal digits of high-precision reals.
    #[arg(long, default_value_t = 30)]
    pub digits: u32,
    /// Single table cell `r,s,k` (`reproduce table-N` only).
    #[arg(long)]
    pub cell: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CommandName {
    Scan,
    Bound,
    Asymptotic,
    Reproduce,
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesArg {
    Full,
    Four,
    ThreePlus,
    ThreeMinus,
    H,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Formula,
    Example,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReproduceTarget {
    #[value(name = "table-1")]
    Table1,
    #[value(name = "table-2")]
    Table2,
    #[value(name = "table-3")]
    Table3,
    #[value(name = "example-5.1")]
    Example51,
    #[value(name = "example-6.2")]
    Example62,
    #[value(name = "corollary-5.3")]
    Corollary53,
}
