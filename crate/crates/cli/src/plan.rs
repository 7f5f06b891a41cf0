use bound_engine::PFloorPolicy;
use merca_series::{denominator_parts, normalize_params, DenomKind, MercaParams};
use num_integer::Integer;

use crate::args::{Cli, CommandName, FormatArg, PolicyArg, ReproduceTarget, SeriesArg};

/// Largest accepted `--terms` for scans.
pub const MAX_TERMS: u64 = 10_000_000;

/// Default `--terms` for scans and the default `n` of `asymptotic`.
pub const DEFAULT_TERMS: u64 = 1_000;

/// A rejected command line: the offending flag and why.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError {
    pub flag: &'static str,
    pub message: String,
}

impl UsageError {
    fn new(flag: &'static str, message: impl Into<String>) -> Self {
        Self { flag, message: message.into() }
    }
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.flag, self.message)
    }
}

/// Which series a scan expands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanTarget {
    Merca(MercaParams, DenomKind),
    General { big_r: u64, big_s: u64, k: u64, ell: u64 },
}

/// A fully validated command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Scan { target: ScanTarget, terms: usize },
    Bound { params: MercaParams, scan_budget: usize, policy: PFloorPolicy },
    Asymptotic { a: u64, m: u64, n: u64, budget: usize, digits: u32 },
    Reproduce { target: ReproduceTarget, cell: Option<(u64, u64, u64)> },
    Selftest,
}

/// Validated plan: the command plus output settings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandPlan {
    pub command: Command,
    pub format: FormatArg,
    pub threads: usize,
}

fn require(value: Option<u64>, flag: &'static str) -> Result<u64, UsageError> {
    value.ok_or_else(|| UsageError::new(flag, "required for this command"))
}

/// `(r, s, k)` from `--r/--s/--k` or, normalised, from `--R/--S/--k`.
fn merca_params(cli: &Cli) -> Result<MercaParams, UsageError> {
    let k = require(cli.k, "--k")?;
    match (cli.r, cli.s, cli.big_r, cli.big_s) {
        (Some(r), Some(s), None, None) => {
            MercaParams::new(r, s, k).map_err(|e| UsageError::new("--r/--s", e.to_string()))
        }
        (None, None, Some(big_r), Some(big_s)) => {
            normalize_params(big_r, big_s, k).map_err(|e| UsageError::new("--R/--S", e.to_string()))
        }
        (Some(_), None, None, None) => Err(UsageError::new("--s", "required with --r")),
        (None, Some(_), None, None) => Err(UsageError::new("--r", "required with --s")),
        (None, None, _, _) => Err(UsageError::new("--r/--s", "give either --r and --s, or --R and --S")),
        _ => Err(UsageError::new("--R/--S", "cannot be combined with --r/--s")),
    }
}

fn denom_kind(series: SeriesArg) -> Option<DenomKind> {
    match series {
        SeriesArg::Full => Some(DenomKind::Full),
        SeriesArg::Four => Some(DenomKind::Four),
        SeriesArg::ThreePlus => Some(DenomKind::ThreePlus),
        SeriesArg::ThreeMinus => Some(DenomKind::ThreeMinus),
        SeriesArg::H => Some(DenomKind::H),
        SeriesArg::General => None,
    }
}

fn parse_cell(cell: &str) -> Result<(u64, u64, u64), UsageError> {
    let parts: Vec<&str> = cell.split(',').map(str::trim).collect();
    let bad = || UsageError::new("--cell", format!("expected r,s,k with positive integers, got {cell:?}"));
    let [r, s, k] = parts.as_slice() else { return Err(bad()) };
    let num = |x: &str| x.parse::<u64>().map_err(|_| bad());
    Ok((num(r)?, num(s)?, num(k)?))
}

/// Validates a parsed command line into a plan; nothing is executed here.
pub fn validate(cli: &Cli) -> Result<CommandPlan, UsageError> {
    if cli.target.is_some() && cli.command != CommandName::Reproduce {
        return Err(UsageError::new("target", "only `reproduce` takes a target"));
    }
    if cli.cell.is_some() && cli.command != CommandName::Reproduce {
        return Err(UsageError::new("--cell", "only valid with `reproduce`"));
    }
    if cli.digits < 15 {
        return Err(UsageError::new("--digits", "must be at least 15"));
    }
    let command = match cli.command {
        CommandName::Scan => {
            let terms = cli.terms.unwrap_or(DEFAULT_TERMS);
            if terms > MAX_TERMS {
                return Err(UsageError::new("--terms", format!("at most {MAX_TERMS}")));
            }
            let target = match denom_kind(cli.series) {
                Some(kind) => {
                    if cli.ell.is_some() {
                        return Err(UsageError::new("--ell", "only valid with --series general"));
                    }
                    let params = merca_params(cli)?;
                    denominator_parts(&params, kind, 0).map_err(|e| UsageError::new("--series", e.to_string()))?;
                    ScanTarget::Merca(params, kind)
                }
                None => {
                    if cli.r.is_some() || cli.s.is_some() {
                        return Err(UsageError::new("--R/--S", "the general series takes raw --R and --S"));
                    }
                    let big_r = require(cli.big_r, "--R")?;
                    let big_s = require(cli.big_s, "--S")?;
                    let k = require(cli.k, "--k")?;
                    let ell = require(cli.ell, "--ell")?;
                    merca_series::generalized_series(big_r, big_s, k, ell, 0)
                        .map_err(|e| UsageError::new("--R/--S/--k/--ell", e.to_string()))?;
                    ScanTarget::General { big_r, big_s, k, ell }
                }
            };
            Command::Scan { target, terms: terms as usize }
        }
        CommandName::Bound => {
            let params = merca_params(cli)?;
            let policy = match cli.policy {
                PolicyArg::Formula => PFloorPolicy::Formula,
                PolicyArg::Example => PFloorPolicy::Example,
            };
            Command::Bound { params, scan_budget: cli.scan_budget, policy }
        }
        CommandName::Asymptotic => {
            let m = require(cli.r, "--r")?;
            let a = require(cli.s, "--s")?;
            if a == 0 || 2 * a >= m || a.gcd(&m) != 1 {
                return Err(UsageError::new("--r/--s", format!("need 1 ≤ s < r/2 and gcd(r, s) = 1, got ({m},{a})")));
            }
            let n = cli.terms.unwrap_or(10_000);
            if n == 0 {
                return Err(UsageError::new("--terms", "the main terms need n ≥ 1"));
            }
            Command::Asymptotic { a, m, n, budget: cli.scan_budget, digits: cli.digits }
        }
        CommandName::Reproduce => {
            let target = cli.target.ok_or_else(|| UsageError::new("target", "reproduce needs a target"))?;
            let cell = cli.cell.as_deref().map(parse_cell).transpose()?;
            if cell.is_some()
                && !matches!(target, ReproduceTarget::Table1 | ReproduceTarget::Table2 | ReproduceTarget::Table3)
            {
                return Err(UsageError::new("--cell", "only valid for table targets"));
            }
            if let Some((r, s, k)) = cell {
                MercaParams::new(r, s, k).map_err(|e| UsageError::new("--cell", e.to_string()))?;
            }
            Command::Reproduce { target, cell }
        }
        CommandName::Selftest => Command::Selftest,
    };
    Ok(CommandPlan { command, format: cli.format, threads: cli.threads })
}
