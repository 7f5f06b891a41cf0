//! `thetacheck`: exact coefficient scans, bound thresholds, asymptotic main
//! terms and one-command reproduction of the published tables and examples.
//!
//! [`run`] parses a command line, validates it into a [`CommandPlan`]
//! (nothing executes on a usage error), executes it on a thread pool of the
//! requested size and renders the report:
//!
//! - JSON: `{command, params: {r, s, k, case}, result, version}` with keys in
//!   sorted order; big integers are decimal strings and rationals are
//!   `[numerator, denominator]` pairs of decimal strings
//! - CSV: columns [`CSV_COLUMNS`], one row per leaf of `result`
//!
//! Exit codes: 0 success, 1 a `scan`/`bound` scan found a negative
//! coefficient, 2 usage error, 3 execution failure or failed self-test.

mod args;
mod execute;
mod output;
mod plan;
mod tables;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

pub use args::{Cli, CommandName, FormatArg, PolicyArg, ReproduceTarget, SeriesArg};
pub use output::{to_csv, CSV_COLUMNS};
pub use plan::{validate, Command, CommandPlan, ScanTarget, UsageError};

/// Exit code: success.
pub const EXIT_OK: u8 = 0;
/// Exit code: a scan found a negative coefficient.
pub const EXIT_NEGATIVE: u8 = 1;
/// Exit code: invalid command line.
pub const EXIT_USAGE: u8 = 2;
/// Exit code: execution failed or a self-test check failed.
pub const EXIT_FAILURE: u8 = 3;

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Full JSON report of an executed plan.
pub fn report(plan: &CommandPlan) -> Result<(Value, u8), String> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(plan.threads).build().map_err(|e| e.to_string())?;
    let executed = pool.install(|| execute::execute(&plan.command)).map_err(|e| e.0)?;
    let code = if executed.failed {
        EXIT_FAILURE
    } else if executed.negative_found {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    };
    let value = json!({
        "command": executed.command,
        "params": executed.params,
        "result": executed.result,
        "version": env!("CARGO_PKG_VERSION"),
    });
    Ok((value, code))
}

/// Renders a report in the plan's format (JSON ends with a newline).
pub fn render(value: &Value, format: FormatArg) -> String {
    match format {
        FormatArg::Json => serde_json::to_string_pretty(value).expect("JSON values serialise") + "\n",
        FormatArg::Csv => to_csv(value),
    }
}

/// Parses, validates and executes a command line (first item: program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let plan = match validate(&cli) {
        Ok(plan) => plan,
        Err(e) => return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    match report(&plan) {
        Ok((value, code)) => Outcome { code, stdout: render(&value, plan.format), stderr: String::new() },
        Err(e) => Outcome { code: EXIT_FAILURE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
