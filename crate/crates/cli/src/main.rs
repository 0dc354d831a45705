//! `schurkit`: Schur expansions, cyclic descent checks and the bundled
//! verification suites from the command line.
//!
//! Output is JSON with sorted keys. Exit status is 0 on success, 1 when a
//! verification fails and 2 on a usage error. `verify` reports its wall time
//! on stderr so that stdout stays byte-identical between runs.

mod commands;
mod parse;
mod render;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use schurkit::verify::Limits;

use commands::CdeArgs;

const DEFAULT_MAX_N: usize = 7;
const DEFAULT_MAX_K: usize = 40;
const MAX_N_ENV: &str = "SCHURKIT_MAX_N";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl From<schurkit::Error> for CliError {
    fn from(e: schurkit::Error) -> Self {
        match e {
            schurkit::Error::InvariantViolation(_) => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub fn check_n(n: usize, max_n: usize) -> Result<(), CliError> {
    if n > max_n {
        return Err(CliError::Usage(format!(
            "n = {n} exceeds the bound {max_n}; raise it with --max-n or {MAX_N_ENV}"
        )));
    }
    Ok(())
}

#[derive(Parser)]
#[command(name = "schurkit", version, about = "Exact checks for Schur-positive permutation sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Render aligned text instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    /// Add `elapsed_ms` to the output.
    #[arg(long, global = true)]
    timing: bool,
    /// Bound on n [default: 7, or $SCHURKIT_MAX_N].
    #[arg(long = "max-n", global = true)]
    max_n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Expand Q(A) in Schur functions.
    SchurExpand {
        /// sn, conj:λ, invk:k, imajk:k, invdes:J, uroot:d or caterpillars.
        #[arg(long)]
        set: String,
        #[arg(long)]
        n: usize,
    },
    /// Decide whether a family has a cyclic descent extension.
    CdeCheck {
        /// invk, imajk, uroot, conj, single, powerset, interval or chain.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<u64>,
        /// Lower set of an interval or chain.
        #[arg(long = "I", allow_hyphen_values = true)]
        i: Option<String>,
        /// The set J, or the upper set of an interval or chain.
        #[arg(long = "J", allow_hyphen_values = true)]
        j: Option<String>,
        /// Cycle type for the conj family.
        #[arg(long)]
        lambda: Option<String>,
        /// Order in which a chain adds the elements of J \ I.
        #[arg(long)]
        order: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        /// caterpillar, qsym, cde, pentagonal, unimodal or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "max-k")]
        max_k: Option<usize>,
    },
}

fn default_max_n() -> Result<usize, CliError> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_N_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn record(command: &str, params: Value, result: Value, elapsed: Option<u128>) -> Value {
    let mut v = json!({ "command": command, "params": params, "result": result });
    if let Some(ms) = elapsed {
        v["elapsed_ms"] = json!(ms);
    }
    v
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let start = Instant::now();
    let max_n = match cli.max_n {
        Some(m) => m,
        None => default_max_n()?,
    };
    let elapsed = |t: Instant| cli.timing.then(|| t.elapsed().as_millis());
    match cli.command {
        Command::SchurExpand { set, n } => {
            check_n(n, max_n)?;
            let (params, result) = commands::schur_expand_cmd(&set, n)?;
            if cli.table {
                return Ok((render::schur_expand(&params, &result), true));
            }
            Ok((json_text(&record("schur-expand", params, result, elapsed(start))), true))
        }
        Command::CdeCheck { family, n, k, d, i, j, lambda, order } => {
            let args = CdeArgs { family, n, k, d, i, j, lambda, order };
            let (params, result) = commands::cde_check_cmd(&args, max_n)?;
            if cli.table {
                return Ok((render::cde_check(&params, &result), true));
            }
            Ok((json_text(&record("cde-check", params, result, elapsed(start))), true))
        }
        Command::Verify { suite, max_k } => {
            let max_k = max_k.unwrap_or(DEFAULT_MAX_K);
            if max_k > schurkit::cde::pentagonal::MAX_K {
                return Err(CliError::Usage(format!(
                    "max-k = {max_k} exceeds {}",
                    schurkit::cde::pentagonal::MAX_K
                )));
            }
            let (params, result, report) = commands::verify_cmd(&suite, Limits { max_n, max_k })?;
            let passed = report.iter().all(|c| c.passed);
            let failed = report.len() - report.iter().filter(|c| c.passed).count();
            eprintln!("{} checks, {failed} failed, {} ms", report.len(), start.elapsed().as_millis());
            if cli.table {
                return Ok((render::verify(&result, Some(start.elapsed().as_millis())), passed));
            }
            Ok((json_text(&record("verify", params, result, elapsed(start))), passed))
        }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, passed)) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
