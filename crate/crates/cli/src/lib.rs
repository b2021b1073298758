//! Command-line front end for `hh3-core`.
//!
//! Subcommands:
//! - `generate` samples a curve family as `s,x,y,z,T1,T2,T3`.
//! - `frenet` and `residual` tabulate Frenet data and bitension residuals.
//! - `verify` runs the claim registry and writes the JSON report.

mod args;
mod output;
mod source;
mod table;

use std::ffi::OsString;
use std::io;

use clap::Parser;
use hh3_core::biharmonic::{analyze, Tolerances};
use hh3_core::connection::ConnectionTable;
use hh3_core::verifier::{run_all, single_report, verify_claim, VerifyConfig};
use hh3_core::GeometryError;
use thiserror::Error;

pub use args::{Cli, Command, CurveArgs, Format, RangeSpec, TableArgs, VerifyArgs};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("I/O error: {0}")]
    Io(String),
    #[error("verification mismatch: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Input(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::RejectedInput(msg) => CliError::Input(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Errors are reported as one line on `stderr`.
pub fn run_from<I, T>(args: I, stdout: &mut dyn io::Write, stderr: &mut dyn io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            let msg = e.to_string();
            let line = msg.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            let _ = writeln!(stderr, "{}", line.trim_start_matches("error: "));
            return 2;
        }
    };
    match run(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            let _ = writeln!(stderr, "{msg}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn io::Write) -> Result<()> {
    match &cli.command {
        Command::Generate(a) => cmd_generate(a, stdout),
        Command::Frenet(a) => cmd_table(a, false, stdout),
        Command::Residual(a) => cmd_table(a, true, stdout),
        Command::Verify(a) => cmd_verify(a, stdout),
    }
}

fn cmd_generate(a: &CurveArgs, stdout: &mut dyn io::Write) -> Result<()> {
    if a.format != Format::Csv {
        return Err(CliError::Input("generate writes csv only".into()));
    }
    let src = source::load(a)?;
    let rows = table::sample_rows(&src)?;
    output::emit(a.output.as_deref(), &rows, stdout)
}

fn cmd_table(t: &TableArgs, residual: bool, stdout: &mut dyn io::Write) -> Result<()> {
    let src = source::load(&t.curve)?;
    let mut tol = Tolerances::for_backing(src.curve.backing());
    if let Some(v) = t.tol {
        if !(v.is_finite() && v > 0.0) {
            return Err(CliError::Input(format!("--tol must be positive, got {v}")));
        }
        if residual {
            tol.verdict = v;
        } else {
            tol.frenet = v;
        }
    }
    let report = analyze(src.curve.as_ref(), &src.grid, tol)?;
    let text = match t.curve.format {
        Format::Csv => table::frenet_rows(&report),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Io(format!("cannot serialize report: {e}")))?;
            s.push('\n');
            s
        }
    };
    output::emit(t.curve.output.as_deref(), &text, stdout)
}

fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn io::Write) -> Result<()> {
    if a.format != Format::Json {
        return Err(CliError::Input("verify writes json only".into()));
    }
    let mut config = VerifyConfig::with_seed(a.seed);
    if a.tamper_connection {
        config.connection = tampered_connection();
    }
    let report = match &a.claim {
        Some(id) => single_report(verify_claim(id, &config)?, &config),
        None => run_all(&config),
    };
    output::emit(a.output.as_deref(), &report.to_json(), stdout)?;
    let mismatched: Vec<_> = report.mismatches().iter().map(|r| r.claim_id).collect();
    if mismatched.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("status differs from the manifest for {}", mismatched.join(", "))))
    }
}

/// Canonical table with one sign flipped in `∇_{e1} e2`.
fn tampered_connection() -> ConnectionTable {
    let mut c = ConnectionTable::CANONICAL;
    c.table[0][1] = [0, 0, -1];
    c
}
