use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hh3_core::generators::{Branch, FamilyKind};
use hh3_core::verifier::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(name = "hh3", version, about = "Curve geometry of the hyperbolic Heisenberg group")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a curve family: s,x,y,z,T1,T2,T3.
    Generate(CurveArgs),
    /// Frenet data and residuals per grid point.
    Frenet(TableArgs),
    /// Same table as `frenet`; --tol sets the verdict tolerance instead.
    Residual(TableArgs),
    /// Run the verification suite and write the JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// `a:b:step` with `a < b` and `step > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeSpec {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, h] = parts.as_slice() else {
            return Err(format!("range must be a:b:step, got {s:?}"));
        };
        let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("cannot parse {t:?} in range {s:?}"));
        let (start, end, step) = (num(a)?, num(b)?, num(h)?);
        if ![start, end, step].iter().all(|v| v.is_finite()) {
            return Err(format!("range {s:?} is not finite"));
        }
        if start >= end {
            return Err(format!("range {s:?} is empty"));
        }
        if step <= 0.0 {
            return Err(format!("step must be positive in range {s:?}"));
        }
        Ok(RangeSpec { start, end, step })
    }
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = FamilyKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown family {s:?}, expected one of {}", names.join(", "))
    })
}

fn parse_branch(s: &str) -> Result<Branch, String> {
    s.parse().map_err(|_| format!("branch must be + or -, got {s:?}"))
}

#[derive(Debug, Clone, Args)]
pub struct CurveArgs {
    /// Curve family.
    #[arg(long, value_parser = parse_family, conflicts_with = "input")]
    pub family: Option<FamilyKind>,
    /// Sampled curve with header s,x,y,z (extra columns ignored).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Spacelike shape α0; angle offset for b3zero-spacelike.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha0: Option<f64>,
    /// Timelike shape ν0; angle offset for b3zero-timelike.
    #[arg(long, allow_negative_numbers = true)]
    pub nu0: Option<f64>,
    /// Rate of the timelike horizontal helix.
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<f64>,
    /// Geodesic direction e1, e2 or e3.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub axis: Option<u8>,
    /// Slope root: + or -.
    #[arg(long, value_parser = parse_branch, default_value = "+", allow_hyphen_values = true)]
    pub branch: Branch,
    /// Phase of the helix.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub c1: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub c2: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub c3: f64,
    /// Angle profile of the b3zero families: offset,slope,amplitude,frequency,phase.
    #[arg(long, allow_hyphen_values = true)]
    pub profile: Option<String>,
    /// Use the closed-form slope constants instead of the quadratic roots.
    #[arg(long)]
    pub as_printed: bool,
    /// Parameter grid a:b:step. Defaults to -1:1:0.1, or the sample
    /// parameters of --input.
    #[arg(long, allow_hyphen_values = true)]
    pub range: Option<RangeSpec>,
    /// Base finite-difference step for --input.
    #[arg(long)]
    pub fd_step: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Frenet degeneracy tolerance (`frenet`) or verdict tolerance (`residual`).
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Run a single check.
    #[arg(long)]
    pub claim: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Replace the connection table with a corrupted one.
    #[arg(long, hide = true)]
    pub tamper_connection: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        let r: RangeSpec = "-2:2:0.01".parse().unwrap();
        assert_eq!((r.start, r.end, r.step), (-2.0, 2.0, 0.01));
        for bad in ["0:1", "1:0:0.1", "0:1:0", "0:1:-0.1", "a:1:0.1", "0:inf:0.1"] {
            assert!(bad.parse::<RangeSpec>().is_err(), "{bad}");
        }
    }
}
