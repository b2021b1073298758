//! Resolves the curve flags into a curve and a parameter grid.

use std::fs::File;
use std::io::BufReader;
use std::sync::Arc;

use hh3_core::curves::{integrate_frame_curve, stepped_grid, CoordinateCurve, Curve, FdConfig, SampleTable};
use hh3_core::generators::{build, AngleProfile, FamilyKind, FamilyParams, GeneratedCurve, SlopeMode};

use crate::args::{CurveArgs, RangeSpec};
use crate::{CliError, Result};

const DEFAULT_RANGE: RangeSpec = RangeSpec { start: -1.0, end: 1.0, step: 0.1 };

/// Largest step of the Runge–Kutta integration that recovers positions of
/// curves given by their tangent.
const MAX_ODE_STEP: f64 = 1e-3;

pub struct Source {
    pub curve: Arc<dyn Curve>,
    pub grid: Vec<f64>,
    positions: Positions,
}

enum Positions {
    Known(CoordinateCurve),
    /// Integrate from `start` at the first grid point.
    Integrate {
        start: [f64; 3],
    },
}

impl Source {
    /// Coordinate curve carrying the positions over the grid.
    pub fn positions(&self) -> Result<CoordinateCurve> {
        match &self.positions {
            Positions::Known(c) => Ok(c.clone()),
            Positions::Integrate { start } => {
                let (a, b) = (self.grid[0], self.grid[self.grid.len() - 1]);
                let spacing = (b - a) / (self.grid.len() - 1) as f64;
                let step = spacing / (spacing / MAX_ODE_STEP).ceil();
                Ok(integrate_frame_curve(self.curve.as_ref(), *start, (a, b), step)?)
            }
        }
    }
}

pub fn load(a: &CurveArgs) -> Result<Source> {
    match (&a.family, &a.input) {
        (Some(kind), None) => from_family(*kind, a),
        (None, Some(_)) => from_input(a),
        _ => Err(CliError::Input("exactly one of --family or --input is required".into())),
    }
}

fn from_input(a: &CurveArgs) -> Result<Source> {
    let path = a.input.as_ref().expect("checked by caller");
    let family_flags = [
        ("--alpha0", a.alpha0.is_some()),
        ("--nu0", a.nu0.is_some()),
        ("--m", a.m.is_some()),
        ("--axis", a.axis.is_some()),
        ("--profile", a.profile.is_some()),
        ("--as-printed", a.as_printed),
    ];
    reject_flags(family_flags, "--input")?;
    let file = File::open(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let table = SampleTable::from_csv(BufReader::new(file))?;
    let fd = match a.fd_step {
        Some(h) => FdConfig::new(h, true)?,
        None => FdConfig::default(),
    };
    let grid = match a.range {
        Some(r) => stepped_grid(r.start, r.end, r.step)?,
        None => table.params().to_vec(),
    };
    let curve = CoordinateCurve::sampled(table, fd)?;
    Ok(Source { curve: Arc::new(curve.clone()), grid, positions: Positions::Known(curve) })
}

fn reject_flags(flags: impl IntoIterator<Item = (&'static str, bool)>, context: &str) -> Result<()> {
    match flags.into_iter().find(|(_, set)| *set) {
        Some((name, _)) => Err(CliError::Input(format!("{name} does not apply to {context}"))),
        None => Ok(()),
    }
}

fn from_family(kind: FamilyKind, a: &CurveArgs) -> Result<Source> {
    let context = format!("family {kind}");
    if a.fd_step.is_some() {
        return Err(CliError::Input(format!("--fd-step does not apply to {context}")));
    }
    let range = a.range.unwrap_or(DEFAULT_RANGE);
    let mut p = FamilyParams::new(kind);
    p.branch = a.branch;
    p.phase = a.b;
    p.constants = [a.c1, a.c2, a.c3];
    p.range = Some((range.start, range.end));
    let helix = matches!(
        kind,
        FamilyKind::SpacelikeBiharmonic | FamilyKind::TimelikeBiharmonic | FamilyKind::SpacelikeHorizontal
    );
    if a.as_printed && !helix {
        return Err(CliError::Input(format!("--as-printed does not apply to {context}")));
    }
    if a.as_printed {
        p.slope_mode = SlopeMode::AsPrinted;
    }
    if a.profile.is_some() && !matches!(kind, FamilyKind::B3ZeroSpacelike | FamilyKind::B3ZeroTimelike) {
        return Err(CliError::Input(format!("--profile does not apply to {context}")));
    }

    // (flag, value, required) for the shape parameter of each family
    let shape = match kind {
        FamilyKind::SpacelikeBiharmonic => Some(("--alpha0", a.alpha0, true)),
        FamilyKind::TimelikeBiharmonic => Some(("--nu0", a.nu0, true)),
        FamilyKind::B3ZeroSpacelike => Some(("--alpha0", a.alpha0, false)),
        FamilyKind::B3ZeroTimelike => Some(("--nu0", a.nu0, false)),
        FamilyKind::TimelikeHorizontalHelix => Some(("--m", a.m, true)),
        FamilyKind::Geodesic => Some(("--axis", a.axis.map(f64::from), true)),
        FamilyKind::SpacelikeHorizontal => None,
    };
    let used = shape.map(|(n, _, _)| n);
    let all = [
        ("--alpha0", a.alpha0.is_some()),
        ("--nu0", a.nu0.is_some()),
        ("--m", a.m.is_some()),
        ("--axis", a.axis.is_some()),
    ];
    reject_flags(all.into_iter().filter(|(n, _)| Some(*n) != used), &context)?;
    if let Some((name, value, required)) = shape {
        match value {
            Some(v) => p.shape = v,
            None if required => return Err(CliError::Input(format!("{context} needs {name}"))),
            None => {}
        }
    }
    if let Some(spec) = &a.profile {
        if shape.and_then(|(_, v, _)| v).is_some() {
            return Err(CliError::Input("give either --profile or an angle offset, not both".into()));
        }
        p.profile = Some(parse_profile(spec)?);
    }

    let grid = stepped_grid(range.start, range.end, range.step)?;
    let (curve, positions): (Arc<dyn Curve>, _) = match build(&p)? {
        GeneratedCurve::Coordinate(c) => (Arc::new(c.clone()), Positions::Known(c)),
        GeneratedCurve::Frame(c) => (Arc::new(c), Positions::Integrate { start: p.constants }),
    };
    Ok(Source { curve, grid, positions })
}

fn parse_profile(spec: &str) -> Result<AngleProfile> {
    let vals: Vec<f64> = spec
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| CliError::Input(format!("cannot parse profile {spec:?}")))?;
    let [offset, slope, amplitude, frequency, phase] = vals[..] else {
        return Err(CliError::Input(format!("profile needs offset,slope,amplitude,frequency,phase, got {spec:?}")));
    };
    Ok(AngleProfile { offset, slope, amplitude, frequency, phase })
}
