//! Closed-form curve families.
//!
//! The biharmonic families are helices whose tangent has constant third
//! component and rotates hyperbolically in the `e1, e2` plane:
//! spacelike `T = (cosh α0 cosh u, cosh α0 sinh u, sinh α0)` and
//! timelike `T = (sinh ν0 cosh u, sinh ν0 sinh u, cosh ν0)` with
//! `u = a s + b`. The slope `a` is a root of the quadratic obtained by
//! substituting the helix curvatures into the biharmonicity identity.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::curves::{CoordinateCurve, Curve, FdConfig, FrameCurve, Jet, Point, PositionJet, TangentJet};
use crate::error::{GeometryError, Result};
use crate::frame::{Boost, FrameVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyKind {
    SpacelikeBiharmonic,
    TimelikeBiharmonic,
    SpacelikeHorizontal,
    B3ZeroSpacelike,
    B3ZeroTimelike,
    TimelikeHorizontalHelix,
    Geodesic,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::SpacelikeBiharmonic,
        FamilyKind::TimelikeBiharmonic,
        FamilyKind::SpacelikeHorizontal,
        FamilyKind::B3ZeroSpacelike,
        FamilyKind::B3ZeroTimelike,
        FamilyKind::TimelikeHorizontalHelix,
        FamilyKind::Geodesic,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::SpacelikeBiharmonic => "spacelike",
            FamilyKind::TimelikeBiharmonic => "timelike",
            FamilyKind::SpacelikeHorizontal => "spacelike-horizontal",
            FamilyKind::B3ZeroSpacelike => "b3zero-spacelike",
            FamilyKind::B3ZeroTimelike => "b3zero-timelike",
            FamilyKind::TimelikeHorizontalHelix => "timelike-horizontal-helix",
            FamilyKind::Geodesic => "geodesic",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| GeometryError::RejectedInput(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(&self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

impl FromStr for Branch {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Branch::Plus),
            "-" | "minus" => Ok(Branch::Minus),
            _ => Err(GeometryError::RejectedInput(format!("branch must be + or -, got {s:?}"))),
        }
    }
}

/// Source of the slope constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SlopeMode {
    /// Roots of the quadratic; these give vanishing bitension.
    Quadratic,
    /// Closed forms with discriminants `5 sinh² α0 + 1`, `5 cosh² ν0 − 1`
    /// and horizontal slope `±1`. Kept to reproduce their failure.
    AsPrinted,
}

/// Both slope roots `(plus, minus)`.
pub fn solve_slope(kind: FamilyKind, shape: f64, mode: SlopeMode) -> Result<(f64, f64)> {
    if !shape.is_finite() {
        return Err(GeometryError::RejectedInput(format!("shape parameter {shape} is not finite")));
    }
    let (centre, disc) = match (kind, mode) {
        (FamilyKind::SpacelikeBiharmonic, SlopeMode::Quadratic) => (shape.sinh(), 5.0 * shape.sinh().powi(2) + 4.0),
        (FamilyKind::SpacelikeBiharmonic, SlopeMode::AsPrinted) => (shape.sinh(), 5.0 * shape.sinh().powi(2) + 1.0),
        (FamilyKind::SpacelikeHorizontal, SlopeMode::Quadratic) => (0.0, 4.0),
        (FamilyKind::SpacelikeHorizontal, SlopeMode::AsPrinted) => (0.0, 1.0),
        (FamilyKind::TimelikeBiharmonic, SlopeMode::Quadratic) => (shape.cosh(), 5.0 * shape.cosh().powi(2) - 4.0),
        (FamilyKind::TimelikeBiharmonic, SlopeMode::AsPrinted) => (shape.cosh(), 5.0 * shape.cosh().powi(2) - 1.0),
        _ => return Err(GeometryError::RejectedInput(format!("family {kind} has no slope equation"))),
    };
    let root = disc.sqrt();
    Ok((centre + root, centre - root))
}

/// Value of the slope quadratic at `slope`: spacelike
/// `a² − 2a sinh α0 − 4 − 4 sinh² α0`, timelike `a² − 2a cosh ν0 + 4 − 4 cosh² ν0`.
pub fn slope_quadratic(kind: FamilyKind, shape: f64, slope: f64) -> Result<f64> {
    match kind {
        FamilyKind::SpacelikeBiharmonic | FamilyKind::SpacelikeHorizontal => {
            let sh = if kind == FamilyKind::SpacelikeHorizontal { 0.0 } else { shape.sinh() };
            Ok(slope * slope - 2.0 * slope * sh - 4.0 - 4.0 * sh * sh)
        }
        FamilyKind::TimelikeBiharmonic => {
            let ch = shape.cosh();
            Ok(slope * slope - 2.0 * slope * ch + 4.0 - 4.0 * ch * ch)
        }
        _ => Err(GeometryError::RejectedInput(format!("family {kind} has no slope equation"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Causality {
    Spacelike,
    Timelike,
}

impl Causality {
    /// `g(T, T)`.
    pub fn eps(&self) -> f64 {
        match self {
            Causality::Spacelike => 1.0,
            Causality::Timelike => -1.0,
        }
    }
}

/// Helix with tangent `(A cosh u, A sinh u, T3)`, `u = slope·s + phase`,
/// where `(A, T3) = (cosh θ, sinh θ)` for spacelike and `(sinh θ, cosh θ)`
/// for timelike curves with shape parameter `θ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConstantAngleHelix {
    pub causality: Causality,
    pub shape: f64,
    pub slope: f64,
    pub phase: f64,
    pub offsets: [f64; 3],
}

impl ConstantAngleHelix {
    pub fn new(causality: Causality, shape: f64, slope: f64, phase: f64, offsets: [f64; 3]) -> Result<Self> {
        if ![shape, slope, phase].iter().chain(offsets.iter()).all(|v| v.is_finite()) {
            return Err(GeometryError::RejectedInput("helix parameters must be finite".into()));
        }
        Ok(ConstantAngleHelix { causality, shape, slope, phase, offsets })
    }

    pub fn amplitude(&self) -> f64 {
        match self.causality {
            Causality::Spacelike => self.shape.cosh(),
            Causality::Timelike => self.shape.sinh(),
        }
    }

    pub fn vertical(&self) -> f64 {
        match self.causality {
            Causality::Spacelike => self.shape.sinh(),
            Causality::Timelike => self.shape.cosh(),
        }
    }

    /// `A (slope − 2 T3)`, the signed coefficient of `∇_T T` along
    /// `sinh u e1 + cosh u e2`.
    pub fn curvature_coefficient(&self) -> f64 {
        self.amplitude() * (self.slope - 2.0 * self.vertical())
    }

    pub fn expected_k1(&self) -> f64 {
        self.curvature_coefficient().abs()
    }

    /// `T3 (slope − 2 T3) − g(T, T)`.
    pub fn expected_k2(&self) -> f64 {
        self.vertical() * (self.slope - 2.0 * self.vertical()) - self.causality.eps()
    }

    /// `B3` for the normal `sinh u e1 + cosh u e2`.
    pub fn expected_b3_aligned(&self) -> f64 {
        self.amplitude()
    }

    /// `B3` under the orientation `N = ∇_T T / (k1 ε2)`, which is
    /// `−sign(A (slope − 2 T3))` times the aligned normal.
    pub fn expected_b3(&self) -> f64 {
        -self.curvature_coefficient().signum() * self.amplitude()
    }

    /// The unit normal `sinh u e1 + cosh u e2`.
    pub fn aligned_normal(&self, s: f64) -> FrameVector {
        let u = self.slope * s + self.phase;
        FrameVector::raw([u.sinh(), u.cosh(), 0.0])
    }

    pub fn tangent_jet(&self, s: f64) -> TangentJet {
        let (b, jet) = self.boosted_tangent_jet(s);
        jet.boosted(b)
    }

    /// Boost by `u(s)` and the jet of `(A cosh(u − u(s)), A sinh(u − u(s)), T3)`.
    pub fn boosted_tangent_jet(&self, s: f64) -> (Boost, TangentJet) {
        let u = Jet([0.0, self.slope, 0.0, 0.0]);
        let amp = self.amplitude();
        let jet = TangentJet::from_components([amp * u.cosh(), amp * u.sinh(), Jet::constant(self.vertical())]);
        (Boost::new(self.slope * s + self.phase), jet)
    }

    /// Position and four derivatives. Requires a nonzero slope.
    pub fn position_jet(&self, s: f64) -> PositionJet {
        let a = self.slope;
        let amp = self.amplitude();
        let t3 = self.vertical();
        let [c1, c2, c3] = self.offsets;
        let u = a * s + self.phase;
        let (sh, ch) = (u.sinh(), u.cosh());
        let mut jet = [[0.0; 3]; 5];
        jet[0] = [
            amp / a * sh + c1,
            amp / a * ch + c2,
            2.0 * (t3 - amp * amp / a) * s + 2.0 * c1 * amp / a * ch - 2.0 * c2 * amp / a * sh + c3,
        ];
        let mut scale = amp;
        for (k, row) in jet.iter_mut().enumerate().skip(1) {
            let (odd, even) = if k % 2 == 1 { (ch, sh) } else { (sh, ch) };
            row[0] = scale * odd;
            row[1] = scale * even;
            row[2] = 2.0 * c1 * scale * even - 2.0 * c2 * scale * odd;
            scale *= a;
        }
        jet[1][2] += 2.0 * (t3 - amp * amp / a);
        jet
    }

    pub fn point(&self, s: f64) -> Point {
        self.position_jet(s)[0]
    }

    /// Coordinate curve with exact derivatives; frame quantities use the
    /// closed-form tangent.
    pub fn curve(&self) -> Result<CoordinateCurve> {
        if self.slope == 0.0 {
            return Err(GeometryError::DegenerateInput("position form needs a nonzero slope".into()));
        }
        let (p, t) = (*self, *self);
        Ok(CoordinateCurve::closed_form_with_boosted_tangent(
            move |s| p.position_jet(s),
            move |s| t.boosted_tangent_jet(s),
        ))
    }

    /// The same coordinates differentiated numerically.
    pub fn finite_difference_curve(&self, fd: FdConfig) -> Result<CoordinateCurve> {
        if self.slope == 0.0 {
            return Err(GeometryError::DegenerateInput("position form needs a nonzero slope".into()));
        }
        let p = *self;
        CoordinateCurve::finite_difference(move |s| p.point(s), fd)
    }

    pub fn frame_curve(&self) -> FrameCurve {
        let h = *self;
        FrameCurve::analytic_boosted(move |s| h.boosted_tangent_jet(s))
    }
}

fn check_finite(values: &[f64]) -> Result<()> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(GeometryError::RejectedInput("family parameters must be finite".into()))
    }
}

pub fn spacelike_biharmonic_helix(
    alpha0: f64,
    branch: Branch,
    mode: SlopeMode,
    b: f64,
    c: [f64; 3],
) -> Result<ConstantAngleHelix> {
    check_finite(&[alpha0, b, c[0], c[1], c[2]])?;
    let (plus, minus) = solve_slope(FamilyKind::SpacelikeBiharmonic, alpha0, mode)?;
    let slope = if branch == Branch::Plus { plus } else { minus };
    ConstantAngleHelix::new(Causality::Spacelike, alpha0, slope, b, c)
}

pub fn timelike_biharmonic_helix(
    nu0: f64,
    branch: Branch,
    mode: SlopeMode,
    b: f64,
    d: [f64; 3],
) -> Result<ConstantAngleHelix> {
    check_finite(&[nu0, b, d[0], d[1], d[2]])?;
    if nu0 == 0.0 {
        return Err(GeometryError::DegenerateGeodesic("ν0 = 0 gives the integral curve of e3".into()));
    }
    let (plus, minus) = solve_slope(FamilyKind::TimelikeBiharmonic, nu0, mode)?;
    let slope = if branch == Branch::Plus { plus } else { minus };
    ConstantAngleHelix::new(Causality::Timelike, nu0, slope, b, d)
}

/// `x = (1/a) cosh α0 sinh(as + b) + c1`, `y = (1/a) cosh α0 cosh(as + b) + c2`,
/// `z = 2(sinh α0 − cosh² α0 / a) s + (2c1/a) cosh α0 cosh(as + b)
///  − (2c2/a) cosh α0 sinh(as + b) + c3`.
pub fn make_spacelike_biharmonic(alpha0: f64, branch: Branch, b: f64, c: [f64; 3]) -> Result<CoordinateCurve> {
    spacelike_biharmonic_helix(alpha0, branch, SlopeMode::Quadratic, b, c)?.curve()
}

/// Timelike analogue with `sinh ν0` and `cosh ν0` exchanged.
pub fn make_timelike_biharmonic(nu0: f64, branch: Branch, b: f64, d: [f64; 3]) -> Result<CoordinateCurve> {
    timelike_biharmonic_helix(nu0, branch, SlopeMode::Quadratic, b, d)?.curve()
}

pub fn spacelike_horizontal_helix(branch: Branch, mode: SlopeMode, b: f64, c: [f64; 3]) -> Result<ConstantAngleHelix> {
    check_finite(&[b, c[0], c[1], c[2]])?;
    let (plus, minus) = solve_slope(FamilyKind::SpacelikeHorizontal, 0.0, mode)?;
    let slope = if branch == Branch::Plus { plus } else { minus };
    ConstantAngleHelix::new(Causality::Spacelike, 0.0, slope, b, c)
}

pub fn make_spacelike_horizontal(branch: Branch, b: f64, c: [f64; 3]) -> Result<CoordinateCurve> {
    spacelike_horizontal_helix(branch, SlopeMode::Quadratic, b, c)?.curve()
}

/// `α(s) = offset + slope·s + amplitude·sin(frequency·s + phase)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleProfile {
    pub offset: f64,
    pub slope: f64,
    pub amplitude: f64,
    pub frequency: f64,
    pub phase: f64,
}

impl AngleProfile {
    pub fn linear(offset: f64, slope: f64) -> Self {
        AngleProfile { offset, slope, amplitude: 0.0, frequency: 0.0, phase: 0.0 }
    }

    pub fn jet(&self, s: f64) -> Jet {
        Jet::linear(s, self.slope, self.offset) + self.amplitude * Jet::linear(s, self.frequency, self.phase).sin()
    }

    pub fn value(&self, s: f64) -> f64 {
        self.offset + self.slope * s + self.amplitude * (self.frequency * s + self.phase).sin()
    }

    pub fn derivative(&self, s: f64) -> f64 {
        self.slope + self.amplitude * self.frequency * (self.frequency * s + self.phase).cos()
    }

    fn is_constant(&self) -> bool {
        self.slope == 0.0 && (self.amplitude == 0.0 || self.frequency == 0.0)
    }
}

const GAUSS_NODES: [f64; 5] =
    [-0.906_179_845_938_664, -0.538_469_310_105_683_1, 0.0, 0.538_469_310_105_683_1, 0.906_179_845_938_664];
const GAUSS_WEIGHTS: [f64; 5] = [
    0.236_926_885_056_189_1,
    0.478_628_670_499_366_47,
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_47,
    0.236_926_885_056_189_1,
];
const QUADRATURE_PANELS: usize = 32;

/// Composite five-point Gauss–Legendre quadrature of `f` over `[a, b]`
/// with a fixed number of panels, so the result is smooth in `b`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let h = (b - a) / QUADRATURE_PANELS as f64;
    let mut total = 0.0;
    for p in 0..QUADRATURE_PANELS {
        let mid = a + (p as f64 + 0.5) * h;
        for (x, w) in GAUSS_NODES.iter().zip(GAUSS_WEIGHTS) {
            total += w * f(mid + 0.5 * h * x);
        }
    }
    0.5 * h * total
}

/// Curve with `B3 ≡ 0`: spacelike `T = (cosh α cosh β, cosh α sinh β, sinh α)`
/// with `β' = 2 sinh α`, or timelike `T = (sinh α cosh β, sinh α sinh β, cosh α)`
/// with `β' = 2 cosh α`, and `β(s0) = 0`.
pub fn make_b3zero_curve(causality: Causality, profile: AngleProfile, s_range: (f64, f64)) -> Result<FrameCurve> {
    let (s0, s1) = s_range;
    check_finite(&[profile.offset, profile.slope, profile.amplitude, profile.frequency, profile.phase, s0, s1])?;
    if s0 >= s1 {
        return Err(GeometryError::RejectedInput(format!("invalid range [{s0}, {s1}]")));
    }
    if profile.is_constant() {
        return Err(GeometryError::DegenerateGeodesic("constant angle profile".into()));
    }
    let n = 1000;
    let min_rate =
        (0..=n).map(|i| profile.derivative(s0 + (s1 - s0) * i as f64 / n as f64).abs()).fold(f64::INFINITY, f64::min);
    if min_rate < 1e-3 {
        return Err(GeometryError::DegenerateInput(format!(
            "angle profile is stationary on the range (min |α'| = {min_rate:e})"
        )));
    }
    let curve = FrameCurve::analytic_boosted(move |s| {
        let alpha = profile.jet(s);
        let (amp, vertical, rate) = match causality {
            Causality::Spacelike => (alpha.cosh(), alpha.sinh(), 2.0 * alpha.sinh()),
            Causality::Timelike => (alpha.sinh(), alpha.cosh(), 2.0 * alpha.cosh()),
        };
        let beta_value = match causality {
            Causality::Spacelike => integrate(|u| 2.0 * profile.value(u).sinh(), s0, s),
            Causality::Timelike => integrate(|u| 2.0 * profile.value(u).cosh(), s0, s),
        };
        let beta = Jet([0.0, rate.d(0), rate.d(1), rate.d(2)]);
        let jet = TangentJet::from_components([amp * beta.cosh(), amp * beta.sinh(), vertical]);
        (Boost::new(beta_value), jet)
    });
    curve.with_domain(s0, s1)
}

/// `T = (sinh ms, cosh ms, 0)`.
pub fn make_timelike_horizontal_helix(m: f64) -> Result<FrameCurve> {
    check_finite(&[m])?;
    if m == 0.0 {
        return Err(GeometryError::DegenerateGeodesic("m = 0 gives the integral curve of e2".into()));
    }
    Ok(FrameCurve::analytic_boosted(move |s| {
        let u = Jet([0.0, m, 0.0, 0.0]);
        (Boost::new(m * s), TangentJet::from_components([u.sinh(), u.cosh(), Jet::constant(0.0)]))
    }))
}

/// Integral curve of `e_{axis+1}` through `start`:
/// `e1: (x0 + s, y0, z0 − 2 y0 s)`, `e2: (x0, y0 + s, z0 + 2 x0 s)`, `e3: (x0, y0, z0 + 2s)`.
pub fn make_geodesic(axis: usize, start: Point) -> Result<CoordinateCurve> {
    check_finite(&start)?;
    let [x0, y0, _] = start;
    let velocity = match axis {
        0 => [1.0, 0.0, -2.0 * y0],
        1 => [0.0, 1.0, 2.0 * x0],
        2 => [0.0, 0.0, 2.0],
        _ => return Err(GeometryError::RejectedInput(format!("axis must be 0, 1 or 2, got {axis}"))),
    };
    Ok(CoordinateCurve::closed_form(move |s| {
        let p = std::array::from_fn(|i| start[i] + velocity[i] * s);
        [p, velocity, [0.0; 3], [0.0; 3], [0.0; 3]]
    }))
}

/// Random non-geodesic helix of either causal character; parameters in
/// moderate ranges and slope kept away from the geodesic value `2 T3`.
pub fn random_helix<R: Rng + ?Sized>(rng: &mut R) -> ConstantAngleHelix {
    let causality = if rng.gen_bool(0.5) { Causality::Spacelike } else { Causality::Timelike };
    let shape = match causality {
        Causality::Spacelike => rng.gen_range(-1.0..1.0),
        Causality::Timelike => {
            let v: f64 = rng.gen_range(0.3..1.2);
            if rng.gen_bool(0.5) {
                v
            } else {
                -v
            }
        }
    };
    let vertical = match causality {
        Causality::Spacelike => f64::sinh(shape),
        Causality::Timelike => f64::cosh(shape),
    };
    let slope = loop {
        let a: f64 = rng.gen_range(-3.0..3.0);
        if a.abs() > 0.2 && (a - 2.0 * vertical).abs() > 0.2 {
            break a;
        }
    };
    let phase = rng.gen_range(-1.0..1.0);
    let offsets = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    ConstantAngleHelix { causality, shape, slope, phase, offsets }
}

/// Random profile with `|α'| >= 0.1`.
pub fn random_profile<R: Rng + ?Sized>(rng: &mut R) -> AngleProfile {
    let slope_mag: f64 = rng.gen_range(0.5..1.5);
    let slope = if rng.gen_bool(0.5) { slope_mag } else { -slope_mag };
    let frequency = rng.gen_range(0.5..2.0);
    let amplitude = rng.gen_range(0.0..(0.8 * slope_mag / frequency));
    AngleProfile { offset: rng.gen_range(-0.8..0.8), slope, amplitude, frequency, phase: rng.gen_range(-PI..PI) }
}

/// Parameters accepted by [`build`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FamilyParams {
    pub kind: FamilyKind,
    /// `α0`, `ν0` or `m`; for geodesics the axis index 1, 2 or 3.
    pub shape: f64,
    pub branch: Branch,
    pub phase: f64,
    pub constants: [f64; 3],
    pub slope_mode: SlopeMode,
    /// Angle profile for the `B3 = 0` families.
    pub profile: Option<AngleProfile>,
    /// Evaluation range, needed by the `B3 = 0` families.
    pub range: Option<(f64, f64)>,
}

impl FamilyParams {
    pub fn new(kind: FamilyKind) -> Self {
        FamilyParams {
            kind,
            shape: 0.0,
            branch: Branch::Plus,
            phase: 0.0,
            constants: [0.0; 3],
            slope_mode: SlopeMode::Quadratic,
            profile: None,
            range: None,
        }
    }
}

/// A generated curve of either representation.
#[derive(Debug, Clone)]
pub enum GeneratedCurve {
    Coordinate(CoordinateCurve),
    Frame(FrameCurve),
}

impl GeneratedCurve {
    pub fn as_curve(&self) -> &dyn Curve {
        match self {
            GeneratedCurve::Coordinate(c) => c,
            GeneratedCurve::Frame(c) => c,
        }
    }
}

pub fn build(p: &FamilyParams) -> Result<GeneratedCurve> {
    let coord = GeneratedCurve::Coordinate;
    Ok(match p.kind {
        FamilyKind::SpacelikeBiharmonic => {
            coord(spacelike_biharmonic_helix(p.shape, p.branch, p.slope_mode, p.phase, p.constants)?.curve()?)
        }
        FamilyKind::TimelikeBiharmonic => {
            coord(timelike_biharmonic_helix(p.shape, p.branch, p.slope_mode, p.phase, p.constants)?.curve()?)
        }
        FamilyKind::SpacelikeHorizontal => {
            coord(spacelike_horizontal_helix(p.branch, p.slope_mode, p.phase, p.constants)?.curve()?)
        }
        FamilyKind::B3ZeroSpacelike | FamilyKind::B3ZeroTimelike => {
            let causality =
                if p.kind == FamilyKind::B3ZeroSpacelike { Causality::Spacelike } else { Causality::Timelike };
            let profile = p.profile.unwrap_or(AngleProfile::linear(p.shape, 1.0));
            let range =
                p.range.ok_or_else(|| GeometryError::RejectedInput("B3 = 0 family needs a parameter range".into()))?;
            GeneratedCurve::Frame(make_b3zero_curve(causality, profile, range)?)
        }
        FamilyKind::TimelikeHorizontalHelix => GeneratedCurve::Frame(make_timelike_horizontal_helix(p.shape)?),
        FamilyKind::Geodesic => {
            let axis = p.shape;
            if ![1.0, 2.0, 3.0].contains(&axis) {
                return Err(GeometryError::RejectedInput(format!("geodesic axis must be 1, 2 or 3, got {axis}")));
            }
            coord(make_geodesic(axis as usize - 1, p.constants)?)
        }
    })
}
