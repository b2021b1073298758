//! Curve representations and derivative access.
//!
//! A curve is anything that can report the jet `(T, T', T'', T''')` of its
//! velocity in frame components. Coordinate curves `s -> (x, y, z)` derive
//! the jet from position derivatives up to order four; frame curves supply
//! the tangent directly. Either kind is backed by closed-form derivatives or
//! by finite differences.

pub mod fd;
pub mod jet;
pub mod sampled;

use std::fmt;
use std::sync::Arc;

use crate::error::{GeometryError, Result};
use crate::frame::{causal_character, inner, Boost, CausalCharacter, FrameVector};

pub use fd::FdConfig;
pub use jet::Jet;
pub use sampled::SampleTable;

/// Coordinates `(x, y, z)` of a point of the group.
pub type Point = [f64; 3];

/// A point and its first four parameter derivatives.
pub type PositionJet = [Point; 5];

/// Velocity `T` in frame components together with `T'`, `T''`, `T'''`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TangentJet {
    pub t: FrameVector,
    pub d1: FrameVector,
    pub d2: FrameVector,
    pub d3: FrameVector,
}

impl TangentJet {
    /// Assembles a jet from one scalar jet per frame component.
    pub fn from_components(c: [Jet; 3]) -> Self {
        let v = |k: usize| FrameVector::raw([c[0].d(k), c[1].d(k), c[2].d(k)]);
        TangentJet { t: v(0), d1: v(1), d2: v(2), d3: v(3) }
    }

    pub fn is_finite(&self) -> bool {
        self.t.is_finite() && self.d1.is_finite() && self.d2.is_finite() && self.d3.is_finite()
    }

    /// The jet of the rotated field; rotation by a constant commutes with
    /// differentiation.
    pub fn boosted(&self, b: Boost) -> TangentJet {
        TangentJet { t: b.apply(self.t), d1: b.apply(self.d1), d2: b.apply(self.d2), d3: b.apply(self.d3) }
    }
}

/// Whether derivatives are exact or numerical; selects default tolerances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backing {
    Analytic,
    FiniteDifference,
}

pub trait Curve: Send + Sync {
    fn tangent_jet(&self, s: f64) -> Result<TangentJet>;

    /// A constant boost `L` and the jet `J` with `L(J)` equal to the tangent
    /// jet. Curves whose components grow along the parameter return a `J`
    /// of moderate size, which keeps products of components accurate.
    fn boosted_tangent_jet(&self, s: f64) -> Result<(Boost, TangentJet)> {
        Ok((Boost::IDENTITY, self.tangent_jet(s)?))
    }

    /// Velocity only. Implementations override this when it is cheaper than
    /// the full jet.
    fn tangent(&self, s: f64) -> Result<FrameVector> {
        Ok(self.tangent_jet(s)?.t)
    }

    /// Position, when the curve carries coordinates.
    fn position(&self, _s: f64) -> Option<Point> {
        None
    }

    fn backing(&self) -> Backing;

    /// Closed parameter interval on which the curve can be evaluated.
    fn domain(&self) -> Option<(f64, f64)> {
        None
    }
}

fn check_domain(domain: Option<(f64, f64)>, s: f64) -> Result<()> {
    if !s.is_finite() {
        return Err(GeometryError::RejectedInput(format!("parameter {s} is not finite")));
    }
    match domain {
        Some((a, b)) if s < a || s > b => {
            Err(GeometryError::RejectedInput(format!("parameter {s} outside curve domain [{a}, {b}]")))
        }
        _ => Ok(()),
    }
}

fn finite_jet(jet: TangentJet, s: f64) -> Result<TangentJet> {
    if jet.is_finite() {
        Ok(jet)
    } else {
        Err(GeometryError::NonFinite(format!("tangent jet at s = {s}")))
    }
}

/// Frame components of the velocity of `(x, y, z)`:
/// `(x', y', ½z' + x'y − xy')`.
pub fn velocity_in_frame(p: Point, dp: Point) -> FrameVector {
    FrameVector::raw([dp[0], dp[1], 0.5 * dp[2] + dp[0] * p[1] - p[0] * dp[1]])
}

fn binomial(n: usize, k: usize) -> f64 {
    const TABLE: [[f64; 4]; 4] =
        [[1.0, 0.0, 0.0, 0.0], [1.0, 1.0, 0.0, 0.0], [1.0, 2.0, 1.0, 0.0], [1.0, 3.0, 3.0, 1.0]];
    TABLE[n][k]
}

/// Converts position derivatives to the velocity jet in frame components,
/// differentiating `x'y − xy'` by the Leibniz rule.
pub fn tangent_jet_from_position(p: &PositionJet) -> TangentJet {
    let comp = |n: usize| {
        let mut twist = 0.0;
        for k in 0..=n {
            twist += binomial(n, k) * (p[k + 1][0] * p[n - k][1] - p[k][0] * p[n - k + 1][1]);
        }
        FrameVector::raw([p[n + 1][0], p[n + 1][1], 0.5 * p[n + 1][2] + twist])
    };
    TangentJet { t: comp(0), d1: comp(1), d2: comp(2), d3: comp(3) }
}

type PositionJetFn = dyn Fn(f64) -> PositionJet + Send + Sync;
type BoostedJetFn = dyn Fn(f64) -> (Boost, TangentJet) + Send + Sync;
type PointFn = dyn Fn(f64) -> Point + Send + Sync;
type VectorFn = dyn Fn(f64) -> FrameVector + Send + Sync;

#[derive(Clone)]
enum CoordinateBacking {
    ClosedForm { position: Arc<PositionJetFn>, tangent: Option<Arc<BoostedJetFn>> },
    FiniteDifference { position: Arc<PointFn>, fd: FdConfig },
    Sampled { table: Arc<SampleTable>, fd: FdConfig },
}

/// A curve given in coordinates `s -> (x(s), y(s), z(s))`.
#[derive(Clone)]
pub struct CoordinateCurve {
    backing: CoordinateBacking,
}

impl fmt::Debug for CoordinateCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.backing {
            CoordinateBacking::ClosedForm { .. } => "closed-form",
            CoordinateBacking::FiniteDifference { .. } => "finite-difference",
            CoordinateBacking::Sampled { .. } => "sampled",
        };
        f.debug_struct("CoordinateCurve").field("backing", &kind).finish()
    }
}

impl CoordinateCurve {
    /// Closed-form curve; `position` returns the point and its first four
    /// derivatives.
    pub fn closed_form<F>(position: F) -> Self
    where
        F: Fn(f64) -> PositionJet + Send + Sync + 'static,
    {
        CoordinateCurve { backing: CoordinateBacking::ClosedForm { position: Arc::new(position), tangent: None } }
    }

    /// Closed-form curve that also knows its frame velocity jet exactly.
    /// The tangent is used for all frame quantities, avoiding the
    /// cancellation in `x'y − xy'` far from the origin.
    pub fn closed_form_with_tangent<F, G>(position: F, tangent: G) -> Self
    where
        F: Fn(f64) -> PositionJet + Send + Sync + 'static,
        G: Fn(f64) -> TangentJet + Send + Sync + 'static,
    {
        Self::closed_form_with_boosted_tangent(position, move |s| (Boost::IDENTITY, tangent(s)))
    }

    /// As [`CoordinateCurve::closed_form_with_tangent`], with the tangent
    /// jet given relative to a boost (see [`Curve::boosted_tangent_jet`]).
    pub fn closed_form_with_boosted_tangent<F, G>(position: F, tangent: G) -> Self
    where
        F: Fn(f64) -> PositionJet + Send + Sync + 'static,
        G: Fn(f64) -> (Boost, TangentJet) + Send + Sync + 'static,
    {
        CoordinateCurve {
            backing: CoordinateBacking::ClosedForm { position: Arc::new(position), tangent: Some(Arc::new(tangent)) },
        }
    }

    pub fn finite_difference<F>(position: F, fd: FdConfig) -> Result<Self>
    where
        F: Fn(f64) -> Point + Send + Sync + 'static,
    {
        fd.validate()?;
        Ok(CoordinateCurve { backing: CoordinateBacking::FiniteDifference { position: Arc::new(position), fd } })
    }

    pub fn sampled(table: SampleTable, fd: FdConfig) -> Result<Self> {
        fd.validate()?;
        Ok(CoordinateCurve { backing: CoordinateBacking::Sampled { table: Arc::new(table), fd } })
    }

    /// The sample table of a sampled curve.
    pub fn samples(&self) -> Option<&SampleTable> {
        match &self.backing {
            CoordinateBacking::Sampled { table, .. } => Some(table),
            _ => None,
        }
    }

    pub fn point(&self, s: f64) -> Result<Point> {
        check_domain(self.domain(), s)?;
        Ok(match &self.backing {
            CoordinateBacking::ClosedForm { position, .. } => position(s)[0],
            CoordinateBacking::FiniteDifference { position, .. } => position(s),
            CoordinateBacking::Sampled { table, .. } => table.interpolate(s),
        })
    }

    /// Position and its first four derivatives.
    pub fn position_jet(&self, s: f64) -> Result<PositionJet> {
        check_domain(self.domain(), s)?;
        match &self.backing {
            CoordinateBacking::ClosedForm { position, .. } => Ok(position(s)),
            CoordinateBacking::FiniteDifference { position, fd } => Ok(fd_position_jet(&**position, s, fd)),
            CoordinateBacking::Sampled { table, fd } => {
                let start = table.window_start(s);
                let f = |u: f64| table.interpolate_in(start, u);
                Ok(fd_position_jet(&f, s, fd))
            }
        }
    }

    /// `w(γ') = z' + 2x'y − 2xy'`, the horizontality form on the velocity.
    pub fn horizontality_form(&self, s: f64) -> Result<f64> {
        let (p, dp) = self.first_derivative(s)?;
        Ok(dp[2] + 2.0 * dp[0] * p[1] - 2.0 * p[0] * dp[1])
    }

    fn first_derivative(&self, s: f64) -> Result<(Point, Point)> {
        check_domain(self.domain(), s)?;
        Ok(match &self.backing {
            CoordinateBacking::ClosedForm { position, .. } => {
                let j = position(s);
                (j[0], j[1])
            }
            CoordinateBacking::FiniteDifference { position, fd } => {
                (position(s), fd::derivative(&**position, s, 1, fd))
            }
            CoordinateBacking::Sampled { table, fd } => {
                let start = table.window_start(s);
                let f = |u: f64| table.interpolate_in(start, u);
                (f(s), fd::derivative(&f, s, 1, fd))
            }
        })
    }
}

fn fd_position_jet<F: Fn(f64) -> Point + ?Sized>(f: &F, s: f64, fd: &FdConfig) -> PositionJet {
    let g = |u: f64| f(u);
    [
        g(s),
        fd::derivative(&g, s, 1, fd),
        fd::derivative(&g, s, 2, fd),
        fd::derivative(&g, s, 3, fd),
        fd::derivative(&g, s, 4, fd),
    ]
}

impl Curve for CoordinateCurve {
    fn tangent_jet(&self, s: f64) -> Result<TangentJet> {
        let (b, jet) = self.boosted_tangent_jet(s)?;
        finite_jet(jet.boosted(b), s)
    }

    fn boosted_tangent_jet(&self, s: f64) -> Result<(Boost, TangentJet)> {
        if let CoordinateBacking::ClosedForm { tangent: Some(t), .. } = &self.backing {
            check_domain(self.domain(), s)?;
            let (b, jet) = t(s);
            return Ok((b, finite_jet(jet, s)?));
        }
        Ok((Boost::IDENTITY, finite_jet(tangent_jet_from_position(&self.position_jet(s)?), s)?))
    }

    fn tangent(&self, s: f64) -> Result<FrameVector> {
        if let CoordinateBacking::ClosedForm { tangent: Some(t), .. } = &self.backing {
            check_domain(self.domain(), s)?;
            let (b, jet) = t(s);
            return Ok(b.apply(jet.t));
        }
        tangent_frame_components(self, s)
    }

    fn position(&self, s: f64) -> Option<Point> {
        self.point(s).ok()
    }

    fn backing(&self) -> Backing {
        match self.backing {
            CoordinateBacking::ClosedForm { .. } => Backing::Analytic,
            _ => Backing::FiniteDifference,
        }
    }

    fn domain(&self) -> Option<(f64, f64)> {
        match &self.backing {
            CoordinateBacking::Sampled { table, .. } => Some(table.domain()),
            _ => None,
        }
    }
}

#[derive(Clone)]
enum FrameBacking {
    Analytic(Arc<BoostedJetFn>),
    FiniteDifference {
        tangent: Arc<VectorFn>,
        fd: FdConfig,
    },
    /// Differences the tangent in the boost chart of the evaluation point.
    ChartedFiniteDifference {
        chart: Arc<BoostedJetFn>,
        fd: FdConfig,
    },
}

/// A curve given by the frame components of its unit tangent.
#[derive(Clone)]
pub struct FrameCurve {
    backing: FrameBacking,
    domain: Option<(f64, f64)>,
}

impl fmt::Debug for FrameCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.backing {
            FrameBacking::Analytic(_) => "analytic",
            FrameBacking::FiniteDifference { .. } | FrameBacking::ChartedFiniteDifference { .. } => "finite-difference",
        };
        f.debug_struct("FrameCurve").field("backing", &kind).field("domain", &self.domain).finish()
    }
}

impl FrameCurve {
    pub fn analytic<F>(tangent: F) -> Self
    where
        F: Fn(f64) -> TangentJet + Send + Sync + 'static,
    {
        Self::analytic_boosted(move |s| (Boost::IDENTITY, tangent(s)))
    }

    /// Exact tangent jet given relative to a boost (see
    /// [`Curve::boosted_tangent_jet`]).
    pub fn analytic_boosted<F>(tangent: F) -> Self
    where
        F: Fn(f64) -> (Boost, TangentJet) + Send + Sync + 'static,
    {
        FrameCurve { backing: FrameBacking::Analytic(Arc::new(tangent)), domain: None }
    }

    pub fn finite_difference<F>(tangent: F, fd: FdConfig) -> Result<Self>
    where
        F: Fn(f64) -> FrameVector + Send + Sync + 'static,
    {
        fd.validate()?;
        Ok(FrameCurve { backing: FrameBacking::FiniteDifference { tangent: Arc::new(tangent), fd }, domain: None })
    }

    /// Restricts evaluation to `[a, b]`.
    pub fn with_domain(mut self, a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(GeometryError::RejectedInput(format!("invalid domain [{a}, {b}]")));
        }
        self.domain = Some((a, b));
        Ok(self)
    }

    /// Same tangent field, derivatives taken by finite differences.
    ///
    /// An analytic curve keeps its boost: the stencil samples the tangent
    /// re-expressed relative to the boost at the evaluation point, so the
    /// differenced components stay of moderate size.
    pub fn to_finite_difference(&self, fd: FdConfig) -> Result<Self> {
        fd.validate()?;
        let backing = match &self.backing {
            FrameBacking::Analytic(f) => FrameBacking::ChartedFiniteDifference { chart: Arc::clone(f), fd },
            FrameBacking::FiniteDifference { tangent, .. } => {
                FrameBacking::FiniteDifference { tangent: Arc::clone(tangent), fd }
            }
            FrameBacking::ChartedFiniteDifference { chart, .. } => {
                FrameBacking::ChartedFiniteDifference { chart: Arc::clone(chart), fd }
            }
        };
        Ok(FrameCurve { backing, domain: self.domain })
    }

    /// Largest `| |g(T,T)| − 1 |` over the grid.
    pub fn unit_speed_defect(&self, grid: &[f64]) -> Result<f64> {
        let mut worst = 0.0_f64;
        for &s in grid {
            let t = self.tangent(s)?;
            worst = worst.max((inner(t, t).abs() - 1.0).abs());
        }
        Ok(worst)
    }
}

impl Curve for FrameCurve {
    fn tangent_jet(&self, s: f64) -> Result<TangentJet> {
        let (b, jet) = self.boosted_tangent_jet(s)?;
        finite_jet(jet.boosted(b), s)
    }

    fn boosted_tangent_jet(&self, s: f64) -> Result<(Boost, TangentJet)> {
        check_domain(self.domain, s)?;
        let (b, jet) = match &self.backing {
            FrameBacking::Analytic(f) => f(s),
            FrameBacking::FiniteDifference { tangent, fd } => (Boost::IDENTITY, difference_jet(&|u| tangent(u), s, fd)),
            FrameBacking::ChartedFiniteDifference { chart, fd } => {
                let b0 = chart(s).0;
                let local = |u: f64| {
                    let (b, jet) = chart(u);
                    Boost::new(b.angle - b0.angle).apply(jet.t)
                };
                (b0, difference_jet(&local, s, fd))
            }
        };
        Ok((b, finite_jet(jet, s)?))
    }

    fn tangent(&self, s: f64) -> Result<FrameVector> {
        check_domain(self.domain, s)?;
        let t = match &self.backing {
            FrameBacking::Analytic(f) | FrameBacking::ChartedFiniteDifference { chart: f, .. } => {
                let (b, jet) = f(s);
                b.apply(jet.t)
            }
            FrameBacking::FiniteDifference { tangent, .. } => tangent(s),
        };
        if t.is_finite() {
            Ok(t)
        } else {
            Err(GeometryError::NonFinite(format!("tangent at s = {s}")))
        }
    }

    fn backing(&self) -> Backing {
        match self.backing {
            FrameBacking::Analytic(_) => Backing::Analytic,
            FrameBacking::FiniteDifference { .. } | FrameBacking::ChartedFiniteDifference { .. } => {
                Backing::FiniteDifference
            }
        }
    }

    fn domain(&self) -> Option<(f64, f64)> {
        self.domain
    }
}

fn difference_jet(tangent: &dyn Fn(f64) -> FrameVector, s: f64, fd: &FdConfig) -> TangentJet {
    let g = |u: f64| tangent(u).components();
    let d = |k| FrameVector::raw(fd::derivative(&g, s, k, fd));
    TangentJet { t: tangent(s), d1: d(1), d2: d(2), d3: d(3) }
}

/// Velocity of a coordinate curve in frame components.
pub fn tangent_frame_components(curve: &CoordinateCurve, s: f64) -> Result<FrameVector> {
    let (p, dp) = curve.first_derivative(s)?;
    let t = velocity_in_frame(p, dp);
    if t.is_finite() {
        Ok(t)
    } else {
        Err(GeometryError::NonFinite(format!("velocity at s = {s}")))
    }
}

/// `true` iff `|T3| <= tol` at every grid point.
pub fn is_horizontal(curve: &dyn Curve, grid: &[f64], tol: f64) -> Result<bool> {
    if grid.is_empty() {
        return Err(GeometryError::RejectedInput("empty grid".into()));
    }
    for &s in grid {
        if curve.tangent(s)?.u3().abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The causal character shared by the velocity at every grid point.
pub fn causal_character_of_curve(curve: &dyn Curve, grid: &[f64], tol: f64) -> Result<CausalCharacter> {
    let mut found: Option<CausalCharacter> = None;
    for &s in grid {
        let c = causal_character(curve.tangent(s)?, tol);
        match found {
            None => found = Some(c),
            Some(prev) if prev != c => {
                return Err(GeometryError::DegenerateInput(format!("velocity changes from {prev} to {c} at s = {s}")))
            }
            _ => {}
        }
    }
    found.ok_or_else(|| GeometryError::RejectedInput("empty grid".into()))
}

/// `n + 1` evenly spaced values from `a` to `b` inclusive.
pub fn uniform_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 0 {
        return vec![a];
    }
    (0..=n).map(|i| if i == n { b } else { a + (b - a) * i as f64 / n as f64 }).collect()
}

/// Grid `a, a + step, ...` ending exactly at `b`.
pub fn stepped_grid(a: f64, b: f64, step: f64) -> Result<Vec<f64>> {
    if !(a.is_finite() && b.is_finite() && step.is_finite()) || step <= 0.0 || b < a {
        return Err(GeometryError::RejectedInput(format!("invalid range {a}:{b} with step {step}")));
    }
    let n = ((b - a) / step - 1e-9).ceil().max(0.0) as usize;
    Ok(uniform_grid(a, b, n))
}

/// Fixed-step classical Runge–Kutta integration of
/// `x' = T1, y' = T2, z' = 2T3 − 2T1 y + 2T2 x` from `start` at `range.0`.
///
/// The last step is shortened so the grid ends exactly at `range.1`.
pub fn integrate_frame_curve(curve: &dyn Curve, start: Point, range: (f64, f64), step: f64) -> Result<CoordinateCurve> {
    let (a, b) = range;
    if !(a.is_finite() && b.is_finite()) || b <= a {
        return Err(GeometryError::RejectedInput(format!("invalid range [{a}, {b}]")));
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(GeometryError::RejectedInput(format!("step must be positive, got {step}")));
    }
    if start.iter().any(|v| !v.is_finite()) {
        return Err(GeometryError::RejectedInput("start point is not finite".into()));
    }
    let rhs = |s: f64, p: Point| -> Result<Point> {
        let t = curve.tangent(s)?;
        Ok([t[0], t[1], 2.0 * t[2] - 2.0 * t[0] * p[1] + 2.0 * t[1] * p[0]])
    };
    let axpy = |p: Point, h: f64, k: Point| -> Point { std::array::from_fn(|i| p[i] + h * k[i]) };

    let mut grid = stepped_grid(a, b, step)?;
    if grid.len() < sampled::WINDOW {
        grid = uniform_grid(a, b, sampled::WINDOW - 1);
    }
    let mut points = Vec::with_capacity(grid.len());
    let mut p = start;
    points.push(p);
    for w in grid.windows(2) {
        let (s, h) = (w[0], w[1] - w[0]);
        let k1 = rhs(s, p)?;
        let k2 = rhs(s + 0.5 * h, axpy(p, 0.5 * h, k1))?;
        let k3 = rhs(s + 0.5 * h, axpy(p, 0.5 * h, k2))?;
        let k4 = rhs(s + h, axpy(p, h, k3))?;
        p = std::array::from_fn(|i| p[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
        points.push(p);
    }
    CoordinateCurve::sampled(SampleTable::new(grid, points)?, FdConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::CAUSAL_TOL;

    fn line(dir: Point) -> CoordinateCurve {
        CoordinateCurve::closed_form(move |s| [[dir[0] * s, dir[1] * s, dir[2] * s], dir, [0.0; 3], [0.0; 3], [0.0; 3]])
    }

    /// `(½ sinh 2s, ½ cosh 2s, −s)`.
    fn horizontal_helix() -> CoordinateCurve {
        CoordinateCurve::closed_form(|s| {
            let (sh, ch) = ((2.0 * s).sinh(), (2.0 * s).cosh());
            [
                [0.5 * sh, 0.5 * ch, -s],
                [ch, sh, -1.0],
                [2.0 * sh, 2.0 * ch, 0.0],
                [4.0 * ch, 4.0 * sh, 0.0],
                [8.0 * sh, 8.0 * ch, 0.0],
            ]
        })
    }

    #[test]
    fn velocity_examples() {
        assert_eq!(tangent_frame_components(&line([0.0, 0.0, 2.0]), 0.3).unwrap(), FrameVector::E3);
        assert_eq!(tangent_frame_components(&line([1.0, 0.0, 0.0]), 0.3).unwrap(), FrameVector::E1);
        let t = tangent_frame_components(&horizontal_helix(), 0.0).unwrap();
        assert_eq!(t, FrameVector::new(1.0, 0.0, 0.0));
    }

    #[test]
    fn horizontality() {
        let grid = uniform_grid(-1.0, 1.0, 20);
        assert!(is_horizontal(&line([1.0, 0.0, 0.0]), &grid, 1e-12).unwrap());
        assert!(!is_horizontal(&line([0.0, 0.0, 2.0]), &grid, 1e-12).unwrap());
        assert!(is_horizontal(&horizontal_helix(), &grid, 1e-12).unwrap());
        assert!(is_horizontal(&horizontal_helix(), &[], 1e-12).is_err());
    }

    #[test]
    fn horizontality_form_is_twice_third_component() {
        let c = horizontal_helix();
        let curve = CoordinateCurve::closed_form(move |s| {
            let mut j = c.position_jet(s).unwrap();
            j[0][2] += s * s;
            j[1][2] += 2.0 * s;
            j[2][2] += 2.0;
            j
        });
        for s in uniform_grid(-1.0, 1.0, 10) {
            let w = curve.horizontality_form(s).unwrap();
            let t3 = tangent_frame_components(&curve, s).unwrap().u3();
            assert!((w - 2.0 * t3).abs() < 1e-12);
        }
    }

    #[test]
    fn curve_causal_character() {
        let grid = uniform_grid(-1.0, 1.0, 10);
        assert_eq!(
            causal_character_of_curve(&horizontal_helix(), &grid, CAUSAL_TOL).unwrap(),
            CausalCharacter::Spacelike
        );
        assert_eq!(
            causal_character_of_curve(&line([0.0, 0.0, 2.0]), &grid, CAUSAL_TOL).unwrap(),
            CausalCharacter::Timelike
        );
        assert_eq!(
            causal_character_of_curve(&line([1.0, 1.0, 0.0]), &grid, CAUSAL_TOL).unwrap(),
            CausalCharacter::Null
        );
        let mixed = FrameCurve::analytic(|s| {
            TangentJet::from_components([Jet::linear(s, 1.0, 0.0), Jet::constant(0.5), Jet::constant(0.0)])
        });
        assert!(causal_character_of_curve(&mixed, &grid, CAUSAL_TOL).is_err());
    }

    #[test]
    fn jet_from_position_matches_closed_form_tangent() {
        let c = horizontal_helix();
        for s in [-0.7, 0.0, 0.4] {
            let j = c.tangent_jet(s).unwrap();
            let (sh, ch) = ((2.0 * s).sinh(), (2.0 * s).cosh());
            assert!((j.t - FrameVector::new(ch, sh, 0.0)).max_abs() < 1e-14);
            assert!((j.d1 - FrameVector::new(2.0 * sh, 2.0 * ch, 0.0)).max_abs() < 1e-13);
            assert!((j.d3 - FrameVector::new(8.0 * sh, 8.0 * ch, 0.0)).max_abs() < 1e-12);
        }
    }

    #[test]
    fn finite_difference_backing_tracks_analytic() {
        let exact = horizontal_helix();
        let fd = CoordinateCurve::finite_difference(
            |s| [0.5 * (2.0 * s).sinh(), 0.5 * (2.0 * s).cosh(), -s],
            FdConfig::default(),
        )
        .unwrap();
        assert_eq!(fd.backing(), Backing::FiniteDifference);
        for s in [-0.5, 0.1, 0.6] {
            let a = exact.tangent_jet(s).unwrap();
            let b = fd.tangent_jet(s).unwrap();
            assert!((a.t - b.t).max_abs() < 1e-9);
            assert!((a.d1 - b.d1).max_abs() < 1e-7);
            assert!((a.d3 - b.d3).max_abs() < 1e-3);
        }
    }

    #[test]
    fn integration_of_constant_fields() {
        let e1 = FrameCurve::analytic(|_| TangentJet { t: FrameVector::E1, ..Default::default() });
        let c = integrate_frame_curve(&e1, [0.0; 3], (0.0, 1.0), 0.1).unwrap();
        for (s, p) in c.samples().unwrap().params().iter().zip(c.samples().unwrap().points()) {
            assert!((p[0] - s).abs() < 1e-14 && p[1].abs() < 1e-14 && p[2].abs() < 1e-14);
        }
        let e3 = FrameCurve::analytic(|_| TangentJet { t: FrameVector::E3, ..Default::default() });
        let c = integrate_frame_curve(&e3, [0.0; 3], (0.0, 1.0), 0.1).unwrap();
        let last = *c.samples().unwrap().points().last().unwrap();
        assert!((last[2] - 2.0).abs() < 1e-14);
        assert!(integrate_frame_curve(&e3, [0.0; 3], (1.0, 0.0), 0.1).is_err());
        assert!(integrate_frame_curve(&e3, [0.0; 3], (0.0, 1.0), 0.0).is_err());
    }

    #[test]
    fn sampled_domain_is_enforced() {
        let e1 = FrameCurve::analytic(|_| TangentJet { t: FrameVector::E1, ..Default::default() });
        let c = integrate_frame_curve(&e1, [0.0; 3], (0.0, 1.0), 0.1).unwrap();
        assert_eq!(c.domain(), Some((0.0, 1.0)));
        assert!(c.tangent(1.5).is_err());
        assert!((c.tangent(0.55).unwrap() - FrameVector::E1).max_abs() < 1e-10);
    }

    #[test]
    fn stepped_grid_lands_on_end() {
        let g = stepped_grid(0.0, 1.0, 0.1).unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(*g.last().unwrap(), 1.0);
        assert!(stepped_grid(0.0, 1.0, 0.0).is_err());
        assert!(stepped_grid(1.0, 0.0, 0.1).is_err());
        assert_eq!(stepped_grid(0.0, 0.0, 0.1).unwrap(), vec![0.0]);
    }
}
