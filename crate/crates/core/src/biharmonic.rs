//! Bitension field `τ2 = ∇_T³T − R(T, ∇_T T)T` of unit-speed curves and
//! the biharmonicity conditions in terms of Frenet data.

use serde::Serialize;

use crate::connection::{connection_term, curvature};
use crate::curves::{Backing, Curve, TangentJet};
use crate::error::{GeometryError, Result};
use crate::frame::{inner, FrameVector};
use crate::frenet::{self, default_tol, Constancy, FrenetData, FrenetRates, UNIT_SPEED_TOL};

/// Default verdict tolerance for curves with exact derivatives.
pub const ANALYTIC_VERDICT_TOL: f64 = 1e-8;
/// Default verdict tolerance for sampled or numerically differentiated curves.
pub const SAMPLED_VERDICT_TOL: f64 = 1e-4;

/// Bitension computed by iterated covariant differentiation of a jet.
pub fn bitension_from_jet(jet: &TangentJet) -> FrameVector {
    let TangentJet { t, d1, d2, d3 } = *jet;
    let a = d1 + connection_term(t, t);
    let a1 = d2 + connection_term(d1, t) + connection_term(t, d1);
    let a2 = d3 + connection_term(d2, t) + 2.0 * connection_term(d1, d1) + connection_term(t, d2);
    // ∇²T = A' + Γ(T, A), ∇³T = (∇²T)' + Γ(T, ∇²T)
    let second = a1 + connection_term(t, a);
    let second_d = a2 + connection_term(d1, a) + connection_term(t, a1);
    let third = second_d + connection_term(t, second);
    third - curvature(t, a, t)
}

pub fn bitension_direct(curve: &dyn Curve, s: f64) -> Result<FrameVector> {
    let (boost, jet) = curve.boosted_tangent_jet(s)?;
    let g = inner(jet.t, jet.t).abs();
    if (g - 1.0).abs() > UNIT_SPEED_TOL {
        return Err(GeometryError::NonUnitSpeed { s, norm: g });
    }
    let tau = boost.apply(bitension_from_jet(&jet));
    if tau.is_finite() {
        Ok(tau)
    } else {
        Err(GeometryError::NonFinite(format!("bitension at s = {s}")))
    }
}

/// Components of the bitension on the Frenet frame `{T, N, B}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrenetCoefficients {
    pub t: f64,
    pub n: f64,
    pub b: f64,
}

impl FrenetCoefficients {
    pub fn assemble(&self, f: &FrenetData) -> FrameVector {
        self.t * f.t + self.n * f.n + self.b * f.b
    }
}

fn signs(f: &FrenetData) -> (f64, f64, f64) {
    (f.eps1 as f64, f.eps2 as f64, f.eps3 as f64)
}

/// Frenet-frame coefficients of the bitension.
///
/// The curvature term contributes `−4 k1 N3 B3` to the `B` coefficient for
/// either causal character of `T`.
pub fn frenet_coefficients(f: &FrenetData, r: &FrenetRates) -> FrenetCoefficients {
    let (e1, e2, e3) = signs(f);
    let (k1, k2, b3) = (f.k1, f.k2, f.b3());
    FrenetCoefficients {
        t: -3.0 * k1 * r.k1_d1 * e1 * e2,
        n: r.k1_d2 * e2 - k1.powi(3) * e1 - k1 * k2 * k2 * e3 + k1 * e3 + 4.0 * k1 * b3 * b3,
        b: (2.0 * r.k1_d1 * k2 + k1 * r.k2_d1) * e2 * e3 - 4.0 * k1 * f.n3() * b3,
    }
}

/// Coefficients with the `B` term written as `−4 k1 ε2 ε3 N3 B3`, which
/// agrees with [`frenet_coefficients`] only for spacelike `T`.
pub fn frenet_coefficients_as_printed(f: &FrenetData, r: &FrenetRates) -> FrenetCoefficients {
    let (_, e2, e3) = signs(f);
    let mut c = frenet_coefficients(f, r);
    c.b = (2.0 * r.k1_d1 * f.k2 + f.k1 * r.k2_d1) * e2 * e3 - 4.0 * f.k1 * e2 * e3 * f.n3() * f.b3();
    c
}

pub fn bitension_frenet(f: &FrenetData, r: &FrenetRates) -> FrameVector {
    frenet_coefficients(f, r).assemble(f)
}

pub fn bitension_frenet_as_printed(f: &FrenetData, r: &FrenetRates) -> FrameVector {
    frenet_coefficients_as_printed(f, r).assemble(f)
}

/// Scaled gap `max|τ2(Frenet) − τ2(direct)| / (1 + max|τ2(direct)|)` at `s`.
///
/// Components are taken in the boost chart reported by the curve, where the
/// tangent's `e1, e2` part is not inflated by a large hyperbolic angle.
pub fn frenet_direct_gap(curve: &dyn Curve, s: f64, tol: f64) -> Result<f64> {
    let (_, jet) = curve.boosted_tangent_jet(s)?;
    let fj = frenet::frenet_from_jet(&jet, s, tol)?;
    let direct = bitension_from_jet(&jet);
    Ok((bitension_frenet(&fj.data, &fj.rates) - direct).max_abs() / (1.0 + direct.max_abs()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Biharmonic,
    NotBiharmonic,
    Geodesic,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Biharmonic => "Biharmonic",
            Verdict::NotBiharmonic => "NotBiharmonic",
            Verdict::Geodesic => "Geodesic",
        })
    }
}

/// Evaluations of the biharmonicity system over a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionValues {
    pub k1: Constancy,
    pub k2: Constancy,
    pub b3: Constancy,
    /// Largest `|N3 B3|`.
    pub n3b3: f64,
    /// Largest `|k1² ε1 ε3 + k2² − 1 − 4 ε3 B3²|`.
    pub curvature_identity: f64,
    /// Largest `|k1² − ε1 (ε3 + 4 B3²)|`, evaluated when every `|k2| <= tol`.
    pub zero_torsion_form: Option<f64>,
    /// Largest `|k2' − 4 ε1 N3 B3|`.
    pub torsion_rate: f64,
    pub satisfied: bool,
}

pub fn check_biharmonic_conditions(points: &[(FrenetData, FrenetRates)], tol: f64) -> Result<ConditionValues> {
    if points.is_empty() {
        return Err(GeometryError::RejectedInput("no Frenet data".into()));
    }
    let k1 = Constancy::of(points.iter().map(|(f, _)| f.k1));
    let k2 = Constancy::of(points.iter().map(|(f, _)| f.k2));
    let b3 = Constancy::of(points.iter().map(|(f, _)| f.b3()));
    let max =
        |g: &dyn Fn(&FrenetData, &FrenetRates) -> f64| points.iter().map(|(f, r)| g(f, r).abs()).fold(0.0, f64::max);
    let n3b3 = max(&|f, _| f.n3() * f.b3());
    let curvature_identity = max(&|f, _| {
        let (e1, _, e3) = signs(f);
        f.k1 * f.k1 * e1 * e3 + f.k2 * f.k2 - 1.0 - 4.0 * e3 * f.b3() * f.b3()
    });
    let torsion_rate = max(&|f, r| r.k2_d1 - 4.0 * f.eps1 as f64 * f.n3() * f.b3());
    let zero_torsion_form = points.iter().all(|(f, _)| f.k2.abs() <= tol).then(|| {
        max(&|f, _| {
            let (e1, _, e3) = signs(f);
            f.k1 * f.k1 - e1 * (e3 + 4.0 * f.b3() * f.b3())
        })
    });
    let satisfied =
        k1.is_constant(tol) && k2.is_constant(tol) && n3b3 <= tol && curvature_identity <= tol && torsion_rate <= tol;
    Ok(ConditionValues { k1, k2, b3, n3b3, curvature_identity, zero_torsion_form, torsion_rate, satisfied })
}

/// Tolerances for [`analyze`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Degeneracy tolerance passed to the Frenet computation.
    pub frenet: f64,
    /// Residual and condition tolerance for the verdict.
    pub verdict: f64,
}

impl Tolerances {
    pub fn for_backing(backing: Backing) -> Self {
        let verdict = match backing {
            Backing::Analytic => ANALYTIC_VERDICT_TOL,
            Backing::FiniteDifference => SAMPLED_VERDICT_TOL,
        };
        Tolerances { frenet: default_tol(backing), verdict }
    }
}

/// Per-point output of [`analyze`]. Frenet fields are `None` at
/// degenerate points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointReport {
    pub s: f64,
    pub frenet: Option<FrenetData>,
    pub rates: Option<FrenetRates>,
    pub residual_direct: f64,
    pub residual_frenet: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BiharmonicReport {
    pub points: Vec<PointReport>,
    pub max_residual_direct: f64,
    pub max_residual_frenet: Option<f64>,
    pub conditions: Option<ConditionValues>,
    pub verdict: Verdict,
    pub tolerances: Tolerances,
}

fn is_degenerate(e: &GeometryError) -> bool {
    matches!(e, GeometryError::GeodesicDegenerate { .. } | GeometryError::NullNormalDegenerate { .. })
}

/// Residuals, condition values and verdict of a curve over a grid.
pub fn analyze(curve: &dyn Curve, grid: &[f64], tol: Tolerances) -> Result<BiharmonicReport> {
    if grid.is_empty() {
        return Err(GeometryError::RejectedInput("empty grid".into()));
    }
    let mut points = Vec::with_capacity(grid.len());
    let mut degenerate = false;
    for &s in grid {
        let residual_direct = bitension_direct(curve, s)?.euclidean_norm();
        let point = match frenet::frenet_jet(curve, s, tol.frenet) {
            Ok(fj) => PointReport {
                s,
                frenet: Some(fj.data),
                rates: Some(fj.rates),
                residual_direct,
                residual_frenet: Some(bitension_frenet(&fj.data, &fj.rates).euclidean_norm()),
            },
            Err(e) if is_degenerate(&e) => {
                degenerate = true;
                PointReport { s, frenet: None, rates: None, residual_direct, residual_frenet: None }
            }
            Err(e) => return Err(e),
        };
        points.push(point);
    }
    let max_residual_direct = points.iter().map(|p| p.residual_direct).fold(0.0, f64::max);
    if degenerate {
        return Ok(BiharmonicReport {
            points,
            max_residual_direct,
            max_residual_frenet: None,
            conditions: None,
            verdict: Verdict::Geodesic,
            tolerances: tol,
        });
    }
    let max_residual_frenet = points.iter().filter_map(|p| p.residual_frenet).fold(0.0, f64::max);
    let data: Vec<_> = points.iter().map(|p| (p.frenet.unwrap(), p.rates.unwrap())).collect();
    let conditions = check_biharmonic_conditions(&data, tol.verdict)?;
    let verdict = if max_residual_direct <= tol.verdict && conditions.satisfied {
        Verdict::Biharmonic
    } else {
        Verdict::NotBiharmonic
    };
    Ok(BiharmonicReport {
        points,
        max_residual_direct,
        max_residual_frenet: Some(max_residual_frenet),
        conditions: Some(conditions),
        verdict,
        tolerances: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{uniform_grid, CoordinateCurve, FrameCurve, Jet};
    use crate::frenet::{frenet_jet, ANALYTIC_TOL};

    fn helix(alpha0: f64, slope: f64, phase: f64) -> FrameCurve {
        let (c, sh) = (alpha0.cosh(), alpha0.sinh());
        FrameCurve::analytic(move |s| {
            let beta = Jet::linear(s, slope, phase);
            TangentJet::from_components([c * beta.cosh(), c * beta.sinh(), Jet::constant(sh)])
        })
    }

    fn timelike_helix(m: f64) -> FrameCurve {
        FrameCurve::analytic(move |s| {
            let u = Jet::linear(s, m, 0.0);
            TangentJet::from_components([u.sinh(), u.cosh(), Jet::constant(0.0)])
        })
    }

    #[test]
    fn horizontal_helix_oracle() {
        // τ2 = (a³ − 4a)(sinh as, cosh as, 0)
        for a in [2.0, -2.0, 1.0, -1.0, 3.0] {
            let c = helix(0.0, a, 0.0);
            for s in [-0.4, 0.0, 0.9] {
                let tau = bitension_direct(&c, s).unwrap();
                let k = a * a * a - 4.0 * a;
                let want = FrameVector::new(k * (a * s).sinh(), k * (a * s).cosh(), 0.0);
                assert!((tau - want).max_abs() < 1e-13 * (1.0 + want.max_abs()), "a={a} s={s}: {tau}");
            }
        }
        let tau = bitension_direct(&helix(0.0, 1.0, 0.0), 0.0).unwrap();
        assert!((tau - FrameVector::new(0.0, -3.0, 0.0)).max_abs() < 1e-14);
    }

    #[test]
    fn timelike_horizontal_oracle() {
        let tau = bitension_direct(&timelike_helix(1.0), 0.0).unwrap();
        assert!((tau - FrameVector::new(5.0, 0.0, 0.0)).max_abs() < 1e-14);
        let m: f64 = 0.7;
        let s: f64 = 0.3;
        let tau = bitension_direct(&timelike_helix(m), s).unwrap();
        let k = m * m * m + 4.0 * m;
        let want = FrameVector::new(k * (m * s).cosh(), k * (m * s).sinh(), 0.0);
        assert!((tau - want).max_abs() < 1e-13);
    }

    #[test]
    fn geodesics_have_zero_bitension() {
        let lines: [fn(f64) -> [[f64; 3]; 5]; 3] = [
            |s| [[0.3 + s, -0.2, 1.0 + 0.4 * s], [1.0, 0.0, 0.4], [0.0; 3], [0.0; 3], [0.0; 3]],
            |s| [[0.3, -0.2 + s, 1.0 + 0.6 * s], [0.0, 1.0, 0.6], [0.0; 3], [0.0; 3], [0.0; 3]],
            |s| [[0.3, -0.2, 1.0 + 2.0 * s], [0.0, 0.0, 2.0], [0.0; 3], [0.0; 3], [0.0; 3]],
        ];
        for f in lines {
            let c = CoordinateCurve::closed_form(f);
            for s in [-1.0, 0.5] {
                assert!(bitension_direct(&c, s).unwrap().euclidean_norm() <= 1e-12);
            }
            let r = analyze(&c, &uniform_grid(0.0, 1.0, 4), Tolerances::for_backing(Backing::Analytic)).unwrap();
            assert_eq!(r.verdict, Verdict::Geodesic);
        }
    }

    #[test]
    fn frenet_form_matches_direct() {
        let curves = [helix(0.4, 1.3, 0.2), helix(-1.0, -2.7, 0.0), timelike_helix(0.8)];
        for c in &curves {
            for s in [-0.6, 0.1, 0.5] {
                let j = frenet_jet(c, s, ANALYTIC_TOL).unwrap();
                let d = bitension_direct(c, s).unwrap();
                let f = bitension_frenet(&j.data, &j.rates);
                assert!((d - f).max_abs() < 1e-11, "{d} vs {f}");
            }
        }
    }

    #[test]
    fn printed_b_coefficient_differs_only_for_timelike_tangents() {
        // timelike curve with N3 B3 ≠ 0: T = (sinh ν cosh ρ, sinh ν sinh ρ, cosh ν), ν = 0.5 + 0.4 s
        let c = FrameCurve::analytic(|s| {
            let nu = Jet::linear(s, 0.4, 0.5);
            let rho = Jet::linear(s, 1.5, 0.0);
            TangentJet::from_components([nu.sinh() * rho.cosh(), nu.sinh() * rho.sinh(), nu.cosh()])
        });
        let j = frenet_jet(&c, 0.2, ANALYTIC_TOL).unwrap();
        assert_eq!(j.data.eps1, -1);
        assert!((j.data.n3() * j.data.b3()).abs() > 1e-3);
        let d = bitension_direct(&c, 0.2).unwrap();
        assert!((d - bitension_frenet(&j.data, &j.rates)).max_abs() < 1e-11);
        assert!((d - bitension_frenet_as_printed(&j.data, &j.rates)).max_abs() > 1e-3);

        let sp = FrameCurve::analytic(|s| {
            let al = Jet::linear(s, 0.4, 0.5);
            let beta = Jet::linear(s, 1.5, 0.0);
            TangentJet::from_components([al.cosh() * beta.cosh(), al.cosh() * beta.sinh(), al.sinh()])
        });
        let j = frenet_jet(&sp, 0.2, ANALYTIC_TOL).unwrap();
        assert_eq!(j.data.eps1, 1);
        let d = bitension_direct(&sp, 0.2).unwrap();
        assert!((d - bitension_frenet_as_printed(&j.data, &j.rates)).max_abs() < 1e-11);
    }

    #[test]
    fn condition_examples() {
        let grid = uniform_grid(-1.0, 1.0, 20);
        let tol = Tolerances::for_backing(Backing::Analytic);
        let r = analyze(&helix(0.0, 2.0, 0.0), &grid, tol).unwrap();
        assert_eq!(r.verdict, Verdict::Biharmonic);
        let c = r.conditions.unwrap();
        assert!(c.curvature_identity < 1e-12 && c.torsion_rate < 1e-12);

        let r = analyze(&helix(0.0, 3.0, 0.0), &grid, tol).unwrap();
        assert_eq!(r.verdict, Verdict::NotBiharmonic);
        assert!((r.conditions.unwrap().curvature_identity - 5.0).abs() < 1e-9);

        let r = analyze(&timelike_helix(1.0), &grid, tol).unwrap();
        assert_eq!(r.verdict, Verdict::NotBiharmonic);
        // k1² + k2² − 1 + 4 B3² with k1 = 1, k2² = 1, B3² = 1
        assert!((r.conditions.unwrap().curvature_identity - 5.0).abs() < 1e-9);
    }

    #[test]
    fn b_coefficient_pins_factor_four() {
        let c = FrameCurve::analytic(|s| {
            let nu = Jet::linear(s, 0.3, 0.5);
            let rho = Jet([1.5 * s + 0.2 * s * s, 1.5 + 0.4 * s, 0.4, 0.0]);
            TangentJet::from_components([nu.sinh() * rho.cosh(), nu.sinh() * rho.sinh(), nu.cosh()])
        });
        for s in [-0.3, 0.4] {
            let j = frenet_jet(&c, s, ANALYTIC_TOL).unwrap();
            let f = j.data;
            assert!((f.n3() * f.b3()).abs() > 1e-2);
            let d = bitension_direct(&c, s).unwrap();
            let (e1, e2, e3) = (f.eps1 as f64, f.eps2 as f64, f.eps3 as f64);
            let direct_b = e3 * inner(d, f.b);
            // 2 k1' k2 ε2 ε3 + k1 ε2 ε3 (k2' − 4 ε1 N3 B3)
            let r = j.rates;
            let factor4 = 2.0 * r.k1_d1 * f.k2 * e2 * e3 + f.k1 * e2 * e3 * (r.k2_d1 - 4.0 * e1 * f.n3() * f.b3());
            assert!((direct_b - factor4).abs() < 1e-10);
            let factor1 = 2.0 * r.k1_d1 * f.k2 * e2 * e3 + f.k1 * e2 * e3 * (r.k2_d1 - e1 * f.n3() * f.b3());
            assert!((direct_b - factor1).abs() > 1e-3);
        }
    }
}
