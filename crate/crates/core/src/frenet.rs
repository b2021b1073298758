//! Frenet apparatus of non-null, non-geodesic unit-speed curves.
//!
//! With `A = ∇_T T`, the conventions are
//! `k1 = sqrt|g(A, A)|`, `ε2 = sign g(A, A)`, `N = A / (k1 ε2)`,
//! `B = T ∧ N`, `k2 = g(∇_T N, B)`. They fix the signs of `N`, `B` and
//! `k2`; `k2` itself does not depend on the orientation of `N`.
//!
//! Every quantity, including `k1'`, `k1''` and `k2'`, is computed from the
//! tangent jet `(T, T', T'', T''')` of the curve.

use serde::Serialize;

use crate::connection::connection_term;
use crate::curves::{Backing, Curve, TangentJet};
use crate::error::{GeometryError, Result};
use crate::frame::{cross, inner, Boost, FrameVector};

/// Degeneracy tolerance for curves with exact derivatives.
pub const ANALYTIC_TOL: f64 = 1e-9;
/// Degeneracy tolerance for curves differentiated numerically.
pub const FINITE_DIFFERENCE_TOL: f64 = 1e-5;
/// Allowed deviation of `|g(T, T)|` from one.
pub const UNIT_SPEED_TOL: f64 = 1e-6;

/// Default degeneracy tolerance for a curve backing.
pub fn default_tol(backing: Backing) -> f64 {
    match backing {
        Backing::Analytic => ANALYTIC_TOL,
        Backing::FiniteDifference => FINITE_DIFFERENCE_TOL,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrenetData {
    pub t: FrameVector,
    pub n: FrameVector,
    pub b: FrameVector,
    pub k1: f64,
    pub k2: f64,
    pub eps1: i8,
    pub eps2: i8,
    pub eps3: i8,
}

impl FrenetData {
    pub fn n3(&self) -> f64 {
        self.n.u3()
    }

    pub fn b3(&self) -> f64 {
        self.b.u3()
    }

    pub fn eps_product(&self) -> i8 {
        self.eps1 * self.eps2 * self.eps3
    }
}

/// Parameter derivatives of the curvatures.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct FrenetRates {
    pub k1_d1: f64,
    pub k1_d2: f64,
    pub k2_d1: f64,
}

/// Frenet data together with the covariant derivatives of `N` and `B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetJet {
    pub data: FrenetData,
    pub rates: FrenetRates,
    pub nabla_n: FrameVector,
    pub nabla_b: FrameVector,
}

impl FrenetJet {
    /// The same data with every vector rotated by `b`.
    pub fn boosted(mut self, b: Boost) -> FrenetJet {
        self.data.t = b.apply(self.data.t);
        self.data.n = b.apply(self.data.n);
        self.data.b = b.apply(self.data.b);
        self.nabla_n = b.apply(self.nabla_n);
        self.nabla_b = b.apply(self.nabla_b);
        self
    }

    /// Residuals of the second and third Frenet equations,
    /// `∇_T N + k1 ε1 T − k2 ε3 B` and `∇_T B + k2 ε2 N`.
    pub fn closure_defects(&self) -> (FrameVector, FrameVector) {
        let d = &self.data;
        let (e1, e2, e3) = (d.eps1 as f64, d.eps2 as f64, d.eps3 as f64);
        let dn = self.nabla_n + d.k1 * e1 * d.t - d.k2 * e3 * d.b;
        let db = self.nabla_b + d.k2 * e2 * d.n;
        (dn, db)
    }
}

fn sign(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else {
        -1
    }
}

/// Frenet frame, curvatures and their derivatives from a tangent jet.
pub fn frenet_from_jet(jet: &TangentJet, s: f64, tol: f64) -> Result<FrenetJet> {
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(GeometryError::RejectedInput(format!("tolerance must be non-negative, got {tol}")));
    }
    let TangentJet { t, d1, d2, d3 } = *jet;
    let gtt = inner(t, t);
    if gtt.abs() <= tol {
        return Err(GeometryError::NullTangent { s });
    }
    if (gtt.abs() - 1.0).abs() > UNIT_SPEED_TOL.max(tol) {
        return Err(GeometryError::NonUnitSpeed { s, norm: gtt.abs() });
    }
    let eps1 = sign(gtt);

    let a = d1 + connection_term(t, t);
    let a1 = d2 + connection_term(d1, t) + connection_term(t, d1);
    let a2 = d3 + connection_term(d2, t) + 2.0 * connection_term(d1, d1) + connection_term(t, d2);

    let q = inner(a, a);
    let size = a.euclidean_norm();
    if size <= tol {
        return Err(GeometryError::GeodesicDegenerate { s, k1: q.abs().sqrt() });
    }
    if q.abs() <= tol * tol {
        return Err(GeometryError::NullNormalDegenerate { s });
    }
    let eps2 = sign(q);
    let e2 = eps2 as f64;
    let k1 = q.abs().sqrt();
    let k1_d1 = e2 * inner(a, a1) / k1;
    let k1_d2 = (e2 * (inner(a1, a1) + inner(a, a2)) - k1_d1 * k1_d1) / k1;

    let n = (e2 / k1) * a;
    let n1 = e2 * ((1.0 / k1) * a1 - (k1_d1 / (k1 * k1)) * a);
    let n2 =
        e2 * ((1.0 / k1) * a2 - (2.0 * k1_d1 / (k1 * k1)) * a1 + ((2.0 * k1_d1 * k1_d1 / k1 - k1_d2) / (k1 * k1)) * a);

    let b = cross(t, n);
    let b1 = cross(d1, n) + cross(t, n1);
    let eps3 = sign(inner(b, b));

    let nabla_n = n1 + connection_term(t, n);
    let nabla_n1 = n2 + connection_term(d1, n) + connection_term(t, n1);
    let nabla_b = b1 + connection_term(t, b);
    let k2 = inner(nabla_n, b);
    let k2_d1 = inner(nabla_n1, b) + inner(nabla_n, b1);

    let out = FrenetJet {
        data: FrenetData { t, n, b, k1, k2, eps1, eps2, eps3 },
        rates: FrenetRates { k1_d1, k1_d2, k2_d1 },
        nabla_n,
        nabla_b,
    };
    let finite = [k1, k2, k1_d1, k1_d2, k2_d1].iter().all(|v| v.is_finite())
        && n.is_finite()
        && b.is_finite()
        && nabla_n.is_finite()
        && nabla_b.is_finite();
    if finite {
        Ok(out)
    } else {
        Err(GeometryError::NonFinite(format!("Frenet data at s = {s}")))
    }
}

pub fn frenet_jet(curve: &dyn Curve, s: f64, tol: f64) -> Result<FrenetJet> {
    let (b, jet) = curve.boosted_tangent_jet(s)?;
    Ok(frenet_from_jet(&jet, s, tol)?.boosted(b))
}

pub fn compute_frenet(curve: &dyn Curve, s: f64, tol: f64) -> Result<FrenetData> {
    Ok(frenet_jet(curve, s, tol)?.data)
}

/// `k1'`, `k1''` and `k2'` at `s`.
pub fn frenet_rates(curve: &dyn Curve, s: f64, tol: f64) -> Result<FrenetRates> {
    Ok(frenet_jet(curve, s, tol)?.rates)
}

/// Mean and largest absolute deviation from the mean of a sampled quantity.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Constancy {
    pub mean: f64,
    pub max_deviation: f64,
}

impl Constancy {
    pub fn of(values: impl IntoIterator<Item = f64>) -> Self {
        let values: Vec<f64> = values.into_iter().collect();
        if values.is_empty() {
            return Constancy::default();
        }
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let max_deviation = values.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max);
        Constancy { mean, max_deviation }
    }

    /// Deviation within `tol·(1 + |mean|)`.
    pub fn is_constant(&self, tol: f64) -> bool {
        self.max_deviation <= tol * (1.0 + self.mean.abs())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrenetGrid {
    pub s: Vec<f64>,
    pub frames: Vec<FrenetData>,
    pub k1: Constancy,
    pub k2: Constancy,
    pub n3: Constancy,
    pub b3: Constancy,
}

pub fn frenet_over_grid(curve: &dyn Curve, grid: &[f64], tol: f64) -> Result<FrenetGrid> {
    if grid.is_empty() {
        return Err(GeometryError::RejectedInput("empty grid".into()));
    }
    let frames = grid.iter().map(|&s| compute_frenet(curve, s, tol)).collect::<Result<Vec<_>>>()?;
    Ok(FrenetGrid {
        s: grid.to_vec(),
        k1: Constancy::of(frames.iter().map(|f| f.k1)),
        k2: Constancy::of(frames.iter().map(|f| f.k2)),
        n3: Constancy::of(frames.iter().map(|f| f.n3())),
        b3: Constancy::of(frames.iter().map(|f| f.b3())),
        frames,
    })
}
