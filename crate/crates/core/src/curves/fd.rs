//! Central finite differences with optional Richardson extrapolation.
//!
//! A derivative of order `k` uses the step `h * STEP_SCALE[k-1]`. Higher
//! orders need wider stencils because the rounding error of a central
//! difference grows like `eps / step^k`. With the default `h = 1e-4` the
//! steps are `2e-4, 1e-2, 1.5e-2, 3e-2`. The truncation error is `O(step²)`
//! for a plain central difference. Richardson extrapolation over the steps
//! `step, step/2, step/4` raises it to `O(step⁶)`.

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};

/// Multipliers applied to the base step for derivative orders 1..=4.
pub const STEP_SCALE: [f64; 4] = [2.0, 100.0, 150.0, 300.0];

/// Number of Richardson extrapolation levels.
pub const RICHARDSON_LEVELS: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FdConfig {
    pub h: f64,
    pub richardson: bool,
}

impl Default for FdConfig {
    fn default() -> Self {
        FdConfig { h: 1e-4, richardson: true }
    }
}

impl FdConfig {
    pub fn new(h: f64, richardson: bool) -> Result<Self> {
        let fd = FdConfig { h, richardson };
        fd.validate()?;
        Ok(fd)
    }

    pub fn validate(&self) -> Result<()> {
        if self.h.is_finite() && self.h > 0.0 {
            Ok(())
        } else {
            Err(GeometryError::RejectedInput(format!("finite-difference step must be positive, got {}", self.h)))
        }
    }

    /// Step used for a derivative of the given order (1..=4).
    pub fn step(&self, order: usize) -> f64 {
        self.h * STEP_SCALE[order - 1]
    }

    /// Largest distance from the evaluation point touched by any stencil.
    pub fn reach(&self) -> f64 {
        2.0 * self.step(4)
    }
}

// (offset, weight) pairs of the second-order central stencils
const STENCILS: [&[(f64, f64)]; 4] = [
    &[(-1.0, -0.5), (1.0, 0.5)],
    &[(-1.0, 1.0), (0.0, -2.0), (1.0, 1.0)],
    &[(-2.0, -0.5), (-1.0, 1.0), (1.0, -1.0), (2.0, 0.5)],
    &[(-2.0, 1.0), (-1.0, -4.0), (0.0, 6.0), (1.0, -4.0), (2.0, 1.0)],
];

fn central<const N: usize, F>(f: &F, s: f64, order: usize, step: f64) -> [f64; N]
where
    F: Fn(f64) -> [f64; N] + ?Sized,
{
    let mut acc = [0.0; N];
    for &(offset, w) in STENCILS[order - 1] {
        let v = f(s + offset * step);
        for (a, x) in acc.iter_mut().zip(v) {
            *a += w * x;
        }
    }
    let denom = step.powi(order as i32);
    acc.map(|a| a / denom)
}

/// Order-`order` derivative of a vector-valued function at `s`.
pub fn derivative<const N: usize, F>(f: &F, s: f64, order: usize, fd: &FdConfig) -> [f64; N]
where
    F: Fn(f64) -> [f64; N] + ?Sized,
{
    assert!((1..=4).contains(&order), "derivative order must be 1..=4");
    let step = fd.step(order);
    if !fd.richardson {
        return central(f, s, order, step);
    }
    let mut table: [[f64; N]; RICHARDSON_LEVELS + 1] =
        std::array::from_fn(|l| central(f, s, order, step / (1u32 << l) as f64));
    for m in 1..=RICHARDSON_LEVELS {
        let p = 4f64.powi(m as i32);
        for i in 0..=RICHARDSON_LEVELS - m {
            table[i] = std::array::from_fn(|j| (p * table[i + 1][j] - table[i][j]) / (p - 1.0));
        }
    }
    table[0]
}

/// Scalar convenience wrapper around [`derivative`].
pub fn derivative_scalar<F: Fn(f64) -> f64>(f: &F, s: f64, order: usize, fd: &FdConfig) -> f64 {
    derivative(&|u| [f(u)], s, order, fd)[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err_at(h: f64, richardson: bool, order: usize) -> f64 {
        let fd = FdConfig { h, richardson };
        let s = 0.4;
        let got = derivative_scalar(&|u: f64| u.sin() * (0.5 * u).exp(), s, order, &fd);
        // analytic derivatives of sin(u) e^{u/2}
        let (sn, cs, e) = (s.sin(), s.cos(), (0.5 * s).exp());
        let exact = match order {
            1 => e * (cs + 0.5 * sn),
            2 => e * (-0.75 * sn + cs),
            _ => unreachable!(),
        };
        (got - exact).abs()
    }

    #[test]
    fn central_difference_is_second_order() {
        for order in 1..=2 {
            let ratio = err_at(2e-3, false, order) / err_at(1e-3, false, order);
            assert!((ratio - 4.0).abs() < 0.2, "order {order}: ratio {ratio}");
        }
    }

    #[test]
    fn richardson_is_sixth_order() {
        for order in 1..=2 {
            let h = 0.4 / STEP_SCALE[order - 1];
            let ratio = err_at(h, true, order) / err_at(0.5 * h, true, order);
            assert!((ratio - 64.0).abs() < 6.0, "order {order}: ratio {ratio}");
        }
    }

    #[test]
    fn polynomial_is_exact_up_to_rounding() {
        let fd = FdConfig::default();
        let f = |u: f64| [u * u * u * u, u * u * u];
        let d4 = derivative(&f, 0.3, 4, &fd);
        assert!((d4[0] - 24.0).abs() < 1e-6);
        assert!(d4[1].abs() < 1e-6);
        let d3 = derivative(&f, 0.3, 3, &fd);
        assert!((d3[1] - 6.0).abs() < 1e-7);
    }

    #[test]
    fn rejects_bad_step() {
        assert!(FdConfig::new(0.0, true).is_err());
        assert!(FdConfig::new(-1e-3, false).is_err());
        assert!(FdConfig::new(f64::NAN, false).is_err());
    }
}
