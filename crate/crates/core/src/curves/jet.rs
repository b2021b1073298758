//! Third-order scalar jets: a value together with its first three
//! derivatives with respect to the curve parameter.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Jet(pub [f64; 4]);

impl Jet {
    pub fn constant(v: f64) -> Self {
        Jet([v, 0.0, 0.0, 0.0])
    }

    /// `a s + b`.
    pub fn linear(s: f64, slope: f64, offset: f64) -> Self {
        Jet([slope * s + offset, slope, 0.0, 0.0])
    }

    pub fn value(&self) -> f64 {
        self.0[0]
    }

    pub fn d(&self, k: usize) -> f64 {
        self.0[k]
    }

    /// `f(u)` given `f, f', f'', f'''` evaluated at `u.value()`.
    pub fn compose(self, f: [f64; 4]) -> Jet {
        let [_, u1, u2, u3] = self.0;
        Jet([f[0], f[1] * u1, f[2] * u1 * u1 + f[1] * u2, f[3] * u1 * u1 * u1 + 3.0 * f[2] * u1 * u2 + f[1] * u3])
    }

    pub fn sinh(self) -> Jet {
        let (s, c) = (self.0[0].sinh(), self.0[0].cosh());
        self.compose([s, c, s, c])
    }

    pub fn cosh(self) -> Jet {
        let (s, c) = (self.0[0].sinh(), self.0[0].cosh());
        self.compose([c, s, c, s])
    }

    pub fn sin(self) -> Jet {
        let (s, c) = self.0[0].sin_cos();
        self.compose([s, c, -s, -c])
    }

    pub fn cos(self) -> Jet {
        let (s, c) = self.0[0].sin_cos();
        self.compose([c, -s, -c, s])
    }
}

impl Add for Jet {
    type Output = Jet;

    fn add(self, o: Jet) -> Jet {
        Jet(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

impl Sub for Jet {
    type Output = Jet;

    fn sub(self, o: Jet) -> Jet {
        Jet(std::array::from_fn(|k| self.0[k] - o.0[k]))
    }
}

impl Neg for Jet {
    type Output = Jet;

    fn neg(self) -> Jet {
        Jet(self.0.map(|v| -v))
    }
}

impl Mul for Jet {
    type Output = Jet;

    fn mul(self, o: Jet) -> Jet {
        let [f0, f1, f2, f3] = self.0;
        let [g0, g1, g2, g3] = o.0;
        Jet([
            f0 * g0,
            f1 * g0 + f0 * g1,
            f2 * g0 + 2.0 * f1 * g1 + f0 * g2,
            f3 * g0 + 3.0 * f2 * g1 + 3.0 * f1 * g2 + f0 * g3,
        ])
    }
}

impl Mul<Jet> for f64 {
    type Output = Jet;

    fn mul(self, j: Jet) -> Jet {
        Jet(j.0.map(|v| self * v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_rule_against_closed_form() {
        // d^k/ds^k sinh(2s + 1) at s = 0.3
        let s = 0.3;
        let j = Jet::linear(s, 2.0, 1.0).sinh();
        let u: f64 = 2.0 * s + 1.0;
        assert!((j.d(0) - u.sinh()).abs() < 1e-14);
        assert!((j.d(1) - 2.0 * u.cosh()).abs() < 1e-14);
        assert!((j.d(2) - 4.0 * u.sinh()).abs() < 1e-14);
        assert!((j.d(3) - 8.0 * u.cosh()).abs() < 1e-13);
    }

    #[test]
    fn product_rule_on_polynomials() {
        // (s^2)(s) = s^3 at s = 1.5: 3.375, 6.75, 9, 6
        let s = 1.5;
        let sq = Jet([s * s, 2.0 * s, 2.0, 0.0]);
        let lin = Jet::linear(s, 1.0, 0.0);
        let p = sq * lin;
        assert_eq!(p.0, [3.375, 6.75, 9.0, 6.0]);
    }

    #[test]
    fn trig_third_derivative() {
        let s = 0.7;
        let j = Jet([s * s, 2.0 * s, 2.0, 0.0]).sin();
        // d/ds sin(s^2) = 2s cos(s^2); d3 = -12 s sin(s^2) - 8 s^3 cos(s^2)
        let u = s * s;
        assert!((j.d(1) - 2.0 * s * u.cos()).abs() < 1e-14);
        let d3 = -12.0 * s * u.sin() - 8.0 * s * s * s * u.cos();
        assert!((j.d(3) - d3).abs() < 1e-13);
        let c = Jet::linear(s, 1.0, 0.0).cos();
        assert!((c.d(3) - s.sin()).abs() < 1e-15);
    }
}
