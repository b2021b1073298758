//! Levi-Civita connection and curvature of the left-invariant metric.
//!
//! Both are stored as constant integer tables on the frame. The curvature
//! table is cross-checked against [`curvature_from_connection`], which
//! rebuilds every entry from the connection and bracket tables.

use serde::Serialize;

use crate::frame::{inner, FrameVector, Signature};

/// Exact integer frame vector used by the constant tables.
pub type IntVector = [i64; 3];

const Z: IntVector = [0, 0, 0];
const E1: IntVector = [1, 0, 0];
const E2: IntVector = [0, 1, 0];
const E3: IntVector = [0, 0, 1];

fn neg(v: IntVector) -> IntVector {
    [-v[0], -v[1], -v[2]]
}

fn scale(a: i64, v: IntVector) -> IntVector {
    [a * v[0], a * v[1], a * v[2]]
}

fn add(a: IntVector, b: IntVector) -> IntVector {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn sub(a: IntVector, b: IntVector) -> IntVector {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn to_frame(v: IntVector) -> FrameVector {
    FrameVector::raw([v[0] as f64, v[1] as f64, v[2] as f64])
}

/// `table[i][j] = ∇_{e_i} e_j`, indices zero based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnectionTable {
    pub table: [[IntVector; 3]; 3],
}

impl ConnectionTable {
    pub const CANONICAL: ConnectionTable =
        ConnectionTable { table: [[Z, E3, [0, -1, 0]], [[0, 0, -1], Z, [-1, 0, 0]], [[0, -1, 0], [-1, 0, 0], Z]] };

    /// `∇_X Y` for left-invariant fields with constant components.
    pub fn nabla(&self, x: IntVector, y: IntVector) -> IntVector {
        let mut out = Z;
        for i in 0..3 {
            for j in 0..3 {
                let c = x[i] * y[j];
                if c != 0 {
                    out = add(out, scale(c, self.table[i][j]));
                }
            }
        }
        out
    }

    /// Floating-point `∇_X Y` for constant-component fields.
    pub fn nabla_f64(&self, x: FrameVector, y: FrameVector) -> FrameVector {
        let mut out = FrameVector::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                out += (x[i] * y[j]) * to_frame(self.table[i][j]);
            }
        }
        out
    }

    /// Largest violation of `g(∇_i e_j, e_k) + g(e_j, ∇_i e_k) = 0` under
    /// the given signature. Zero means metric compatible.
    pub fn compatibility_defect(&self, sig: Signature) -> i64 {
        let g = |a: IntVector, b: IntVector| -> i64 { (0..3).map(|i| i64::from(sig.0[i]) * a[i] * b[i]).sum() };
        let basis = [E1, E2, E3];
        let mut worst = 0;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let d = g(self.table[i][j], basis[k]) + g(basis[j], self.table[i][k]);
                    worst = worst.max(d.abs());
                }
            }
        }
        worst
    }

    pub fn is_metric_compatible(&self, sig: Signature) -> bool {
        self.compatibility_defect(sig) == 0
    }

    /// Signatures (with `g(e1,e1) = +1`) under which the table is metric
    /// compatible.
    pub fn compatible_signatures(&self) -> Vec<Signature> {
        Signature::all().filter(|s| s.0[0] == 1 && self.is_metric_compatible(*s)).collect()
    }

    /// Largest component of `∇_i e_j − ∇_j e_i − [e_i, e_j]`.
    pub fn torsion_defect(&self, brackets: &BracketTable) -> i64 {
        let mut worst = 0;
        for i in 0..3 {
            for j in 0..3 {
                let t = sub(sub(self.table[i][j], self.table[j][i]), brackets.table[i][j]);
                worst = worst.max(t.iter().map(|c| c.abs()).max().unwrap_or(0));
            }
        }
        worst
    }
}

impl Default for ConnectionTable {
    fn default() -> Self {
        Self::CANONICAL
    }
}

/// `table[i][j] = [e_i, e_j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BracketTable {
    pub table: [[IntVector; 3]; 3],
}

impl BracketTable {
    /// `[e1, e2] = 2 e3`, all other brackets of distinct frame fields vanish.
    pub const CANONICAL: BracketTable = BracketTable { table: [[Z, [0, 0, 2], Z], [[0, 0, -2], Z, Z], [Z, Z, Z]] };

    pub fn bracket(&self, x: IntVector, y: IntVector) -> IntVector {
        let mut out = Z;
        for i in 0..3 {
            for j in 0..3 {
                let c = x[i] * y[j];
                if c != 0 {
                    out = add(out, scale(c, self.table[i][j]));
                }
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.table[i][j] == neg(self.table[j][i])))
    }
}

impl Default for BracketTable {
    fn default() -> Self {
        Self::CANONICAL
    }
}

/// `r[a][b][c] = R(e_a, e_b) e_c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurvatureTable {
    pub r: [[[IntVector; 3]; 3]; 3],
}

impl CurvatureTable {
    /// Nonzero components `R121 = 3e2, R122 = 3e1, R131 = −e3, R133 = −e1,
    /// R232 = e3, R233 = −e2` and their antisymmetric partners.
    pub const CANONICAL: CurvatureTable = {
        let mut r = [[[Z; 3]; 3]; 3];
        r[0][1][0] = [0, 3, 0];
        r[0][1][1] = [3, 0, 0];
        r[0][2][0] = [0, 0, -1];
        r[0][2][2] = [-1, 0, 0];
        r[1][2][1] = [0, 0, 1];
        r[1][2][2] = [0, -1, 0];
        r[1][0][0] = [0, -3, 0];
        r[1][0][1] = [-3, 0, 0];
        r[2][0][0] = [0, 0, 1];
        r[2][0][2] = [1, 0, 0];
        r[2][1][1] = [0, 0, -1];
        r[2][1][2] = [0, 1, 0];
        CurvatureTable { r }
    };

    /// Entries that differ between two tables, as `(a, b, c)` index triples.
    pub fn differences(&self, other: &CurvatureTable) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    if self.r[a][b][c] != other.r[a][b][c] {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out
    }
}

/// Rebuilds `R(e_a,e_b)e_c = ∇_a ∇_b e_c − ∇_b ∇_a e_c − ∇_{[e_a,e_b]} e_c`
/// for all 27 index triples.
pub fn curvature_from_connection(conn: &ConnectionTable, brackets: &BracketTable) -> CurvatureTable {
    let basis = [E1, E2, E3];
    let mut r = [[[Z; 3]; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let (ea, eb, ec) = (basis[a], basis[b], basis[c]);
                let first = conn.nabla(ea, conn.nabla(eb, ec));
                let second = conn.nabla(eb, conn.nabla(ea, ec));
                let third = conn.nabla(brackets.bracket(ea, eb), ec);
                r[a][b][c] = sub(sub(first, second), third);
            }
        }
    }
    CurvatureTable { r }
}

/// The bilinear part `Γ(T, V)` of the covariant derivative along a curve,
/// so that `∇_T V = V' + Γ(T, V)`.
#[inline]
pub fn connection_term(t: FrameVector, v: FrameVector) -> FrameVector {
    FrameVector::raw([-t[1] * v[2] - t[2] * v[1], -t[0] * v[2] - t[2] * v[0], t[0] * v[1] - t[1] * v[0]])
}

/// Covariant derivative of the field `V` along a curve with velocity `T`,
/// given the componentwise derivative `V'`.
#[inline]
pub fn covariant_derivative_along(t: FrameVector, v: FrameVector, v_prime: FrameVector) -> FrameVector {
    v_prime + connection_term(t, v)
}

/// `R(X, Y) Z`, the trilinear extension of the constant curvature table.
pub fn curvature(x: FrameVector, y: FrameVector, z: FrameVector) -> FrameVector {
    curvature_with(&CurvatureTable::CANONICAL, x, y, z)
}

pub fn curvature_with(table: &CurvatureTable, x: FrameVector, y: FrameVector, z: FrameVector) -> FrameVector {
    let mut out = [0.0; 3];
    for a in 0..3 {
        for b in 0..3 {
            let xy = x[a] * y[b];
            if xy == 0.0 {
                continue;
            }
            for c in 0..3 {
                let coeff = xy * z[c];
                let e = table.r[a][b][c];
                for k in 0..3 {
                    out[k] += coeff * e[k] as f64;
                }
            }
        }
    }
    FrameVector::raw(out)
}

/// `R(X, Y, Z, W) = g(R(X, Y) Z, W)`.
pub fn riemann_christoffel(x: FrameVector, y: FrameVector, z: FrameVector, w: FrameVector) -> f64 {
    inner(curvature(x, y, z), w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(v: IntVector) -> FrameVector {
        to_frame(v)
    }

    #[test]
    fn table_matches_listed_derivatives() {
        let c = ConnectionTable::CANONICAL;
        assert_eq!(c.table[0][1], E3);
        assert_eq!(c.table[0][2], neg(E2));
        assert_eq!(c.table[1][0], neg(E3));
        assert_eq!(c.table[1][2], neg(E1));
        assert_eq!(c.table[2][0], neg(E2));
        assert_eq!(c.table[2][1], neg(E1));
        for i in 0..3 {
            assert_eq!(c.table[i][i], Z);
        }
    }

    #[test]
    fn compatibility_forces_signature() {
        let c = ConnectionTable::CANONICAL;
        assert!(c.is_metric_compatible(Signature::FRAME));
        assert!(!c.is_metric_compatible(Signature::COORDINATE_FORM));
        assert_eq!(c.compatible_signatures(), vec![Signature::FRAME]);
        assert_eq!(c.torsion_defect(&BracketTable::CANONICAL), 0);
        assert!(BracketTable::CANONICAL.is_antisymmetric());
    }

    #[test]
    fn tampered_table_is_detected() {
        let mut c = ConnectionTable::CANONICAL;
        c.table[0][1] = neg(E3);
        assert!(c.compatible_signatures().is_empty() || c.torsion_defect(&BracketTable::CANONICAL) != 0);
        assert_ne!(c.torsion_defect(&BracketTable::CANONICAL), 0);
    }

    #[test]
    fn brute_force_curvature_matches_table() {
        let brute = curvature_from_connection(&ConnectionTable::CANONICAL, &BracketTable::CANONICAL);
        assert_eq!(brute, CurvatureTable::CANONICAL);
        assert_eq!(brute.r[0][1][1], [3, 0, 0]);
        assert_eq!(brute.r[0][2][1], Z);
        for a in 0..3 {
            for c in 0..3 {
                assert_eq!(brute.r[a][a][c], Z);
            }
        }
    }

    #[test]
    fn curvature_examples() {
        let (e1, e2, e3) = (fv(E1), fv(E2), fv(E3));
        assert_eq!(curvature(e1, e2, e1), 3.0 * e2);
        assert_eq!(curvature(e2, e1, e1), -3.0 * e2);
        assert_eq!(curvature(e1, e2, e3), FrameVector::ZERO);
        assert_eq!(riemann_christoffel(e1, e2, e1, e2), -3.0);
        assert_eq!(riemann_christoffel(e1, e1, e2, e3), 0.0);
        assert_eq!(riemann_christoffel(e1, e3, e1, e3), 1.0);
    }

    #[test]
    fn covariant_derivative_examples() {
        let e3 = FrameVector::E3;
        assert_eq!(covariant_derivative_along(e3, e3, FrameVector::ZERO), FrameVector::ZERO);

        let s: f64 = 0.37;
        let (c, sh) = ((2.0 * s).cosh(), (2.0 * s).sinh());
        let t = FrameVector::new(c, sh, 0.0);
        let tp = FrameVector::new(2.0 * sh, 2.0 * c, 0.0);
        let got = covariant_derivative_along(t, t, tp);
        assert!((got - tp).max_abs() < 1e-15);

        // V = T: first component is T1' − 2 T2 T3
        let t = FrameVector::new(0.3, -1.2, 0.8);
        let tp = FrameVector::new(0.5, 0.1, -0.4);
        let got = covariant_derivative_along(t, t, tp);
        assert!((got[0] - (tp[0] - 2.0 * t[1] * t[2])).abs() < 1e-15);
    }

    #[test]
    fn along_formula_agrees_with_table() {
        let t = FrameVector::new(0.3, -1.2, 0.8);
        let v = FrameVector::new(-0.7, 0.2, 1.9);
        let via_table = ConnectionTable::CANONICAL.nabla_f64(t, v);
        assert!((connection_term(t, v) - via_table).max_abs() < 1e-15);
    }
}
