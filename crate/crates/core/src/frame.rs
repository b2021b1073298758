//! Tangent vectors in the left-invariant orthonormal frame `{e1, e2, e3}`.
//!
//! All geometry in this crate is expressed in frame components, where the
//! metric is the constant diagonal form `diag(+1, -1, -1)`.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};

/// Default tolerance used for causal classification.
pub const CAUSAL_TOL: f64 = 1e-9;

/// A tangent vector given by its components in the frame `{e1, e2, e3}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct FrameVector([f64; 3]);

impl FrameVector {
    pub const ZERO: FrameVector = FrameVector([0.0; 3]);
    pub const E1: FrameVector = FrameVector([1.0, 0.0, 0.0]);
    pub const E2: FrameVector = FrameVector([0.0, 1.0, 0.0]);
    pub const E3: FrameVector = FrameVector([0.0, 0.0, 1.0]);

    /// Builds a vector from frame components.
    ///
    /// Panics if a component is NaN or infinite; use [`FrameVector::try_new`]
    /// for untrusted input.
    pub fn new(u1: f64, u2: f64, u3: f64) -> Self {
        match Self::try_new(u1, u2, u3) {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn try_new(u1: f64, u2: f64, u3: f64) -> Result<Self> {
        if u1.is_finite() && u2.is_finite() && u3.is_finite() {
            Ok(FrameVector([u1, u2, u3]))
        } else {
            Err(GeometryError::NonFinite(format!("frame vector ({u1}, {u2}, {u3})")))
        }
    }

    /// Frame basis vector `e_{index+1}`; `index` is zero based.
    pub fn basis(index: usize) -> Self {
        let mut c = [0.0; 3];
        c[index] = 1.0;
        FrameVector(c)
    }

    /// Components without the finiteness check. Only for values produced by
    /// arithmetic on already valid vectors.
    pub(crate) const fn raw(c: [f64; 3]) -> Self {
        FrameVector(c)
    }

    pub fn u1(&self) -> f64 {
        self.0[0]
    }

    pub fn u2(&self) -> f64 {
        self.0[1]
    }

    pub fn u3(&self) -> f64 {
        self.0[2]
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    /// Euclidean norm of the component triple. Used for residuals, where a
    /// nonzero null vector must not read as zero.
    pub fn euclidean_norm(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }
}

impl TryFrom<[f64; 3]> for FrameVector {
    type Error = GeometryError;

    fn try_from(c: [f64; 3]) -> Result<Self> {
        FrameVector::try_new(c[0], c[1], c[2])
    }
}

impl From<FrameVector> for [f64; 3] {
    fn from(v: FrameVector) -> Self {
        v.0
    }
}

impl Index<usize> for FrameVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl fmt::Display for FrameVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl Add for FrameVector {
    type Output = FrameVector;

    fn add(self, o: FrameVector) -> FrameVector {
        FrameVector([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl AddAssign for FrameVector {
    fn add_assign(&mut self, o: FrameVector) {
        *self = *self + o;
    }
}

impl Sub for FrameVector {
    type Output = FrameVector;

    fn sub(self, o: FrameVector) -> FrameVector {
        FrameVector([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl SubAssign for FrameVector {
    fn sub_assign(&mut self, o: FrameVector) {
        *self = *self - o;
    }
}

impl Neg for FrameVector {
    type Output = FrameVector;

    fn neg(self) -> FrameVector {
        FrameVector([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl Mul<FrameVector> for f64 {
    type Output = FrameVector;

    fn mul(self, v: FrameVector) -> FrameVector {
        FrameVector([self * v.0[0], self * v.0[1], self * v.0[2]])
    }
}

impl Mul<f64> for FrameVector {
    type Output = FrameVector;

    fn mul(self, a: f64) -> FrameVector {
        a * self
    }
}

/// Hyperbolic rotation of the `e1, e2` plane,
/// `(u1, u2, u3) -> (u1 cosh θ + u2 sinh θ, u1 sinh θ + u2 cosh θ, u3)`.
///
/// It preserves the metric, the connection, the curvature and the cross
/// product, so frame computations can run on rotated components and be
/// rotated back.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Boost {
    pub angle: f64,
}

impl Boost {
    pub const IDENTITY: Boost = Boost { angle: 0.0 };

    pub fn new(angle: f64) -> Self {
        Boost { angle }
    }

    pub fn apply(&self, v: FrameVector) -> FrameVector {
        if self.angle == 0.0 {
            return v;
        }
        let (sh, ch) = (self.angle.sinh(), self.angle.cosh());
        FrameVector([ch * v.0[0] + sh * v.0[1], sh * v.0[0] + ch * v.0[1], v.0[2]])
    }

    pub fn inverse(&self) -> Boost {
        Boost { angle: -self.angle }
    }
}

/// Sign pattern `g(e_i, e_i)` of an orthonormal frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature(pub [i8; 3]);

impl Signature {
    /// The signature under which the frame connection is metric compatible.
    pub const FRAME: Signature = Signature([1, -1, -1]);

    /// The signature obtained by reading the coordinate expression
    /// `dx² + dy² − ¼(dz + 2y dx − 2x dy)²` on the frame: the correction
    /// term vanishes on `e1`, `e2` and equals `−1` on `e3 = 2∂z`.
    pub const COORDINATE_FORM: Signature = Signature([1, 1, -1]);

    pub fn product(&self) -> i8 {
        self.0.iter().product()
    }

    /// `g(X, Y)` under this signature.
    pub fn inner(&self, x: FrameVector, y: FrameVector) -> f64 {
        (0..3).map(|i| f64::from(self.0[i]) * x[i] * y[i]).sum()
    }

    /// All eight sign patterns, in lexicographic order starting at `(+,+,+)`.
    pub fn all() -> impl Iterator<Item = Signature> {
        (0..8u8).map(|bits| {
            let sign = |b: u8| if bits & (4 >> b) == 0 { 1 } else { -1 };
            Signature([sign(0), sign(1), sign(2)])
        })
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |s: i8| if s > 0 { '+' } else { '-' };
        write!(f, "({},{},{})", c(self.0[0]), c(self.0[1]), c(self.0[2]))
    }
}

/// Causal character of a vector or of a curve's velocity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CausalCharacter {
    Spacelike,
    Timelike,
    Null,
}

impl CausalCharacter {
    /// `+1` for spacelike, `-1` for timelike, `None` for null.
    pub fn sign(&self) -> Option<i8> {
        match self {
            CausalCharacter::Spacelike => Some(1),
            CausalCharacter::Timelike => Some(-1),
            CausalCharacter::Null => None,
        }
    }
}

impl fmt::Display for CausalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CausalCharacter::Spacelike => "spacelike",
            CausalCharacter::Timelike => "timelike",
            CausalCharacter::Null => "null",
        };
        f.write_str(s)
    }
}

/// `g(X, Y) = u1 v1 − u2 v2 − u3 v3`.
#[inline]
pub fn inner(x: FrameVector, y: FrameVector) -> f64 {
    x[0] * y[0] - x[1] * y[1] - x[2] * y[2]
}

pub fn causal_character(x: FrameVector, tol: f64) -> CausalCharacter {
    let n = inner(x, x);
    if n > tol {
        CausalCharacter::Spacelike
    } else if n < -tol {
        CausalCharacter::Timelike
    } else {
        CausalCharacter::Null
    }
}

/// Cross product adapted to the indefinite metric:
/// `X ∧ Y = −(u2v3 − u3v2) e1 − (u1v3 − u3v1) e2 + (u1v2 − u2v1) e3`.
#[inline]
pub fn cross(x: FrameVector, y: FrameVector) -> FrameVector {
    FrameVector::raw([-(x[1] * y[2] - x[2] * y[1]), -(x[0] * y[2] - x[2] * y[0]), x[0] * y[1] - x[1] * y[0]])
}

/// Mixed product `(X, Y, Z) = g(X ∧ Y, Z)`; equals `−det[X; Y; Z]`.
pub fn mixed(x: FrameVector, y: FrameVector, z: FrameVector) -> f64 {
    inner(cross(x, y), z)
}

/// Plain 3×3 determinant of the rows `X, Y, Z`.
pub fn det3(x: FrameVector, y: FrameVector, z: FrameVector) -> f64 {
    x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) + x[2] * (y[0] * z[1] - y[1] * z[0])
}

/// Defects of the six cross-product identities at `(X, Y, Z)` and scalars
/// `(a, b)`, in order: bilinearity with antisymmetry, orthogonality, basis
/// products, `(X ∧ Y) ∧ Z = g(X,Z)Y − g(Y,Z)X`, cyclicity of the mixed
/// product with `(X,Y,Z) = −det`, and the Jacobi identity.
pub fn cross_identity_defects(x: FrameVector, y: FrameVector, z: FrameVector, a: f64, b: f64) -> [f64; 6] {
    let linear = (cross(a * x + b * y, z) - (a * cross(x, z) + b * cross(y, z))).max_abs();
    let antisym = (cross(x, y) + cross(y, x)).max_abs();
    let xy = cross(x, y);
    let orth = inner(xy, x).abs().max(inner(xy, y).abs());
    let (e1, e2, e3) = (FrameVector::E1, FrameVector::E2, FrameVector::E3);
    let basis = (cross(e1, e2) - e3).max_abs().max((cross(e2, e3) + e1).max_abs()).max((cross(e3, e1) - e2).max_abs());
    let triple = (cross(xy, z) - (inner(x, z) * y - inner(y, z) * x)).max_abs();
    let m = mixed(x, y, z);
    let cyclic = (m - mixed(y, z, x)).abs().max((m - mixed(z, x, y)).abs()).max((m + det3(x, y, z)).abs());
    let jacobi = (cross(xy, z) + cross(cross(y, z), x) + cross(cross(z, x), y)).max_abs();
    [linear.max(antisym), orth, basis, triple, cyclic, jacobi]
}
