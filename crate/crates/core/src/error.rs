use thiserror::Error;

/// Errors raised by curve construction, differentiation and Frenet analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("rejected input: {0}")]
    RejectedInput(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// The curve is (numerically) a geodesic at the evaluation point.
    #[error("geodesic curvature {k1:e} is below tolerance at s = {s}")]
    GeodesicDegenerate { s: f64, k1: f64 },

    /// `∇_T T` is nonzero but null, so no unit principal normal exists.
    #[error("principal normal direction is null at s = {s}")]
    NullNormalDegenerate { s: f64 },

    #[error("tangent is not unit speed at s = {s}: |g(T,T)| = {norm}")]
    NonUnitSpeed { s: f64, norm: f64 },

    #[error("tangent is null at s = {s}")]
    NullTangent { s: f64 },

    /// A family parameter selects a geodesic instead of a proper curve.
    #[error("parameters describe a geodesic: {0}")]
    DegenerateGeodesic(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
