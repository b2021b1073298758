//! Curve geometry of the three-dimensional hyperbolic Heisenberg group.
//!
//! The group carries the left-invariant Lorentzian metric of signature
//! `(+, −, −)` on the frame `e1 = ∂x − 2y∂z`, `e2 = ∂y + 2x∂z`, `e3 = 2∂z`,
//! with `[e1, e2] = 2e3`. The crate provides the frame
//! algebra, connection and curvature, curve representations, the Frenet
//! apparatus, the bitension field and generators for biharmonic families.

pub mod biharmonic;
pub mod connection;
pub mod curves;
pub mod error;
pub mod frame;
pub mod frenet;
pub mod generators;
pub mod verifier;

pub use error::{GeometryError, Result};
pub use frame::{CausalCharacter, FrameVector, Signature};
