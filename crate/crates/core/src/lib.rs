//! Self-commutator norm estimates for dense complex matrices.
//!
//! The crate computes `C(A) = A*A − AA*`, the numerical range `W(A)` (boundary,
//! area, directional widths, numerical radius), the distance to the scalars
//! `m(A)`, and the planar width functionals of convex bodies used to bound
//! `‖C(A)‖` by the area of `W(A)`.

pub mod linalg;

pub use linalg::{ComplexScalar, LinalgError, Matrix};
pub mod bounds;
pub mod convexgeom;
pub mod gallery;
pub mod numrange;
pub mod optimize;
pub mod quadrature;
pub mod cli;
