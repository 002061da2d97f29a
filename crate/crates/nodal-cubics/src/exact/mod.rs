//! Exact computational substrate: rational scalars, sparse multivariate
//! polynomials, matrices, and fraction-free linear algebra.
//!
//! Everything here is immutable after construction and free of side
//! effects, so values can be shared across threads without coordination.

pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod serial;

pub use matrix::{PolyMatrix, ScalarMatrix};
pub use poly::MultiPoly;
pub use scalar::Scalar;
