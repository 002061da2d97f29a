//! Projective geometry: points, linear subspaces, symmetric-group orbits,
//! and seeded sampling.

pub mod action;
pub mod point;
pub mod sample;
pub mod subspace;

pub use action::{orbit, PermAction};
pub use point::{collinear, reference_points, ProjPoint};
pub use sample::Sampler;
pub use subspace::LinearSubspace;
