//! Exact-arithmetic construction and machine verification of nodal cubic
//! threefolds.
//!
//! The crate builds the ten-nodal Segre cubic primal and nondegenerate
//! six-nodal cubics over the rationals, certifies every node as an
//! ordinary double point, and checks the classical incidence counts,
//! determinantal representations, Picard-lattice combinatorics, and the
//! rank-2 flop lattice attached to these threefolds. All arithmetic is
//! exact: rationals of arbitrary precision, fraction-free elimination, and
//! zero tolerances.
//!
//! Entry points:
//! - [`segre`]: the Segre cubic, its (15_4, 10_6) configuration, node
//!   charts, the Castelnuovo map, the Kummer projection, Weddle quartics.
//! - [`sixnodal`]: synthesis of six-nodal cubics (reference-node family and
//!   quadric-curve synthesis) with closed-form nodes.
//! - [`detrep`]: determinantal representations and their rank loci.
//! - [`pic`]: the 27 lines of a cubic surface as lattice classes.
//! - [`hk`]: rank-2 Beauville-Bogomolov lattices, nef cones, flops.
//! - [`suites`]: the claim-by-claim verification suites behind the CLI.
//!
//! The `examples/` directory has one runnable walk-through per capability.

pub mod exact;
pub mod proj;
pub mod segre;

pub use exact::{MultiPoly, PolyMatrix, ScalarMatrix};
pub use proj::{LinearSubspace, PermAction, ProjPoint, Sampler};
