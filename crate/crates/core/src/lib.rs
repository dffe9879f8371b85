//! Dressing of definite affine spheres by rational elements of a twisted loop group.
//!
//! The crate builds simple (three-pole) and six-pole loop elements, lets them act on
//! the extended frame of the vacuum affine sphere, and evaluates the resulting metrics
//! and immersions together with finite-difference checks of the Tzitzéica equation.

pub mod algebra;
pub mod dressing;
pub mod error;
pub mod grid;
pub mod loopgroup;
pub mod surfaces;
pub mod verify;

pub use algebra::{c, det3, inv3, real, solve_line_normalize, Mat3C, Vec3C, C, R3};
pub use error::{Error, Result};
pub use grid::{GridSpec, ScalarGrid, SurfaceGrid};
