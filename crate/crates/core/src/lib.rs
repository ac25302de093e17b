//! Symmetrization means of planar convex bodies, Minkowski asymmetry and
//! optimal containment, with exact arithmetic in the quadratic field ℚ(√5).
//!
//! The [`golden`] module builds the golden house, the pentagon whose
//! asymmetry is the golden ratio, and the checks around it.

pub mod containment;
pub mod error;
pub mod golden;
pub mod json;
pub mod lp;
pub mod matrix;
pub mod means;
pub mod poly3d;
pub mod polygon;
pub mod scalar;

pub use error::{Error, LpError, Result};
pub use polygon::{convex_hull, ConvexPolygon, HalfPlane, Location, Mat2, Point2, Support};
pub use scalar::{Scalar, F64, Q5};
