//! Exact mixed areas of planar convex bodies, the Plücker space `Plₙ`,
//! realizations of Plücker vectors, triangle-normal configurations and
//! tropical intersection numbers.

pub mod arith;
pub mod configs;
pub mod decompose;
pub mod fuzz;
pub mod geometry;
pub mod linalg;
pub mod pluecker;
pub mod realize;
pub mod surd;
pub mod tropical;

pub use arith::Rational;
pub use geometry::{ConvexBody, Point2, Vec2};
pub use pluecker::PlueckerVector;
pub use surd::{SqrtRational, SurdSum};
