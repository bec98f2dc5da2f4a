//! Min-plus tropical polynomials in two variables, their curves via the dual
//! regular subdivision, and transversal intersection numbers.
//!
//! `f(x, y) = min (c_{a,b} + a·x + b·y)`; heights lift to the lower hull.

pub mod curve;
pub mod expr;
pub mod intersect;
pub mod polynomial;
pub mod presets;
pub mod subdivision;
pub mod svg;

pub use curve::{curve_of_subdivision, tropical_curve, CurveEdge, CurveVertex, EdgeKind, TropicalCurve};
pub use expr::{Expr, ExprError};
pub use intersect::{bkk_check, intersect, intersection_config, BkkReport, Crossing, IntersectionReport, NonTransversal};
pub use polynomial::{lattice_points, Evaluation, Exponent, Lifting, TropicalPolynomial};
pub use subdivision::{lift_and_subdivide, Cell, RegularSubdivision};
pub use svg::{render_svg, subdivision_window, Figure, Window};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TropicalError {
    #[error("a tropical polynomial needs at least one term")]
    NoTerms,
    #[error("exponent ({a}, {b}) appears twice")]
    DuplicateTerm { a: i64, b: i64 },
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("lifting is undefined at ({a}, {b})")]
    UndefinedHeight { a: i64, b: i64 },
    #[error("polygon vertex {0} is not a lattice point")]
    NonLatticeVertex(String),
    #[error("non-transversal intersection: {0}")]
    NonTransversal(Box<NonTransversal>),
    #[error("bad window: {0}")]
    BadWindow(String),
    #[error("{0}")]
    Config(String),
}
