//! The four-curve arrangement: quadratic lifting `a² + b² + (a+b)²` plus a
//! linear term per curve, on supports that are all lattice points of
//! four small polygons.

use super::polynomial::{Lifting, TropicalPolynomial};
use crate::arith::rat;
use crate::geometry::{convex_hull, ConvexBody, Point2};

pub const QUADRATIC: &str = "a^2+b^2+(a+b)^2";

/// Linear terms `(la, lb)` of the four liftings.
pub const LINEAR_TERMS: [(i64, i64); 4] = [(0, 0), (1, -2), (-1, 1), (2, -7)];

pub const POLYGON_VERTICES: [&[(i64, i64)]; 4] = [
    &[(0, 0), (1, 0), (0, 1)],
    &[(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)],
    &[(0, 0), (1, 0), (1, 1), (0, 1)],
    &[(0, 0), (3, 0), (3, 1), (2, 2), (0, 2)],
];

pub fn polygons() -> Vec<ConvexBody> {
    POLYGON_VERTICES
        .iter()
        .map(|vs| convex_hull(&vs.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect::<Vec<_>>()))
        .collect()
}

pub fn liftings() -> Vec<Lifting> {
    LINEAR_TERMS
        .iter()
        .map(|&(la, lb)| Lifting::new(QUADRATIC, [rat(la), rat(lb)]).expect("valid preset expression"))
        .collect()
}

pub fn four_curves() -> Vec<TropicalPolynomial> {
    polygons()
        .iter()
        .zip(liftings())
        .map(|(p, l)| TropicalPolynomial::from_polytope(p, &l).expect("lattice polygon"))
        .collect()
}

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 2] = ["four-curves", "line"];

pub fn by_name(name: &str) -> Option<Vec<TropicalPolynomial>> {
    match name {
        "four-curves" => Some(four_curves()),
        "line" => Some(vec![TropicalPolynomial::line()]),
        _ => None,
    }
}
