#![allow(dead_code)]

use mixarea::arith::ratio;
use mixarea::geometry::convex_hull;
use mixarea::{ConvexBody, Point2, Rational};
use proptest::prelude::*;

pub fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound * 4..=bound * 4, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

pub fn positive(bound: i64) -> impl Strategy<Value = Rational> {
    (1..=bound * 4, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

pub fn point(bound: i64) -> impl Strategy<Value = Point2> {
    (rational(bound), rational(bound)).prop_map(|(x, y)| Point2::new(x, y))
}

/// Hull of 1 to 8 points; includes points and segments.
pub fn body() -> impl Strategy<Value = ConvexBody> {
    prop::collection::vec(point(10), 1..=8).prop_map(|pts| convex_hull(&pts))
}

pub fn polygon() -> impl Strategy<Value = ConvexBody> {
    prop::collection::vec(point(10), 3..=8)
        .prop_map(|pts| convex_hull(&pts))
        .prop_filter("two-dimensional", |p| p.len() >= 3)
}
