//! Planar convex bodies over exact rationals.
//!
//! A [`ConvexBody`] is a point, a segment or a convex polygon given by its
//! vertices in strictly counterclockwise order, starting at the
//! lexicographically smallest vertex. Directions passed to [`support`] and
//! [`width`] are arbitrary nonzero rational vectors, never unit vectors, so
//! every formula here stays inside ℚ.

use crate::arith::{half, parse_rational, serde_rational, Rational};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point2 {
    #[serde(with = "serde_rational")]
    pub x: Rational,
    #[serde(with = "serde_rational")]
    pub y: Rational,
}

/// Vectors and points share a representation.
pub type Vec2 = Point2;

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(crate::arith::rat(x), crate::arith::rat(y))
    }

    pub fn origin() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &Vec2) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the cross product, `det(self, other)`.
    pub fn cross(&self, other: &Vec2) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    /// Rotation by −90°: for an edge of a counterclockwise polygon this is the
    /// outward normal scaled by the edge length.
    pub fn rotate_cw(&self) -> Vec2 {
        Vec2::new(self.y.clone(), -self.x.clone())
    }

    pub fn scale(&self, k: &Rational) -> Vec2 {
        Vec2::new(&self.x * k, &self.y * k)
    }
}

impl Add for &Point2 {
    type Output = Point2;
    fn add(self, rhs: &Point2) -> Point2 {
        Point2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Point2 {
    type Output = Point2;
    fn sub(self, rhs: &Point2) -> Point2 {
        Point2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x.clone(), -self.y.clone())
    }
}

impl Mul<&Rational> for &Point2 {
    type Output = Point2;
    fn mul(self, k: &Rational) -> Point2 {
        self.scale(k)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Orientation of the triple `(a, b, c)`: positive for a left turn.
pub fn orient(a: &Point2, b: &Point2, c: &Point2) -> Ordering {
    (b - a).cross(&(c - a)).cmp(&Rational::zero())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("body must have at least two vertices for the support-sum formula")]
    DegenerateBody,
    #[error("a convex body needs at least one vertex")]
    Empty,
    #[error("vertices are not in strictly counterclockwise convex position: {0}")]
    NotConvex(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConvexBody {
    vertices: Vec<Point2>,
}

impl ConvexBody {
    /// Strict constructor: the list must already be a valid vertex list.
    /// The cyclic order is rotated to start at the lexicographically smallest vertex.
    pub fn from_vertices(mut vertices: Vec<Point2>) -> Result<Self, GeometryError> {
        match vertices.len() {
            0 => return Err(GeometryError::Empty),
            1 => {}
            2 => {
                if vertices[0] == vertices[1] {
                    return Err(GeometryError::NotConvex("segment endpoints coincide".into()));
                }
                vertices.sort();
            }
            k => {
                for i in 0..k {
                    for j in 0..k {
                        if j == i || j == (i + 1) % k {
                            continue;
                        }
                        if orient(&vertices[i], &vertices[(i + 1) % k], &vertices[j])
                            != Ordering::Greater
                        {
                            return Err(GeometryError::NotConvex(format!(
                                "vertex {} is not strictly left of edge {}->{}",
                                j,
                                i,
                                (i + 1) % k
                            )));
                        }
                    }
                }
                let start = (0..k).min_by(|&a, &b| vertices[a].cmp(&vertices[b])).unwrap_or(0);
                vertices.rotate_left(start);
            }
        }
        Ok(Self { vertices })
    }

    pub fn point(p: Point2) -> Self {
        Self { vertices: vec![p] }
    }

    /// Segment between two points; collapses to a point when they coincide.
    pub fn segment(a: Point2, b: Point2) -> Self {
        convex_hull(&[a, b])
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Edge vectors in counterclockwise order. A segment yields `[b−a, a−b]`, a point nothing.
    pub fn edge_vectors(&self) -> Vec<Vec2> {
        let k = self.vertices.len();
        if k < 2 {
            return Vec::new();
        }
        (0..k)
            .map(|i| &self.vertices[(i + 1) % k] - &self.vertices[i])
            .collect()
    }

    pub fn translate(&self, t: &Vec2) -> Self {
        Self {
            vertices: self.vertices.iter().map(|v| v + t).collect(),
        }
    }

    /// Dilation by a nonnegative factor (about the origin).
    pub fn dilate(&self, k: &Rational) -> Self {
        assert!(!k.is_negative(), "dilation factor must be nonnegative");
        if k.is_zero() {
            return Self::point(Point2::origin());
        }
        Self {
            vertices: self.vertices.iter().map(|v| v.scale(k)).collect(),
        }
    }

    /// The translate whose first (lexicographically smallest) vertex is the origin.
    pub fn normalized(&self) -> Self {
        let t = -&self.vertices[0];
        self.translate(&t)
    }

    pub fn equals_up_to_translation(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn contains(&self, p: &Point2) -> bool {
        match self.vertices.len() {
            1 => &self.vertices[0] == p,
            2 => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                orient(a, b, p) == Ordering::Equal
                    && (p - a).dot(&(b - a)) >= Rational::zero()
                    && (p - b).dot(&(a - b)) >= Rational::zero()
            }
            k => (0..k).all(|i| {
                orient(&self.vertices[i], &self.vertices[(i + 1) % k], p) != Ordering::Less
            }),
        }
    }
}

impl fmt::Display for ConvexBody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "conv{{{}}}", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct BodyRepr {
    vertices: Vec<[String; 2]>,
}

impl Serialize for ConvexBody {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BodyRepr {
            vertices: self
                .vertices
                .iter()
                .map(|v| [v.x.to_string(), v.y.to_string()])
                .collect(),
        }
        .serialize(s)
    }
}

/// Deserialization re-canonicalizes: the listed points are replaced by their hull.
impl<'de> Deserialize<'de> for ConvexBody {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = BodyRepr::deserialize(d)?;
        if repr.vertices.is_empty() {
            return Err(D::Error::custom(GeometryError::Empty));
        }
        let pts = repr
            .vertices
            .iter()
            .map(|[x, y]| {
                Ok(Point2::new(
                    parse_rational(x).map_err(D::Error::custom)?,
                    parse_rational(y).map_err(D::Error::custom)?,
                ))
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        Ok(convex_hull(&pts))
    }
}

/// Andrew's monotone chain; drops duplicate and collinear points.
///
/// Panics on an empty slice.
pub fn convex_hull(points: &[Point2]) -> ConvexBody {
    assert!(!points.is_empty(), "convex_hull of an empty point set");
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return ConvexBody { vertices: pts };
    }
    let mut lower: Vec<Point2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Ordering::Greater
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Ordering::Greater
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    ConvexBody { vertices: lower }
}

/// Angular class of a nonzero vector, counterclockwise from the positive x-axis:
/// half 0 covers angles in `[0, π)`, half 1 covers `[π, 2π)`.
fn half_plane(v: &Vec2) -> u8 {
    let zero = Rational::zero();
    if v.y > zero || (v.y == zero && v.x > zero) {
        0
    } else {
        1
    }
}

/// Total order of nonzero vectors by polar angle in `[0, 2π)`.
pub fn angle_cmp(a: &Vec2, b: &Vec2) -> Ordering {
    half_plane(a)
        .cmp(&half_plane(b))
        .then_with(|| Rational::zero().cmp(&a.cross(b)))
}

/// Minkowski sum. Polygons are merged edge by edge in angular order; anything
/// involving a point or segment falls back to the hull of pairwise vertex sums.
pub fn minkowski_sum(a: &ConvexBody, b: &ConvexBody) -> ConvexBody {
    if a.len() < 3 || b.len() < 3 {
        let sums: Vec<Point2> = a
            .vertices
            .iter()
            .flat_map(|p| b.vertices.iter().map(move |q| p + q))
            .collect();
        return convex_hull(&sums);
    }
    let mut edges: Vec<Vec2> = a.edge_vectors();
    edges.extend(b.edge_vectors());
    edges.sort_by(angle_cmp);
    // start at the sum of the two bottom-most (then left-most) vertices
    let bottom = |body: &ConvexBody| {
        body.vertices
            .iter()
            .min_by(|p, q| p.y.cmp(&q.y).then_with(|| p.x.cmp(&q.x)))
            .cloned()
            .unwrap()
    };
    let mut current = &bottom(a) + &bottom(b);
    let mut out = Vec::with_capacity(edges.len());
    let mut i = 0;
    while i < edges.len() {
        out.push(current.clone());
        let mut step = edges[i].clone();
        i += 1;
        while i < edges.len() && angle_cmp(&step, &edges[i]) == Ordering::Equal {
            step = &step + &edges[i];
            i += 1;
        }
        current = &current + &step;
    }
    ConvexBody::from_vertices(out).expect("edge merge of convex polygons is convex")
}

/// Minkowski sum of many bodies; the empty sum is the origin.
pub fn minkowski_sum_all<'a, I: IntoIterator<Item = &'a ConvexBody>>(bodies: I) -> ConvexBody {
    bodies
        .into_iter()
        .fold(ConvexBody::point(Point2::origin()), |acc, b| {
            minkowski_sum(&acc, b)
        })
}

/// Shoelace area; zero for points and segments.
pub fn area(a: &ConvexBody) -> Rational {
    let v = &a.vertices;
    if v.len() < 3 {
        return Rational::zero();
    }
    let mut twice = Rational::zero();
    for i in 1..v.len() - 1 {
        twice += (&v[i] - &v[0]).cross(&(&v[i + 1] - &v[0]));
    }
    twice * half()
}

/// `max ⟨d, v⟩` over the body.
pub fn support(a: &ConvexBody, d: &Vec2) -> Result<Rational, GeometryError> {
    if d.is_zero() {
        return Err(GeometryError::ZeroDirection);
    }
    Ok(support_unchecked(a, d))
}

fn support_unchecked(a: &ConvexBody, d: &Vec2) -> Rational {
    a.vertices
        .iter()
        .map(|v| d.dot(v))
        .max()
        .expect("bodies are nonempty")
}

/// `support(d) + support(−d)`: the width in direction `d`, scaled by `|d|`.
pub fn width(a: &ConvexBody, d: &Vec2) -> Result<Rational, GeometryError> {
    Ok(support(a, d)? + support(a, &-d)?)
}

/// Mixed area by polarization: `½(area(A+B) − area(A) − area(B))`.
pub fn mixed_area(a: &ConvexBody, b: &ConvexBody) -> Rational {
    (area(&minkowski_sum(a, b)) - area(a) - area(b)) * half()
}

/// Mixed area from support values on the length-weighted outer normals of `p`:
/// `2V(K,P) = Σₑ h_K(nₑ)`.
pub fn mixed_area_support(k: &ConvexBody, p: &ConvexBody) -> Result<Rational, GeometryError> {
    if p.is_point() {
        return Err(GeometryError::DegenerateBody);
    }
    let twice: Rational = p
        .edge_vectors()
        .iter()
        .map(|e| support_unchecked(k, &e.rotate_cw()))
        .sum();
    Ok(twice * half())
}

/// Areas on the diagonal, pairwise mixed areas off it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MixedConfigVector {
    pub n: usize,
    #[serde(with = "crate::arith::serde_rational_vec")]
    pub diagonal: Vec<Rational>,
    #[serde(rename = "offDiagonal")]
    pub off_diagonal: crate::pluecker::PlueckerVector,
}

pub fn config_vector(bodies: &[ConvexBody]) -> MixedConfigVector {
    let n = bodies.len();
    let diagonal = bodies.iter().map(area).collect();
    let mut entries = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            entries.push(mixed_area(&bodies[i], &bodies[j]));
        }
    }
    MixedConfigVector {
        n,
        diagonal,
        off_diagonal: crate::pluecker::PlueckerVector::from_entries(n, entries)
            .expect("entry count matches n"),
    }
}
