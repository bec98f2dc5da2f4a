use super::polynomial::{Exponent, TropicalPolynomial};
use super::subdivision::{lift_and_subdivide, RegularSubdivision};
use crate::arith::Rational;
use crate::geometry::Point2;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Segment,
    Ray,
    Line,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::Segment => "segment",
            EdgeKind::Ray => "ray",
            EdgeKind::Line => "line",
        })
    }
}

/// An edge `origin + t·direction`: `t ∈ [0, length]` for segments, `t ≥ 0`
/// for rays and `t ∈ ℝ` for lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveEdge {
    pub kind: EdgeKind,
    pub origin: Point2,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub end: Option<Point2>,
    /// Primitive integer direction.
    pub direction: (i64, i64),
    pub weight: u64,
    /// Endpoints of the dual edge of the subdivision.
    pub dual: [Exponent; 2],
}

impl CurveEdge {
    pub fn direction_vector(&self) -> Point2 {
        Point2::from_ints(self.direction.0, self.direction.1)
    }

    /// Parameter range `(lo, hi)`, `None` meaning unbounded.
    pub fn range(&self) -> (Option<Rational>, Option<Rational>) {
        match self.kind {
            EdgeKind::Line => (None, None),
            EdgeKind::Ray => (Some(Rational::zero()), None),
            EdgeKind::Segment => {
                let d = self.direction_vector();
                let end = self.end.as_ref().expect("segments have an end");
                let len = (end - &self.origin).dot(&d) / d.dot(&d);
                (Some(Rational::zero()), Some(len))
            }
        }
    }

    pub fn at(&self, t: &Rational) -> Point2 {
        &self.origin + &self.direction_vector().scale(t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveVertex {
    pub point: Point2,
    /// Normalized area of the dual 2-cell.
    pub weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TropicalCurve {
    pub vertices: Vec<CurveVertex>,
    pub segments: Vec<CurveEdge>,
    pub rays: Vec<CurveEdge>,
    /// Full lines, which occur only for collinear supports.
    pub lines: Vec<CurveEdge>,
}

type CellEdge = (usize, Exponent, Exponent);

fn primitive(dx: i64, dy: i64) -> ((i64, i64), u64) {
    let g = dx.gcd(&dy);
    ((dx / g, dy / g), g.unsigned_abs())
}

fn as_u64(q: &Rational) -> u64 {
    assert!(q.is_integer() && q.is_positive(), "expected a positive integer, got {q}");
    q.to_integer().to_u64().expect("weight fits in u64")
}

impl TropicalCurve {
    pub fn is_empty(&self) -> bool {
        self.segments.is_empty() && self.rays.is_empty() && self.lines.is_empty()
    }

    /// All edges: segments, then rays, then lines.
    pub fn edges(&self) -> impl Iterator<Item = &CurveEdge> {
        self.segments.iter().chain(&self.rays).chain(&self.lines)
    }

    /// A stable label such as `ray 2`, indexing within its kind.
    pub fn edge_label(&self, flat_index: usize) -> String {
        let (s, r) = (self.segments.len(), self.rays.len());
        if flat_index < s {
            format!("segment {flat_index}")
        } else if flat_index < s + r {
            format!("ray {}", flat_index - s)
        } else {
            format!("line {}", flat_index - s - r)
        }
    }

    /// Weighted primitive directions leaving each vertex sum to zero.
    pub fn balancing_defects(&self) -> Vec<(Point2, (i64, i64))> {
        let mut sums: BTreeMap<Point2, (i64, i64)> =
            self.vertices.iter().map(|v| (v.point.clone(), (0, 0))).collect();
        let mut push = |p: &Point2, d: (i64, i64), w: u64, sign: i64| {
            let e = sums.entry(p.clone()).or_insert((0, 0));
            e.0 += sign * w as i64 * d.0;
            e.1 += sign * w as i64 * d.1;
        };
        for s in &self.segments {
            push(&s.origin, s.direction, s.weight, 1);
            push(s.end.as_ref().expect("segment end"), s.direction, s.weight, -1);
        }
        for r in &self.rays {
            push(&r.origin, r.direction, r.weight, 1);
        }
        sums.into_iter().filter(|(_, s)| *s != (0, 0)).collect()
    }

    pub fn is_balanced(&self) -> bool {
        self.balancing_defects().is_empty()
    }
}

/// The curve dual to [`lift_and_subdivide`].
pub fn tropical_curve(f: &TropicalPolynomial) -> TropicalCurve {
    curve_of_subdivision(&lift_and_subdivide(f))
}

pub fn curve_of_subdivision(sub: &RegularSubdivision) -> TropicalCurve {
    let mut curve = TropicalCurve {
        vertices: Vec::new(),
        segments: Vec::new(),
        rays: Vec::new(),
        lines: Vec::new(),
    };
    match sub.dimension {
        0 => {}
        1 => {
            let f = &sub.lifting_used;
            for cell in &sub.cells {
                let [p, q] = [&cell.polygon.vertices()[0], &cell.polygon.vertices()[1]];
                let pe = (p.x.to_integer().to_i64().unwrap(), p.y.to_integer().to_i64().unwrap());
                let qe = (q.x.to_integer().to_i64().unwrap(), q.y.to_integer().to_i64().unwrap());
                let (dx, dy) = (qe.0 - pe.0, qe.1 - pe.1);
                let (direction, weight) = primitive(-dy, dx);
                // tie locus: (q − p)·X = c_p − c_q
                let u = Point2::from_ints(dx, dy);
                let k = (f.coefficient(pe).unwrap() - f.coefficient(qe).unwrap()) / u.dot(&u);
                curve.lines.push(CurveEdge {
                    kind: EdgeKind::Line,
                    origin: u.scale(&k),
                    end: None,
                    direction,
                    weight,
                    dual: [pe, qe],
                });
            }
        }
        _ => {
            let cells: Vec<_> = sub.two_cells().collect();
            // dual edge → (cell, counterclockwise start, end) for each cell containing it
            let mut dual_edges: BTreeMap<(Exponent, Exponent), Vec<CellEdge>> = BTreeMap::new();
            for (ci, cell) in cells.iter().enumerate() {
                let plane = cell.plane.as_ref().expect("2-cell");
                curve.vertices.push(CurveVertex {
                    point: Point2::new(-plane[0].clone(), -plane[1].clone()),
                    weight: as_u64(&cell.normalized_area()),
                });
                let vs = cell.polygon.vertices();
                for i in 0..vs.len() {
                    let a = &vs[i];
                    let b = &vs[(i + 1) % vs.len()];
                    let ae = (a.x.to_integer().to_i64().unwrap(), a.y.to_integer().to_i64().unwrap());
                    let be = (b.x.to_integer().to_i64().unwrap(), b.y.to_integer().to_i64().unwrap());
                    let key = if ae < be { (ae, be) } else { (be, ae) };
                    dual_edges.entry(key).or_default().push((ci, ae, be));
                }
            }
            for (key, sides) in dual_edges {
                let (ci, a, b) = sides[0];
                let (dx, dy) = (b.0 - a.0, b.1 - a.1);
                // inward normal of the counterclockwise edge a→b of cell ci
                let (direction, weight) = primitive(-dy, dx);
                let origin = curve.vertices[ci].point.clone();
                match sides.len() {
                    1 => curve.rays.push(CurveEdge {
                        kind: EdgeKind::Ray,
                        origin,
                        end: None,
                        direction,
                        weight,
                        dual: [key.0, key.1],
                    }),
                    2 => {
                        let end = curve.vertices[sides[1].0].point.clone();
                        let step = &end - &origin;
                        let d = Point2::from_ints(direction.0, direction.1);
                        debug_assert!(step.cross(&d).is_zero() && step.dot(&d).is_positive());
                        curve.segments.push(CurveEdge {
                            kind: EdgeKind::Segment,
                            origin,
                            end: Some(end),
                            direction,
                            weight,
                            dual: [key.0, key.1],
                        });
                    }
                    k => unreachable!("dual edge shared by {k} cells"),
                }
            }
        }
    }
    curve
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use crate::tropical::polynomial::Lifting;

    #[test]
    fn tropical_line() {
        let c = tropical_curve(&TropicalPolynomial::line());
        assert_eq!(c.vertices, vec![CurveVertex { point: Point2::origin(), weight: 1 }]);
        assert!(c.segments.is_empty());
        let mut dirs: Vec<_> = c.rays.iter().map(|r| (r.direction, r.weight)).collect();
        dirs.sort();
        assert_eq!(dirs, vec![((-1, -1), 1), ((0, 1), 1), ((1, 0), 1)]);
        assert!(c.is_balanced());
    }

    #[test]
    fn rays_are_tie_loci() {
        let f = TropicalPolynomial::line();
        let c = tropical_curve(&f);
        for r in &c.rays {
            let p = r.at(&ratio(7, 3));
            let e = f.evaluate(&p);
            let mut expected = r.dual.to_vec();
            expected.sort();
            let mut got = e.argmin.clone();
            got.sort();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn double_vertical_line() {
        let f = TropicalPolynomial::from_ints(&[(0, 0, 0), (2, 0, 0)]).unwrap();
        let c = tropical_curve(&f);
        assert!(c.vertices.is_empty() && c.rays.is_empty());
        assert_eq!(c.lines.len(), 1);
        assert_eq!(c.lines[0].weight, 2);
        assert_eq!(c.lines[0].origin, Point2::origin());
        assert_eq!(c.lines[0].direction.0, 0);
        let shifted = TropicalPolynomial::from_ints(&[(0, 0, 0), (2, 0, 3)]).unwrap();
        let l = &tropical_curve(&shifted).lines[0];
        assert_eq!(l.origin, Point2::new(ratio(-3, 2), rat(0)));
    }

    #[test]
    fn single_term_is_empty() {
        assert!(tropical_curve(&TropicalPolynomial::from_ints(&[(1, 1, 4)]).unwrap()).is_empty());
    }

    #[test]
    fn vertices_and_edges_satisfy_duality() {
        let pts: Vec<Exponent> = (0..=3).flat_map(|a| (0..=2).map(move |b| (a, b))).collect();
        let f = TropicalPolynomial::lifted(&pts, &Lifting::new("a^2+b^2+(a+b)^2+2a-7b", [rat(0), rat(0)]).unwrap())
            .unwrap();
        let c = tropical_curve(&f);
        assert!(c.is_balanced());
        for v in &c.vertices {
            assert!(f.evaluate(&v.point).argmin.len() >= 3);
        }
        for s in &c.segments {
            let mid = s.at(&(s.range().1.unwrap() / rat(2)));
            assert_eq!(f.evaluate(&mid).argmin.len(), 2);
            let d = (s.dual[1].0 - s.dual[0].0, s.dual[1].1 - s.dual[0].1);
            assert_eq!(d.0 * s.direction.0 + d.1 * s.direction.1, 0);
        }
        let ray_weight: u64 = c.rays.iter().map(|r| r.weight).sum();
        assert_eq!(ray_weight, 10);
    }
}
