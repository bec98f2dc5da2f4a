use super::polynomial::{Exponent, TropicalPolynomial};
use crate::arith::{rat, Rational};
use crate::geometry::{area, convex_hull, ConvexBody, Point2};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

/// A lower face of the lifted support, projected to the plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub polygon: ConvexBody,
    /// Every support point whose lift lies on the face.
    pub points: Vec<Exponent>,
    /// `(α, β, γ)` of the supporting plane `c = αa + βb + γ`, for 2-cells.
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_plane")]
    pub plane: Option<[Rational; 3]>,
}

mod opt_plane {
    use crate::arith::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(p: &Option<[Rational; 3]>, s: S) -> Result<S::Ok, S::Error> {
        match p {
            Some(p) => s.collect_seq(p.iter().map(format_rational)),
            None => s.serialize_none(),
        }
    }
}

impl Cell {
    /// Twice the Euclidean area; an integer for lattice polygons.
    pub fn normalized_area(&self) -> Rational {
        area(&self.polygon) * rat(2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RegularSubdivision {
    /// Dimension of the Newton polytope (0, 1 or 2).
    pub dimension: usize,
    pub cells: Vec<Cell>,
    /// Support points strictly above the lower hull.
    pub inactive: Vec<Exponent>,
    pub lifting_used: TropicalPolynomial,
}

fn point(e: Exponent) -> Point2 {
    Point2::from_ints(e.0, e.1)
}

fn lower_faces_2d(f: &TropicalPolynomial) -> Vec<Cell> {
    let pts: Vec<(Exponent, &Rational)> = f.terms().iter().map(|(e, c)| (*e, c)).collect();
    let mut faces: BTreeMap<[Rational; 3], Vec<Exponent>> = BTreeMap::new();
    let k = pts.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let ((pi, ci), (pj, cj), (pl, cl)) = (pts[i], pts[j], pts[l]);
                let (ux, uy, uc) = (rat(pj.0 - pi.0), rat(pj.1 - pi.1), cj - ci);
                let (vx, vy, vc) = (rat(pl.0 - pi.0), rat(pl.1 - pi.1), cl - ci);
                let nz = &ux * &vy - &uy * &vx;
                if nz.is_zero() {
                    continue;
                }
                let nx = &uy * &vc - &uc * &vy;
                let ny = &uc * &vx - &ux * &vc;
                let alpha = -nx / &nz;
                let beta = -ny / &nz;
                let gamma = ci - &alpha * rat(pi.0) - &beta * rat(pi.1);
                let key = [alpha, beta, gamma];
                if faces.contains_key(&key) {
                    continue;
                }
                let mut on = Vec::new();
                let mut lower = true;
                for &(p, c) in &pts {
                    let gap = c - &key[0] * rat(p.0) - &key[1] * rat(p.1) - &key[2];
                    if gap.is_negative() {
                        lower = false;
                        break;
                    }
                    if gap.is_zero() {
                        on.push(p);
                    }
                }
                if lower {
                    faces.insert(key, on);
                }
            }
        }
    }
    faces
        .into_iter()
        .map(|(plane, points)| Cell {
            polygon: convex_hull(&points.iter().copied().map(point).collect::<Vec<_>>()),
            points,
            plane: Some(plane),
        })
        .collect()
}

/// Lower convex chain of collinear support points, as consecutive segments.
fn lower_faces_1d(f: &TropicalPolynomial) -> Vec<Cell> {
    let pts: Vec<(Exponent, Rational)> = f.terms().iter().map(|(e, c)| (*e, c.clone())).collect();
    let origin = pts[0].0;
    let dir = {
        let last = pts[pts.len() - 1].0;
        (last.0 - origin.0, last.1 - origin.1)
    };
    let param = |e: Exponent| rat((e.0 - origin.0) * dir.0 + (e.1 - origin.1) * dir.1);
    let mut chain: Vec<(Exponent, Rational)> = Vec::new();
    for (e, c) in pts {
        while chain.len() >= 2 {
            let (a, ca) = &chain[chain.len() - 2];
            let (b, cb) = &chain[chain.len() - 1];
            let (ta, tb, te) = (param(*a), param(*b), param(e));
            // b is kept only if it lies strictly below the chord from a to e
            let lhs = (cb - ca) * (&te - &ta);
            let rhs = (&c - ca) * (&tb - &ta);
            if lhs >= rhs {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push((e, c));
    }
    let on_chain = |p: Exponent, a: &(Exponent, Rational), b: &(Exponent, Rational), f: &TropicalPolynomial| {
        let (ta, tb, tp) = (param(a.0), param(b.0), param(p));
        if tp < ta || tp > tb {
            return false;
        }
        let c = f.coefficient(p).expect("support point");
        (c - &a.1) * (&tb - &ta) == (&b.1 - &a.1) * (&tp - &ta)
    };
    chain
        .windows(2)
        .map(|w| {
            let points: Vec<Exponent> = f
                .support()
                .into_iter()
                .filter(|&p| on_chain(p, &w[0], &w[1], f))
                .collect();
            Cell {
                polygon: ConvexBody::segment(point(w[0].0), point(w[1].0)),
                points,
                plane: None,
            }
        })
        .collect()
}

/// Exact lower hull of `{(a, b, c_{a,b})}`; each lower face projects to a cell.
pub fn lift_and_subdivide(f: &TropicalPolynomial) -> RegularSubdivision {
    let newton = f.newton_polytope();
    let dimension = match newton.len() {
        1 => 0,
        2 => 1,
        _ => 2,
    };
    let cells = match dimension {
        0 => vec![Cell {
            polygon: newton,
            points: f.support(),
            plane: None,
        }],
        1 => lower_faces_1d(f),
        _ => lower_faces_2d(f),
    };
    let mut inactive: Vec<Exponent> = f
        .support()
        .into_iter()
        .filter(|p| !cells.iter().any(|c| c.points.contains(p)))
        .collect();
    inactive.sort();
    let mut cells = cells;
    cells.sort_by_key(|c| c.polygon.vertices().to_vec());
    RegularSubdivision {
        dimension,
        cells,
        inactive,
        lifting_used: f.clone(),
    }
}

impl RegularSubdivision {
    pub fn two_cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| c.plane.is_some())
    }

    /// Whether every cell has normalized area 1 (for 2-dimensional subdivisions).
    pub fn is_unimodular(&self) -> bool {
        self.dimension == 2 && self.cells.iter().all(|c| c.normalized_area() == rat(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::polynomial::Lifting;

    fn quad() -> Lifting {
        Lifting::new("a^2+b^2+(a+b)^2", [rat(0), rat(0)]).unwrap()
    }

    #[test]
    fn triangle_is_one_cell() {
        let f = TropicalPolynomial::lifted(&[(0, 0), (1, 0), (0, 1)], &quad()).unwrap();
        assert_eq!(f.coefficient((1, 0)), Some(&rat(2)));
        let s = lift_and_subdivide(&f);
        assert_eq!(s.dimension, 2);
        assert_eq!(s.cells.len(), 1);
        assert_eq!(s.cells[0].points.len(), 3);
        assert!(s.inactive.is_empty());
    }

    #[test]
    fn flat_square_is_one_cell() {
        let f = TropicalPolynomial::from_ints(&[(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)]).unwrap();
        let s = lift_and_subdivide(&f);
        assert_eq!(s.cells.len(), 1);
        assert_eq!(s.cells[0].polygon.len(), 4);
        assert_eq!(s.cells[0].normalized_area(), rat(2));
    }

    #[test]
    fn raised_point_is_inactive() {
        let f = TropicalPolynomial::from_ints(&[(0, 0, 0), (2, 0, 0), (0, 2, 0), (1, 1, 5)]).unwrap();
        let s = lift_and_subdivide(&f);
        assert_eq!(s.inactive, vec![(1, 1)]);
        assert_eq!(s.cells.len(), 1);
        let g = TropicalPolynomial::from_ints(&[(0, 0, 0), (2, 0, 0), (0, 2, 0), (1, 1, -5)]).unwrap();
        let t = lift_and_subdivide(&g);
        assert!(t.inactive.is_empty());
        assert_eq!(t.cells.len(), 2);
        let interior = TropicalPolynomial::from_ints(&[(0, 0, 0), (3, 0, 0), (0, 3, 0), (1, 1, -5)]).unwrap();
        assert_eq!(lift_and_subdivide(&interior).cells.len(), 3);
    }

    #[test]
    fn cells_tile_the_newton_polytope() {
        let pts: Vec<Exponent> = (0..=3).flat_map(|a| (0..=2).map(move |b| (a, b))).collect();
        let f = TropicalPolynomial::lifted(&pts, &quad()).unwrap();
        let s = lift_and_subdivide(&f);
        let total: Rational = s.cells.iter().map(|c| area(&c.polygon)).sum();
        assert_eq!(total, area(&f.newton_polytope()));
        assert!(s.is_unimodular());
        assert_eq!(s.cells.len(), 12);
    }

    #[test]
    fn collinear_support() {
        let f = TropicalPolynomial::from_ints(&[(0, 0, 0), (1, 0, 3), (2, 0, 0)]).unwrap();
        let s = lift_and_subdivide(&f);
        assert_eq!(s.dimension, 1);
        assert_eq!(s.cells.len(), 1);
        assert_eq!(s.inactive, vec![(1, 0)]);
        let g = TropicalPolynomial::from_ints(&[(0, 0, 0), (1, 1, -1), (2, 2, 0), (3, 3, 4)]).unwrap();
        let t = lift_and_subdivide(&g);
        assert_eq!(t.cells.len(), 3);
        let h = TropicalPolynomial::from_ints(&[(0, 0, 0), (1, 0, 1), (2, 0, 2)]).unwrap();
        let u = lift_and_subdivide(&h);
        assert_eq!(u.cells.len(), 1);
        assert_eq!(u.cells[0].points.len(), 3);
    }

    #[test]
    fn single_point() {
        let f = TropicalPolynomial::from_ints(&[(2, 3, 1)]).unwrap();
        let s = lift_and_subdivide(&f);
        assert_eq!(s.dimension, 0);
        assert_eq!(s.cells.len(), 1);
    }
}
