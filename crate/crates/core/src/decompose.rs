//! Minkowski decomposition of convex polygons into segments and triangles.

use crate::arith::Rational;
use crate::geometry::{angle_cmp, convex_hull, minkowski_sum_all, ConvexBody, Point2, Vec2};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandList {
    pub summands: Vec<ConvexBody>,
}

impl SummandList {
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn reconstruct(&self) -> ConvexBody {
        minkowski_sum_all(&self.summands)
    }
}

fn upper_half(v: &Vec2) -> bool {
    v.y.is_positive() || (v.y.is_zero() && v.x.is_positive())
}

/// Finds antiparallel edge pairs; returns `(upper index, lower index)` of the
/// pair whose upper-half direction has the smallest angle.
fn antiparallel_pair(edges: &[Vec2]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for a in 0..edges.len() {
        if !upper_half(&edges[a]) {
            continue;
        }
        for b in 0..edges.len() {
            if edges[a].cross(&edges[b]).is_zero() && edges[a].dot(&edges[b]).is_negative() {
                let better = match best {
                    None => true,
                    Some((c, _)) => angle_cmp(&edges[a], &edges[c]) == Ordering::Less,
                };
                if better {
                    best = Some((a, b));
                }
            }
        }
    }
    best
}

/// The first triple (in index order) of edges positively spanning the plane,
/// with positive coefficients `α, β, γ` such that `αu_a + βu_b + γu_c = 0`.
fn spanning_triple(edges: &[Vec2]) -> Option<([usize; 3], [Rational; 3])> {
    let k = edges.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let coeffs = [
                    edges[b].cross(&edges[c]),
                    edges[c].cross(&edges[a]),
                    edges[a].cross(&edges[b]),
                ];
                if coeffs.iter().all(Signed::is_positive) {
                    return Some(([a, b, c], coeffs));
                }
                if coeffs.iter().all(Signed::is_negative) {
                    return Some(([a, b, c], coeffs.map(|x| -x)));
                }
            }
        }
    }
    None
}

/// Greedy peeling of antiparallel edge pairs into segments, then of maximal
/// triangles spanned by three edge directions.
///
/// Panics if the reconstruction check fails, which would indicate a bug.
pub fn decompose(p: &ConvexBody) -> SummandList {
    if p.is_point() {
        return SummandList {
            summands: vec![p.clone()],
        };
    }
    let mut edges = p.edge_vectors();
    let mut summands = Vec::new();
    while !edges.is_empty() {
        if let Some((up, down)) = antiparallel_pair(&edges) {
            let (u, w) = (edges[up].clone(), edges[down].clone());
            let short = if u.dot(&u) <= w.dot(&w) { u.clone() } else { -&w };
            edges[up] = &u - &short;
            edges[down] = &w + &short;
            summands.push(ConvexBody::segment(Point2::origin(), short));
        } else {
            let ([a, b, c], coeffs) =
                spanning_triple(&edges).expect("edge vectors summing to zero positively span");
            let t = coeffs
                .iter()
                .map(|x| Rational::one() / x)
                .min()
                .expect("three coefficients");
            let ea = edges[a].scale(&(&coeffs[0] * &t));
            let eb = edges[b].scale(&(&coeffs[1] * &t));
            let ec = edges[c].scale(&(&coeffs[2] * &t));
            summands.push(convex_hull(&[
                Point2::origin(),
                ea.clone(),
                (&ea + &eb),
            ]));
            edges[a] = &edges[a] - &ea;
            edges[b] = &edges[b] - &eb;
            edges[c] = &edges[c] - &ec;
        }
        edges.retain(|e| !e.is_zero());
    }
    let list = SummandList { summands };
    assert!(
        list.reconstruct().equals_up_to_translation(p),
        "decomposition of {p} does not reconstruct"
    );
    list
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{config_vector, minkowski_sum};

    fn hull(pts: &[(i64, i64)]) -> ConvexBody {
        convex_hull(&pts.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect::<Vec<_>>())
    }

    #[test]
    fn square_is_two_segments() {
        let d = decompose(&hull(&[(0, 0), (1, 0), (1, 1), (0, 1)]));
        assert_eq!(d.len(), 2);
        assert!(d.summands.iter().all(ConvexBody::is_segment));
        let mut dirs: Vec<Point2> = d.summands.iter().map(|s| &s.vertices()[1] - &s.vertices()[0]).collect();
        dirs.sort();
        assert_eq!(dirs, vec![Point2::from_ints(0, 1), Point2::from_ints(1, 0)]);
    }

    #[test]
    fn triangle_is_indecomposable() {
        let t = hull(&[(0, 0), (3, 1), (1, 2)]);
        let d = decompose(&t);
        assert_eq!(d.len(), 1);
        assert!(d.summands[0].equals_up_to_translation(&t));
    }

    #[test]
    fn hexagon_of_three_segments() {
        let seg = |x, y| ConvexBody::segment(Point2::origin(), Point2::from_ints(x, y));
        let hex = minkowski_sum(&minkowski_sum(&seg(1, 0), &seg(0, 1)), &seg(1, 1));
        assert_eq!(hex.len(), 6);
        let d = decompose(&hex);
        assert_eq!(d.len(), 3);
        assert!(d.summands.iter().all(ConvexBody::is_segment));
        assert!(d.reconstruct().equals_up_to_translation(&hex));
    }

    #[test]
    fn point_and_segment() {
        let pt = ConvexBody::point(Point2::from_ints(2, 3));
        assert_eq!(decompose(&pt).summands, vec![pt]);
        let s = ConvexBody::segment(Point2::from_ints(1, 1), Point2::from_ints(4, -1));
        let d = decompose(&s);
        assert_eq!(d.len(), 1);
        assert!(d.summands[0].equals_up_to_translation(&s));
    }

    #[test]
    fn mixed_polygon_summand_bound() {
        let p = hull(&[(0, 0), (4, 0), (6, 1), (5, 4), (1, 5), (-1, 2)]);
        let d = decompose(&p);
        assert!(d.len() <= p.len());
        assert!(d.summands.iter().all(|s| s.len() == 2 || s.len() == 3));
    }

    #[test]
    fn config_vector_is_additive_over_summands() {
        let p = hull(&[(0, 0), (4, 0), (6, 1), (5, 4), (1, 5), (-1, 2)]);
        let others = [hull(&[(0, 0), (2, 1), (1, 3)]), hull(&[(0, 0), (1, 0), (0, 4)])];
        let mut full = vec![p.clone()];
        full.extend(others.iter().cloned());
        let whole = config_vector(&full).off_diagonal;
        let d = decompose(&p);
        for j in 2..=3 {
            let sum: Rational = d
                .summands
                .iter()
                .map(|s| {
                    let mut bodies = vec![s.clone()];
                    bodies.extend(others.iter().cloned());
                    config_vector(&bodies).off_diagonal.get(1, j).clone()
                })
                .sum();
            assert_eq!(&sum, whole.get(1, j));
        }
    }
}
