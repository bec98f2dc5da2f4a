use super::curve::{tropical_curve, CurveEdge, TropicalCurve};
use super::polynomial::TropicalPolynomial;
use super::TropicalError;
use crate::arith::{format_rational, rat, Rational};
use crate::geometry::{mixed_area, Point2};
use crate::pluecker::PlueckerVector;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

/// How two curves fail to meet transversally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonTransversal {
    pub first: String,
    pub second: String,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<Point2>,
    /// 1-based indices of the offending curves, when part of an arrangement.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<(usize, usize)>,
}

impl fmt::Display for NonTransversal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((i, j)) = self.pair {
            write!(f, "curves {i} and {j}: ")?;
        }
        write!(f, "{} of the first curve and {} of the second {}", self.first, self.second, self.reason)?;
        if let Some(p) = &self.point {
            write!(f, " at {p}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub point: Point2,
    pub multiplicity: u64,
    pub first: String,
    pub second: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub points: Vec<Crossing>,
    pub total: u64,
}

fn in_range(t: &Rational, (lo, hi): &(Option<Rational>, Option<Rational>)) -> bool {
    lo.as_ref().is_none_or(|l| t >= l) && hi.as_ref().is_none_or(|h| t <= h)
}

fn at_end(t: &Rational, (lo, hi): &(Option<Rational>, Option<Rational>)) -> bool {
    lo.as_ref() == Some(t) || hi.as_ref() == Some(t)
}

/// For collinear edges, `Some(p)` when they share a point (`p = None` if both are
/// full lines).
fn overlap(e: &CurveEdge, h: &CurveEdge) -> Option<Option<Point2>> {
    let u = e.direction_vector();
    let uu = u.dot(&u);
    let coord = |p: &Point2| (p - &e.origin).dot(&u) / &uu;
    let forward = h.direction_vector().dot(&u).is_positive();
    let (hlo, hhi) = h.range();
    let map = |s: Option<Rational>| s.map(|s| coord(&h.at(&s)));
    let (a, b) = (map(hlo), map(hhi));
    // h's interval in e-coordinates; None marks −∞ on the low side, +∞ on the high side
    let (mut lo, mut hi) = if forward { (a, b) } else { (b, a) };
    let (elo, ehi) = e.range();
    lo = match (lo, elo) {
        (Some(x), Some(y)) => Some(if x > y { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    };
    hi = match (hi, ehi) {
        (Some(x), Some(y)) => Some(if x < y { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    };
    match (&lo, &hi) {
        (Some(l), Some(h)) if l > h => None,
        (Some(l), _) => Some(Some(e.at(l))),
        (None, Some(h)) => Some(Some(e.at(h))),
        (None, None) => Some(None),
    }
}

/// All crossings of two curves, with multiplicities `ω(e)ω(h)|det(u,v)|`.
///
/// Any meeting at a vertex (including ray apexes) or along a common segment
/// is reported as [`TropicalError::NonTransversal`].
pub fn intersect(c: &TropicalCurve, d: &TropicalCurve) -> Result<IntersectionReport, TropicalError> {
    let mut points = Vec::new();
    for (i, e) in c.edges().enumerate() {
        let u = e.direction_vector();
        let er = e.range();
        for (j, h) in d.edges().enumerate() {
            let v = h.direction_vector();
            let hr = h.range();
            let det = u.cross(&v);
            let w = &h.origin - &e.origin;
            let fail = |reason: &str, point: Option<Point2>| {
                TropicalError::NonTransversal(Box::new(NonTransversal {
                    first: c.edge_label(i),
                    second: d.edge_label(j),
                    reason: reason.to_string(),
                    point,
                    pair: None,
                }))
            };
            if det.is_zero() {
                if w.cross(&u).is_zero() {
                    if let Some(p) = overlap(e, h) {
                        return Err(fail("overlap", p));
                    }
                }
                continue;
            }
            let t = w.cross(&v) / &det;
            let s = w.cross(&u) / &det;
            if !in_range(&t, &er) || !in_range(&s, &hr) {
                continue;
            }
            let p = e.at(&t);
            if at_end(&t, &er) || at_end(&s, &hr) {
                return Err(fail("meet at a vertex", Some(p)));
            }
            let m = det.abs().to_integer().to_u64().expect("small determinant") * e.weight * h.weight;
            points.push(Crossing {
                point: p,
                multiplicity: m,
                first: c.edge_label(i),
                second: d.edge_label(j),
            });
        }
    }
    points.sort_by(|a, b| a.point.cmp(&b.point));
    let total = points.iter().map(|p| p.multiplicity).sum();
    Ok(IntersectionReport { points, total })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BkkReport {
    pub intersection: u64,
    #[serde(serialize_with = "ser_rational")]
    pub doubled_mixed_area: Rational,
    pub equal: bool,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

/// Compares the intersection number with `2·V(P_f, P_g)`.
pub fn bkk_check(f: &TropicalPolynomial, g: &TropicalPolynomial) -> Result<BkkReport, TropicalError> {
    let report = intersect(&tropical_curve(f), &tropical_curve(g))?;
    let doubled = mixed_area(&f.newton_polytope(), &g.newton_polytope()) * rat(2);
    Ok(BkkReport {
        intersection: report.total,
        equal: rat(report.total as i64) == doubled,
        doubled_mixed_area: doubled,
    })
}

/// `(I(C_i, C_j))_{i<j}`; the first non-transversal pair in index order is reported.
pub fn intersection_config(fs: &[TropicalPolynomial]) -> Result<PlueckerVector, TropicalError> {
    let n = fs.len();
    let curves: Vec<TropicalCurve> = fs.par_iter().map(tropical_curve).collect();
    let pairs: Vec<(usize, usize)> = crate::pluecker::pairs(n).collect();
    let results: Vec<Result<u64, TropicalError>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            intersect(&curves[i - 1], &curves[j - 1]).map(|r| r.total).map_err(|e| match e {
                TropicalError::NonTransversal(mut w) => {
                    w.pair = Some((i, j));
                    TropicalError::NonTransversal(w)
                }
                other => other,
            })
        })
        .collect();
    let mut entries = Vec::with_capacity(pairs.len());
    for r in results {
        entries.push(rat(r? as i64));
    }
    PlueckerVector::from_entries(n, entries).map_err(|e| TropicalError::Config(e.to_string()))
}
