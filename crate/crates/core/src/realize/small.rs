use super::{RealizeError, SegmentCombination};
use crate::arith::{half, Rational};
use crate::surd::{SqrtRational, SurdSum};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pmv3Realization {
    pub bodies: Vec<SegmentCombination>,
    /// `(V₁₂, V₁₃, V₂₃)` of the bodies.
    #[serde(with = "crate::arith::serde_rational_vec")]
    pub recomputed: Vec<Rational>,
}

/// Three segments (or points) with pairwise mixed areas `(v₁₂, v₁₃, v₂₃)`.
pub fn realize_pmv3(v: [Rational; 3]) -> Result<Pmv3Realization, RealizeError> {
    let names = ["v12", "v13", "v23"];
    for (x, name) in v.iter().zip(names) {
        if x.is_negative() {
            return Err(RealizeError::NegativeEntry(name.into()));
        }
    }
    // value of the pair {i,j}, 0-based
    let pair = |i: usize, j: usize| -> &Rational {
        match (i.min(j), i.max(j)) {
            (0, 1) => &v[0],
            (0, 2) => &v[1],
            _ => &v[2],
        }
    };
    let scaled = |j: usize, k: Rational| SegmentCombination::basis(j).scale(&SqrtRational::from_rational(k));
    let mut bodies = vec![SegmentCombination::point(); 3];
    if v.iter().all(Signed::is_positive) {
        let root = SqrtRational::sqrt(&(&v[0] * &v[1] * &v[2])).expect("positive");
        bodies[0] = SegmentCombination::basis(1).scale(&(&root / &v[2]));
        bodies[1] = SegmentCombination::basis(2).scale(&(&root / &v[1]));
        bodies[2] = SegmentCombination::basis(3).scale(&(&root / &v[0]));
    } else {
        // a vanishing pair {j,k}; the third index i carries the two other values
        let (j, k) = [(0, 1), (0, 2), (1, 2)]
            .into_iter()
            .find(|&(a, b)| pair(a, b).is_zero())
            .expect("some entry is zero");
        let i = 3 - j - k;
        let (j, k) = if pair(i, j).is_zero() { (k, j) } else { (j, k) };
        let vij = pair(i, j).clone();
        if !vij.is_zero() {
            bodies[i] = scaled(1, vij.clone());
            bodies[j] = SegmentCombination::basis(2);
            bodies[k] = scaled(2, pair(i, k) / &vij);
        }
    }
    let recomputed = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(a, b)| {
            bodies[a]
                .mixed_area(&bodies[b])
                .to_rational()
                .expect("rational mixed areas")
        })
        .collect();
    Ok(Pmv3Realization { bodies, recomputed })
}

/// `[0, width] × [0, height]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxisBox {
    pub width: SurdSum,
    pub height: SurdSum,
}

impl AxisBox {
    pub fn area(&self) -> SurdSum {
        &self.width * &self.height
    }

    /// `V(A, B) = ½(w_A h_B + h_A w_B)`.
    pub fn mixed_area(&self, other: &AxisBox) -> SurdSum {
        &(&(&self.width * &other.height) + &(&self.height * &other.width)) * &half()
    }

    pub fn to_convex_body(&self) -> Option<crate::geometry::ConvexBody> {
        use crate::geometry::{convex_hull, Point2};
        let w = self.width.to_rational()?;
        let h = self.height.to_rational()?;
        let z = Rational::zero();
        Some(convex_hull(&[
            Point2::new(z.clone(), z.clone()),
            Point2::new(w.clone(), z.clone()),
            Point2::new(z, h.clone()),
            Point2::new(w, h),
        ]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mv22Realization {
    pub boxes: [AxisBox; 2],
    /// `(Vol(K₁), V(K₁,K₂), Vol(K₂))` of the boxes.
    #[serde(with = "crate::arith::serde_rational_vec")]
    pub recomputed: Vec<Rational>,
}

/// Two boxes with areas `v₁₁`, `v₂₂` and mixed area `v₁₂`.
///
/// With `v₁₁ > 0` the sides are `a = v₁₁`, `b = 1`,
/// `c = v₁₂ − √D`, `d = (v₁₂ + √D)/v₁₁` where `D = v₁₂² − v₁₁v₂₂`;
/// otherwise `K₁` degenerates to the segment `[0, 2v₁₂] × {0}` and `K₂ = [0, v₂₂] × [0, 1]`.
pub fn realize_mv22(v11: &Rational, v12: &Rational, v22: &Rational) -> Result<Mv22Realization, RealizeError> {
    for (x, name) in [(v11, "v11"), (v12, "v12"), (v22, "v22")] {
        if x.is_negative() {
            return Err(RealizeError::NegativeEntry(name.into()));
        }
    }
    let disc = v12 * v12 - v11 * v22;
    if disc.is_negative() {
        return Err(RealizeError::MinkowskiViolated);
    }
    let r = |q: &Rational| SurdSum::from_rational(q.clone());
    let two = Rational::from_integer(2.into());
    let (a, b, c, d) = if v11.is_positive() {
        let root = SurdSum::from(SqrtRational::sqrt(&disc).expect("nonnegative"));
        let d = &(&r(v12) + &root) * &(v11.clone().recip());
        let c = &r(v12) - &root;
        (r(v11), r(&Rational::from_integer(1.into())), c, d)
    } else {
        (r(&(&two * v12)), SurdSum::zero(), r(v22), r(&Rational::from_integer(1.into())))
    };
    debug_assert!([&a, &b, &c, &d].iter().all(|x| x.signum() != Some(Ordering::Less)));
    let boxes = [
        AxisBox { width: a, height: b },
        AxisBox { width: c, height: d },
    ];
    let recomputed = [boxes[0].area(), boxes[0].mixed_area(&boxes[1]), boxes[1].area()]
        .iter()
        .map(|x| x.to_rational().expect("rational by construction"))
        .collect();
    Ok(Mv22Realization { boxes, recomputed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::geometry::{area, mixed_area};

    fn pmv3(a: i64, b: i64, c: i64) -> Pmv3Realization {
        realize_pmv3([rat(a), rat(b), rat(c)]).unwrap()
    }

    #[test]
    fn pmv3_cases() {
        let zero = pmv3(0, 0, 0);
        assert!(zero.bodies.iter().all(SegmentCombination::is_point));
        let ones = pmv3(1, 1, 1);
        assert_eq!(
            ones.bodies,
            (1..=3).map(SegmentCombination::basis).collect::<Vec<_>>()
        );
        let r = pmv3(2, 3, 6);
        assert_eq!(r.recomputed, vec![rat(2), rat(3), rat(6)]);
        // √(2·3·6)/6 = 1
        assert_eq!(r.bodies[0].coefficients()[0], SqrtRational::one());
    }

    #[test]
    fn pmv3_all_zero_patterns() {
        for v in [[5, 0, 0], [0, 4, 0], [0, 0, 7], [2, 3, 0], [0, 3, 5], [2, 0, 9]] {
            let r = pmv3(v[0], v[1], v[2]);
            assert_eq!(r.recomputed, v.iter().map(|&x| rat(x)).collect::<Vec<_>>(), "{v:?}");
        }
        assert!(realize_pmv3([rat(1), rat(-1), rat(1)]).is_err());
        let irr = pmv3(1, 2, 5);
        assert_eq!(irr.recomputed, vec![rat(1), rat(2), rat(5)]);
        assert!(!irr.bodies[0].coefficients()[0].is_rational());
    }

    #[test]
    fn mv22_cases() {
        let sq = realize_mv22(&rat(1), &rat(1), &rat(1)).unwrap();
        assert!(sq.boxes.iter().all(|b| b.width == SurdSum::from_rational(rat(1))
            && b.height == SurdSum::from_rational(rat(1))));
        let segs = realize_mv22(&rat(0), &rat(1), &rat(0)).unwrap();
        assert_eq!(segs.boxes[0].width, SurdSum::from_rational(rat(2)));
        assert_eq!(segs.recomputed, vec![rat(0), rat(1), rat(0)]);
        let irr = realize_mv22(&rat(1), &rat(2), &rat(1)).unwrap();
        assert_eq!(irr.recomputed, vec![rat(1), rat(2), rat(1)]);
        let root3 = SurdSum::from(SqrtRational::sqrt(&rat(3)).unwrap());
        assert_eq!(irr.boxes[1].height, &SurdSum::from_rational(rat(2)) + &root3);
        assert_eq!(
            realize_mv22(&rat(1), &rat(0), &rat(1)),
            Err(RealizeError::MinkowskiViolated)
        );
    }

    #[test]
    fn mv22_rational_boxes_match_polygons() {
        // D = 25 − 16 = 9
        let r = realize_mv22(&rat(2), &rat(5), &rat(8)).unwrap();
        let k1 = r.boxes[0].to_convex_body().unwrap();
        let k2 = r.boxes[1].to_convex_body().unwrap();
        assert_eq!(area(&k1), rat(2));
        assert_eq!(mixed_area(&k1, &k2), rat(5));
        assert_eq!(area(&k2), rat(8));
        let zero_v22 = realize_mv22(&rat(3), &rat(2), &rat(0)).unwrap();
        assert_eq!(zero_v22.recomputed, vec![rat(3), rat(2), rat(0)]);
        let zero_v11 = realize_mv22(&rat(0), &rat(2), &rat(3)).unwrap();
        assert_eq!(zero_v11.recomputed, vec![rat(0), rat(2), rat(3)]);
    }
}
