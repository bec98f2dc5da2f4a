use crate::arith::Rational;
use crate::geometry::{minkowski_sum_all, ConvexBody, Point2};
use crate::surd::{SqrtRational, SurdSum};
use num_traits::{Signed, Zero};
use serde::Serialize;

/// `c₁I₁ + c₂I₂ + c₃I₃` for the basis segments `I₁ = [0, √2e₁]`,
/// `I₂ = [0, √2e₂]` and `I₃ = [0, √2(e₁+e₂)]`, with `V(I_j, I_l) = 1` for
/// `j ≠ l` and `V(I_j, I_j) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentCombination {
    combo: [SqrtRational; 3],
}

impl SegmentCombination {
    pub fn new(coefficients: [SqrtRational; 3]) -> Self {
        assert!(
            coefficients.iter().all(|c| !c.coefficient().is_negative()),
            "segment coefficients must be nonnegative"
        );
        Self { combo: coefficients }
    }

    pub fn from_rationals(coefficients: [Rational; 3]) -> Self {
        Self::new(coefficients.map(SqrtRational::from_rational))
    }

    pub fn point() -> Self {
        Self::new([SqrtRational::zero(), SqrtRational::zero(), SqrtRational::zero()])
    }

    /// `I_j` for `j ∈ {1, 2, 3}`.
    pub fn basis(j: usize) -> Self {
        let mut c = [SqrtRational::zero(), SqrtRational::zero(), SqrtRational::zero()];
        c[j - 1] = SqrtRational::one();
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[SqrtRational; 3] {
        &self.combo
    }

    pub fn is_point(&self) -> bool {
        self.combo.iter().all(SqrtRational::is_zero)
    }

    pub fn scale(&self, k: &SqrtRational) -> Self {
        Self::new(self.combo.clone().map(|c| &c * k))
    }

    /// `Σ_{j≠l} c_j c′_l`.
    pub fn mixed_area(&self, other: &Self) -> SurdSum {
        let mut total = SurdSum::zero();
        for j in 0..3 {
            for l in 0..3 {
                if j != l {
                    total = &total + &SurdSum::from(&self.combo[j] * &other.combo[l]);
                }
            }
        }
        total
    }

    pub fn area(&self) -> SurdSum {
        self.mixed_area(self)
    }

    /// The polygon itself when every `c_j·√2` is rational.
    pub fn to_convex_body(&self) -> Option<ConvexBody> {
        let two = Rational::from_integer(2.into());
        let root_two = SqrtRational::sqrt(&two).expect("positive");
        let dirs = [(1, 0), (0, 1), (1, 1)];
        let mut segments = Vec::new();
        for (c, (dx, dy)) in self.combo.iter().zip(dirs) {
            let len = (c * &root_two).to_rational()?;
            if len.is_zero() {
                continue;
            }
            let end = Point2::from_ints(dx, dy).scale(&len);
            segments.push(ConvexBody::segment(Point2::origin(), end));
        }
        Some(minkowski_sum_all(&segments))
    }
}
