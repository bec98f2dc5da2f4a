use super::membership::{check_membership, pluecker_relation};
use super::{PlueckerError, PlueckerVector};
use crate::arith::Rational;
use num_traits::Zero;
use serde::Serialize;

/// `ι(v)`: appends an isolated node, so `v_{i,n+1} = 0` for all `i`.
pub fn embed(v: &PlueckerVector) -> PlueckerVector {
    let n = v.n();
    PlueckerVector::from_fn(n + 1, |i, j| {
        if j == n + 1 {
            Rational::zero()
        } else {
            v.get(i, j).clone()
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationWitness {
    pub vector: PlueckerVector,
    #[serde(with = "crate::arith::serde_rational")]
    pub relation: Rational,
    pub inequalities_checked: usize,
    pub member: bool,
}

/// Doubles a `Pl₄` vector to `n = 8` by `v_{i,i+4} = 0` and `v_{i,l} = v_{i+4,l}`.
///
/// A nonzero Plücker relation certifies that the result is not a mixed-area
/// vector of eight bodies, while it still satisfies every inequality of `Pl₈`.
pub fn pl8_separation_witness(v4: &PlueckerVector) -> Result<SeparationWitness, PlueckerError> {
    if v4.n() != 4 {
        return Err(PlueckerError::WrongSize {
            expected: 4,
            got: v4.n(),
        });
    }
    let report = check_membership(v4);
    if !report.member {
        return Err(PlueckerError::NotInPlueckerSpace(report));
    }
    let relation = pluecker_relation(v4);
    if relation.is_zero() {
        return Err(PlueckerError::NoSeparation);
    }
    let class = |a: usize| (a - 1) % 4 + 1;
    let vector = PlueckerVector::from_fn(8, |a, b| {
        if class(a) == class(b) {
            Rational::zero()
        } else {
            v4.get(class(a), class(b)).clone()
        }
    });
    let check = check_membership(&vector);
    Ok(SeparationWitness {
        vector,
        relation,
        inequalities_checked: check.inequalities_checked,
        member: check.member,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::pluecker::is_member;

    #[test]
    fn embedding_appends_zeros() {
        let v = PlueckerVector::from_ints(2, &[5]).unwrap();
        assert_eq!(embed(&v).entries(), &[rat(5), rat(0), rat(0)]);
        let ones = PlueckerVector::from_ints(3, &[1, 1, 1]).unwrap();
        assert_eq!(embed(&ones), PlueckerVector::from_ints(4, &[1, 1, 0, 1, 0, 0]).unwrap());
        let ex = PlueckerVector::from_ints(4, &[3, 2, 4, 4, 9, 5]).unwrap();
        let e = embed(&ex);
        assert_eq!(e.n(), 5);
        assert!((1..=4).all(|i| e.get(i, 5).is_zero()));
        assert!(is_member(&e));
    }

    #[test]
    fn witness_for_all_ones() {
        let w = pl8_separation_witness(&PlueckerVector::from_ints(4, &[1; 6]).unwrap()).unwrap();
        assert_eq!(w.relation, rat(1));
        assert_eq!(w.inequalities_checked, 210);
        assert!(w.member);
        assert!(w.vector.get(1, 5).is_zero());
        assert_eq!(w.vector.get(2, 7), w.vector.get(6, 3));
    }

    #[test]
    fn witness_for_example_vector() {
        let w = pl8_separation_witness(&PlueckerVector::from_ints(4, &[3, 2, 4, 4, 9, 5]).unwrap())
            .unwrap();
        assert_eq!(w.relation, rat(13));
        assert!(w.member);
    }

    #[test]
    fn segments_give_no_separation() {
        use crate::geometry::{config_vector, ConvexBody, Point2};
        let seg = |x, y| ConvexBody::segment(Point2::origin(), Point2::from_ints(x, y));
        let v = config_vector(&[seg(3, 1), seg(1, 2), seg(-1, 4), seg(-5, 1)]).off_diagonal;
        assert_eq!(pl8_separation_witness(&v), Err(PlueckerError::NoSeparation));
        let bad = PlueckerVector::from_ints(4, &[3, 1, 1, 1, 1, 3]).unwrap();
        assert!(matches!(
            pl8_separation_witness(&bad),
            Err(PlueckerError::NotInPlueckerSpace(_))
        ));
    }
}
