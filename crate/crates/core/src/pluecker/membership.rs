use super::PlueckerVector;
use crate::arith::Rational;
use num_traits::Signed;
use serde::Serialize;

/// One failed inequality `v_ij·v_kl ≤ v_ik·v_jl + v_il·v_jk`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// `(i, j, k, l)`, 1-based, with `{i,j}` the pair on the left-hand side.
    pub quadruple: [usize; 4],
    #[serde(with = "crate::arith::serde_rational")]
    pub lhs: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub member: bool,
    /// 1-based pairs with a negative entry.
    pub negative_entries: Vec<(usize, usize)>,
    pub inequalities_checked: usize,
    pub violations: Vec<Violation>,
}

/// The three inequalities of the four-subset `{a<b<c<d}`, each as
/// `(lhs pair, other pair, other pair)` in `(i,j,k,l)` form.
pub fn quadruple_inequalities(a: usize, b: usize, c: usize, d: usize) -> [[usize; 4]; 3] {
    [[a, b, c, d], [a, c, b, d], [a, d, b, c]]
}

/// Left- and right-hand side of `v_ij v_kl ≤ v_ik v_jl + v_il v_jk`.
pub fn inequality_sides(v: &PlueckerVector, q: [usize; 4]) -> (Rational, Rational) {
    let [i, j, k, l] = q;
    let lhs = v.get(i, j) * v.get(k, l);
    let rhs = v.get(i, k) * v.get(j, l) + v.get(i, l) * v.get(j, k);
    (lhs, rhs)
}

/// Checks all `3·(n choose 4)` Plücker-type inequalities and nonnegativity exactly.
pub fn check_membership(v: &PlueckerVector) -> MembershipReport {
    let n = v.n();
    let negative_entries: Vec<(usize, usize)> = super::pairs(n)
        .filter(|&(i, j)| v.get(i, j).is_negative())
        .collect();
    let mut violations = Vec::new();
    let mut checked = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    for q in quadruple_inequalities(a, b, c, d) {
                        checked += 1;
                        let (lhs, rhs) = inequality_sides(v, q);
                        if lhs > rhs {
                            violations.push(Violation {
                                quadruple: q,
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
    }
    MembershipReport {
        member: negative_entries.is_empty() && violations.is_empty(),
        negative_entries,
        inequalities_checked: checked,
        violations,
    }
}

pub fn is_member(v: &PlueckerVector) -> bool {
    check_membership(v).member
}

/// `v₁₂v₃₄ − v₁₃v₂₄ + v₁₄v₂₃` for `n = 4`.
pub fn pluecker_relation(v: &PlueckerVector) -> Rational {
    assert_eq!(v.n(), 4, "the Plücker relation is defined for n = 4");
    v.get(1, 2) * v.get(3, 4) - v.get(1, 3) * v.get(2, 4) + v.get(1, 4) * v.get(2, 3)
}

/// The three products `(v₁₂v₃₄, v₁₃v₂₄, v₁₄v₂₃)` for `n = 4`.
pub fn pair_products(v: &PlueckerVector) -> [Rational; 3] {
    assert_eq!(v.n(), 4);
    [
        v.get(1, 2) * v.get(3, 4),
        v.get(1, 3) * v.get(2, 4),
        v.get(1, 4) * v.get(2, 3),
    ]
}
