use super::RealizeError;
use crate::arith::{half, Rational};
use crate::linalg::{determinant, rank};
use num_traits::{Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ToeplitzWitness {
    pub n: usize,
    #[serde(rename = "A", with = "crate::arith::serde_rational_matrix")]
    pub a: Vec<Vec<Rational>>,
    pub jacobian_rank: usize,
    pub full_rank: usize,
}

impl ToeplitzWitness {
    pub fn is_full_rank(&self) -> bool {
        self.jacobian_rank == self.full_rank
    }
}

/// Mixed areas `V(I_i, I_j) = ½|i − j|` of the segments `I_i = [0, e₁ + i·e₂]`.
pub fn toeplitz_gram(n: usize) -> Vec<Vec<Rational>> {
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| half() * Rational::from_integer((i.abs_diff(j) as i64).into()))
                .collect()
        })
        .collect()
}

fn matmul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let (n, m, p) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..m).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `AᵀGA`: the mixed-area Gram matrix of the bodies `K_j = Σ_k a_kj I_k`.
pub fn coefficient_map(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let g = toeplitz_gram(a.len());
    let at: Vec<Vec<Rational>> = (0..a.len())
        .map(|i| (0..a.len()).map(|j| a[j][i].clone()).collect())
        .collect();
    matmul(&at, &matmul(&g, a))
}

/// Jacobian of `A ↦ (AᵀGA)_{i≤j}`: rows indexed by `i ≤ j`, columns by `(k, l)` row-major.
pub fn jacobian(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let ga = matmul(&toeplitz_gram(n), a);
    let mut rows = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            let mut row = vec![Rational::zero(); n * n];
            for k in 0..n {
                row[k * n + i] += &ga[k][j];
                row[k * n + j] += &ga[k][i];
            }
            rows.push(row);
        }
    }
    rows
}

/// Exact rank of the Jacobian of the coefficient map at `A`.
pub fn dimension_witness(a: &[Vec<Rational>]) -> Result<ToeplitzWitness, RealizeError> {
    let n = a.len();
    if n == 0 || a.iter().any(|r| r.len() != n) {
        return Err(RealizeError::NotSquare);
    }
    if a.iter().flatten().any(|x| !x.is_positive()) {
        return Err(RealizeError::NotPositive);
    }
    if determinant(a).is_zero() {
        return Err(RealizeError::SingularMatrix);
    }
    Ok(ToeplitzWitness {
        n,
        a: a.to_vec(),
        jacobian_rank: rank(&jacobian(a)),
        full_rank: n * (n + 1) / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use crate::geometry::{config_vector, minkowski_sum_all, ConvexBody, Point2};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn identity_two_has_rank_three() {
        // positivity is required, so perturb the identity slightly off the diagonal
        let a = vec![vec![rat(1), ratio(1, 100)], vec![ratio(1, 100), rat(1)]];
        let w = dimension_witness(&a).unwrap();
        assert_eq!(w.jacobian_rank, 3);
        assert_eq!(rank(&jacobian(&mat(&[&[1, 0], &[0, 1]]))), 3);
    }

    #[test]
    fn errors() {
        assert_eq!(dimension_witness(&mat(&[&[1, 1], &[1, 1]])), Err(RealizeError::SingularMatrix));
        assert_eq!(dimension_witness(&mat(&[&[1, 0], &[1, 1]])), Err(RealizeError::NotPositive));
        assert_eq!(dimension_witness(&mat(&[&[1, 1]])), Err(RealizeError::NotSquare));
    }

    #[test]
    fn three_by_three_full_rank() {
        let a = mat(&[&[2, 1, 3], &[1, 4, 1], &[5, 2, 2]]);
        assert_eq!(dimension_witness(&a).unwrap().jacobian_rank, 6);
    }

    /// The coefficient map agrees with mixed areas of the actual zonotopes.
    #[test]
    fn coefficient_map_matches_geometry() {
        let a = mat(&[&[2, 1, 3], &[1, 4, 1], &[5, 2, 2]]);
        let n = a.len();
        let bodies: Vec<ConvexBody> = (0..n)
            .map(|j| {
                let segs: Vec<ConvexBody> = (0..n)
                    .map(|k| {
                        let end = Point2::from_ints(1, k as i64 + 1).scale(&a[k][j]);
                        ConvexBody::segment(Point2::origin(), end)
                    })
                    .collect();
                minkowski_sum_all(&segs)
            })
            .collect();
        let cv = config_vector(&bodies);
        let s = coefficient_map(&a);
        for i in 0..n {
            assert_eq!(s[i][i], cv.diagonal[i]);
            for j in i + 1..n {
                assert_eq!(&s[i][j], cv.off_diagonal.get(i + 1, j + 1));
            }
        }
    }

    /// Central differences are exact for a quadratic map.
    #[test]
    fn jacobian_matches_central_difference() {
        let a = mat(&[&[2, 1, 3], &[1, 4, 1], &[5, 2, 2]]);
        let n = a.len();
        let jac = jacobian(&a);
        let h = ratio(1, 7);
        for k in 0..n {
            for l in 0..n {
                let mut plus = a.clone();
                let mut minus = a.clone();
                plus[k][l] += &h;
                minus[k][l] -= &h;
                let (sp, sm) = (coefficient_map(&plus), coefficient_map(&minus));
                let mut row = 0;
                for i in 0..n {
                    for j in i..n {
                        let diff = (&sp[i][j] - &sm[i][j]) / (&h * rat(2));
                        assert_eq!(jac[row][k * n + l], diff);
                        row += 1;
                    }
                }
            }
        }
    }
}
