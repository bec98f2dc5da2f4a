//! Exact Gaussian elimination over the rationals.

use crate::arith::Rational;
use num_traits::{One, Zero};

/// Rank of a dense rational matrix given as rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for k in c..cols {
                let delta = &f * &m[r][k];
                m[i][k] -= delta;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Determinant of a square rational matrix.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(c, p);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &pivot;
            for k in c..n {
                let delta = &f * &m[c][k];
                m[i][k] -= delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&mat(&[&[0, 1, 0], &[1, 0, 0], &[1, 1, 0]])), 2);
        assert_eq!(rank(&mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&mat(&[&[1, 0, 0, 2], &[0, 0, 1, 3]])), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), rat(-1));
        assert_eq!(determinant(&mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), rat(6));
        assert_eq!(determinant(&mat(&[&[1, 1], &[1, 1]])), rat(0));
    }
}
