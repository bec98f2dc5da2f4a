//! Square roots of rationals and finite sums of them.
//!
//! A [`SqrtRational`] is `q·√r` with `r` a square-free positive integer.
//! A [`SurdSum`] is `Σ qₖ·√rₖ` over distinct square-free `rₖ`. Square roots of
//! distinct square-free integers are linearly independent over ℚ, so the
//! canonical representation makes equality exact and structural.

use crate::arith::{format_rational, Rational};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Splits `n = s²·k` with `k` square-free. Exact for all inputs.
///
/// Trial division runs while `d³ ≤ m`; what remains then has at most two
/// prime factors, so it is either square-free or a perfect square.
pub fn square_free_split(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    let mut m = n.clone();
    let mut s = BigUint::one();
    let mut k = BigUint::one();
    let mut d = BigUint::from(2u32);
    while &d * &d * &d <= m {
        let d2 = &d * &d;
        while (&m % &d2).is_zero() {
            m /= &d2;
            s *= &d;
        }
        if (&m % &d).is_zero() {
            m /= &d;
            k *= &d;
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    let r = m.sqrt();
    if &r * &r == m {
        s *= r;
    } else {
        k *= m;
    }
    (s, k)
}

/// `coefficient · √radicand` with a square-free radicand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    coefficient: Rational,
    radicand: BigUint,
}

impl SqrtRational {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self {
            coefficient: q,
            radicand: BigUint::one(),
        }
    }

    /// `q·√r` for any rational `r ≥ 0`. Returns `None` when `r < 0`.
    pub fn new(q: Rational, r: &Rational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if r.is_zero() || q.is_zero() {
            return Some(Self::zero());
        }
        // √(p/d) = √(p·d) / d
        let p = r.numer().magnitude();
        let den = r.denom().magnitude();
        let (s, k) = square_free_split(&(p * den));
        let scale = Rational::new(BigInt::from(s), BigInt::from(den.clone()));
        Some(Self {
            coefficient: q * scale,
            radicand: k,
        })
    }

    /// Principal square root of a nonnegative rational.
    pub fn sqrt(r: &Rational) -> Option<Self> {
        Self::new(Rational::one(), r)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.coefficient.is_positive()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one() || self.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coefficient.clone())
    }

    /// The square of the value, always rational.
    pub fn square(&self) -> Rational {
        &self.coefficient * &self.coefficient * Rational::from_integer(BigInt::from(self.radicand.clone()))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // 1/(q√r) = √r / (q r)
        let r = Rational::from_integer(BigInt::from(self.radicand.clone()));
        Some(Self {
            coefficient: (&self.coefficient * r).recip(),
            radicand: self.radicand.clone(),
        })
    }
}

impl Ord for SqrtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let sa = self.coefficient.cmp(&Rational::zero());
        let sb = other.coefficient.cmp(&Rational::zero());
        if sa != sb {
            return sa.cmp(&sb);
        }
        let mag = self.square().cmp(&other.square());
        match sa {
            Ordering::Less => mag.reverse(),
            _ => mag,
        }
    }
}

impl PartialOrd for SqrtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Rational> for SqrtRational {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl Mul for &SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: &SqrtRational) -> SqrtRational {
        if self.is_zero() || rhs.is_zero() {
            return SqrtRational::zero();
        }
        // √a·√b = g·√(a/g · b/g) with g = gcd(a,b); a/g and b/g coprime and square-free.
        let g = self.radicand.gcd(&rhs.radicand);
        let k = (&self.radicand / &g) * (&rhs.radicand / &g);
        SqrtRational {
            coefficient: &self.coefficient
                * &rhs.coefficient
                * Rational::from_integer(BigInt::from(g)),
            radicand: k,
        }
    }
}

impl Mul for SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: SqrtRational) -> SqrtRational {
        &self * &rhs
    }
}

impl Mul<&Rational> for &SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: &Rational) -> SqrtRational {
        if rhs.is_zero() {
            return SqrtRational::zero();
        }
        SqrtRational {
            coefficient: &self.coefficient * rhs,
            radicand: self.radicand.clone(),
        }
    }
}

impl Div<&Rational> for &SqrtRational {
    type Output = SqrtRational;
    fn div(self, rhs: &Rational) -> SqrtRational {
        SqrtRational {
            coefficient: &self.coefficient / rhs,
            radicand: self.radicand.clone(),
        }
    }
}

impl Neg for SqrtRational {
    type Output = SqrtRational;
    fn neg(self) -> SqrtRational {
        SqrtRational {
            coefficient: -self.coefficient,
            radicand: self.radicand,
        }
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.coefficient)
        } else {
            write!(f, "{}*sqrt({})", self.coefficient, self.radicand)
        }
    }
}

/// Serialized as the pair `["q", "r"]` meaning `q·√r`.
impl Serialize for SqrtRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [
            format_rational(&self.coefficient),
            self.radicand.to_string(),
        ]
        .serialize(s)
    }
}

/// `Σ coefficient·√radicand` keyed by square-free radicand; zero terms are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SurdSum {
    terms: BTreeMap<BigUint, Rational>,
}

impl SurdSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from(SqrtRational::from_rational(q))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, radicand: BigUint, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(radicand).or_insert_with(Rational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// Exact sign for sums of at most two terms; `None` otherwise.
    pub fn signum(&self) -> Option<Ordering> {
        let zero = Rational::zero();
        let sq = |r: &BigUint, c: &Rational| c * c * Rational::from_integer(BigInt::from(r.clone()));
        match self.terms.len() {
            0 => Some(Ordering::Equal),
            1 => self.terms.values().next().map(|c| c.cmp(&zero)),
            2 => {
                let mut it = self.terms.iter();
                let (r1, c1) = it.next()?;
                let (r2, c2) = it.next()?;
                let s1 = c1.cmp(&zero);
                let s2 = c2.cmp(&zero);
                if s1 == s2 {
                    return Some(s1);
                }
                // opposite signs: the larger magnitude wins
                match sq(r1, c1).cmp(&sq(r2, c2)) {
                    Ordering::Greater => Some(s1),
                    Ordering::Less => Some(s2),
                    Ordering::Equal => Some(Ordering::Equal),
                }
            }
            _ => None,
        }
    }

    pub fn as_pairs(&self) -> Vec<(Rational, BigUint)> {
        self.terms
            .iter()
            .map(|(r, c)| (c.clone(), r.clone()))
            .collect()
    }
}

impl From<SqrtRational> for SurdSum {
    fn from(x: SqrtRational) -> Self {
        let mut s = SurdSum::zero();
        s.add_term(x.radicand, x.coefficient);
        s
    }
}

impl From<Rational> for SurdSum {
    fn from(q: Rational) -> Self {
        SurdSum::from_rational(q)
    }
}

impl Add for &SurdSum {
    type Output = SurdSum;
    fn add(self, rhs: &SurdSum) -> SurdSum {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.add_term(r.clone(), c.clone());
        }
        out
    }
}

impl Add for SurdSum {
    type Output = SurdSum;
    fn add(self, rhs: SurdSum) -> SurdSum {
        &self + &rhs
    }
}

impl Sub for &SurdSum {
    type Output = SurdSum;
    fn sub(self, rhs: &SurdSum) -> SurdSum {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.add_term(r.clone(), -c.clone());
        }
        out
    }
}

impl Sub for SurdSum {
    type Output = SurdSum;
    fn sub(self, rhs: SurdSum) -> SurdSum {
        &self - &rhs
    }
}

impl Neg for SurdSum {
    type Output = SurdSum;
    fn neg(self) -> SurdSum {
        SurdSum {
            terms: self.terms.into_iter().map(|(r, c)| (r, -c)).collect(),
        }
    }
}

impl Mul for &SurdSum {
    type Output = SurdSum;
    fn mul(self, rhs: &SurdSum) -> SurdSum {
        let mut out = SurdSum::zero();
        for (ra, ca) in &self.terms {
            for (rb, cb) in &rhs.terms {
                let a = SqrtRational {
                    coefficient: ca.clone(),
                    radicand: ra.clone(),
                };
                let b = SqrtRational {
                    coefficient: cb.clone(),
                    radicand: rb.clone(),
                };
                let p = &a * &b;
                out.add_term(p.radicand, p.coefficient);
            }
        }
        out
    }
}

impl Mul for SurdSum {
    type Output = SurdSum;
    fn mul(self, rhs: SurdSum) -> SurdSum {
        &self * &rhs
    }
}

impl Mul<&Rational> for &SurdSum {
    type Output = SurdSum;
    fn mul(self, rhs: &Rational) -> SurdSum {
        let mut out = SurdSum::zero();
        for (r, c) in &self.terms {
            out.add_term(r.clone(), c * rhs);
        }
        out
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(r, c)| {
                if r.is_one() {
                    c.to_string()
                } else {
                    format!("{c}*sqrt({r})")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Serialized as a list of `["q", "r"]` pairs.
impl Serialize for SurdSum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[String; 2]> = self
            .terms
            .iter()
            .map(|(r, c)| [format_rational(c), r.to_string()])
            .collect();
        pairs.serialize(s)
    }
}
