//! Exact scalar arithmetic shared by every module.
//!
//! All quantities are arbitrary-precision rationals. Strings of the form
//! `"num/den"` (or a bare integer `"num"`) are the only textual encoding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {literal:?}")]
pub struct ParseRationalError {
    pub literal: String,
}

/// Parses `"p/q"`, `"p"` or a decimal literal such as `"-1.25"`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError {
        literal: s.to_string(),
    };
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        if t.contains('/') || frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(err());
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        let int_val: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits.parse().map_err(|_| err())?
        };
        let frac_val: BigInt = frac_part.parse().map_err(|_| err())?;
        let scale = num_traits::pow(BigInt::from(10), frac_part.len());
        let mut value = Rational::new(int_val * &scale + frac_val, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    let value: Rational = t.parse().map_err(|_| err())?;
    Ok(value)
}

/// Canonical textual form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn half() -> Rational {
    ratio(1, 2)
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

pub fn sign(r: &Rational) -> Ordering {
    r.cmp(&Rational::zero())
}

/// Converts a rational to `f64` for presentation only (SVG output).
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn one() -> Rational {
    Rational::one()
}

/// Serde adapter storing a [`Rational`] as its canonical string.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = RationalLiteral::deserialize(d)?;
        match raw {
            RationalLiteral::Text(t) => parse_rational(&t).map_err(D::Error::custom),
            RationalLiteral::Int(i) => Ok(super::rat(i)),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum RationalLiteral {
        Text(String),
        Int(i64),
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod serde_rational_vec {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wrap(#[serde(with = "super::serde_rational")] Rational);

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<Wrap> = values.iter().cloned().map(Wrap).collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let wrapped = Vec::<Wrap>::deserialize(d)?;
        Ok(wrapped.into_iter().map(|w| w.0).collect())
    }
}

/// Serde adapter for a matrix of rationals stored as rows.
pub mod serde_rational_matrix {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Row(#[serde(with = "super::serde_rational_vec")] Vec<Rational>);

    pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<Row> = rows.iter().cloned().map(Row).collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let wrapped = Vec::<Row>::deserialize(d)?;
        Ok(wrapped.into_iter().map(|r| r.0).collect())
    }
}
