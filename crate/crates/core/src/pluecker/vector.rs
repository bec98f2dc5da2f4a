use crate::arith::{format_rational, parse_rational, Rational};
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Number of unordered pairs of `[n]`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the 1-based pair `{i, j}` in lexicographic order `(1,2),(1,3),…,(n−1,n)`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    assert!(1 <= i && i < j && j <= n, "pair ({i},{j}) out of range for n={n}");
    // pairs starting with 1..i-1 come first
    let before: usize = (1..i).map(|a| n - a).sum();
    before + (j - i - 1)
}

/// All 1-based pairs in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VectorError {
    #[error("expected {expected} entries for n={n}, got {got}")]
    WrongLength { n: usize, expected: usize, got: usize },
    #[error("invalid pair key {0:?}")]
    BadKey(String),
    #[error("pair {0:?} listed twice")]
    DuplicateKey(String),
    #[error("missing entry for pair {0},{1}")]
    MissingPair(usize, usize),
}

/// A vector in ℝ^(n choose 2) indexed by unordered pairs, entries in
/// lexicographic pair order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlueckerVector {
    n: usize,
    entries: Vec<Rational>,
}

impl PlueckerVector {
    pub fn from_entries(n: usize, entries: Vec<Rational>) -> Result<Self, VectorError> {
        let expected = pair_count(n);
        if entries.len() != expected {
            return Err(VectorError::WrongLength {
                n,
                expected,
                got: entries.len(),
            });
        }
        Ok(Self { n, entries })
    }

    /// Infers `n` from the entry count.
    pub fn from_list(entries: Vec<Rational>) -> Result<Self, VectorError> {
        let n = (2..64)
            .find(|&n| pair_count(n) == entries.len())
            .ok_or(VectorError::WrongLength {
                n: 0,
                expected: 0,
                got: entries.len(),
            })?;
        Self::from_entries(n, entries)
    }

    pub fn from_ints(n: usize, values: &[i64]) -> Result<Self, VectorError> {
        Self::from_entries(n, values.iter().map(|&v| crate::arith::rat(v)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![Rational::zero(); pair_count(n)],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        Self {
            n,
            entries: pairs(n).map(|(i, j)| f(i, j)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Entry `v_ij` for 1-based `i ≠ j`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[pair_index(self.n, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        let k = pair_index(self.n, i, j);
        self.entries[k] = value;
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }
}

impl fmt::Display for PlueckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `{"n": 4, "entries": {"1,2": "3", …}}` with keys in lexicographic pair order.
impl Serialize for PlueckerVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Entries<'a>(&'a PlueckerVector);
        impl Serialize for Entries<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.entries.len()))?;
                for ((i, j), v) in pairs(self.0.n).zip(&self.0.entries) {
                    map.serialize_entry(&format!("{i},{j}"), &format_rational(v))?;
                }
                map.end()
            }
        }
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("entries", &Entries(self))?;
        map.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Literal {
    Text(String),
    Int(i64),
}

impl Literal {
    fn parse(&self) -> Result<Rational, String> {
        match self {
            Literal::Text(t) => parse_rational(t).map_err(|e| e.to_string()),
            Literal::Int(i) => Ok(crate::arith::rat(*i)),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum EntriesRepr {
    Map(BTreeMap<String, Literal>),
    List(Vec<Literal>),
}

#[derive(Deserialize)]
struct VectorRepr {
    n: usize,
    entries: EntriesRepr,
}

/// Accepts the keyed map form, or a plain list in lexicographic pair order.
impl<'de> Deserialize<'de> for PlueckerVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = VectorRepr::deserialize(d)?;
        let n = repr.n;
        match repr.entries {
            EntriesRepr::List(items) => {
                let values = items
                    .iter()
                    .map(|l| l.parse().map_err(D::Error::custom))
                    .collect::<Result<Vec<_>, _>>()?;
                PlueckerVector::from_entries(n, values).map_err(D::Error::custom)
            }
            EntriesRepr::Map(map) => {
                let mut slots: Vec<Option<Rational>> = vec![None; pair_count(n)];
                for (key, lit) in &map {
                    let (i, j) = parse_key(key, n).map_err(D::Error::custom)?;
                    let k = pair_index(n, i, j);
                    if slots[k].is_some() {
                        return Err(D::Error::custom(VectorError::DuplicateKey(key.clone())));
                    }
                    slots[k] = Some(lit.parse().map_err(D::Error::custom)?);
                }
                let values = pairs(n)
                    .zip(slots)
                    .map(|((i, j), s)| s.ok_or(VectorError::MissingPair(i, j)))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(D::Error::custom)?;
                Ok(PlueckerVector { n, entries: values })
            }
        }
    }
}

fn parse_key(key: &str, n: usize) -> Result<(usize, usize), VectorError> {
    let bad = || VectorError::BadKey(key.to_string());
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i: usize = a.trim().parse().map_err(|_| bad())?;
    let j: usize = b.trim().parse().map_err(|_| bad())?;
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(bad());
    }
    Ok((i.min(j), i.max(j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn pair_indexing_is_lexicographic() {
        let order: Vec<(usize, usize)> = pairs(4).collect();
        assert_eq!(order, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        for (k, (i, j)) in pairs(7).enumerate() {
            assert_eq!(pair_index(7, i, j), k);
            assert_eq!(pair_index(7, j, i), k);
        }
    }

    #[test]
    fn json_forms() {
        let v = PlueckerVector::from_ints(4, &[3, 2, 4, 4, 9, 5]).unwrap();
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(
            text,
            r#"{"n":4,"entries":{"1,2":"3","1,3":"2","1,4":"4","2,3":"4","2,4":"9","3,4":"5"}}"#
        );
        let back: PlueckerVector = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
        let list: PlueckerVector =
            serde_json::from_str(r#"{"n":4,"entries":["3",2,"4","4","9","5"]}"#).unwrap();
        assert_eq!(list, v);
        assert!(serde_json::from_str::<PlueckerVector>(r#"{"n":4,"entries":{"1,2":"1"}}"#).is_err());
        assert!(serde_json::from_str::<PlueckerVector>(r#"{"n":3,"entries":{"1,1":"1","1,2":"1","2,3":"1"}}"#).is_err());
        assert!(serde_json::from_str::<PlueckerVector>(r#"{"n":3,"entries":["1","2"]}"#).is_err());
    }

    #[test]
    fn from_list_infers_n() {
        let v = PlueckerVector::from_list(vec![rat(1); 10]).unwrap();
        assert_eq!(v.n(), 5);
        assert!(PlueckerVector::from_list(vec![rat(1); 4]).is_err());
    }
}
