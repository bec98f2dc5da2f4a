use super::expr::{Expr, ExprError};
use super::TropicalError;
use crate::arith::{rat, Rational};
use crate::geometry::{convex_hull, ConvexBody, Point2};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// An exponent `(a, b)` of the monomial `x^a y^b`.
pub type Exponent = (i64, i64);

/// `f(x, y) = min_{(a,b)} (c_{a,b} + a·x + b·y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalPolynomial {
    terms: BTreeMap<Exponent, Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    #[serde(with = "crate::arith::serde_rational")]
    pub value: Rational,
    pub argmin: Vec<Exponent>,
}

/// A height function `h(a, b) + la·a + lb·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lifting {
    pub h: Expr,
    pub linear: [Rational; 2],
}

impl Lifting {
    pub fn new(h: &str, linear: [Rational; 2]) -> Result<Self, ExprError> {
        Ok(Self {
            h: Expr::parse(h)?,
            linear,
        })
    }

    pub fn height(&self, (a, b): Exponent) -> Result<Rational, TropicalError> {
        let (qa, qb) = (rat(a), rat(b));
        let base = self
            .h
            .eval(&qa, &qb)
            .ok_or(TropicalError::UndefinedHeight { a, b })?;
        Ok(base + &self.linear[0] * qa + &self.linear[1] * qb)
    }
}

/// Integer points of a polygon with integer vertices.
pub fn lattice_points(p: &ConvexBody) -> Result<Vec<Exponent>, TropicalError> {
    let mut coords = Vec::with_capacity(p.len());
    for v in p.vertices() {
        if !v.x.is_integer() || !v.y.is_integer() {
            return Err(TropicalError::NonLatticeVertex(v.to_string()));
        }
        let x = v.x.to_integer().to_i64().ok_or_else(|| TropicalError::NonLatticeVertex(v.to_string()))?;
        let y = v.y.to_integer().to_i64().ok_or_else(|| TropicalError::NonLatticeVertex(v.to_string()))?;
        coords.push((x, y));
    }
    let (x0, x1) = (coords.iter().map(|c| c.0).min().unwrap_or(0), coords.iter().map(|c| c.0).max().unwrap_or(0));
    let (y0, y1) = (coords.iter().map(|c| c.1).min().unwrap_or(0), coords.iter().map(|c| c.1).max().unwrap_or(0));
    let mut out = Vec::new();
    for a in x0..=x1 {
        for b in y0..=y1 {
            if p.contains(&Point2::from_ints(a, b)) {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

impl TropicalPolynomial {
    pub fn new(terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Result<Self, TropicalError> {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if map.insert(e, c).is_some() {
                return Err(TropicalError::DuplicateTerm { a: e.0, b: e.1 });
            }
        }
        if map.is_empty() {
            return Err(TropicalError::NoTerms);
        }
        Ok(Self { terms: map })
    }

    pub fn from_ints(terms: &[(i64, i64, i64)]) -> Result<Self, TropicalError> {
        Self::new(terms.iter().map(|&(a, b, c)| ((a, b), rat(c))))
    }

    /// Support points lifted by `lifting`.
    pub fn lifted(support: &[Exponent], lifting: &Lifting) -> Result<Self, TropicalError> {
        let terms = support
            .iter()
            .map(|&e| lifting.height(e).map(|c| (e, c)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(terms)
    }

    /// The lattice points of `p`, lifted by `lifting`.
    pub fn from_polytope(p: &ConvexBody, lifting: &Lifting) -> Result<Self, TropicalError> {
        Self::lifted(&lattice_points(p)?, lifting)
    }

    /// `min(x, y, 0)`.
    pub fn line() -> Self {
        Self::from_ints(&[(0, 0, 0), (1, 0, 0), (0, 1, 0)]).expect("three distinct terms")
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, e: Exponent) -> Option<&Rational> {
        self.terms.get(&e)
    }

    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn newton_polytope(&self) -> ConvexBody {
        let pts: Vec<Point2> = self.terms.keys().map(|&(a, b)| Point2::from_ints(a, b)).collect();
        convex_hull(&pts)
    }

    /// Tropical multiplication by the constant `k`: `c ↦ c + k` for all terms.
    pub fn add_constant(&self, k: &Rational) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c + k)).collect(),
        }
    }

    /// `f(x − dx, y − dy)`, whose curve is the translate of this one by `(dx, dy)`.
    pub fn translate_curve(&self, d: &Point2) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a, b), c - &d.x * rat(a) - &d.y * rat(b)))
                .collect(),
        }
    }

    pub fn evaluate(&self, p: &Point2) -> Evaluation {
        let mut best: Option<Rational> = None;
        let mut argmin = Vec::new();
        for (&(a, b), c) in &self.terms {
            let v = c + &p.x * rat(a) + &p.y * rat(b);
            match &best {
                Some(m) if v > *m => {}
                Some(m) if v == *m => argmin.push((a, b)),
                _ => {
                    best = Some(v);
                    argmin = vec![(a, b)];
                }
            }
        }
        Evaluation {
            value: best.expect("at least one term"),
            argmin,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    a: i64,
    b: i64,
    c: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct LiftingJson {
    h: String,
    #[serde(default)]
    linear: Option<[serde_json::Value; 2]>,
}

/// Accepted input forms: explicit terms, or a support (points or the lattice
/// points of a polygon) with a lifting.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PolynomialJson {
    Terms {
        terms: Vec<TermJson>,
    },
    Lifted {
        #[serde(default)]
        points: Option<Vec<(i64, i64)>>,
        #[serde(default, rename = "latticePointsOf")]
        polygon: Option<Vec<(i64, i64)>>,
        lifting: LiftingJson,
    },
}

fn json_rational(v: &serde_json::Value) -> Result<Rational, String> {
    match v {
        serde_json::Value::String(s) => crate::arith::parse_rational(s).map_err(|e| e.to_string()),
        serde_json::Value::Number(n) => crate::arith::parse_rational(&n.to_string()).map_err(|e| e.to_string()),
        other => Err(format!("expected a rational, got {other}")),
    }
}

impl Serialize for TropicalPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            terms: Vec<TermJson>,
        }
        Out {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| TermJson {
                    a,
                    b,
                    c: crate::arith::format_rational(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TropicalPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match PolynomialJson::deserialize(d)? {
            PolynomialJson::Terms { terms } => {
                let parsed = terms
                    .into_iter()
                    .map(|t| {
                        crate::arith::parse_rational(&t.c)
                            .map(|c| ((t.a, t.b), c))
                            .map_err(|e| D::Error::custom(e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Self::new(parsed).map_err(D::Error::custom)
            }
            PolynomialJson::Lifted { points, polygon, lifting } => {
                let linear = match &lifting.linear {
                    Some([la, lb]) => [
                        json_rational(la).map_err(D::Error::custom)?,
                        json_rational(lb).map_err(D::Error::custom)?,
                    ],
                    None => [rat(0), rat(0)],
                };
                let lifting = Lifting::new(&lifting.h, linear).map_err(D::Error::custom)?;
                let support = match (points, polygon) {
                    (Some(p), None) => p,
                    (None, Some(v)) => {
                        let pts: Vec<Point2> = v.iter().map(|&(a, b)| Point2::from_ints(a, b)).collect();
                        lattice_points(&convex_hull(&pts)).map_err(D::Error::custom)?
                    }
                    _ => {
                        return Err(D::Error::custom(
                            "a lifted polynomial needs exactly one of \"points\" or \"latticePointsOf\"",
                        ))
                    }
                };
                Self::lifted(&support, &lifting).map_err(D::Error::custom)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn evaluate_line() {
        let f = TropicalPolynomial::line();
        let e = f.evaluate(&Point2::from_ints(3, 5));
        assert_eq!(e.value, rat(0));
        assert_eq!(e.argmin, vec![(0, 0)]);
        let e = f.evaluate(&Point2::origin());
        assert_eq!(e.argmin.len(), 3);
        let e = f.evaluate(&Point2::new(ratio(-1, 2), rat(4)));
        assert_eq!(e.value, ratio(-1, 2));
        assert_eq!(e.argmin, vec![(1, 0)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(TropicalPolynomial::new(vec![]), Err(TropicalError::NoTerms)));
        assert!(matches!(
            TropicalPolynomial::from_ints(&[(1, 1, 0), (1, 1, 2)]),
            Err(TropicalError::DuplicateTerm { a: 1, b: 1 })
        ));
    }

    #[test]
    fn lattice_points_of_polygons() {
        let tri = convex_hull(&[Point2::from_ints(0, 0), Point2::from_ints(2, 0), Point2::from_ints(0, 2)]);
        assert_eq!(lattice_points(&tri).unwrap().len(), 6);
        let half = ConvexBody::segment(Point2::origin(), Point2::new(ratio(1, 2), rat(0)));
        assert!(lattice_points(&half).is_err());
    }

    #[test]
    fn json_forms() {
        let f: TropicalPolynomial =
            serde_json::from_str(r#"{"terms":[{"a":0,"b":0,"c":"0"},{"a":1,"b":0,"c":"1/2"}]}"#).unwrap();
        assert_eq!(f.coefficient((1, 0)), Some(&ratio(1, 2)));
        let back: TropicalPolynomial = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);

        let g: TropicalPolynomial = serde_json::from_str(
            r#"{"latticePointsOf":[[0,0],[1,0],[0,1]],"lifting":{"h":"a^2+b^2+(a+b)^2","linear":["1","-2"]}}"#,
        )
        .unwrap();
        assert_eq!(g.coefficient((0, 0)), Some(&rat(0)));
        assert_eq!(g.coefficient((1, 0)), Some(&rat(3)));
        assert_eq!(g.coefficient((0, 1)), Some(&rat(0)));

        let h: TropicalPolynomial =
            serde_json::from_str(r#"{"points":[[0,0],[2,0]],"lifting":{"h":"0"}}"#).unwrap();
        assert_eq!(h.len(), 2);
        assert!(serde_json::from_str::<TropicalPolynomial>(r#"{"terms":[]}"#).is_err());
    }

    #[test]
    fn constant_shift_and_translation() {
        let f = TropicalPolynomial::line();
        let p = Point2::new(ratio(1, 3), rat(-2));
        assert_eq!(f.add_constant(&rat(5)).evaluate(&p).argmin, f.evaluate(&p).argmin);
        let d = Point2::from_ints(2, 1);
        let g = f.translate_curve(&d);
        assert_eq!(g.evaluate(&(&p + &d)).argmin, f.evaluate(&p).argmin);
    }
}
