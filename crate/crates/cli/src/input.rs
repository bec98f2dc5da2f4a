//! Reading bodies, vectors, matrices and polynomials from files or flags.

use anyhow::{bail, Context, Result};
use mixarea::arith::parse_rational;
use mixarea::tropical::{presets, TropicalPolynomial};
use mixarea::{ConvexBody, PlueckerVector, Rational};
use serde::Deserialize;
use serde_json::Value;
use std::fs;
use std::path::Path;

pub fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{} is not valid JSON", path.display()))
}

fn literal(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) => Ok(parse_rational(&n.to_string())?),
        other => bail!("expected a rational, got {other}"),
    }
}

/// Comma-separated rationals, e.g. `3,2,1/2`.
pub fn parse_values(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|x| parse_rational(x.trim()).with_context(|| format!("bad value {x:?}")))
        .collect()
}

/// One body, a list of bodies, or `{"bodies": [...]}` per file.
pub fn load_bodies(paths: &[impl AsRef<Path>]) -> Result<Vec<ConvexBody>> {
    let mut out = Vec::new();
    for p in paths {
        let p = p.as_ref();
        let v = read_json(p)?;
        let list = match v {
            Value::Array(items) => items,
            Value::Object(ref m) if m.contains_key("bodies") => match &m["bodies"] {
                Value::Array(items) => items.clone(),
                _ => bail!("{}: \"bodies\" must be a list", p.display()),
            },
            other => vec![other],
        };
        for (k, item) in list.into_iter().enumerate() {
            out.push(
                ConvexBody::deserialize(item)
                    .with_context(|| format!("{}: body {} is invalid", p.display(), k + 1))?,
            );
        }
    }
    if out.is_empty() {
        bail!("no bodies given");
    }
    Ok(out)
}

fn vector_from_value(v: Value) -> Result<PlueckerVector> {
    match v {
        Value::Array(items) => {
            let entries = items.iter().map(literal).collect::<Result<Vec<_>>>()?;
            Ok(PlueckerVector::from_list(entries)?)
        }
        other => Ok(PlueckerVector::deserialize(other)?),
    }
}

/// A vector from `--values` or a JSON file (keyed form or plain list).
pub fn load_vector(file: Option<&Path>, values: Option<&str>) -> Result<PlueckerVector> {
    match (file, values) {
        (_, Some(s)) => Ok(PlueckerVector::from_list(parse_values(s)?)?),
        (Some(p), None) => vector_from_value(read_json(p)?).with_context(|| format!("{}: bad vector", p.display())),
        (None, None) => bail!("give a vector file or --values"),
    }
}

/// Exactly `k` rationals from `--values` or a JSON list file.
pub fn load_values(file: Option<&Path>, values: Option<&str>, k: usize) -> Result<Vec<Rational>> {
    let vals = match (file, values) {
        (_, Some(s)) => parse_values(s)?,
        (Some(p), None) => match read_json(p)? {
            Value::Array(items) => items.iter().map(literal).collect::<Result<Vec<_>>>()?,
            _ => bail!("{}: expected a list of {k} values", p.display()),
        },
        (None, None) => bail!("give a values file or --values"),
    };
    if vals.len() != k {
        bail!("expected {k} values, got {}", vals.len());
    }
    Ok(vals)
}

/// Rows separated by `;`, entries by `,`; or a JSON list of lists.
pub fn load_matrix(file: Option<&Path>, values: Option<&str>) -> Result<Vec<Vec<Rational>>> {
    match (file, values) {
        (_, Some(s)) => s.split(';').map(parse_values).collect(),
        (Some(p), None) => match read_json(p)? {
            Value::Array(rows) => rows
                .iter()
                .map(|r| match r {
                    Value::Array(xs) => xs.iter().map(literal).collect(),
                    _ => bail!("{}: each row must be a list", p.display()),
                })
                .collect(),
            _ => bail!("{}: expected a list of rows", p.display()),
        },
        (None, None) => bail!("give a matrix file or --values"),
    }
}

/// Polynomials from files (one, a list, or `{"polynomials": [...]}` each),
/// or a named preset.
pub fn load_polynomials(paths: &[impl AsRef<Path>], preset: Option<&str>) -> Result<Vec<TropicalPolynomial>> {
    let mut out = Vec::new();
    if let Some(name) = preset {
        match presets::by_name(name) {
            Some(fs) => out.extend(fs),
            None => bail!("unknown preset {name:?}; available: {}", presets::NAMES.join(", ")),
        }
    }
    for p in paths {
        let p = p.as_ref();
        let v = read_json(p)?;
        let list = match v {
            Value::Array(items) => items,
            Value::Object(ref m) if m.contains_key("polynomials") => match &m["polynomials"] {
                Value::Array(items) => items.clone(),
                _ => bail!("{}: \"polynomials\" must be a list", p.display()),
            },
            other => vec![other],
        };
        for (k, item) in list.into_iter().enumerate() {
            out.push(
                TropicalPolynomial::deserialize(item)
                    .with_context(|| format!("{}: polynomial {} is invalid", p.display(), k + 1))?,
            );
        }
    }
    if out.is_empty() {
        bail!("no polynomials given");
    }
    Ok(out)
}
