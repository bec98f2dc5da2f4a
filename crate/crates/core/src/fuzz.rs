//! Randomized exact checks of the library's invariants.
//!
//! Trial `t` draws from its own stream `ChaCha8(seed ⊕ t)`, so results do not
//! depend on scheduling and any failing trial can be replayed alone.

use crate::arith::{format_rational, rat, ratio, Rational};
use crate::decompose::decompose;
use crate::geometry::{
    angle_cmp, area, config_vector, convex_hull, minkowski_sum, mixed_area, mixed_area_support,
    width, ConvexBody, Point2,
};
use crate::pluecker::{
    check_membership, is_member, pluecker_relation, Pl4Component, PlueckerVector,
};
use crate::realize::{dimension_witness, realize_pl4};
use crate::tropical::{bkk_check, TropicalError, TropicalPolynomial};
use num_traits::{Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorProfile {
    Polygons,
    Segments,
    ParallelPairs,
    Nested,
}

impl FromStr for GeneratorProfile {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "polygons" => Self::Polygons,
            "segments" => Self::Segments,
            "parallel-pairs" => Self::ParallelPairs,
            "nested" => Self::Nested,
            other => return Err(format!("unknown generator profile {other:?}")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Pluecker,
    Lemmas,
    Relation,
    Bkk,
    Dimension,
    Agreement,
    Decompose,
    Realize,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Pluecker,
        Suite::Lemmas,
        Suite::Relation,
        Suite::Bkk,
        Suite::Dimension,
        Suite::Agreement,
        Suite::Decompose,
        Suite::Realize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pluecker => "pluecker",
            Suite::Lemmas => "lemmas",
            Suite::Relation => "relation",
            Suite::Bkk => "bkk",
            Suite::Dimension => "dimension",
            Suite::Agreement => "agreement",
            Suite::Decompose => "decompose",
            Suite::Realize => "realize",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FuzzError {
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("maxVertices must be at least 1")]
    NoVertices,
    #[error("coordinateBound must be positive")]
    BadBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FuzzConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_vertices: usize,
    #[serde(with = "crate::arith::serde_rational")]
    pub coordinate_bound: Rational,
    pub generator_profile: GeneratorProfile,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            trials: 1000,
            seed: 42,
            max_vertices: 8,
            coordinate_bound: rat(10),
            generator_profile: GeneratorProfile::Polygons,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), FuzzError> {
        if self.trials == 0 {
            return Err(FuzzError::NoTrials);
        }
        if self.max_vertices == 0 {
            return Err(FuzzError::NoVertices);
        }
        if !self.coordinate_bound.is_positive() {
            return Err(FuzzError::BadBound);
        }
        Ok(())
    }

    pub fn rng(&self, trial: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ trial as u64)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FuzzReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub failures: usize,
    /// Trials whose input was rejected (for example a non-transversal pair).
    pub skipped: usize,
    pub first_counterexample: Option<Value>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

enum Outcome {
    Pass,
    Skip,
    Fail(Value),
}

// generators

pub fn random_rational(rng: &mut impl Rng, bound: &Rational) -> Rational {
    let den: i64 = rng.gen_range(1..=4);
    let lim = (bound * rat(den)).floor().to_integer().to_i64().unwrap_or(1).max(1);
    ratio(rng.gen_range(-lim..=lim), den)
}

fn random_positive(rng: &mut impl Rng, bound: &Rational) -> Rational {
    loop {
        let q = random_rational(rng, bound).abs();
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn random_point(rng: &mut impl Rng, bound: &Rational) -> Point2 {
    Point2::new(random_rational(rng, bound), random_rational(rng, bound))
}

fn random_direction(rng: &mut impl Rng, bound: &Rational) -> Point2 {
    loop {
        let d = random_point(rng, bound);
        if !d.is_zero() {
            return d;
        }
    }
}

/// Hull of between 1 and `max_vertices` random points; may be a point or segment.
pub fn random_body(rng: &mut impl Rng, cfg: &FuzzConfig) -> ConvexBody {
    let k = rng.gen_range(1..=cfg.max_vertices);
    let pts: Vec<Point2> = (0..k).map(|_| random_point(rng, &cfg.coordinate_bound)).collect();
    convex_hull(&pts)
}

/// Like [`random_body`] but with at least three vertices.
pub fn random_polygon(rng: &mut impl Rng, cfg: &FuzzConfig) -> ConvexBody {
    loop {
        let k = rng.gen_range(3..=cfg.max_vertices.max(3));
        let pts: Vec<Point2> = (0..k).map(|_| random_point(rng, &cfg.coordinate_bound)).collect();
        let p = convex_hull(&pts);
        if p.len() >= 3 {
            return p;
        }
    }
}

pub fn random_segment(rng: &mut impl Rng, cfg: &FuzzConfig) -> ConvexBody {
    let a = random_point(rng, &cfg.coordinate_bound);
    let d = random_direction(rng, &cfg.coordinate_bound);
    ConvexBody::segment(a.clone(), &a + &d)
}

/// `n` bodies drawn according to the configured profile. Under
/// `parallel-pairs`, bodies 1 and 3 (1-based) are parallel segments.
pub fn random_bodies(rng: &mut impl Rng, cfg: &FuzzConfig, n: usize) -> Vec<ConvexBody> {
    match cfg.generator_profile {
        GeneratorProfile::Polygons => (0..n).map(|_| random_body(rng, cfg)).collect(),
        GeneratorProfile::Segments => (0..n).map(|_| random_segment(rng, cfg)).collect(),
        GeneratorProfile::ParallelPairs => {
            let d = random_direction(rng, &cfg.coordinate_bound);
            (0..n)
                .map(|i| {
                    if i % 2 == 0 {
                        let a = random_point(rng, &cfg.coordinate_bound);
                        let k = random_positive(rng, &rat(3));
                        ConvexBody::segment(a.clone(), &a + &d.scale(&k))
                    } else {
                        random_body(rng, cfg)
                    }
                })
                .collect()
        }
        GeneratorProfile::Nested => {
            let mut out = vec![random_body(rng, cfg)];
            while out.len() < n {
                let prev = out.last().expect("nonempty").vertices().to_vec();
                let keep: Vec<Point2> = prev.iter().filter(|_| rng.gen_bool(0.7)).cloned().collect();
                let pick = if keep.is_empty() { vec![prev[0].clone()] } else { keep };
                out.push(convex_hull(&pick));
            }
            out
        }
    }
}

fn bodies_json(bodies: &[ConvexBody]) -> Value {
    serde_json::to_value(bodies).expect("bodies serialize")
}

fn q(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

// suites

fn pluecker_trial(rng: &mut ChaCha8Rng, cfg: &FuzzConfig) -> Outcome {
    let bodies = random_bodies(rng, cfg, 4);
    let v = config_vector(&bodies).off_diagonal;
    let report = check_membership(&v);
    if report.member {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({"bodies": bodies_json(&bodies), "report": report}))
    }
}

/// Picks one point on each edge of `p`.
fn inscribed(rng: &mut impl Rng, p: &ConvexBody) -> ConvexBody {
    let vs = p.vertices();
    let pts: Vec<Point2> = (0..vs.len())
        .map(|i| {
            let (a, b) = (&vs[i], &vs[(i + 1) % vs.len()]);
            let t = ratio(rng.gen_range(0..=8), 8);
            a + &(b - a).scale(&t)
        })
        .collect();
    convex_hull(&pts)
}

fn lemmas_trial(rng: &mut ChaCha8Rng, cfg: &FuzzConfig) -> Outcome {
    let mut failures = Vec::new();

    let p = random_polygon(rng, cfg);
    let k = inscribed(rng, &p);
    if mixed_area(&k, &p) != area(&p) {
        failures.push(json!({"check": "inscribed", "P": p, "K": k}));
    }

    let body = random_body(rng, cfg);
    let seg = random_segment(rng, cfg);
    let s = &seg.vertices()[1] - &seg.vertices()[0];
    let w = width(&body, &s.rotate_cw()).expect("nonzero direction");
    if mixed_area(&body, &seg) * rat(2) != w {
        failures.push(json!({"check": "width", "K": body, "I": seg}));
    }

    let par = random_bodies(
        rng,
        &FuzzConfig {
            generator_profile: GeneratorProfile::ParallelPairs,
            ..cfg.clone()
        },
        4,
    );
    let v = config_vector(&par).off_diagonal;
    // v₁₃ = 0 for parallel segments 1 and 3
    if !v.get(1, 3).is_zero() || v.get(1, 2) * v.get(3, 4) != v.get(1, 4) * v.get(2, 3) {
        failures.push(json!({"check": "zero-entry", "bodies": bodies_json(&par)}));
    }

    let three: Vec<ConvexBody> = (0..3).map(|_| random_body(rng, cfg)).collect();
    let (v12, v13, v23) = (
        mixed_area(&three[0], &three[1]),
        mixed_area(&three[0], &three[2]),
        mixed_area(&three[1], &three[2]),
    );
    if rat(2) * &v13 * &v23 < &v12 * area(&three[2]) {
        failures.push(json!({"check": "repeated-body", "bodies": bodies_json(&three)}));
    }

    if let Outcome::Fail(x) = relation_trial(rng, cfg) {
        failures.push(json!({"check": "relation", "detail": x}));
    }

    if failures.is_empty() {
        Outcome::Pass
    } else {
        Outcome::Fail(Value::Array(failures))
    }
}

fn relation_trial(rng: &mut ChaCha8Rng, cfg: &FuzzConfig) -> Outcome {
    let mut dirs: Vec<Point2> = (0..4)
        .map(|_| {
            let d = random_direction(rng, &cfg.coordinate_bound);
            if d.y.is_negative() || (d.y.is_zero() && d.x.is_negative()) {
                -&d
            } else {
                d
            }
        })
        .collect();
    dirs.sort_by(angle_cmp);
    let segs: Vec<ConvexBody> = dirs
        .iter()
        .map(|d| {
            let a = random_point(rng, &cfg.coordinate_bound);
            ConvexBody::segment(a.clone(), &a + d)
        })
        .collect();
    let v = config_vector(&segs).off_diagonal;
    let r = pluecker_relation(&v);
    if r.is_zero() {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({"segments": bodies_json(&segs), "relation": q(&r)}))
    }
}

fn random_tropical(rng: &mut impl Rng) -> TropicalPolynomial {
    loop {
        let k = rng.gen_range(2..=6);
        let terms: std::collections::BTreeMap<(i64, i64), Rational> = (0..k)
            .map(|_| {
                let e = (rng.gen_range(0..=4), rng.gen_range(0..=4));
                (e, random_rational(rng, &rat(20)))
            })
            .collect();
        if terms.len() >= 2 {
            return TropicalPolynomial::new(terms).expect("distinct exponents");
        }
    }
}

fn bkk_trial(rng: &mut ChaCha8Rng, _cfg: &FuzzConfig) -> Outcome {
    for _ in 0..32 {
        let f = random_tropical(rng);
        let g = random_tropical(rng);
        match bkk_check(&f, &g) {
            Ok(r) if r.equal => return Outcome::Pass,
            Ok(r) => return Outcome::Fail(json!({"f": f, "g": g, "report": r})),
            Err(TropicalError::NonTransversal(_)) => continue,
            Err(e) => return Outcome::Fail(json!({"f": f, "g": g, "error": e.to_string()})),
        }
    }
    Outcome::Skip
}

fn dimension_trial(rng: &mut ChaCha8Rng, cfg: &FuzzConfig, trial: usize) -> Outcome {
    let n = 2 + trial % 4;
    for _ in 0..64 {
        let a: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| random_positive(rng, &cfg.coordinate_bound)).collect())
            .collect();
        match dimension_witness(&a) {
            Ok(w) if w.is_full_rank() => return Outcome::Pass,
            Ok(w) => return Outcome::Fail(serde_json::to_value(w).expect("witness serializes")),
            Err(_) => continue,
        }
    }
    Outcome::Skip
}

fn agreement_trial(rng: &mut ChaCha8Rng, cfg: &FuzzConfig, trial: usize) -> Outcome {
    let pick = |rng: &mut ChaCha8Rng, kind: usize| match kind {
        0 => ConvexBody::point(random_point(rng, &cfg.coordinate_bound)),
        1 => random_segment(rng, cfg),
        _ => random_body(rng, cfg),
    };
    let a = pick(rng, trial % 5);
    let b = pick(rng, (trial / 5) % 5);
    let c = random_body(rng, cfg);
    let polar = mixed_area(&a, &b);
    let ok_support = match mixed_area_support(&a, &b) {
        Ok(s) => s == polar,
        Err(_) => b.is_point() && polar.is_zero(),
    };
    let minkowski = &polar * &polar >= area(&a) * area(&b);
    let lambda = random_positive(rng, &rat(3));
    let linear = mixed_area(&minkowski_sum(&a, &c.dilate(&lambda)), &b) == &polar + &lambda * mixed_area(&c, &b);
    let symmetric = mixed_area(&b, &a) == polar;
    if ok_support && minkowski && linear && symmetric {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({
            "A": a, "B": b, "C": c, "lambda": q(&lambda),
            "support": ok_support, "minkowski": minkowski, "linear": linear, "symmetric": symmetric
        }))
    }
}

fn decompose_trial(rng: &mut ChaCha8Rng, cfg: &FuzzConfig) -> Outcome {
    let p = random_polygon(rng, cfg);
    let d = decompose(&p);
    let shapes_ok = d.summands.iter().all(|s| s.len() <= 3);
    if shapes_ok && d.reconstruct().equals_up_to_translation(&p) {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({"polygon": p, "summands": d.summands}))
    }
}

/// A random member of `P̃l₄` whose support graph is `component`, with labels shuffled.
pub fn sample_component(rng: &mut impl Rng, component: Pl4Component, bound: &Rational) -> PlueckerVector {
    let mut labels = [1, 2, 3, 4];
    labels.shuffle(rng);
    let mut part = [usize::MAX; 5];
    let mut next = 0;
    for (pi, &size) in component.part_sizes().iter().enumerate() {
        for _ in 0..size {
            part[labels[next]] = pi;
            next += 1;
        }
    }
    loop {
        let mut v = PlueckerVector::zeros(4);
        for (i, j) in crate::pluecker::pairs(4) {
            if part[i] != usize::MAX && part[j] != usize::MAX && part[i] != part[j] {
                v.set(i, j, random_positive(rng, bound));
            }
        }
        // a part {k, l} of size two forces v_ik·v_jl = v_il·v_jk for the other two nodes
        let pairs_in_parts: Vec<(usize, usize)> = crate::pluecker::pairs(4)
            .filter(|&(i, j)| part[i] != usize::MAX && part[i] == part[j])
            .collect();
        if let [(k, l)] = pairs_in_parts[..] {
            let others: Vec<usize> = (1..=4).filter(|&x| x != k && x != l && part[x] != usize::MAX).collect();
            if let [i, j] = others[..] {
                let fixed = v.get(i, l) * v.get(j, k) / v.get(i, k);
                v.set(j, l, fixed);
            }
        }
        if is_member(&v) {
            return v;
        }
    }
}

fn realize_trial(rng: &mut ChaCha8Rng, cfg: &FuzzConfig, trial: usize) -> Outcome {
    let component = Pl4Component::ALL[trial % 8];
    let v = sample_component(rng, component, &cfg.coordinate_bound);
    match realize_pl4(&v) {
        Ok(r) if r.recomputed == v && r.component == component => Outcome::Pass,
        Ok(r) => Outcome::Fail(json!({"vector": v, "realization": r})),
        Err(e) => Outcome::Fail(json!({"vector": v, "error": e.to_string()})),
    }
}

fn run_trial(suite: Suite, cfg: &FuzzConfig, trial: usize) -> Outcome {
    let mut rng = cfg.rng(trial);
    let result = catch_unwind(AssertUnwindSafe(|| match suite {
        Suite::Pluecker => pluecker_trial(&mut rng, cfg),
        Suite::Lemmas => lemmas_trial(&mut rng, cfg),
        Suite::Relation => relation_trial(&mut rng, cfg),
        Suite::Bkk => bkk_trial(&mut rng, cfg),
        Suite::Dimension => dimension_trial(&mut rng, cfg, trial),
        Suite::Agreement => agreement_trial(&mut rng, cfg, trial),
        Suite::Decompose => decompose_trial(&mut rng, cfg),
        Suite::Realize => realize_trial(&mut rng, cfg, trial),
    }));
    result.unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Outcome::Fail(json!({"panic": msg}))
    })
}

pub fn run_suite(suite: Suite, cfg: &FuzzConfig) -> Result<FuzzReport, FuzzError> {
    cfg.validate()?;
    let outcomes: Vec<Outcome> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(suite, cfg, t))
        .collect();
    let mut failures = 0;
    let mut skipped = 0;
    let mut first = None;
    for (t, o) in outcomes.into_iter().enumerate() {
        match o {
            Outcome::Pass => {}
            Outcome::Skip => skipped += 1,
            Outcome::Fail(x) => {
                failures += 1;
                if first.is_none() {
                    first = Some(json!({"trial": t, "input": x}));
                }
            }
        }
    }
    Ok(FuzzReport {
        suite,
        seed: cfg.seed,
        trials: cfg.trials,
        failures,
        skipped,
        first_counterexample: first,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(trials: usize) -> FuzzConfig {
        FuzzConfig {
            trials,
            ..FuzzConfig::default()
        }
    }

    #[test]
    fn every_suite_passes_briefly() {
        for suite in Suite::ALL {
            let r = run_suite(suite, &small(40)).unwrap();
            assert!(r.passed(), "{suite}: {:?}", r.first_counterexample);
            assert_eq!(r.skipped, 0, "{suite}");
        }
    }

    #[test]
    fn deterministic_for_a_seed() {
        let cfg = small(16);
        let mut a = cfg.rng(5);
        let mut b = cfg.rng(5);
        assert_eq!(random_body(&mut a, &cfg), random_body(&mut b, &cfg));
        let r1 = serde_json::to_string(&run_suite(Suite::Pluecker, &cfg).unwrap()).unwrap();
        let r2 = serde_json::to_string(&run_suite(Suite::Pluecker, &cfg).unwrap()).unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn profiles() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for profile in ["polygons", "segments", "parallel-pairs", "nested"] {
            let cfg = FuzzConfig {
                generator_profile: profile.parse().unwrap(),
                ..FuzzConfig::default()
            };
            let bodies = random_bodies(&mut rng, &cfg, 4);
            assert_eq!(bodies.len(), 4);
            if profile == "parallel-pairs" {
                assert!(mixed_area(&bodies[0], &bodies[2]).is_zero());
            }
            if profile == "nested" {
                for w in bodies.windows(2) {
                    assert!(w[1].vertices().iter().all(|p| w[0].contains(p)));
                }
            }
            let r = run_suite(Suite::Pluecker, &FuzzConfig { trials: 30, ..cfg }).unwrap();
            assert!(r.passed());
        }
    }

    #[test]
    fn component_samples_have_the_right_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for c in Pl4Component::ALL {
            for _ in 0..10 {
                let v = sample_component(&mut rng, c, &rat(10));
                assert_eq!(crate::pluecker::component_of_pl4(&v).unwrap(), c);
            }
        }
    }

    #[test]
    fn config_validation() {
        assert_eq!(run_suite(Suite::Bkk, &small(0)), Err(FuzzError::NoTrials));
        let bad = FuzzConfig {
            max_vertices: 0,
            ..small(1)
        };
        assert_eq!(bad.validate(), Err(FuzzError::NoVertices));
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!("realize".parse::<Suite>(), Ok(Suite::Realize));
    }
}
