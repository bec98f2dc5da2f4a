use super::{RealizeError, SegmentCombination};
use crate::arith::{half, one, Rational};
use crate::pluecker::{
    component_of_pl4, normalize_orbit, pairs, Normalization, Pl4Component, PlueckerVector,
};
use crate::surd::SqrtRational;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pl4Realization {
    pub component: Pl4Component,
    pub bodies: Vec<SegmentCombination>,
    pub recomputed: PlueckerVector,
    #[serde(skip)]
    pub normalization: Normalization,
}

/// Representative bodies for each component. For `K_{1,1,1,1}` the
/// representative is `(t, s, 1, 1, 1, 1)`, with `s = v₁₃` and `t = v₁₂`.
pub fn template(component: Pl4Component, s: &Rational, t: &Rational) -> [SegmentCombination; 4] {
    let i = SegmentCombination::basis;
    let o = SegmentCombination::point;
    match component {
        Pl4Component::K0 => [o(), o(), o(), o()],
        Pl4Component::K11 => [i(1), i(2), o(), o()],
        Pl4Component::K12 => [i(1), i(3), i(3), o()],
        Pl4Component::K111 => [i(1), i(2), i(3), o()],
        Pl4Component::K13 => [i(1), i(2), i(2), i(2)],
        Pl4Component::K22 => [i(1), i(2), i(2), i(1)],
        Pl4Component::K112 => [i(1), i(2), i(3), i(1)],
        Pl4Component::K1111 => {
            let h = half();
            let hexagon = SegmentCombination::from_rationals([
                &h * (s - t + one()),
                &h * (t - s + one()),
                &h * (s + t - one()),
            ]);
            [hexagon, i(1), i(2), i(3)]
        }
    }
}

/// Pairwise mixed areas of four segment combinations; `None` if some entry is irrational.
fn recompute(bodies: &[SegmentCombination]) -> Option<PlueckerVector> {
    let entries = pairs(bodies.len())
        .map(|(i, j)| bodies[i - 1].mixed_area(&bodies[j - 1]).to_rational())
        .collect::<Option<Vec<_>>>()?;
    Some(PlueckerVector::from_entries(bodies.len(), entries).expect("pair count"))
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Four segment combinations whose mixed areas are exactly `v`.
///
/// The vector is normalized into its orbit representative, matched against
/// the component's representative bodies up to relabeling, and moved back by
/// the inverse group element.
pub fn realize_pl4(v: &PlueckerVector) -> Result<Pl4Realization, RealizeError> {
    let component = component_of_pl4(v)?;
    let normalization = normalize_orbit(v)?;
    let w = &normalization.canonical;
    let t = w.get(1, 2).clone();
    let s = w.get(1, 3).clone();
    let base = template(component, &s, &t);
    let u = recompute(&base).expect("representatives have rational mixed areas");
    let pi = permutations4()
        .into_iter()
        .find(|p| pairs(4).all(|(i, j)| w.get(i, j) == u.get(p[i - 1] + 1, p[j - 1] + 1)))
        .expect("canonical vector matches its component representative");
    let g = &normalization.group;
    let mut bodies: Vec<SegmentCombination> = vec![SegmentCombination::point(); 4];
    for i in 1..=4 {
        let original = g.sigma(i);
        let mu: &SqrtRational = g.scalar(original);
        bodies[original - 1] = base[pi[i - 1]].scale(&mu.recip().expect("positive scalar"));
    }
    let recomputed = recompute(&bodies).expect("realization has rational mixed areas");
    Ok(Pl4Realization {
        component,
        bodies,
        recomputed,
        normalization,
    })
}
