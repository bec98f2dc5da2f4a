use super::graph::{classify_multipartite, graph_of, Classification};
use super::membership::check_membership;
use super::{pairs, PlueckerError, PlueckerVector};
use crate::arith::{one, Rational};
use crate::surd::SqrtRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::VecDeque;

/// An element `(λ, σ)` of `ℝ_{>0}ⁿ × Sₙ` acting by
/// `(g·v)_ij = λ_σ(i) λ_σ(j) v_σ(i)σ(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupElement {
    /// `scalars[i-1] = λ_i`.
    scalars: Vec<SqrtRational>,
    /// `permutation[i-1] = σ(i)`, 1-based.
    permutation: Vec<usize>,
}

impl GroupElement {
    pub fn new(scalars: Vec<SqrtRational>, permutation: Vec<usize>) -> Result<Self, PlueckerError> {
        let n = scalars.len();
        if permutation.len() != n {
            return Err(PlueckerError::BadGroupElement(
                "scalar and permutation lengths differ".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &p in &permutation {
            if p == 0 || p > n || seen[p - 1] {
                return Err(PlueckerError::BadGroupElement(format!(
                    "{permutation:?} is not a permutation of 1..={n}"
                )));
            }
            seen[p - 1] = true;
        }
        if !scalars.iter().all(SqrtRational::is_positive) {
            return Err(PlueckerError::BadGroupElement(
                "scalars must be positive".into(),
            ));
        }
        Ok(Self {
            scalars,
            permutation,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            scalars: vec![SqrtRational::one(); n],
            permutation: (1..=n).collect(),
        }
    }

    /// Rational scalars, as used when sampling the group.
    pub fn from_rationals(scalars: Vec<Rational>, permutation: Vec<usize>) -> Result<Self, PlueckerError> {
        Self::new(
            scalars.into_iter().map(SqrtRational::from_rational).collect(),
            permutation,
        )
    }

    pub fn n(&self) -> usize {
        self.scalars.len()
    }

    pub fn scalars(&self) -> &[SqrtRational] {
        &self.scalars
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn scalar(&self, i: usize) -> &SqrtRational {
        &self.scalars[i - 1]
    }

    pub fn sigma(&self, i: usize) -> usize {
        self.permutation[i - 1]
    }

    /// Entries of `g·v` in pair order, possibly irrational.
    pub fn act_surd(&self, v: &PlueckerVector) -> Vec<SqrtRational> {
        assert_eq!(v.n(), self.n(), "group element and vector sizes differ");
        pairs(v.n())
            .map(|(i, j)| {
                let (a, b) = (self.sigma(i), self.sigma(j));
                &(self.scalar(a) * self.scalar(b)) * v.get(a, b)
            })
            .collect()
    }

    /// `g·v`, or `None` if some entry is irrational.
    pub fn act(&self, v: &PlueckerVector) -> Option<PlueckerVector> {
        let entries = self
            .act_surd(v)
            .iter()
            .map(SqrtRational::to_rational)
            .collect::<Option<Vec<_>>>()?;
        Some(PlueckerVector::from_entries(v.n(), entries).expect("length preserved"))
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut inv_perm = vec![0; n];
        for i in 1..=n {
            inv_perm[self.sigma(i) - 1] = i;
        }
        let scalars = (1..=n)
            .map(|i| {
                self.scalar(self.sigma(i))
                    .recip()
                    .expect("scalars are positive")
            })
            .collect();
        Self {
            scalars,
            permutation: inv_perm,
        }
    }
}

/// Result of moving a vector to its canonical orbit representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub canonical: PlueckerVector,
    pub group: GroupElement,
    /// Parts of the support graph in canonical labels, followed by isolated nodes.
    pub parts: Vec<Vec<usize>>,
    pub isolated: Vec<usize>,
    /// Edges (canonical labels) whose weights were set to 1.
    pub spanning_edges: Vec<(usize, usize)>,
}

/// Canonical labeling: parts ordered by size, then lexicographically, isolated nodes last.
fn canonical_order(parts: &[Vec<usize>], isolated: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<&Vec<usize>> = parts.iter().collect();
    sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sorted
        .into_iter()
        .flatten()
        .copied()
        .chain(isolated.iter().copied())
        .collect()
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Applies an element of `Γₙ` so that a spanning edge set carries weight 1
/// and the support graph is labeled canonically.
///
/// The edge set is a spanning tree of the support built greedily in
/// reverse-lexicographic edge order, plus (for non-bipartite support) the
/// first reverse-lexicographic edge closing an odd cycle.
pub fn normalize_orbit(v: &PlueckerVector) -> Result<Normalization, PlueckerError> {
    let report = check_membership(v);
    if !report.member {
        return Err(PlueckerError::NotInPlueckerSpace(report));
    }
    let (parts, isolated) = match classify_multipartite(&graph_of(v)) {
        Classification::Multipartite { parts, isolated } => (parts, isolated),
        Classification::NotMultipartite { witness } => {
            return Err(PlueckerError::NotMultipartite(witness))
        }
    };
    let n = v.n();
    let order = canonical_order(&parts, &isolated);
    let m = n - isolated.len();
    let w = |i: usize, j: usize| v.get(order[i - 1], order[j - 1]);

    let mut edges: Vec<(usize, usize)> = pairs(m).filter(|&(i, j)| !w(i, j).is_zero()).collect();
    edges.reverse();

    let mut dsu = Dsu((0..=m).collect());
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
    let mut spanning = Vec::new();
    for &(i, j) in &edges {
        if dsu.union(i, j) {
            adjacency[i].push(j);
            adjacency[j].push(i);
            spanning.push((i, j));
        }
    }

    // μ_x = q_x · μ_root^(±1), sign recorded per node
    let mut mu = vec![SqrtRational::one(); n + 1];
    if m > 0 {
        let root = m;
        let mut q: Vec<Rational> = vec![one(); m + 1];
        let mut positive = vec![true; m + 1];
        let mut seen = vec![false; m + 1];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    q[y] = Rational::one() / (w(x, y) * &q[x]);
                    positive[y] = !positive[x];
                    queue.push_back(y);
                }
            }
        }
        let odd = edges
            .iter()
            .find(|&&(a, b)| positive[a] == positive[b] && !spanning.contains(&(a, b)))
            .copied();
        let root_mu = match odd {
            Some((a, b)) => {
                spanning.push((a, b));
                let target = Rational::one() / (w(a, b) * &q[a] * &q[b]);
                let square = if positive[a] { target } else { Rational::one() / target };
                SqrtRational::sqrt(&square).expect("positive weights")
            }
            None => SqrtRational::one(),
        };
        let root_inv = root_mu.recip().expect("positive scalar");
        for x in 1..=m {
            let base = if positive[x] { &root_mu } else { &root_inv };
            mu[x] = base * &q[x];
        }
    }
    spanning.sort_unstable();

    let mut scalars = vec![SqrtRational::one(); n];
    for i in 1..=n {
        scalars[order[i - 1] - 1] = mu[i].clone();
    }
    let group = GroupElement::new(scalars, order.clone())?;
    let canonical = group
        .act(v)
        .expect("normalized weights are rational by construction");

    let position = |x: usize| order.iter().position(|&o| o == x).unwrap() + 1;
    let mut canon_parts: Vec<Vec<usize>> = parts
        .iter()
        .map(|p| {
            let mut c: Vec<usize> = p.iter().map(|&x| position(x)).collect();
            c.sort_unstable();
            c
        })
        .collect();
    canon_parts.sort();
    Ok(Normalization {
        canonical,
        group,
        parts: canon_parts,
        isolated: (m + 1..=n).collect(),
        spanning_edges: spanning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn v4(vals: [i64; 6]) -> PlueckerVector {
        PlueckerVector::from_ints(4, &vals).unwrap()
    }

    fn round_trip(v: &PlueckerVector) -> Normalization {
        let norm = normalize_orbit(v).unwrap();
        assert_eq!(norm.group.inverse().act(&norm.canonical).as_ref(), Some(v));
        for &(i, j) in &norm.spanning_edges {
            assert_eq!(norm.canonical.get(i, j), &rat(1));
        }
        norm
    }

    #[test]
    fn action_and_inverse() {
        let g = GroupElement::from_rationals(vec![rat(2), ratio(1, 3), rat(5), rat(1)], vec![2, 4, 1, 3])
            .unwrap();
        let v = v4([3, 2, 4, 4, 9, 5]);
        let gv = g.act(&v).unwrap();
        // (g·v)_12 = λ2 λ4 v24
        assert_eq!(gv.get(1, 2), &(ratio(1, 3) * rat(9)));
        assert_eq!(g.inverse().act(&gv).unwrap(), v);
        assert!(GroupElement::from_rationals(vec![rat(1), rat(1)], vec![1, 1]).is_err());
        assert!(GroupElement::from_rationals(vec![rat(1), rat(-1)], vec![1, 2]).is_err());
    }

    #[test]
    fn complete_graph_closed_form() {
        let v = v4([3, 2, 4, 4, 9, 5]);
        let norm = round_trip(&v);
        let s = ratio(9 * 2, 4 * 4);
        let t = ratio(5 * 3, 4 * 4);
        assert_eq!(
            norm.canonical.entries(),
            &[t, s, rat(1), rat(1), rat(1), rat(1)]
        );
        assert_eq!(norm.spanning_edges, vec![(1, 4), (2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn all_ones_is_fixed() {
        let norm = round_trip(&v4([1; 6]));
        assert_eq!(norm.canonical, v4([1; 6]));
    }

    #[test]
    fn bipartite_weights_become_one() {
        // K_{2,2} with parts {1,4},{2,3}; v12 v34 = v13 v24
        let v = v4([2, 6, 0, 0, 3, 9]);
        let norm = round_trip(&v);
        assert_eq!(norm.canonical, v4([0, 1, 1, 1, 1, 0]));
        assert_eq!(norm.parts, vec![vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn isolated_nodes_sorted_last() {
        let v = v4([0, 0, 0, 2, 3, 7]);
        let norm = round_trip(&v);
        assert_eq!(norm.isolated, vec![4]);
        assert_eq!(norm.canonical, v4([1, 1, 0, 1, 0, 0]));
        assert_eq!(norm.group.permutation()[3], 1);
    }

    #[test]
    fn irrational_scalars_round_trip() {
        let v = v4([1, 1, 1, 1, 1, 2]);
        let norm = round_trip(&v);
        assert!(norm.group.scalars().iter().any(|s| !s.is_rational()));
    }

    #[test]
    fn rejects_non_members() {
        assert!(matches!(
            normalize_orbit(&v4([3, 1, 1, 1, 1, 3])),
            Err(PlueckerError::NotInPlueckerSpace(_))
        ));
    }

    #[test]
    fn larger_multipartite_from_segments() {
        use crate::geometry::{config_vector, ConvexBody, Point2};
        let seg = |x, y| ConvexBody::segment(Point2::origin(), Point2::from_ints(x, y));
        let bodies = [seg(1, 0), seg(3, 0), seg(0, 2), seg(1, 1), seg(5, 5)];
        let v = config_vector(&bodies).off_diagonal;
        let norm = round_trip(&v);
        let mut sizes: Vec<usize> = norm.parts.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2]);
        assert_eq!(norm.spanning_edges.len(), 5);
    }
}
