use super::{pairs, PlueckerVector};
use crate::arith::Rational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Support graph of a Plücker vector: an edge `{i,j}` for every `v_ij > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    node_count: usize,
    edges: BTreeMap<(usize, usize), Rational>,
}

impl WeightedGraph {
    pub fn new(node_count: usize) -> Self {
        Self {
            node_count,
            edges: BTreeMap::new(),
        }
    }

    /// Builds an unweighted graph (all weights 1) from 1-based edges.
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(node_count);
        for &(i, j) in edges {
            g.insert(i, j, crate::arith::one());
        }
        g
    }

    /// Inserts an edge; nonpositive weights remove it.
    pub fn insert(&mut self, i: usize, j: usize, w: Rational) {
        assert!(i != j && i >= 1 && j >= 1 && i <= self.node_count && j <= self.node_count);
        let key = (i.min(j), i.max(j));
        if w.is_positive() {
            self.edges.insert(key, w);
        } else {
            self.edges.remove(&key);
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains_key(&(i.min(j), i.max(j)))
    }

    pub fn weight(&self, i: usize, j: usize) -> Option<&Rational> {
        self.edges.get(&(i.min(j), i.max(j)))
    }

    pub fn degree(&self, i: usize) -> usize {
        (1..=self.node_count)
            .filter(|&j| j != i && self.has_edge(i, j))
            .count()
    }

    pub fn isolated(&self) -> Vec<usize> {
        (1..=self.node_count).filter(|&i| self.degree(i) == 0).collect()
    }

    pub fn to_vector(&self) -> PlueckerVector {
        PlueckerVector::from_fn(self.node_count, |i, j| {
            self.weight(i, j).cloned().unwrap_or_else(Rational::zero)
        })
    }
}

impl Serialize for WeightedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Edge {
            nodes: (usize, usize),
            weight: String,
        }
        #[derive(Serialize)]
        #[serde(rename_all = "camelCase")]
        struct Repr {
            node_count: usize,
            edges: Vec<Edge>,
        }
        Repr {
            node_count: self.node_count,
            edges: self
                .edges
                .iter()
                .map(|(&nodes, w)| Edge {
                    nodes,
                    weight: w.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

pub fn graph_of(v: &PlueckerVector) -> WeightedGraph {
    let mut g = WeightedGraph::new(v.n());
    for (i, j) in pairs(v.n()) {
        let w = v.get(i, j);
        if w.is_positive() {
            g.insert(i, j, w.clone());
        }
    }
    g
}

/// The three induced subgraphs on four nodes that no complete multipartite
/// graph contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForbiddenPattern {
    /// A triangle with a pendant edge.
    Paw,
    /// A path on four nodes.
    Path,
    /// Two disjoint edges.
    DisjointEdges,
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ForbiddenPattern::Paw => "triangle with pendant edge",
            ForbiddenPattern::Path => "path of length three",
            ForbiddenPattern::DisjointEdges => "two disjoint edges",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub pattern: ForbiddenPattern,
    pub nodes: [usize; 4],
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Classification {
    Multipartite {
        parts: Vec<Vec<usize>>,
        isolated: Vec<usize>,
    },
    NotMultipartite {
        witness: ForbiddenWitness,
    },
}

impl Classification {
    pub fn is_multipartite(&self) -> bool {
        matches!(self, Classification::Multipartite { .. })
    }

    /// `"K_{1,1,1} + 1 isolated"` style label.
    pub fn label(&self) -> String {
        match self {
            Classification::Multipartite { parts, isolated } => {
                let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
                sizes.sort_unstable();
                let head = if sizes.is_empty() {
                    "K_0".to_string()
                } else {
                    let s: Vec<String> = sizes.iter().map(usize::to_string).collect();
                    format!("K_{{{}}}", s.join(","))
                };
                if isolated.is_empty() {
                    head
                } else {
                    format!("{head} + {} isolated", isolated.len())
                }
            }
            Classification::NotMultipartite { witness } => {
                format!("not multipartite ({})", witness.pattern)
            }
        }
    }
}

/// Decides whether the non-isolated part of `g` is complete multipartite.
///
/// The parts are the classes of non-adjacency, each sorted, listed by their
/// smallest node.
pub fn classify_multipartite(g: &WeightedGraph) -> Classification {
    let isolated = g.isolated();
    let active: Vec<usize> = (1..=g.node_count())
        .filter(|i| !isolated.contains(i))
        .collect();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut consistent = true;
    for &i in &active {
        match parts.iter_mut().find(|p| !g.has_edge(p[0], i)) {
            Some(part) => {
                if part.iter().any(|&j| g.has_edge(i, j)) {
                    consistent = false;
                }
                part.push(i);
            }
            None => parts.push(vec![i]),
        }
    }
    if consistent {
        // every pair in different parts must be adjacent
        'outer: for (a, pa) in parts.iter().enumerate() {
            for pb in &parts[a + 1..] {
                for &i in pa {
                    for &j in pb {
                        if !g.has_edge(i, j) {
                            consistent = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    if consistent {
        return Classification::Multipartite { parts, isolated };
    }
    let witness = find_forbidden(g, &active)
        .expect("a graph that is not complete multipartite has a forbidden induced subgraph");
    Classification::NotMultipartite { witness }
}

fn find_forbidden(g: &WeightedGraph, active: &[usize]) -> Option<ForbiddenWitness> {
    let m = active.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    let nodes = [active[a], active[b], active[c], active[d]];
                    if let Some(w) = match_pattern(g, nodes) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

fn match_pattern(g: &WeightedGraph, nodes: [usize; 4]) -> Option<ForbiddenWitness> {
    let mut edges = Vec::new();
    let mut deg = [0usize; 4];
    for x in 0..4 {
        for y in x + 1..4 {
            if g.has_edge(nodes[x], nodes[y]) {
                edges.push((nodes[x], nodes[y]));
                deg[x] += 1;
                deg[y] += 1;
            }
        }
    }
    let mut sorted = deg;
    sorted.sort_unstable();
    let pattern = match (edges.len(), sorted) {
        (2, [1, 1, 1, 1]) => ForbiddenPattern::DisjointEdges,
        (3, [1, 1, 2, 2]) => ForbiddenPattern::Path,
        (4, [1, 2, 2, 3]) => ForbiddenPattern::Paw,
        _ => return None,
    };
    Some(ForbiddenWitness {
        pattern,
        nodes,
        edges,
    })
}

/// The eight isomorphism classes of support graphs on four nodes that occur in `Pl₄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Pl4Component {
    K0,
    K11,
    K12,
    K111,
    K13,
    K22,
    K112,
    K1111,
}

impl Pl4Component {
    pub const ALL: [Pl4Component; 8] = [
        Pl4Component::K0,
        Pl4Component::K11,
        Pl4Component::K12,
        Pl4Component::K111,
        Pl4Component::K13,
        Pl4Component::K22,
        Pl4Component::K112,
        Pl4Component::K1111,
    ];

    pub fn from_part_sizes(sizes: &[usize]) -> Option<Self> {
        let mut s = sizes.to_vec();
        s.sort_unstable();
        Some(match s.as_slice() {
            [] => Pl4Component::K0,
            [1, 1] => Pl4Component::K11,
            [1, 2] => Pl4Component::K12,
            [1, 1, 1] => Pl4Component::K111,
            [1, 3] => Pl4Component::K13,
            [2, 2] => Pl4Component::K22,
            [1, 1, 2] => Pl4Component::K112,
            [1, 1, 1, 1] => Pl4Component::K1111,
            _ => return None,
        })
    }

    pub fn part_sizes(self) -> &'static [usize] {
        match self {
            Pl4Component::K0 => &[],
            Pl4Component::K11 => &[1, 1],
            Pl4Component::K12 => &[1, 2],
            Pl4Component::K111 => &[1, 1, 1],
            Pl4Component::K13 => &[1, 3],
            Pl4Component::K22 => &[2, 2],
            Pl4Component::K112 => &[1, 1, 2],
            Pl4Component::K1111 => &[1, 1, 1, 1],
        }
    }

    pub fn label(self) -> String {
        let sizes = self.part_sizes();
        if sizes.is_empty() {
            return "K_0".into();
        }
        let s: Vec<String> = sizes.iter().map(usize::to_string).collect();
        format!("K_{{{}}}", s.join(","))
    }
}

impl fmt::Display for Pl4Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v4(vals: [i64; 6]) -> PlueckerVector {
        PlueckerVector::from_ints(4, &vals).unwrap()
    }

    #[test]
    fn support_graphs() {
        assert_eq!(graph_of(&v4([1; 6])).edge_count(), 6);
        let g = graph_of(&v4([1, 1, 0, 1, 1, 1]));
        assert!(!g.has_edge(1, 4));
        assert_eq!(
            classify_multipartite(&g),
            Classification::Multipartite {
                parts: vec![vec![1, 4], vec![2], vec![3]],
                isolated: vec![]
            }
        );
        let z = graph_of(&PlueckerVector::zeros(4));
        assert_eq!(z.isolated(), vec![1, 2, 3, 4]);
        assert_eq!(classify_multipartite(&z).label(), "K_0 + 4 isolated");
    }

    #[test]
    fn complete_graph_parts_are_singletons() {
        let c = classify_multipartite(&graph_of(&v4([1; 6])));
        assert_eq!(
            c,
            Classification::Multipartite {
                parts: vec![vec![1], vec![2], vec![3], vec![4]],
                isolated: vec![]
            }
        );
        assert_eq!(c.label(), "K_{1,1,1,1}");
    }

    #[test]
    fn k22_and_labels() {
        let g = WeightedGraph::from_edges(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]);
        let c = classify_multipartite(&g);
        assert_eq!(
            c,
            Classification::Multipartite {
                parts: vec![vec![1, 4], vec![2, 3]],
                isolated: vec![]
            }
        );
        let k111 = classify_multipartite(&graph_of(&v4([1, 1, 0, 1, 0, 0])));
        assert_eq!(k111.label(), "K_{1,1,1} + 1 isolated");
    }

    #[test]
    fn forbidden_patterns() {
        let cases = [
            (vec![(1, 2), (3, 4)], ForbiddenPattern::DisjointEdges),
            (vec![(1, 2), (2, 3), (3, 4)], ForbiddenPattern::Path),
            (vec![(1, 2), (1, 3), (2, 3), (3, 4)], ForbiddenPattern::Paw),
        ];
        for (edges, pattern) in cases {
            let g = WeightedGraph::from_edges(4, &edges);
            match classify_multipartite(&g) {
                Classification::NotMultipartite { witness } => {
                    assert_eq!(witness.pattern, pattern);
                    assert_eq!(witness.nodes, [1, 2, 3, 4]);
                }
                other => panic!("expected a witness, got {other:?}"),
            }
        }
    }

    /// Complete multipartite graphs on at most six nodes are exactly those
    /// whose three-node induced subgraphs never have exactly one edge.
    #[test]
    fn agrees_with_three_node_oracle() {
        for n in 1..=6usize {
            let all: Vec<(usize, usize)> = pairs(n).collect();
            for mask in 0u32..(1 << all.len()) {
                let edges: Vec<(usize, usize)> = all
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = WeightedGraph::from_edges(n, &edges);
                let iso = g.isolated();
                let act: Vec<usize> = (1..=n).filter(|i| !iso.contains(i)).collect();
                let mut oracle = true;
                for a in 0..act.len() {
                    for b in a + 1..act.len() {
                        for c in b + 1..act.len() {
                            let (x, y, z) = (act[a], act[b], act[c]);
                            let count = [g.has_edge(x, y), g.has_edge(x, z), g.has_edge(y, z)]
                                .iter()
                                .filter(|&&e| e)
                                .count();
                            if count == 1 {
                                oracle = false;
                            }
                        }
                    }
                }
                assert_eq!(classify_multipartite(&g).is_multipartite(), oracle, "{edges:?}");
            }
        }
    }

    #[test]
    fn component_labels() {
        assert_eq!(Pl4Component::from_part_sizes(&[2, 1]), Some(Pl4Component::K12));
        assert_eq!(Pl4Component::K112.label(), "K_{1,1,2}");
        assert_eq!(Pl4Component::K0.to_string(), "K_0");
        assert_eq!(Pl4Component::from_part_sizes(&[4]), None);
    }
}
