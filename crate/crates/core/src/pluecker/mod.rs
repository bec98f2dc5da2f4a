//! The Plücker space `Plₙ` of nonnegative pair-indexed vectors satisfying
//! `v_ij v_kl ≤ v_ik v_jl + v_il v_jk`.

mod graph;
mod membership;
mod orbit;
mod vector;
mod witness;

pub use graph::{
    classify_multipartite, graph_of, Classification, ForbiddenPattern, ForbiddenWitness,
    Pl4Component, WeightedGraph,
};
pub use membership::{
    check_membership, inequality_sides, is_member, pair_products, pluecker_relation,
    quadruple_inequalities, MembershipReport, Violation,
};
pub use orbit::{normalize_orbit, GroupElement, Normalization};
pub use vector::{pair_count, pair_index, pairs, PlueckerVector, VectorError};
pub use witness::{embed, pl8_separation_witness, SeparationWitness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlueckerError {
    #[error("vector is not in the Plücker space ({} violations, {} negative entries)", .0.violations.len(), .0.negative_entries.len())]
    NotInPlueckerSpace(MembershipReport),
    #[error("support graph is not complete multipartite: {}", .0.pattern)]
    NotMultipartite(ForbiddenWitness),
    #[error("Plücker relation vanishes, no separation certificate")]
    NoSeparation,
    #[error("expected n = {expected}, got n = {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("invalid group element: {0}")]
    BadGroupElement(String),
}

/// Support-graph component of a `Pl₄` member.
pub fn component_of_pl4(v: &PlueckerVector) -> Result<Pl4Component, PlueckerError> {
    if v.n() != 4 {
        return Err(PlueckerError::WrongSize {
            expected: 4,
            got: v.n(),
        });
    }
    let report = check_membership(v);
    if !report.member {
        return Err(PlueckerError::NotInPlueckerSpace(report));
    }
    match classify_multipartite(&graph_of(v)) {
        Classification::Multipartite { parts, .. } => {
            let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
            Ok(Pl4Component::from_part_sizes(&sizes).expect("four nodes admit only eight patterns"))
        }
        Classification::NotMultipartite { witness } => Err(PlueckerError::NotMultipartite(witness)),
    }
}
