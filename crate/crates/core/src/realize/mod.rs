//! Bodies realizing prescribed mixed-area vectors, and the full-dimensionality witness.

mod dimension;
mod pl4;
mod segments;
mod small;

pub use dimension::{coefficient_map, dimension_witness, jacobian, toeplitz_gram, ToeplitzWitness};
pub use pl4::{realize_pl4, template, Pl4Realization};
pub use segments::SegmentCombination;
pub use small::{realize_mv22, realize_pmv3, AxisBox, Mv22Realization, Pmv3Realization};

use crate::pluecker::PlueckerError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealizeError {
    #[error(transparent)]
    Pluecker(#[from] PlueckerError),
    #[error("entry {0} is negative")]
    NegativeEntry(String),
    #[error("v12² < v11·v22: the Minkowski inequality fails")]
    MinkowskiViolated,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix entries must be positive")]
    NotPositive,
    #[error("matrix must be square and nonempty")]
    NotSquare,
}
