//! Dense exact linear algebra over [`CycNumber`](crate::exactfield::CycNumber).
//!
//! Elimination is Gauss–Jordan with the pivot chosen by least coordinate height, which
//! keeps intermediate rationals small on the structured matrices this crate produces.

mod mat;
mod subspace;

use thiserror::Error;

pub use mat::{dot, Mat, Rref};
pub use subspace::{Echelon, Insertion, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Selector for [`subspace_ops`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceOp {
    Intersect,
    Sum,
    Contains,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubspaceOpResult {
    Space(Subspace),
    Bool(bool),
}

pub fn subspace_ops(
    u: &Subspace,
    v: &Subspace,
    op: SubspaceOp,
) -> Result<SubspaceOpResult, LinalgError> {
    Ok(match op {
        SubspaceOp::Intersect => SubspaceOpResult::Space(u.intersect(v)?),
        SubspaceOp::Sum => SubspaceOpResult::Space(u.sum(v)?),
        SubspaceOp::Contains => SubspaceOpResult::Bool(u.contains(v)?),
    })
}

/// Unit vector e_k of length n.
pub fn unit_vector(order: u32, n: usize, k: usize) -> Vec<crate::exactfield::CycNumber> {
    let mut v = vec![crate::exactfield::CycNumber::zero(order); n];
    v[k] = crate::exactfield::CycNumber::one(order);
    v
}
