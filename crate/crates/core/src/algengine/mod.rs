//! Finite-dimensional associative algebras and their modules: Dickson radical, central
//! primitive idempotents, decomposition into irreducibles, Hom spaces.
//!
//! Every splitting step goes through in-field root extraction. When a minimal polynomial
//! does not split over the working field the engine stops with
//! [`AlgError::FieldNotSplitting`] rather than extending the field.

mod algebra;
mod module;
mod split;

use thiserror::Error;

use crate::exactfield::{CycNumber, FieldError};
use crate::linalg::Mat;

pub use algebra::{radical, FinAlgebra};
pub(crate) use algebra::sparsify;
pub use module::{
    decompose_module, decompose_operators, find_isomorphism, generated_algebra_dim, hom_space,
    intertwiners, is_irreducible, AlgModule, Component, Side,
};
pub use split::central_primitive_idempotents;
pub(crate) use split::Multiplier;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("a minimal polynomial does not split over Q(zeta_{order})")]
    FieldNotSplitting { order: u32 },
    #[error("no splitting element found after {attempts} attempts")]
    SplittingStalled { attempts: usize },
    #[error("module action is inconsistent: {0}")]
    BadAction(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Basis of {v ∈ span(basis) : constraint(k, v) = 0 for every k < count}, tightened one
/// constraint at a time so each elimination only sees the surviving directions.
pub(crate) fn constrain(
    order: u32,
    mut basis: Vec<Vec<CycNumber>>,
    count: usize,
    constraint: impl Fn(usize, &[CycNumber]) -> Vec<CycNumber>,
) -> Vec<Vec<CycNumber>> {
    for k in 0..count {
        if basis.is_empty() {
            break;
        }
        let images: Vec<Vec<CycNumber>> = basis.iter().map(|v| constraint(k, v)).collect();
        if images.iter().all(|v| v.iter().all(CycNumber::is_zero)) {
            continue;
        }
        let m = Mat::from_cols(order, images[0].len(), &images);
        let ker = m.kernel();
        basis = ker
            .vectors()
            .iter()
            .map(|coeffs| combine(order, &basis, coeffs))
            .collect();
    }
    basis
}

/// Σ coeffs[k]·vectors[k].
pub(crate) fn combine(order: u32, vectors: &[Vec<CycNumber>], coeffs: &[CycNumber]) -> Vec<CycNumber> {
    let len = vectors.first().map_or(0, Vec::len);
    let mut out = vec![CycNumber::zero(order); len];
    for (v, c) in vectors.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += &(c * x);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
