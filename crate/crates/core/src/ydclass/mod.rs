//! Yetter-Drinfeld modules over a quasi-triangular Hopf algebra and their classification
//! through minimal adjoint-stable subcoalgebras, simple coideals and the algebras N_W.

mod blocks;
mod classify;
mod group_oracle;
mod module;
mod nw;
#[cfg(test)]
mod tests;

use thiserror::Error;

use crate::algengine::AlgError;
use crate::hopfcore::HopfError;

pub use blocks::{adjoint_closure, conjugate_test, decompose_h, simple_coideals, AdjStableCoalgebra, Coideal};
pub use classify::{
    check_divisibility, classify_all, classify_splitting, classify_block, cotensor_module, dimension_identity, one_dim_yd, round_trip,
    transmuted_grouplikes, BlockClassification, Classification, DimensionRecord, InducedModule, OneDimYd,
};
pub use group_oracle::{centralizer_modules, crosscheck_group, GroupCrosscheck, OracleModule};
pub use module::{verify_yd, yd_hom_space, YDModule};
pub use nw::{
    build_nw, check_h_simple, cotensor, grouplike_carrier, induce, is_h_simple, nww_dim, tensor_h_w_slices,
    NwAlgebra,
};

#[derive(Debug, Error)]
pub enum YdError {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("balancing relations are not stable under the induced structure")]
    QuotientIllFormed,
    #[error("comodule support is not contained in the chosen block")]
    BlockMismatch,
    #[error("isotypic piece {block} is not a subcoalgebra of H_R")]
    GroupingFailed { block: usize },
    #[error("the cotensor carrier is not closed under its structure maps")]
    NotClosed,
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl YdError {
    pub fn is_field_not_splitting(&self) -> bool {
        matches!(
            self,
            YdError::Alg(AlgError::FieldNotSplitting { .. })
                | YdError::Hopf(HopfError::Alg(AlgError::FieldNotSplitting { .. }))
        )
    }
}
