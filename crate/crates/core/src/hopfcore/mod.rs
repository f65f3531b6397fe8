//! Finite-dimensional Hopf algebras as structure constants: axiom sweeps, duals, harpoon
//! actions, integrals and grouplikes.

mod hopf;
mod integrals;
mod tensor;
mod verify;

use thiserror::Error;

use crate::algengine::AlgError;
use crate::exactfield::{CycNumber, FieldError};

pub use hopf::{Coproduct, HopfAlgebra};
pub use integrals::{
    coalgebra_grouplikes, dual_left_integrals, dual_right_integrals, grouplikes, integrals,
    left_integrals, right_integrals, Grouplike, IntegralData,
};
pub use tensor::Tensor;
pub use verify::{verify_hopf, Axiom, AxiomCheck, HopfReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("no left integral with nonzero counit: the algebra is not semisimple")]
    NonSemisimple,
    #[error("no right integral of the dual with ⟨λ,1⟩ ≠ 0: the coalgebra is not cosemisimple")]
    NonCosemisimple,
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HarpoonMode {
    /// f⇀h = Σh₁⟨f, h₂⟩
    LeftHit,
    /// h↼f = Σ⟨f, h₁⟩h₂
    RightHit,
    /// f↼↼h = Σ(Sh₂)⇀f↼h₁
    Coadjoint,
}

/// Result of [`harpoons`]: the hits land in H, the coadjoint action in H*.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Harpooned {
    Vector(Vec<CycNumber>),
    Covector(Vec<CycNumber>),
}

pub fn harpoons(h: &HopfAlgebra, f: &[CycNumber], x: &[CycNumber], mode: HarpoonMode) -> Harpooned {
    match mode {
        HarpoonMode::LeftHit => Harpooned::Vector(h.hit_left(f, x)),
        HarpoonMode::RightHit => Harpooned::Vector(h.hit_right(x, f)),
        HarpoonMode::Coadjoint => Harpooned::Covector(h.coadjoint(f, x)),
    }
}

pub fn dual(h: &HopfAlgebra) -> HopfAlgebra {
    h.dual()
}

#[cfg(test)]
mod tests;
