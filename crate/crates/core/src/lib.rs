//! Exact computations with finite-dimensional quasi-triangular Hopf algebras over
//! cyclotomic fields, ending in the classification of irreducible Yetter-Drinfeld modules.
//!
//! Layers, bottom to top:
//! - [`exactfield`]: ℚ(ζ_n) scalars and in-field root extraction.
//! - [`linalg`]: dense exact matrices and canonical subspaces.
//! - [`algengine`]: radicals, central idempotents, module decomposition, Hom spaces.
//! - [`hopfcore`]: Hopf algebra structure constants, duals, integrals, grouplikes.
//! - [`braided`]: R-matrices, the Drinfeld element and the transmuted coproduct Δ_R.
//! - [`ydclass`]: Yetter-Drinfeld modules and the classification pipeline.
//! - [`catalog`]: built-in examples.
//! - [`shellio`]: JSON exchange formats and report rendering.

pub mod exactfield;
pub mod linalg;
pub mod algengine;
pub mod hopfcore;
pub mod braided;
pub mod ydclass;
pub mod shellio;
pub mod catalog;
