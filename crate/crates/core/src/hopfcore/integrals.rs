use serde::Serialize;

use crate::algengine::{central_primitive_idempotents, constrain, FinAlgebra};
use crate::exactfield::CycNumber;
use crate::linalg::{unit_vector, Subspace};

use super::{Coproduct, HopfAlgebra, HopfError};

fn full_basis(h: &HopfAlgebra) -> Vec<Vec<CycNumber>> {
    (0..h.dim()).map(|i| h.basis_vector(i)).collect()
}

fn integral_space(
    h: &HopfAlgebra,
    residual: impl Fn(usize, &[CycNumber]) -> Vec<CycNumber>,
) -> Subspace {
    let basis = constrain(h.order(), full_basis(h), h.dim(), residual);
    Subspace::span(h.order(), h.dim(), basis)
}

/// {Λ : b_kΛ = ε(b_k)Λ}.
pub fn left_integrals(h: &HopfAlgebra) -> Subspace {
    integral_space(h, |k, v| {
        let prod = h.mul(&h.basis_vector(k), v);
        prod.iter().zip(v).map(|(p, x)| p - &(&h.counit()[k] * x)).collect()
    })
}

/// {Λ : Λb_k = ε(b_k)Λ}.
pub fn right_integrals(h: &HopfAlgebra) -> Subspace {
    integral_space(h, |k, v| {
        let prod = h.mul(v, &h.basis_vector(k));
        prod.iter().zip(v).map(|(p, x)| p - &(&h.counit()[k] * x)).collect()
    })
}

/// Right integrals of H*: Σλ(h₁)h₂ = λ(h)1, one constraint per basis h.
pub fn dual_right_integrals(h: &HopfAlgebra) -> Subspace {
    integral_space(h, |i, lambda| {
        let mut out = h.zero_vector();
        for (j, k, c) in &h.comult_table()[i] {
            if !lambda[*j].is_zero() {
                out[*k] += &(c * &lambda[*j]);
            }
        }
        for (o, u) in out.iter_mut().zip(h.unit()) {
            if !u.is_zero() {
                *o -= &(u * &lambda[i]);
            }
        }
        out
    })
}

/// Left integrals of H*: Σh₁λ(h₂) = λ(h)1.
pub fn dual_left_integrals(h: &HopfAlgebra) -> Subspace {
    integral_space(h, |i, lambda| {
        let mut out = h.zero_vector();
        for (j, k, c) in &h.comult_table()[i] {
            if !lambda[*k].is_zero() {
                out[*j] += &(c * &lambda[*k]);
            }
        }
        for (o, u) in out.iter_mut().zip(h.unit()) {
            if !u.is_zero() {
                *o -= &(u * &lambda[i]);
            }
        }
        out
    })
}

/// Normalized integrals and the distinguished grouplikes measuring their one-sidedness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralData {
    /// Left integral Λ ∈ H with ε(Λ) = 1.
    pub left_integral: Vec<CycNumber>,
    /// Right integral λ ∈ H* with ⟨λ, 1⟩ = 1.
    pub dual_integral: Vec<CycNumber>,
    /// α ∈ H* with Λh = α(h)Λ.
    pub modular_character: Vec<CycNumber>,
    /// a ∈ H with Σh₁λ(h₂) = λ(h)a.
    pub modular_element: Vec<CycNumber>,
}

pub fn integrals(h: &HopfAlgebra) -> Result<IntegralData, HopfError> {
    let left = left_integrals(h);
    let lambda_big = left
        .vectors()
        .into_iter()
        .find(|v| !h.eps(v).is_zero())
        .ok_or(HopfError::NonSemisimple)?;
    let norm = h.eps(&lambda_big).inv()?;
    let lambda_big: Vec<CycNumber> = lambda_big.iter().map(|x| x * &norm).collect();

    let dual = dual_right_integrals(h);
    let lambda = dual
        .vectors()
        .into_iter()
        .find(|v| !crate::linalg::dot(h.order(), v, h.unit()).is_zero())
        .ok_or(HopfError::NonCosemisimple)?;
    let norm = crate::linalg::dot(h.order(), &lambda, h.unit()).inv()?;
    let lambda: Vec<CycNumber> = lambda.iter().map(|x| x * &norm).collect();

    let pivot = lambda_big.iter().position(|x| !x.is_zero()).expect("nonzero integral");
    let pivot_inv = lambda_big[pivot].inv()?;
    let alpha = (0..h.dim())
        .map(|k| &h.mul(&lambda_big, &h.basis_vector(k))[pivot] * &pivot_inv)
        .collect();

    let probe = lambda.iter().position(|x| !x.is_zero()).expect("nonzero integral");
    let probe_inv = lambda[probe].inv()?;
    let mut a = h.zero_vector();
    for (j, k, c) in &h.comult_table()[probe] {
        if !lambda[*k].is_zero() {
            a[*j] += &(&(c * &lambda[*k]) * &probe_inv);
        }
    }
    Ok(IntegralData {
        left_integral: lambda_big,
        dual_integral: lambda,
        modular_character: alpha,
        modular_element: a,
    })
}

/// A grouplike element and whether it is central in the ambient algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grouplike {
    pub element: Vec<CycNumber>,
    pub central: bool,
}

/// Grouplikes of the coalgebra (Δ, ε) from the one-dimensional blocks of its dual
/// algebra: a block K·e with f·e = χ(f)e gives g = Σχ(δ_i)b_i.
pub fn coalgebra_grouplikes(
    order: u32,
    comult: &[Coproduct],
    counit: &[CycNumber],
    seed: u64,
    max_den: u64,
) -> Result<Vec<Vec<CycNumber>>, HopfError> {
    let d = counit.len();
    let mut mult = vec![Vec::new(); d * d];
    for (c, terms) in comult.iter().enumerate() {
        for (a, b, v) in terms {
            mult[a * d + b].push((c, v.clone()));
        }
    }
    let mult = mult
        .into_iter()
        .map(|terms| {
            let mut dense = vec![CycNumber::zero(order); d];
            for (k, v) in terms {
                dense[k] += &v;
            }
            crate::algengine::sparsify(&dense)
        })
        .collect();
    let dual = FinAlgebra::from_sparse(order, d, mult, counit.to_vec());
    let mut out = Vec::new();
    for e in central_primitive_idempotents(&dual, seed, max_den)? {
        if dual.left_matrix(&e).rank() != 1 {
            continue;
        }
        let p = e.iter().position(|x| !x.is_zero()).expect("nonzero idempotent");
        let inv = e[p].inv()?;
        let g: Vec<CycNumber> = (0..d)
            .map(|i| &dual.mul(&unit_vector(order, d, i), &e)[p] * &inv)
            .collect();
        out.push(g);
    }
    out.sort_by_key(|g| (g.iter().position(|x| !x.is_zero()), g.clone()));
    Ok(out)
}

/// G(H) with centrality flags.
pub fn grouplikes(h: &HopfAlgebra, seed: u64, max_den: u64) -> Result<Vec<Grouplike>, HopfError> {
    let center = h.algebra().center();
    Ok(coalgebra_grouplikes(h.order(), h.comult_table(), h.counit(), seed, max_den)?
        .into_iter()
        .map(|g| Grouplike {
            central: center.contains_vector(&g),
            element: g,
        })
        .collect())
}
