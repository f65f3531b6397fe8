//! Quasi-triangular structure: R-matrix axioms, the Drinfeld element, the adjoint action
//! and the transmuted coproduct Δ_R with its convolution algebra.

mod checks;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::algengine::{AlgModule, FinAlgebra, Side};
use crate::exactfield::CycNumber;
use crate::hopfcore::{verify_hopf, Axiom, HopfAlgebra, Tensor};
use crate::linalg::Mat;

pub use checks::{
    alpha_tilde, check_integral_cocommutative, check_separable_idempotent, cocommutativity_witness,
    identity_suite, separable_idempotent, CheckOutcome, IdentityCheck,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QtAxiom {
    Qt1,
    Qt2,
    Qt3,
    RInverse,
    Qybe,
    STensorS,
    CounitR,
    Drinfeld,
    DeltaRCoassoc,
    DeltaRCounit,
}

impl fmt::Display for QtAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            QtAxiom::Qt1 => "qt1",
            QtAxiom::Qt2 => "qt2",
            QtAxiom::Qt3 => "qt3",
            QtAxiom::RInverse => "r_inverse",
            QtAxiom::Qybe => "qybe",
            QtAxiom::STensorS => "s_tensor_s",
            QtAxiom::CounitR => "counit_r",
            QtAxiom::Drinfeld => "drinfeld",
            QtAxiom::DeltaRCoassoc => "delta_r_coassoc",
            QtAxiom::DeltaRCounit => "delta_r_counit",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QtError {
    #[error("Hopf axiom {axiom} fails at {witness:?}")]
    Hopf { axiom: Axiom, witness: Vec<usize> },
    #[error("{axiom} fails at {witness:?}")]
    AxiomFailure { axiom: QtAxiom, witness: Vec<usize> },
    #[error("R has {got} coefficients, expected {expected}")]
    Shape { expected: usize, got: usize },
}

/// A verified pair (H, R) with the derived structure cached at construction.
#[derive(Clone, Debug)]
pub struct QTHopf {
    hopf: HopfAlgebra,
    r: Tensor,
    r_inv: Tensor,
    drinfeld: Vec<CycNumber>,
    drinfeld_inv: Vec<CycNumber>,
    /// Matrix of a ↦ b_i·_ad a for each basis element.
    adjoint: Vec<Mat>,
    /// Δ_R(b_i) as a two-leg tensor.
    delta_r: Vec<Tensor>,
    /// Column j is S_R(b_j).
    s_r: Mat,
}

fn witness_of(diff: &Tensor) -> Option<Vec<usize>> {
    diff.first_nonzero()
}

fn compare(lhs: &Tensor, rhs: &Tensor) -> Option<Vec<usize>> {
    witness_of(&lhs.sub(rhs))
}

fn fail(axiom: QtAxiom, witness: Option<Vec<usize>>) -> Result<(), QtError> {
    match witness {
        Some(witness) => Err(QtError::AxiomFailure { axiom, witness }),
        None => Ok(()),
    }
}

/// R¹²R¹³R²³ and R²³R¹³R¹² as three-leg tensors.
pub(crate) fn r_legs(h: &HopfAlgebra, r: &Tensor) -> (Tensor, Tensor, Tensor) {
    let unit = h.unit();
    (r.insert_leg(2, unit), r.insert_leg(1, unit), r.insert_leg(0, unit))
}

pub(crate) fn r_axiom_witnesses(h: &HopfAlgebra, r: &Tensor, r_inv: &Tensor) -> Vec<(QtAxiom, Option<Vec<usize>>)> {
    let (r12, r13, r23) = r_legs(h, r);
    let qt1 = compare(&h.delta_leg(r, 0), &h.tensor_mul(&r13, &r23));
    let qt2 = compare(&h.delta_leg(r, 1), &h.tensor_mul(&r13, &r12));
    let qt3 = (0..h.dim())
        .find(|&i| {
            let delta = h.comult_basis(i);
            h.tensor_mul(&delta.permute(&[1, 0]), r) != h.tensor_mul(r, &delta)
        })
        .map(|i| vec![i]);
    let one = h.unit_tensor(2);
    let inverse = compare(&h.tensor_mul(r, r_inv), &one).or_else(|| compare(&h.tensor_mul(r_inv, r), &one));
    let qybe = compare(
        &h.tensor_mul(&h.tensor_mul(&r12, &r13), &r23),
        &h.tensor_mul(&h.tensor_mul(&r23, &r13), &r12),
    );
    let s_tensor_s = compare(&h.s_leg(&h.s_leg(r, 0), 1), r);
    let unit = h.vector_tensor(h.unit());
    let counit = compare(&h.eps_leg(r, 0), &unit).or_else(|| compare(&h.eps_leg(r, 1), &unit));
    vec![
        (QtAxiom::Qt1, qt1),
        (QtAxiom::Qt2, qt2),
        (QtAxiom::Qt3, qt3),
        (QtAxiom::RInverse, inverse),
        (QtAxiom::Qybe, qybe),
        (QtAxiom::STensorS, s_tensor_s),
        (QtAxiom::CounitR, counit),
    ]
}

/// Checks (H, R) and builds the cached structure.
pub fn verify_qt(hopf: &HopfAlgebra, r: &Tensor) -> Result<QTHopf, QtError> {
    let d = hopf.dim();
    if r.legs() != 2 || r.dim() != d {
        return Err(QtError::Shape {
            expected: d * d,
            got: r.data().len(),
        });
    }
    let r = Tensor::from_data(hopf.order(), d, 2, r.data().iter().map(|c| c.lift(hopf.order())).collect());
    if let Some(check) = verify_hopf(hopf).first_failure() {
        return Err(QtError::Hopf {
            axiom: check.axiom,
            witness: check.witness.clone().unwrap_or_default(),
        });
    }
    let r_inv = hopf.s_leg(&r, 0);
    for (axiom, witness) in r_axiom_witnesses(hopf, &r, &r_inv) {
        fail(axiom, witness)?;
    }

    let drinfeld = hopf.multiply_legs(&hopf.s_leg(&r, 1).permute(&[1, 0]));
    let drinfeld_inv = hopf
        .algebra()
        .left_matrix(&drinfeld)
        .inverse()
        .map(|m| m.mul_vec(hopf.unit()))
        .ok_or(QtError::AxiomFailure {
            axiom: QtAxiom::Drinfeld,
            witness: Vec::new(),
        })?;
    let s = hopf.antipode();
    let s2 = s.mul(s);
    let drinfeld_bad = (0..d).find(|&i| {
        let b = hopf.basis_vector(i);
        hopf.mul(&s2.mul_vec(&b), &drinfeld) != hopf.mul(&drinfeld, &b)
    });
    fail(QtAxiom::Drinfeld, drinfeld_bad.map(|i| vec![i]))?;

    let adjoint: Vec<Mat> = (0..d).map(|i| hopf.adjoint_matrix(&hopf.basis_vector(i))).collect();
    let delta_r = (0..d).map(|i| transmuted_coproduct(hopf, &r, &adjoint, i)).collect();
    let s_r = transmuted_antipode(hopf, &r, &adjoint);
    let q = QTHopf {
        hopf: hopf.clone(),
        r,
        r_inv,
        drinfeld,
        drinfeld_inv,
        adjoint,
        delta_r,
        s_r,
    };
    fail(QtAxiom::DeltaRCoassoc, q.delta_r_coassoc_witness())?;
    fail(QtAxiom::DeltaRCounit, q.delta_r_counit_witness())?;
    Ok(q)
}

/// Δ_R(b_i) = Σ b_{i(1)}(SR²) ⊗ R¹·_ad b_{i(2)}.
fn transmuted_coproduct(h: &HopfAlgebra, r: &Tensor, adjoint: &[Mat], i: usize) -> Tensor {
    let d = h.dim();
    let mut data = vec![CycNumber::zero(h.order()); d * d];
    let r_terms: Vec<(Vec<usize>, &CycNumber)> = r.nonzeros().collect();
    for (j, k, c) in &h.comult_table()[i] {
        for (idx, rc) in &r_terms {
            let coeff = c * *rc;
            let left = h.mul(&h.basis_vector(*j), &h.antipode().col(idx[1]));
            let right = adjoint[idx[0]].col(*k);
            accumulate_outer(&mut data, &coeff, &left, &right);
        }
    }
    Tensor::from_data(h.order(), d, 2, data)
}

fn accumulate_outer(data: &mut [CycNumber], coeff: &CycNumber, left: &[CycNumber], right: &[CycNumber]) {
    let d = left.len();
    for (a, x) in left.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        let cx = coeff * x;
        for (b, y) in right.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            data[a * d + b] += &(&cx * y);
        }
    }
}

/// S_R(b_j) = Σ R² S(R¹·_ad b_j).
fn transmuted_antipode(h: &HopfAlgebra, r: &Tensor, adjoint: &[Mat]) -> Mat {
    let cols: Vec<Vec<CycNumber>> = (0..h.dim())
        .map(|j| {
            let mut out = h.zero_vector();
            for (idx, rc) in r.nonzeros() {
                let moved = h.s(&adjoint[idx[0]].col(j));
                let prod = h.mul(&h.basis_vector(idx[1]), &moved);
                for (o, p) in out.iter_mut().zip(&prod) {
                    *o += &(rc * p);
                }
            }
            out
        })
        .collect();
    Mat::from_cols(h.order(), h.dim(), &cols)
}

impl QTHopf {
    /// The same pair over ℚ(ζ_target), re-verified.
    pub fn lift(&self, target: u32) -> Result<QTHopf, QtError> {
        verify_qt(&self.hopf.lift(target), &self.r)
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn order(&self) -> u32 {
        self.hopf.order()
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn r_matrix(&self) -> &Tensor {
        &self.r
    }

    pub fn r_inverse(&self) -> &Tensor {
        &self.r_inv
    }

    /// u = Σ(SR²)R¹.
    pub fn drinfeld_element(&self) -> &[CycNumber] {
        &self.drinfeld
    }

    pub fn drinfeld_inverse(&self) -> &[CycNumber] {
        &self.drinfeld_inv
    }

    pub fn adjoint_matrices(&self) -> &[Mat] {
        &self.adjoint
    }

    /// h·_ad a.
    pub fn adjoint(&self, h: &[CycNumber], a: &[CycNumber]) -> Vec<CycNumber> {
        let mut out = self.hopf.zero_vector();
        for (i, c) in h.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (o, x) in out.iter_mut().zip(self.adjoint[i].mul_vec(a)) {
                *o += &(c * &x);
            }
        }
        out
    }

    /// H acting on itself by ·_ad.
    pub fn adjoint_action(&self) -> AlgModule {
        AlgModule::new(Arc::new(self.hopf.algebra().clone()), Side::Left, self.adjoint.clone())
    }

    pub fn delta_r_basis(&self, i: usize) -> &Tensor {
        &self.delta_r[i]
    }

    pub fn delta_r(&self, h: &[CycNumber]) -> Tensor {
        let mut out = Tensor::zeros(self.order(), self.dim(), 2);
        for (i, c) in h.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            out = out.add(&self.delta_r[i].scale(c));
        }
        out
    }

    /// Applies Δ_R to one leg of a tensor.
    pub fn delta_r_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        t.map_leg(leg, 2, |i| {
            self.delta_r[i]
                .nonzeros()
                .map(|(idx, c)| (idx, c.clone()))
                .collect()
        })
    }

    /// Matrix of S_R (column j is S_R(b_j)).
    pub fn s_r_matrix(&self) -> &Mat {
        &self.s_r
    }

    pub fn s_r(&self, h: &[CycNumber]) -> Vec<CycNumber> {
        self.s_r.mul_vec(h)
    }

    /// f *_R g, the product dual to Δ_R.
    pub fn convolution_r(&self, f: &[CycNumber], g: &[CycNumber]) -> Vec<CycNumber> {
        self.delta_r
            .iter()
            .map(|t| {
                t.nonzeros().fold(CycNumber::zero(self.order()), |acc, (idx, c)| {
                    if f[idx[0]].is_zero() || g[idx[1]].is_zero() {
                        acc
                    } else {
                        &acc + &(&(c * &f[idx[0]]) * &g[idx[1]])
                    }
                })
            })
            .collect()
    }

    /// f↼↼h: x ↦ f(h·_ad x).
    pub fn coadjoint(&self, f: &[CycNumber], h: &[CycNumber]) -> Vec<CycNumber> {
        let mut out = self.hopf.zero_vector();
        for (i, c) in h.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (o, x) in out.iter_mut().zip(self.adjoint[i].vec_mul(f)) {
                *o += &(c * &x);
            }
        }
        out
    }

    /// (H*, *_R, ε) on the dual basis.
    pub fn transmuted_dual_algebra(&self) -> FinAlgebra {
        let d = self.dim();
        let mut mult = vec![Vec::new(); d * d];
        for (c, t) in self.delta_r.iter().enumerate() {
            for (idx, v) in t.nonzeros() {
                mult[idx[0] * d + idx[1]].push((c, v.clone()));
            }
        }
        FinAlgebra::from_sparse(self.order(), d, mult, self.hopf.counit().to_vec())
    }

    fn delta_r_coassoc_witness(&self) -> Option<Vec<usize>> {
        (0..self.dim())
            .find(|&i| {
                let t = &self.delta_r[i];
                self.delta_r_leg(t, 0) != self.delta_r_leg(t, 1)
            })
            .map(|i| vec![i])
    }

    fn delta_r_counit_witness(&self) -> Option<Vec<usize>> {
        (0..self.dim())
            .find(|&i| {
                let t = &self.delta_r[i];
                let b = self.hopf.vector_tensor(&self.hopf.basis_vector(i));
                self.hopf.eps_leg(t, 0) != b || self.hopf.eps_leg(t, 1) != b
            })
            .map(|i| vec![i])
    }
}

#[cfg(test)]
mod tests;
