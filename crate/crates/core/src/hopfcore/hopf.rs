use crate::algengine::FinAlgebra;
use crate::exactfield::CycNumber;
use crate::linalg::{unit_vector, Mat};

use super::Tensor;

/// Sparse Δ(b_i) as (j, k, c) with Δ(b_i) = Σ c·b_j⊗b_k.
pub type Coproduct = Vec<(usize, usize, CycNumber)>;

/// Hopf algebra on a named basis, stored as structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    names: Vec<String>,
    algebra: FinAlgebra,
    comult: Vec<Coproduct>,
    counit: Vec<CycNumber>,
    /// Column j is S(b_j).
    antipode: Mat,
}

impl HopfAlgebra {
    pub fn new(
        names: Vec<String>,
        algebra: FinAlgebra,
        comult: Vec<Coproduct>,
        counit: Vec<CycNumber>,
        antipode: Mat,
    ) -> Self {
        let d = algebra.dim();
        assert_eq!(names.len(), d);
        assert_eq!(comult.len(), d);
        assert_eq!(counit.len(), d);
        assert_eq!((antipode.rows(), antipode.cols()), (d, d));
        let order = algebra.order();
        let comult = comult
            .into_iter()
            .map(|terms| {
                let mut acc: std::collections::BTreeMap<(usize, usize), CycNumber> = Default::default();
                for (j, k, c) in terms {
                    *acc.entry((j, k)).or_insert_with(|| CycNumber::zero(order)) += &c;
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((j, k), c)| (j, k, c)).collect()
            })
            .collect();
        HopfAlgebra {
            names,
            algebra,
            comult,
            counit,
            antipode,
        }
    }

    pub fn order(&self) -> u32 {
        self.algebra.order()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn unit(&self) -> &[CycNumber] {
        self.algebra.unit()
    }

    pub fn counit(&self) -> &[CycNumber] {
        &self.counit
    }

    pub fn antipode(&self) -> &Mat {
        &self.antipode
    }

    pub fn comult_table(&self) -> &[Coproduct] {
        &self.comult
    }

    pub fn basis_vector(&self, i: usize) -> Vec<CycNumber> {
        unit_vector(self.order(), self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vec<CycNumber> {
        vec![CycNumber::zero(self.order()); self.dim()]
    }

    pub fn mul(&self, a: &[CycNumber], b: &[CycNumber]) -> Vec<CycNumber> {
        self.algebra.mul(a, b)
    }

    pub fn eps(&self, h: &[CycNumber]) -> CycNumber {
        crate::linalg::dot(self.order(), &self.counit, h)
    }

    pub fn s(&self, h: &[CycNumber]) -> Vec<CycNumber> {
        self.antipode.mul_vec(h)
    }

    pub fn comult(&self, h: &[CycNumber]) -> Tensor {
        self.delta_leg(&self.vector_tensor(h), 0)
    }

    /// Δ(b_i) as a two-leg tensor.
    pub fn comult_basis(&self, i: usize) -> Tensor {
        let d = self.dim();
        let mut data = vec![CycNumber::zero(self.order()); d * d];
        for (j, k, c) in &self.comult[i] {
            data[j * d + k] += c;
        }
        Tensor::from_data(self.order(), d, 2, data)
    }

    pub fn vector_tensor(&self, h: &[CycNumber]) -> Tensor {
        Tensor::from_data(self.order(), self.dim(), 1, h.to_vec())
    }

    pub fn delta_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        t.map_leg(leg, 2, |i| {
            self.comult[i]
                .iter()
                .map(|(j, k, c)| (vec![*j, *k], c.clone()))
                .collect()
        })
    }

    pub fn eps_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        t.map_leg(leg, 0, |i| {
            if self.counit[i].is_zero() {
                Vec::new()
            } else {
                vec![(Vec::new(), self.counit[i].clone())]
            }
        })
    }

    pub fn s_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        self.linear_leg(t, leg, &self.antipode)
    }

    /// Applies the matrix `m` (acting on columns) to one leg.
    pub fn linear_leg(&self, t: &Tensor, leg: usize, m: &Mat) -> Tensor {
        t.map_leg(leg, 1, |i| {
            (0..self.dim())
                .filter(|&r| !m.get(r, i).is_zero())
                .map(|r| (vec![r], m.get(r, i).clone()))
                .collect()
        })
    }

    /// Product in H^{⊗k}, leg by leg.
    pub fn tensor_mul(&self, x: &Tensor, y: &Tensor) -> Tensor {
        assert_eq!(x.legs(), y.legs());
        let legs = x.legs();
        let mut data = vec![CycNumber::zero(self.order()); self.dim().pow(legs as u32)];
        let ys: Vec<(Vec<usize>, &CycNumber)> = y.nonzeros().collect();
        for (i, a) in x.nonzeros() {
            for (j, b) in &ys {
                let mut partial: Vec<(usize, CycNumber)> = vec![(0, a * *b)];
                for l in 0..legs {
                    let prod = self.algebra.basis_product(i[l], j[l]);
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (flat, c) in &partial {
                        for (k, e) in prod {
                            next.push((flat * self.dim() + k, c * e));
                        }
                    }
                    partial = next;
                }
                for (flat, c) in partial {
                    data[flat] += &c;
                }
            }
        }
        Tensor::from_data(self.order(), self.dim(), legs, data)
    }

    /// 1⊗…⊗1 with `legs` factors.
    pub fn unit_tensor(&self, legs: usize) -> Tensor {
        let unit = self.unit().to_vec();
        let factors: Vec<&[CycNumber]> = (0..legs).map(|_| unit.as_slice()).collect();
        Tensor::pure(self.order(), self.dim(), &factors)
    }

    /// Multiplies the legs of a two-leg tensor: m(Σ a⊗b) = Σ ab.
    pub fn multiply_legs(&self, t: &Tensor) -> Vec<CycNumber> {
        let mut out = self.zero_vector();
        for (idx, c) in t.nonzeros() {
            for (k, e) in self.algebra.basis_product(idx[0], idx[1]) {
                out[*k] += &(c * e);
            }
        }
        out
    }

    /// h·_ad a = Σ h₁ a S(h₂).
    pub fn adjoint(&self, h: &[CycNumber], a: &[CycNumber]) -> Vec<CycNumber> {
        let delta = self.comult(h);
        let mut out = self.zero_vector();
        for (idx, c) in delta.nonzeros() {
            let left = self.mul(&self.basis_vector(idx[0]), a);
            let prod = self.mul(&left, &self.s(&self.basis_vector(idx[1])));
            for (o, p) in out.iter_mut().zip(&prod) {
                if !p.is_zero() {
                    *o += &(c * p);
                }
            }
        }
        out
    }

    /// Matrix of a ↦ h·_ad a.
    pub fn adjoint_matrix(&self, h: &[CycNumber]) -> Mat {
        let cols: Vec<Vec<CycNumber>> = (0..self.dim())
            .map(|j| self.adjoint(h, &self.basis_vector(j)))
            .collect();
        Mat::from_cols(self.order(), self.dim(), &cols)
    }

    /// f⇀h = Σ h₁⟨f, h₂⟩.
    pub fn hit_left(&self, f: &[CycNumber], h: &[CycNumber]) -> Vec<CycNumber> {
        let delta = self.comult(h);
        let mut out = self.zero_vector();
        for (idx, c) in delta.nonzeros() {
            if !f[idx[1]].is_zero() {
                out[idx[0]] += &(c * &f[idx[1]]);
            }
        }
        out
    }

    /// h↼f = Σ⟨f, h₁⟩h₂.
    pub fn hit_right(&self, h: &[CycNumber], f: &[CycNumber]) -> Vec<CycNumber> {
        let delta = self.comult(h);
        let mut out = self.zero_vector();
        for (idx, c) in delta.nonzeros() {
            if !f[idx[0]].is_zero() {
                out[idx[1]] += &(c * &f[idx[0]]);
            }
        }
        out
    }

    /// h⇀f on a covector: x ↦ f(xh).
    pub fn covector_hit_left(&self, h: &[CycNumber], f: &[CycNumber]) -> Vec<CycNumber> {
        let m = self.algebra.right_matrix(h);
        m.vec_mul(f)
    }

    /// f↼h on a covector: x ↦ f(hx).
    pub fn covector_hit_right(&self, f: &[CycNumber], h: &[CycNumber]) -> Vec<CycNumber> {
        let m = self.algebra.left_matrix(h);
        m.vec_mul(f)
    }

    /// f↼↼h = Σ(Sh₂)⇀f↼h₁, i.e. x ↦ f(h·_ad x).
    pub fn coadjoint(&self, f: &[CycNumber], h: &[CycNumber]) -> Vec<CycNumber> {
        self.adjoint_matrix(h).vec_mul(f)
    }

    /// Ordinary convolution (f*g)(h) = Σ f(h₁)g(h₂).
    pub fn convolve(&self, f: &[CycNumber], g: &[CycNumber]) -> Vec<CycNumber> {
        (0..self.dim())
            .map(|i| {
                self.comult[i].iter().fold(CycNumber::zero(self.order()), |acc, (j, k, c)| {
                    if f[*j].is_zero() || g[*k].is_zero() {
                        acc
                    } else {
                        &acc + &(&(c * &f[*j]) * &g[*k])
                    }
                })
            })
            .collect()
    }

    /// The dual Hopf algebra H* on the dual basis δ_i.
    pub fn dual(&self) -> HopfAlgebra {
        let d = self.dim();
        let order = self.order();
        let mut mult = vec![Vec::new(); d * d];
        for (c, terms) in self.comult.iter().enumerate() {
            for (a, b, v) in terms {
                mult[a * d + b].push((c, v.clone()));
            }
        }
        let mult = mult.into_iter().map(|terms| merge(order, terms)).collect();
        let algebra = FinAlgebra::from_sparse(order, d, mult, self.counit.clone());
        let mut comult = vec![Vec::new(); d];
        for a in 0..d {
            for b in 0..d {
                for (c, v) in self.algebra.basis_product(a, b) {
                    comult[*c].push((a, b, v.clone()));
                }
            }
        }
        let names = self.names.iter().map(|n| format!("d_{n}")).collect();
        HopfAlgebra::new(
            names,
            algebra,
            comult,
            self.unit().to_vec(),
            self.antipode.transpose(),
        )
    }

    /// The dual algebra (H*, convolution) only.
    pub fn dual_algebra(&self) -> FinAlgebra {
        self.dual().algebra
    }

    /// Same algebra with coproduct replaced (used for negative controls and for Δ^op).
    pub fn with_comult(&self, comult: Vec<Coproduct>) -> HopfAlgebra {
        HopfAlgebra {
            comult,
            ..self.clone()
        }
    }

    /// Same coalgebra with one algebra structure constant overwritten.
    pub fn with_product(&self, i: usize, j: usize, value: Vec<CycNumber>) -> HopfAlgebra {
        let d = self.dim();
        let mut mult: Vec<Vec<(usize, CycNumber)>> = (0..d * d)
            .map(|ab| self.algebra.basis_product(ab / d, ab % d).to_vec())
            .collect();
        mult[i * d + j] = crate::algengine::sparsify(&value);
        HopfAlgebra {
            algebra: FinAlgebra::from_sparse(self.order(), d, mult, self.unit().to_vec()),
            ..self.clone()
        }
    }

    /// Δ^op.
    pub fn opposite_comult(&self) -> Vec<Coproduct> {
        self.comult
            .iter()
            .map(|terms| terms.iter().map(|(j, k, c)| (*k, *j, c.clone())).collect())
            .collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The same Hopf algebra over ℚ(ζ_target), `target` a multiple of the current order.
    pub fn lift(&self, target: u32) -> HopfAlgebra {
        let comult = self
            .comult
            .iter()
            .map(|terms| terms.iter().map(|(j, k, c)| (*j, *k, c.lift(target))).collect())
            .collect();
        HopfAlgebra::new(
            self.names.clone(),
            self.algebra.lift(target),
            comult,
            self.counit.iter().map(|c| c.lift(target)).collect(),
            self.antipode.lift(target),
        )
    }
}

fn merge(order: u32, terms: Vec<(usize, CycNumber)>) -> Vec<(usize, CycNumber)> {
    let mut acc: std::collections::BTreeMap<usize, CycNumber> = Default::default();
    for (k, v) in terms {
        let slot = acc.entry(k).or_insert_with(|| CycNumber::zero(order));
        *slot += &v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}
