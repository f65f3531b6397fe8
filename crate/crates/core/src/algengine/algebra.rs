use crate::exactfield::CycNumber;
use crate::linalg::{Mat, Subspace};

use super::module::{AlgModule, Side};
use super::{constrain, Multiplier};

/// Associative algebra on a basis b_0, …, b_{d−1} with sparse structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    order: u32,
    dim: usize,
    /// `mult[i*dim + j]` lists the nonzero coordinates of b_i·b_j.
    mult: Vec<Vec<(usize, CycNumber)>>,
    unit: Vec<CycNumber>,
}

impl FinAlgebra {
    pub fn from_sparse(
        order: u32,
        dim: usize,
        mult: Vec<Vec<(usize, CycNumber)>>,
        unit: Vec<CycNumber>,
    ) -> Self {
        assert_eq!(mult.len(), dim * dim, "structure table must have dim² entries");
        assert_eq!(unit.len(), dim);
        let mult = mult.into_iter().map(|terms| canonical(order, terms)).collect();
        FinAlgebra {
            order,
            dim,
            mult,
            unit,
        }
    }

    /// `table[i*dim + j]` is the coordinate vector of b_i·b_j.
    pub fn from_dense(order: u32, dim: usize, table: Vec<Vec<CycNumber>>, unit: Vec<CycNumber>) -> Self {
        let mult = table.into_iter().map(|v| sparsify(&v)).collect();
        Self::from_sparse(order, dim, mult, unit)
    }

    /// kG from a multiplication table of indices, identity at index 0 not assumed.
    pub fn group_algebra(order: u32, table: &[Vec<usize>]) -> Self {
        let n = table.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g))
            .expect("table has no identity");
        let mult = (0..n * n)
            .map(|ij| vec![(table[ij / n][ij % n], CycNumber::one(order))])
            .collect();
        let mut unit = vec![CycNumber::zero(order); n];
        unit[identity] = CycNumber::one(order);
        Self::from_sparse(order, n, mult, unit)
    }

    /// The same structure constants over ℚ(ζ_target).
    pub fn lift(&self, target: u32) -> Self {
        let mult = self
            .mult
            .iter()
            .map(|terms| terms.iter().map(|(k, c)| (*k, c.lift(target))).collect())
            .collect();
        let unit = self.unit.iter().map(|c| c.lift(target)).collect();
        Self::from_sparse(target, self.dim, mult, unit)
    }

    /// M_n(K) on the matrix units E_ij, indexed i·n + j.
    pub fn matrix_algebra(order: u32, n: usize) -> Self {
        let d = n * n;
        let mult = (0..d * d)
            .map(|ab| {
                let (a, b) = (ab / d, ab % d);
                let (i, j) = (a / n, a % n);
                let (k, l) = (b / n, b % n);
                if j == k {
                    vec![(i * n + l, CycNumber::one(order))]
                } else {
                    Vec::new()
                }
            })
            .collect();
        let mut unit = vec![CycNumber::zero(order); d];
        for i in 0..n {
            unit[i * n + i] = CycNumber::one(order);
        }
        Self::from_sparse(order, d, mult, unit)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[CycNumber] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, CycNumber)] {
        &self.mult[i * self.dim + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<CycNumber> {
        crate::linalg::unit_vector(self.order, self.dim, i)
    }

    pub fn mul(&self, a: &[CycNumber], b: &[CycNumber]) -> Vec<CycNumber> {
        let mut out = vec![CycNumber::zero(self.order); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    /// Matrix of x ↦ a·x.
    pub fn left_matrix(&self, a: &[CycNumber]) -> Mat {
        let cols: Vec<Vec<CycNumber>> = (0..self.dim)
            .map(|j| self.mul(a, &self.basis_vector(j)))
            .collect();
        Mat::from_cols(self.order, self.dim, &cols)
    }

    /// Matrix of x ↦ x·a.
    pub fn right_matrix(&self, a: &[CycNumber]) -> Mat {
        let cols: Vec<Vec<CycNumber>> = (0..self.dim)
            .map(|j| self.mul(&self.basis_vector(j), a))
            .collect();
        Mat::from_cols(self.order, self.dim, &cols)
    }

    /// First basis triple (i, j, k) with (b_i b_j) b_k ≠ b_i (b_j b_k), sweeping k outermost.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        for k in 0..d {
            let bk = self.basis_vector(k);
            for j in 0..d {
                let jk = self.mul(&self.basis_vector(j), &bk);
                for i in 0..d {
                    let bi = self.basis_vector(i);
                    let left = self.mul(&self.mul(&bi, &self.basis_vector(j)), &bk);
                    if left != self.mul(&bi, &jk) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis index where the unit fails to act as identity on either side.
    pub fn unit_witness(&self) -> Option<usize> {
        (0..self.dim).find(|&i| {
            let b = self.basis_vector(i);
            self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn center(&self) -> Subspace {
        let full: Vec<Vec<CycNumber>> = (0..self.dim).map(|i| self.basis_vector(i)).collect();
        let basis = constrain(self.order, full, self.dim, |j, v| {
            let b = self.basis_vector(j);
            let left = self.mul(v, &b);
            let right = self.mul(&b, v);
            left.iter().zip(&right).map(|(x, y)| x - y).collect()
        });
        Subspace::span(self.order, self.dim, basis)
    }

    /// The regular module: left multiplication, or right multiplication for `Side::Right`.
    pub fn regular_module(&self, side: Side) -> AlgModule {
        let action = (0..self.dim)
            .map(|i| match side {
                Side::Left => self.left_matrix(&self.basis_vector(i)),
                Side::Right => self.right_matrix(&self.basis_vector(i)),
            })
            .collect();
        AlgModule::new(std::sync::Arc::new(self.clone()), side, action)
    }

    /// The opposite algebra.
    pub fn opposite(&self) -> FinAlgebra {
        let d = self.dim;
        let mult = (0..d * d).map(|ij| self.mult[(ij % d) * d + ij / d].clone()).collect();
        Self::from_sparse(self.order, d, mult, self.unit.clone())
    }
}

impl Multiplier for FinAlgebra {
    fn order(&self) -> u32 {
        self.order
    }

    fn one(&self) -> Vec<CycNumber> {
        self.unit.clone()
    }

    fn mul(&self, a: &[CycNumber], b: &[CycNumber]) -> Vec<CycNumber> {
        FinAlgebra::mul(self, a, b)
    }
}

/// Sorted by basis index, duplicates summed, zeros dropped.
fn canonical(order: u32, terms: Vec<(usize, CycNumber)>) -> Vec<(usize, CycNumber)> {
    let mut acc: std::collections::BTreeMap<usize, CycNumber> = Default::default();
    for (k, v) in terms {
        *acc.entry(k).or_insert_with(|| CycNumber::zero(order)) += &v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub(crate) fn sparsify(v: &[CycNumber]) -> Vec<(usize, CycNumber)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// Kernel of the trace form (a, b) ↦ tr(L_a L_b). Over characteristic zero this is the
/// Jacobson radical.
pub fn radical(a: &FinAlgebra) -> Subspace {
    let d = a.dim;
    let order = a.order;
    // tr L_{b_k} = Σ_j coefficient of b_j in b_k b_j
    let traces: Vec<CycNumber> = (0..d)
        .map(|k| {
            (0..d).fold(CycNumber::zero(order), |acc, j| {
                a.basis_product(k, j)
                    .iter()
                    .filter(|(idx, _)| *idx == j)
                    .fold(acc, |acc, (_, c)| &acc + c)
            })
        })
        .collect();
    let form = Mat::from_fn(order, d, d, |i, j| {
        a.basis_product(i, j)
            .iter()
            .fold(CycNumber::zero(order), |acc, (k, c)| &acc + &(c * &traces[*k]))
    });
    form.kernel()
}
