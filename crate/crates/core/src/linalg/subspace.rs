use crate::exactfield::CycNumber;

use super::mat::rref_in_place;
use super::{LinalgError, Mat};

/// A subspace of K^n held by its reduced row echelon basis, so equal subspaces compare
/// equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(order: u32, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(order, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(order: u32, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(order, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(order: u32, ambient: usize, vectors: Vec<Vec<CycNumber>>) -> Self {
        let mut rows = vectors;
        for v in &rows {
            assert_eq!(v.len(), ambient, "vector length differs from ambient dimension");
        }
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace {
            ambient,
            basis: Mat::from_rows(order, ambient, rows),
            pivots,
        }
    }

    pub fn order(&self) -> u32 {
        self.basis.order()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<CycNumber>> {
        self.basis.row_vecs()
    }

    pub fn vector(&self, k: usize) -> &[CycNumber] {
        self.basis.row(k)
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            })
        }
    }

    /// Coordinates of `v` in the echelon basis, or `None` when `v` lies outside.
    pub fn coordinates(&self, v: &[CycNumber]) -> Option<Vec<CycNumber>> {
        assert_eq!(v.len(), self.ambient);
        let coeffs: Vec<CycNumber> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, b) in residual.iter_mut().zip(self.basis.row(k)) {
                if !b.is_zero() {
                    *r -= &(c * b);
                }
            }
        }
        residual.iter().all(CycNumber::is_zero).then_some(coeffs)
    }

    pub fn contains_vector(&self, v: &[CycNumber]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Σ coeffs[k]·basis[k].
    pub fn combine(&self, coeffs: &[CycNumber]) -> Vec<CycNumber> {
        self.basis.vec_mul(coeffs)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok((0..other.dim()).all(|k| self.contains_vector(other.vector(k))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let mut vectors = self.vectors();
        vectors.extend(other.vectors());
        Ok(Subspace::span(self.order(), self.ambient, vectors))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let order = self.order();
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Ok(Subspace::zero(order, self.ambient));
        }
        // columns u_1..u_a, −v_1..−v_b; kernel vectors (α, β) give Σ α_i u_i
        let m = Mat::from_fn(order, self.ambient, a + b, |i, j| {
            if j < a {
                self.basis.get(j, i).clone()
            } else {
                -other.basis.get(j - a, i)
            }
        });
        let ker = m.kernel();
        let vectors = ker
            .vectors()
            .into_iter()
            .map(|kv| self.combine(&kv[..a]))
            .collect();
        Ok(Subspace::span(order, self.ambient, vectors))
    }

    /// Image of the subspace under a linear map given as a matrix acting on columns.
    pub fn image_under(&self, m: &Mat) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let vectors = (0..self.dim()).map(|k| m.mul_vec(self.vector(k))).collect();
        Subspace::span(self.order(), m.rows(), vectors)
    }

    /// Is the subspace mapped into itself by `m`?
    pub fn is_invariant(&self, m: &Mat) -> bool {
        (0..self.dim()).all(|k| self.contains_vector(&m.mul_vec(self.vector(k))))
    }

    /// Matrix of `m` restricted to this (invariant) subspace in the echelon basis, acting
    /// on coordinate columns. Panics if the subspace is not invariant.
    pub fn restrict(&self, m: &Mat) -> Mat {
        let cols: Vec<Vec<CycNumber>> = (0..self.dim())
            .map(|k| {
                self.coordinates(&m.mul_vec(self.vector(k)))
                    .expect("subspace is not invariant under the operator")
            })
            .collect();
        Mat::from_cols(self.order(), self.dim(), &cols)
    }
}

/// Incrementally maintained reduced echelon basis that also records how each stored row
/// is built from the independent vectors inserted so far.
#[derive(Clone, Debug)]
pub struct Echelon {
    order: u32,
    ambient: usize,
    rows: Vec<Vec<CycNumber>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<CycNumber>>,
}

/// Result of [`Echelon::insert`].
#[derive(Clone, Debug)]
pub enum Insertion {
    /// The vector was new; carries its index among the independent insertions.
    Independent(usize),
    /// The vector was dependent; carries its coefficients over the independent insertions.
    Dependent(Vec<CycNumber>),
}

impl Echelon {
    pub fn new(order: u32, ambient: usize) -> Self {
        Echelon {
            order,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Residual of `v` after clearing every pivot column, with the clearing coefficients.
    fn reduce(&self, v: &[CycNumber]) -> (Vec<CycNumber>, Vec<CycNumber>) {
        let coeffs: Vec<CycNumber> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, b) in residual.iter_mut().zip(&self.rows[k]) {
                if !b.is_zero() {
                    *r -= &(c * b);
                }
            }
        }
        (residual, coeffs)
    }

    pub fn contains(&self, v: &[CycNumber]) -> bool {
        self.reduce(v).0.iter().all(CycNumber::is_zero)
    }

    pub fn insert(&mut self, v: &[CycNumber]) -> Insertion {
        assert_eq!(v.len(), self.ambient);
        let n = self.rows.len();
        let (residual, coeffs) = self.reduce(v);
        // combination of inserted vectors equal to Σ coeffs_k row_k
        let mut combo = vec![CycNumber::zero(self.order); n];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, t) in combo.iter_mut().zip(&self.combos[k]) {
                if !t.is_zero() {
                    *o += &(c * t);
                }
            }
        }
        let Some(p) = residual.iter().position(|x| !x.is_zero()) else {
            return Insertion::Dependent(combo);
        };
        let inv = residual[p].inv().expect("nonzero pivot");
        let new_row: Vec<CycNumber> = residual.iter().map(|x| x * &inv).collect();
        // new row = (v − Σ combo·inserted) / pivot, in terms of inserted vectors
        let mut new_combo: Vec<CycNumber> = combo.iter().map(|c| -(c * &inv)).collect();
        new_combo.push(inv);
        for t in self.combos.iter_mut() {
            t.push(CycNumber::zero(self.order));
        }
        for k in 0..n {
            let f = self.rows[k][p].clone();
            if f.is_zero() {
                continue;
            }
            for (r, b) in self.rows[k].iter_mut().zip(&new_row) {
                if !b.is_zero() {
                    *r -= &(&f * b);
                }
            }
            for (t, b) in self.combos[k].iter_mut().zip(&new_combo) {
                if !b.is_zero() {
                    *t -= &(&f * b);
                }
            }
        }
        self.rows.push(new_row);
        self.pivots.push(p);
        self.combos.push(new_combo);
        Insertion::Independent(n)
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::span(self.order, self.ambient, self.rows)
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::span(self.order, self.ambient, self.rows.clone())
    }
}
