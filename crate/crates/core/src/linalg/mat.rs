use std::fmt;

use crate::exactfield::CycNumber;

use super::{LinalgError, Subspace};

/// Dense row-major matrix over ℚ(ζ_n).
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    order: u32,
    rows: usize,
    cols: usize,
    data: Vec<CycNumber>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(order: u32, rows: usize, cols: usize) -> Self {
        Mat {
            order,
            rows,
            cols,
            data: vec![CycNumber::zero(order); rows * cols],
        }
    }

    pub fn identity(order: u32, n: usize) -> Self {
        let mut m = Self::zeros(order, n, n);
        for i in 0..n {
            m.data[i * n + i] = CycNumber::one(order);
        }
        m
    }

    pub fn from_fn(
        order: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycNumber,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            order,
            rows,
            cols,
            data,
        }
    }

    /// Builds from row vectors, all of length `cols`.
    pub fn from_rows(order: u32, cols: usize, rows: Vec<Vec<CycNumber>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Mat {
            order,
            rows: n,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols(order: u32, rows: usize, cols: &[Vec<CycNumber>]) -> Self {
        Self::from_fn(order, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// Reinterprets a flat row-major vector.
    pub fn from_flat(order: u32, rows: usize, cols: usize, data: Vec<CycNumber>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat {
            order,
            rows,
            cols,
            data,
        }
    }

    /// The same matrix over ℚ(ζ_target); see [`CycNumber::lift`].
    pub fn lift(&self, target: u32) -> Mat {
        let data = self.data.iter().map(|c| c.lift(target)).collect();
        Mat::from_flat(target, self.rows, self.cols, data)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[CycNumber] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<CycNumber> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNumber {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNumber) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &CycNumber) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[CycNumber] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<CycNumber> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<CycNumber>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNumber::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Self::from_fn(self.order, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.order, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycNumber]) -> Vec<CycNumber> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| dot(self.order, self.row(i), v))
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[CycNumber]) -> Vec<CycNumber> {
        assert_eq!(self.rows, v.len(), "vector-matrix shape mismatch");
        let mut out = vec![CycNumber::zero(self.order); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.row(i)) {
                if !b.is_zero() {
                    *o += &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            order: self.order,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            order: self.order,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &CycNumber) -> Mat {
        Mat {
            order: self.order,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn trace(&self) -> CycNumber {
        (0..self.rows.min(self.cols)).fold(CycNumber::zero(self.order), |acc, i| {
            &acc + self.get(i, i)
        })
    }

    /// Kronecker product; basis pair (i, j) goes to index i·dim_B + j.
    pub fn kron(&self, other: &Mat) -> Mat {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Mat::zeros(self.order, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat {
            order: self.order,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Self::from_fn(self.order, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn rref(&self) -> Rref {
        let mut rows = self.row_vecs();
        let pivots = rref_in_place(&mut rows, self.cols);
        Rref {
            mat: Mat::from_rows(self.order, self.cols, rows),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// {v : Mv = 0} with its canonical basis.
    pub fn kernel(&self) -> Subspace {
        let Rref { mat, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = vec![CycNumber::zero(self.order); self.cols];
                v[f] = CycNumber::one(self.order);
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -mat.get(k, f);
                }
                v
            })
            .collect();
        Subspace::span(self.order, self.cols, vectors)
    }

    /// Some exact solution of Mx = b, or `None` when b is outside the image.
    pub fn solve(&self, b: &[CycNumber]) -> Option<Vec<CycNumber>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut rows: Vec<Vec<CycNumber>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![CycNumber::zero(self.order); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = rows[k][self.cols].clone();
        }
        Some(x)
    }

    pub fn det(&self) -> CycNumber {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut rows = self.row_vecs();
        let mut det = CycNumber::one(self.order);
        for c in 0..n {
            let Some(p) = pick_pivot(&rows, c, c) else {
                return CycNumber::zero(self.order);
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            let pv = rows[c][c].clone();
            det = &det * &pv;
            let inv = pv.inv().expect("pivot is nonzero");
            for r in c + 1..n {
                if rows[r][c].is_zero() {
                    continue;
                }
                let f = &rows[r][c] * &inv;
                let (head, tail) = rows.split_at_mut(r);
                let prow = &head[c];
                for (v, p) in tail[0].iter_mut().zip(prow).skip(c) {
                    if !p.is_zero() {
                        *v -= &(&f * p);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<CycNumber>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        CycNumber::one(self.order)
                    } else {
                        CycNumber::zero(self.order)
                    }
                }));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(self.order, n, n, |i, j| rows[i][n + j].clone()))
    }

    /// Checks the shape before a binary operation that needs matching columns.
    pub fn check_cols(&self, other: &Mat) -> Result<(), LinalgError> {
        if self.cols == other.cols {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: other.cols,
            })
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over Q(zeta_{}):", self.rows, self.cols, self.order)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn dot(order: u32, a: &[CycNumber], b: &[CycNumber]) -> CycNumber {
    let mut acc = CycNumber::zero(order);
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Among rows `from..` pick the one with the lowest-height nonzero entry in column `c`.
fn pick_pivot(rows: &[Vec<CycNumber>], from: usize, c: usize) -> Option<usize> {
    (from..rows.len())
        .filter(|&r| !rows[r][c].is_zero())
        .min_by_key(|&r| (rows[r][c].height(), r))
}

/// Gauss–Jordan reduction in place over the first `cols` columns; returns pivot columns.
pub(crate) fn rref_in_place(rows: &mut [Vec<CycNumber>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = pick_pivot(rows, r, c) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for v in rows[r].iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
        }
        let support: Vec<usize> = (c..rows[r].len())
            .filter(|&j| !rows[r][j].is_zero())
            .collect();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] -= &(&f * &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
