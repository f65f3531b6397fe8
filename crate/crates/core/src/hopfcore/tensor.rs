use crate::exactfield::CycNumber;

/// Dense element of H^{⊗legs}; the multi-index (i_1, …, i_k) sits at Σ i_l·d^{k−l}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    order: u32,
    dim: usize,
    legs: usize,
    data: Vec<CycNumber>,
}

impl Tensor {
    pub fn zeros(order: u32, dim: usize, legs: usize) -> Self {
        Tensor {
            order,
            dim,
            legs,
            data: vec![CycNumber::zero(order); dim.pow(legs as u32)],
        }
    }

    pub fn from_data(order: u32, dim: usize, legs: usize, data: Vec<CycNumber>) -> Self {
        assert_eq!(data.len(), dim.pow(legs as u32), "tensor data length");
        Tensor {
            order,
            dim,
            legs,
            data,
        }
    }

    /// Pure tensor of basis elements.
    pub fn basis(order: u32, dim: usize, index: &[usize]) -> Self {
        let mut t = Self::zeros(order, dim, index.len());
        let k = t.flat(index);
        t.data[k] = CycNumber::one(order);
        t
    }

    /// x_1 ⊗ … ⊗ x_k of vectors.
    pub fn pure(order: u32, dim: usize, factors: &[&[CycNumber]]) -> Self {
        let mut data = vec![CycNumber::one(order)];
        for f in factors {
            let mut next = Vec::with_capacity(data.len() * dim);
            for a in &data {
                for b in f.iter() {
                    next.push(if a.is_zero() || b.is_zero() {
                        CycNumber::zero(order)
                    } else {
                        a * b
                    });
                }
            }
            data = next;
        }
        Self::from_data(order, dim, factors.len(), data)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn data(&self) -> &[CycNumber] {
        &self.data
    }

    pub fn into_data(self) -> Vec<CycNumber> {
        self.data
    }

    pub fn flat(&self, index: &[usize]) -> usize {
        index.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn multi(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.legs];
        for slot in out.iter_mut().rev() {
            *slot = flat % self.dim;
            flat /= self.dim;
        }
        out
    }

    pub fn get(&self, index: &[usize]) -> &CycNumber {
        &self.data[self.flat(index)]
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (Vec<usize>, &CycNumber)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.multi(k), c))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNumber::is_zero)
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!((self.dim, self.legs), (other.dim, other.legs));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Tensor { data, ..self.clone_shape() }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!((self.dim, self.legs), (other.dim, other.legs));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Tensor { data, ..self.clone_shape() }
    }

    pub fn scale(&self, c: &CycNumber) -> Tensor {
        let data = self.data.iter().map(|a| a * c).collect();
        Tensor { data, ..self.clone_shape() }
    }

    fn clone_shape(&self) -> Tensor {
        Tensor {
            order: self.order,
            dim: self.dim,
            legs: self.legs,
            data: Vec::new(),
        }
    }

    /// Applies a linear map H → H^{⊗m} (given on basis elements, sparse) to one leg.
    pub fn map_leg(
        &self,
        leg: usize,
        out_legs: usize,
        f: impl Fn(usize) -> Vec<(Vec<usize>, CycNumber)>,
    ) -> Tensor {
        let images: Vec<Vec<(Vec<usize>, CycNumber)>> = (0..self.dim).map(&f).collect();
        let mut out = Tensor::zeros(self.order, self.dim, self.legs - 1 + out_legs);
        for (idx, c) in self.nonzeros() {
            for (img, d) in &images[idx[leg]] {
                let mut target = idx[..leg].to_vec();
                target.extend_from_slice(img);
                target.extend_from_slice(&idx[leg + 1..]);
                let k = out.flat(&target);
                out.data[k] += &(c * d);
            }
        }
        out
    }

    /// Reorders legs: leg l of the result is leg `perm[l]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.legs);
        let mut out = Tensor::zeros(self.order, self.dim, self.legs);
        for (idx, c) in self.nonzeros() {
            let target: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            let k = out.flat(&target);
            out.data[k] = c.clone();
        }
        out
    }

    /// Inserts a leg holding `v` at position `at`.
    pub fn insert_leg(&self, at: usize, v: &[CycNumber]) -> Tensor {
        let mut out = Tensor::zeros(self.order, self.dim, self.legs + 1);
        for (idx, c) in self.nonzeros() {
            for (j, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let mut target = idx[..at].to_vec();
                target.push(j);
                target.extend_from_slice(&idx[at..]);
                let k = out.flat(&target);
                out.data[k] = c * x;
            }
        }
        out
    }

    /// First multi-index where the tensor is nonzero.
    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        self.data.iter().position(|c| !c.is_zero()).map(|k| self.multi(k))
    }

    /// Matrix view for two legs: rows = first leg.
    pub fn as_matrix(&self) -> crate::linalg::Mat {
        assert_eq!(self.legs, 2);
        crate::linalg::Mat::from_flat(self.order, self.dim, self.dim, self.data.clone())
    }
}
