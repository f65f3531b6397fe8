use super::{CycNumber, FieldError};

/// Dense univariate polynomial over ℚ(ζ_n), lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    order: u32,
    coeffs: Vec<CycNumber>,
}

impl Poly {
    pub fn new(order: u32, mut coeffs: Vec<CycNumber>) -> Self {
        while coeffs.last().is_some_and(CycNumber::is_zero) {
            coeffs.pop();
        }
        Poly { order, coeffs }
    }

    pub fn zero(order: u32) -> Self {
        Poly {
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: CycNumber) -> Self {
        Self::new(c.order(), vec![c])
    }

    /// x − r
    pub fn linear(r: &CycNumber) -> Self {
        Self::new(r.order(), vec![-r, CycNumber::one(r.order())])
    }

    pub fn from_roots(order: u32, roots: &[CycNumber]) -> Self {
        roots
            .iter()
            .fold(Self::constant(CycNumber::one(order)), |acc, r| {
                acc.mul(&Self::linear(r))
            })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[CycNumber] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&CycNumber> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &CycNumber) -> CycNumber {
        self.coeffs
            .iter()
            .rev()
            .fold(CycNumber::zero(self.order), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &CycNumber::from_int(self.order, k as i64))
            .collect();
        Self::new(self.order, coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = CycNumber::zero(self.order);
        let coeffs = (0..n)
            .map(|k| self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero))
            .collect();
        Self::new(self.order, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order);
        }
        let mut out = vec![CycNumber::zero(self.order); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(self.order, out)
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Result<Self, FieldError> {
        let lead = self.leading().ok_or(FieldError::DivisionByZero)?.inv()?;
        Ok(self.scale(&lead))
    }

    /// Euclidean division: `self = q·d + r` with deg r < deg d.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), FieldError> {
        let dd = d.degree().ok_or(FieldError::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.order), self.clone()));
        }
        let mut quot = vec![CycNumber::zero(self.order); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &(&c * dj);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(self.order, quot), Self::new(self.order, rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self, FieldError> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    /// The product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Result<Self, FieldError> {
        let g = self.gcd(&self.derivative())?;
        let (q, _) = self.div_rem(&g)?;
        q.monic()
    }

    pub fn galois(&self, k: i64) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| c.galois(k)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> CycNumber {
        CycNumber::from_int(4, n)
    }

    #[test]
    fn division_identity() {
        let a = Poly::new(4, vec![q(1), CycNumber::zeta(4), q(0), q(3)]);
        let d = Poly::new(4, vec![q(-2), q(1)]);
        let (qt, r) = a.div_rem(&d).unwrap();
        assert_eq!(qt.mul(&d).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn squarefree_part_drops_repeats() {
        let i = CycNumber::zeta(4);
        let p = Poly::from_roots(4, &[i.clone(), i.clone(), q(2)]);
        let sf = p.squarefree_part().unwrap();
        assert_eq!(sf, Poly::from_roots(4, &[i, q(2)]));
    }
}
