//! Binary fixed-point complex arithmetic for root approximation. A value `v` is held as
//! the integer round(v·2^PREC); nothing here is trusted for correctness, every result
//! is certified exactly afterwards.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::CycNumber;

pub(crate) const PREC: u64 = 288;

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Cx {
    pub re: BigInt,
    pub im: BigInt,
}

pub(crate) fn scale() -> BigInt {
    BigInt::one() << PREC
}

fn fmul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> PREC
}

fn fdiv(a: &BigInt, b: &BigInt) -> BigInt {
    (a << PREC).div_floor(b)
}

impl Cx {
    pub fn zero() -> Self {
        Cx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    pub fn real(re: BigInt) -> Self {
        Cx {
            re,
            im: BigInt::zero(),
        }
    }

    pub fn one() -> Self {
        Self::real(scale())
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        Cx {
            re: fmul(&self.re, &o.re) - fmul(&self.im, &o.im),
            im: fmul(&self.re, &o.im) + fmul(&self.im, &o.re),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Cx {
        Cx {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn div_int(&self, k: &BigInt) -> Cx {
        Cx {
            re: self.re.div_floor(k),
            im: self.im.div_floor(k),
        }
    }

    pub fn norm_sqr(&self) -> BigInt {
        fmul(&self.re, &self.re) + fmul(&self.im, &self.im)
    }

    /// `None` when the divisor underflows to zero at this precision.
    pub fn div(&self, o: &Cx) -> Option<Cx> {
        let d = o.norm_sqr();
        if d.is_zero() {
            return None;
        }
        let nre = fmul(&self.re, &o.re) + fmul(&self.im, &o.im);
        let nim = fmul(&self.im, &o.re) - fmul(&self.re, &o.im);
        Some(Cx {
            re: fdiv(&nre, &d),
            im: fdiv(&nim, &d),
        })
    }

    /// max(|re|, |im|) as a raw fixed-point integer.
    pub fn max_abs(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }
}

/// arctan(1/x)·2^bits by the alternating series.
fn arctan_inv(x: u32, bits: u64) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << bits) / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// π at PREC bits (Machin's formula with guard bits).
pub(crate) fn pi() -> BigInt {
    let guard = 32;
    let bits = PREC + guard;
    let v = arctan_inv(5, bits) * 16 - arctan_inv(239, bits) * 4;
    v >> guard
}

/// e^{iθ} for θ given in fixed point, by the Taylor series.
fn expi(theta: &BigInt) -> Cx {
    let guard = 32;
    let t = theta << guard;
    let one = BigInt::one() << (PREC + guard);
    let mut term_re = one.clone();
    let mut term_im = BigInt::zero();
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    let mut k = 1u64;
    while !(term_re.is_zero() && term_im.is_zero()) {
        re += &term_re;
        im += &term_im;
        // term *= iθ/k
        let nre = -((&term_im * &t) >> (PREC + guard));
        let nim = (&term_re * &t) >> (PREC + guard);
        term_re = nre / BigInt::from(k);
        term_im = nim / BigInt::from(k);
        k += 1;
    }
    Cx {
        re: re >> guard,
        im: im >> guard,
    }
}

/// Approximations of ζ_n^k for k = 0..n under the principal embedding ζ_n = e^{2πi/n}.
pub(crate) fn root_of_unity_powers(n: u32) -> Vec<Cx> {
    let theta = (pi() * 2) / BigInt::from(n);
    (0..n)
        .map(|k| expi(&(&theta * BigInt::from(k))))
        .collect()
}

/// Image of `z` under the embedding ζ ↦ e^{2πik/n}.
pub(crate) fn embed(z: &CycNumber, k: u32, powers: &[Cx]) -> Cx {
    let n = powers.len() as u64;
    let den = z.denominator();
    let mut acc = Cx::zero();
    for (j, c) in z.numerators().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let idx = ((j as u64) * (k as u64)) % n;
        acc = acc.add(&powers[idx as usize].scale_int(c));
    }
    acc.div_int(den)
}

/// Durand–Kerner iteration on a monic polynomial given by its non-leading coefficients.
/// Returns `None` if the iteration fails to settle.
pub(crate) fn durand_kerner(coeffs: &[Cx]) -> Option<Vec<Cx>> {
    let d = coeffs.len();
    if d == 0 {
        return Some(Vec::new());
    }
    let eval = |z: &Cx| -> Cx {
        let mut acc = Cx::one();
        for c in coeffs.iter().rev() {
            acc = acc.mul(z).add(c);
        }
        acc
    };
    // Cauchy bound: all roots lie within 1 + max|c|.
    let bound: BigInt = coeffs
        .iter()
        .map(Cx::max_abs)
        .max()
        .unwrap_or_else(BigInt::zero)
        * 2
        + scale();
    let s = scale();
    let seed = Cx {
        re: (&s * 2) / 5,
        im: (&s * 9) / 10,
    };
    let mut z: Vec<Cx> = Vec::with_capacity(d);
    let mut p = Cx::real(bound.clone()).div(&Cx::real(scale() * 2)).unwrap_or_else(Cx::one);
    for _ in 0..d {
        p = p.mul(&seed);
        z.push(p.clone());
    }
    let tol = BigInt::one() << (PREC / 2 + 40);
    let fine = BigInt::one() << 16;
    let mut settled_rounds = 0;
    for _ in 0..4000 {
        let mut worst = BigInt::zero();
        for i in 0..d {
            let num = eval(&z[i]);
            let mut den = Cx::one();
            for j in 0..d {
                if j != i {
                    den = den.mul(&z[i].sub(&z[j]));
                }
            }
            let step = match num.div(&den) {
                Some(s) => s,
                None => {
                    // coincident iterates: nudge apart
                    z[i] = z[i].add(&Cx::real(BigInt::one() << (PREC / 2)));
                    worst = worst.max(tol.clone() + 1);
                    continue;
                }
            };
            worst = worst.max(step.max_abs());
            z[i] = z[i].sub(&step);
        }
        if worst < fine {
            return Some(z);
        }
        if worst < tol {
            settled_rounds += 1;
            if settled_rounds > 8 {
                return Some(z);
            }
        }
    }
    None
}

/// Best rational approximation p/q of `x·2^-PREC` with q ≤ `max_den`, accepted only if it
/// agrees to within 2^-tol_bits.
pub(crate) fn reconstruct_rational(
    x: &BigInt,
    max_den: u64,
    tol_bits: u64,
) -> Option<(BigInt, BigInt)> {
    let s = scale();
    let max_den = BigInt::from(max_den);
    let (mut a_num, mut a_den) = (x.clone(), s.clone());
    // convergents h/k with the usual seeds h₋₂ = 0, h₋₁ = 1, k₋₂ = 1, k₋₁ = 0
    let (mut hm2, mut hm1) = (BigInt::zero(), BigInt::one());
    let (mut km2, mut km1) = (BigInt::one(), BigInt::zero());
    let mut best: Option<(BigInt, BigInt)> = None;
    while !a_den.is_zero() {
        let (q, r) = a_num.div_mod_floor(&a_den);
        let hn = &q * &hm1 + &hm2;
        let kn = &q * &km1 + &km2;
        if kn > max_den {
            break;
        }
        best = Some((hn.clone(), kn.clone()));
        hm2 = std::mem::replace(&mut hm1, hn);
        km2 = std::mem::replace(&mut km1, kn);
        a_num = std::mem::replace(&mut a_den, r);
    }
    let (p, q) = best?;
    // |x·q − p·s| < q·s·2^-tol
    let err = (x * &q - &p * &s).abs();
    let limit = (&q * &s) >> tol_bits;
    (err <= limit).then_some((p, q))
}
