use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclo::{field, CycField};
use super::FieldError;

/// An element of ℚ(ζ_n), stored as integer numerators over one common denominator
/// in the power basis 1, ζ, …, ζ^{φ(n)−1}.
///
/// Elements whose only nonzero coordinate is the constant term are rational and mix
/// freely with any order; mixing two irrational elements of different orders panics.
#[derive(Clone)]
pub struct CycNumber {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNumber {
    pub fn zero(order: u32) -> Self {
        let phi = field(order).phi;
        CycNumber {
            order,
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = BigInt::from(v);
        z
    }

    pub fn from_rational(order: u32, q: &BigRational) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = q.numer().clone();
        z.den = q.denom().clone();
        z.normalize();
        z
    }

    pub fn from_frac(order: u32, n: i64, d: i64) -> Self {
        Self::from_rational(order, &BigRational::new(n.into(), d.into()))
    }

    /// ζ_n^k, reduced.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let f = field(order);
        let k = k.rem_euclid(order as i64) as usize;
        CycNumber {
            order,
            num: f.powers[k].clone(),
            den: BigInt::one(),
        }
    }

    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// Builds an element from power-basis coordinates; the length must be φ(order).
    pub fn from_coords(order: u32, coords: &[BigRational]) -> Result<Self, FieldError> {
        let phi = field(order).phi;
        if coords.len() != phi {
            return Err(FieldError::CoordinateLength {
                order,
                expected: phi,
                got: coords.len(),
            });
        }
        let den = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut z = CycNumber { order, num, den };
        z.normalize();
        Ok(z)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|n| BigRational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn coord(&self, j: usize) -> BigRational {
        BigRational::new(self.num[j].clone(), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.den.is_one() && self.num[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Bit size of the largest numerator or the denominator; used to rank pivots.
    pub fn height(&self) -> u64 {
        self.num
            .iter()
            .map(|n| n.bits())
            .max()
            .unwrap_or(0)
            .max(self.den.bits())
    }

    /// Re-expresses this element in ℚ(ζ_target). Only rationals, or a target that is a
    /// multiple of the current order, are accepted.
    pub fn lift(&self, target: u32) -> Self {
        if target == self.order {
            return self.clone();
        }
        if self.is_rational() {
            let mut z = Self::zero(target);
            z.num[0] = self.num[0].clone();
            z.den = self.den.clone();
            return z;
        }
        assert!(
            target.is_multiple_of(self.order),
            "cannot embed ℚ(ζ_{}) into ℚ(ζ_{target})",
            self.order
        );
        let step = (target / self.order) as usize;
        let f = field(target);
        let mut out = vec![BigInt::zero(); f.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&f.powers[j * step]) {
                *o += c * p;
            }
        }
        let mut z = CycNumber {
            order: target,
            num: out,
            den: self.den.clone(),
        };
        z.normalize();
        z
    }

    /// Image under the Galois automorphism ζ ↦ ζ^k (k coprime to the order).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.order as i64;
        let f = field(self.order);
        let mut out = vec![BigInt::zero(); f.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((j as i64) * k).rem_euclid(n) as usize;
            for (o, p) in out.iter_mut().zip(&f.powers[e]) {
                *o += c * p;
            }
        }
        let mut z = CycNumber {
            order: self.order,
            num: out,
            den: self.den.clone(),
        };
        z.normalize();
        z
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.is_rational() {
            let mut z = Self::zero(self.order);
            z.num[0] = self.den.clone();
            z.den = self.num[0].clone();
            z.normalize();
            return Ok(z);
        }
        // Solve (multiplication by self) · c = 1 over ℚ.
        let f = field(self.order);
        let m = f.phi;
        let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); m + 1]; m];
        for j in 0..m {
            let col = mul_poly(f, &self.num, &f.powers[j]);
            for i in 0..m {
                rows[i][j] = BigRational::from_integer(col[i].clone());
            }
        }
        rows[0][m] = BigRational::one();
        for c in 0..m {
            let p = (c..m)
                .find(|&r| !rows[r][c].is_zero())
                .expect("nonzero cyclotomic element has an invertible multiplication map");
            rows.swap(c, p);
            let pv = rows[c][c].clone();
            for v in rows[c].iter_mut() {
                *v /= &pv;
            }
            let pivot_row = rows[c].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == c || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &factor * p;
                }
            }
        }
        let coords: Vec<BigRational> = rows.iter().map(|r| &r[m] * &self.den).collect();
        Self::from_coords(self.order, &coords)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub(crate) fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub(crate) fn denominator(&self) -> &BigInt {
        &self.den
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for n in self.num.iter_mut() {
                *n = -&*n;
            }
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if g.is_one() {
                return;
            }
            if !n.is_zero() {
                g = g.gcd(n);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for n in self.num.iter_mut() {
                if !n.is_zero() {
                    *n /= &g;
                }
            }
        }
    }

    fn common_order(a: &Self, b: &Self) -> u32 {
        if a.order == b.order {
            a.order
        } else if a.is_rational() {
            b.order
        } else if b.is_rational() {
            a.order
        } else {
            panic!(
                "mixed cyclotomic orders {} and {} in one operation",
                a.order, b.order
            )
        }
    }

    fn add_signed(&self, rhs: &Self, negate: bool) -> Self {
        let order = Self::common_order(self, rhs);
        let a = self.lift(order);
        let b = rhs.lift(order);
        let (num, den) = if a.den == b.den {
            let num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| if negate { x - y } else { x + y })
                .collect();
            (num, a.den.clone())
        } else {
            let num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| {
                    let l = x * &b.den;
                    let r = y * &a.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect();
            (num, &a.den * &b.den)
        };
        let mut z = CycNumber { order, num, den };
        z.normalize();
        z
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let order = Self::common_order(self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(order);
        }
        let (num, den) = if self.is_rational() {
            let s = &self.num[0];
            let b = rhs.lift(order);
            (b.num.iter().map(|x| x * s).collect(), &self.den * &b.den)
        } else if rhs.is_rational() {
            let s = &rhs.num[0];
            let a = self.lift(order);
            (a.num.iter().map(|x| x * s).collect(), &a.den * &rhs.den)
        } else {
            let f = field(order);
            (mul_poly(f, &self.num, &rhs.num), &self.den * &rhs.den)
        };
        let mut z = CycNumber { order, num, den };
        z.normalize();
        z
    }

    /// Effective order used for comparisons: rationals compare as order 0.
    fn class_order(&self) -> u32 {
        if self.is_rational() {
            0
        } else {
            self.order
        }
    }
}

fn mul_poly(f: &CycField, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let m = f.phi;
    let mut prod = vec![BigInt::zero(); 2 * m - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                prod[i + j] += x * y;
            }
        }
    }
    let (low, high) = prod.split_at_mut(m);
    for (k, c) in high.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (l, p) in low.iter_mut().zip(&f.powers[m + k]) {
            *l += c * p;
        }
    }
    prod.truncate(m);
    prod
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.num == other.num;
        }
        self.is_rational()
            && other.is_rational()
            && self.den == other.den
            && self.num[0] == other.num[0]
    }
}

impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.class_order().hash(state);
        self.den.hash(state);
        let last = self.num.iter().rposition(|n| !n.is_zero()).map_or(0, |p| p + 1);
        self.num[..last].hash(state);
    }
}

impl Ord for CycNumber {
    /// Lexicographic on coordinates (shorter vectors padded with zeros), then by order.
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.num.len().max(other.num.len());
        let zero = BigInt::zero();
        for j in 0..len {
            let a = self.num.get(j).unwrap_or(&zero) * &other.den;
            let b = other.num.get(j).unwrap_or(&zero) * &self.den;
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.class_order().cmp(&other.class_order())
    }
}

impl PartialOrd for CycNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b CycNumber> for &'a CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: &'b CycNumber) -> CycNumber {
                let f: fn(&CycNumber, &CycNumber) -> CycNumber = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: CycNumber) -> CycNumber {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $tr<&'b CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: &'b CycNumber) -> CycNumber {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<CycNumber> for &'a CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: CycNumber) -> CycNumber {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_signed(b, false));
forward_binop!(Sub, sub, |a, b| a.add_signed(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("division by zero in cyclotomic field"));

impl AddAssign<&CycNumber> for CycNumber {
    fn add_assign(&mut self, rhs: &CycNumber) {
        if rhs.is_zero() {
            return;
        }
        *self = self.add_signed(rhs, false);
    }
}

impl SubAssign<&CycNumber> for CycNumber {
    fn sub_assign(&mut self, rhs: &CycNumber) {
        if rhs.is_zero() {
            return;
        }
        *self = self.add_signed(rhs, true);
    }
}

impl MulAssign<&CycNumber> for CycNumber {
    fn mul_assign(&mut self, rhs: &CycNumber) {
        *self = self.mul_ref(rhs);
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            order: self.order,
            num: self.num.iter().map(|n| -n).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

impl<'a> Sum<&'a CycNumber> for CycNumber {
    /// Panics on an empty iterator, since the order would be unknown.
    fn sum<I: Iterator<Item = &'a CycNumber>>(mut iter: I) -> Self {
        let first = iter.next().expect("sum of an empty sequence of CycNumber").clone();
        iter.fold(first, |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl fmt::Display for CycNumber {
    /// Writes the exchange text format: `a/b` for rationals, `[c0, …]@n` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        write!(f, "[")?;
        for (j, c) in self.coords().iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]@{}", self.order)
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl CycNumber {
    /// Parses the exchange text format. Rationals are placed in ℚ(ζ_order); a bracketed
    /// list must name its own order, which has to agree with `order` unless the value is
    /// rational.
    pub fn parse(text: &str, order: u32) -> Result<Self, FieldError> {
        let t = text.trim();
        let bad = || FieldError::Parse(text.to_string());
        if let Some(rest) = t.strip_prefix('[') {
            let (body, tail) = rest.split_once(']').ok_or_else(bad)?;
            let n: u32 = tail
                .trim()
                .strip_prefix('@')
                .ok_or_else(bad)?
                .trim()
                .parse()
                .map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            let coords = body
                .split(',')
                .map(|s| parse_rational(s).ok_or_else(bad))
                .collect::<Result<Vec<_>, _>>()?;
            let z = Self::from_coords(n, &coords)?;
            if z.is_rational() || order.is_multiple_of(n) {
                Ok(z.lift(order))
            } else {
                Err(FieldError::OrderMismatch {
                    expected: order,
                    got: n,
                })
            }
        } else {
            let q = parse_rational(t).ok_or_else(bad)?;
            Ok(Self::from_rational(order, &q))
        }
    }

    /// Human-oriented rendering such as `1/2 + 1/2·i` (ℚ(i)) or `-1 + ζ12^2`.
    pub fn pretty(&self) -> String {
        if let Some(q) = self.to_rational() {
            return q.to_string();
        }
        let gen = if self.order == 4 {
            "i".to_string()
        } else {
            format!("ζ{}", self.order)
        };
        let mut out = String::new();
        for (j, c) in self.coords().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = match j {
                0 => String::new(),
                1 => gen.clone(),
                _ => format!("{gen}^{j}"),
            };
            if unit.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&unit);
            } else {
                out.push_str(&format!("{mag}·{unit}"));
            }
        }
        out
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl serde::Serialize for CycNumber {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
