//! Cyclotomic polynomials and per-order reduction tables, built once and shared.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Reduction data for ℚ(ζ_n) in the power basis 1, ζ, …, ζ^{φ(n)−1}.
#[derive(Debug)]
pub(crate) struct CycField {
    pub phi: usize,
    /// Φ_n, low degree first, monic.
    #[cfg_attr(not(test), allow(dead_code))]
    pub modulus: Vec<BigInt>,
    /// `powers[k]` is ζ^k reduced, for 0 ≤ k < max(n, 2φ−1).
    pub powers: Vec<Vec<BigInt>>,
}

static FIELDS: OnceLock<RwLock<HashMap<u32, &'static CycField>>> = OnceLock::new();

pub(crate) fn field(order: u32) -> &'static CycField {
    assert!(order >= 1, "cyclotomic order must be positive");
    let table = FIELDS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = table.read().expect("field table poisoned").get(&order) {
        return f;
    }
    let mut guard = table.write().expect("field table poisoned");
    guard
        .entry(order)
        .or_insert_with(|| Box::leak(Box::new(CycField::build(order))))
}

impl CycField {
    fn build(order: u32) -> Self {
        let modulus = cyclotomic_poly(order);
        let phi = modulus.len() - 1;
        let count = (order as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by ζ: shift up, fold the overflow coefficient back with Φ_n
            let top = cur[phi - 1].clone();
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for (c, m) in cur.iter_mut().zip(&modulus) {
                    *c -= &top * m;
                }
            }
        }
        CycField {
            phi,
            modulus,
            powers,
        }
    }
}

/// Φ_n by dividing xⁿ − 1 by Φ_d for every proper divisor d of n.
pub(crate) fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    let n = n as usize;
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = BigInt::from(-1);
    poly[n] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = exact_div_monic(&poly, &cyclotomic_poly(d as u32));
        }
    }
    poly
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}
