//! In-field root extraction: numeric approximation at one embedding per complex-conjugate
//! pair, rational reconstruction of the power-basis coordinates, exact certification.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::cyclo::field;
use super::fixed::{self, Cx, PREC};
use super::{CycNumber, FieldError, Poly};

/// Default bound on reconstructed coordinate denominators.
pub const DEFAULT_MAX_DEN: u64 = 1 << 16;

/// A certified root with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub value: CycNumber,
    pub multiplicity: usize,
}

/// Outcome of a lenient search: certified roots plus the indices of numeric roots (at the
/// principal embedding, squarefree part) that could not be certified.
#[derive(Clone, Debug)]
pub struct RootSearch {
    pub roots: Vec<Root>,
    pub uncertified: Vec<usize>,
}

/// All roots of `p` in its coefficient field, failing with `ReconstructionFailed` when any
/// root escapes the field (or needs denominators beyond `max_den`).
pub fn find_roots_in_field(p: &Poly, max_den: u64) -> Result<Vec<Root>, FieldError> {
    let search = search_roots(p, max_den)?;
    match search.uncertified.first() {
        Some(&idx) => Err(FieldError::ReconstructionFailed(idx)),
        None => Ok(search.roots),
    }
}

/// Lenient variant: the certified subset of the roots, never failing for lack of roots.
pub fn roots_in_field(p: &Poly, max_den: u64) -> Result<Vec<Root>, FieldError> {
    Ok(search_roots(p, max_den)?.roots)
}

pub fn search_roots(p: &Poly, max_den: u64) -> Result<RootSearch, FieldError> {
    let deg = p.degree().ok_or(FieldError::ZeroPolynomial)?;
    if deg == 0 {
        return Err(FieldError::ZeroPolynomial);
    }
    let order = p.order();
    let p = p.monic()?;
    let sf = p.squarefree_part()?;
    let candidates = if sf.degree() == Some(1) {
        vec![(0, -&sf.coeffs()[0])]
    } else {
        numeric_candidates(&sf, max_den)?
    };
    let sf_deg = sf.degree().unwrap_or(0);
    let mut found: Vec<(usize, CycNumber)> = Vec::new();
    for (idx, r) in candidates {
        if sf.eval(&r).is_zero() && !found.iter().any(|(_, f)| *f == r) {
            found.push((idx, r));
        }
    }
    let certified: Vec<usize> = found.iter().map(|(i, _)| *i).collect();
    let uncertified = (0..sf_deg).filter(|i| !certified.contains(i)).collect();
    let mut roots = Vec::with_capacity(found.len());
    for (_, r) in found {
        let lin = Poly::linear(&r);
        let mut rest = p.clone();
        let mut mult = 0;
        loop {
            let (q, rem) = rest.div_rem(&lin)?;
            if !rem.is_zero() {
                break;
            }
            mult += 1;
            rest = q;
        }
        roots.push(Root {
            value: r.lift(order),
            multiplicity: mult,
        });
    }
    roots.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(RootSearch { roots, uncertified })
}

/// Candidate roots tagged by the index of their principal-embedding approximation.
fn numeric_candidates(sf: &Poly, max_den: u64) -> Result<Vec<(usize, CycNumber)>, FieldError> {
    let order = sf.order();
    let n = order.max(1);
    let m = field(order).phi;
    let powers = fixed::root_of_unity_powers(n);
    let reps = embedding_reps(n);

    // numeric roots of σ_k(p) for each representative embedding k
    let mut per_embedding: Vec<Vec<Cx>> = Vec::with_capacity(reps.len());
    for &k in &reps {
        let coeffs: Vec<Cx> = sf.coeffs()[..sf.coeffs().len() - 1]
            .iter()
            .map(|c| fixed::embed(c, k, &powers))
            .collect();
        let roots = fixed::durand_kerner(&coeffs).ok_or(FieldError::RootIterationDiverged)?;
        per_embedding.push(roots);
    }

    // real linear system: rows (Re, Im) of Σ_j c_j ζ^{jk} per representative k
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m);
    for &k in &reps {
        let re_row: Vec<BigInt> = (0..m)
            .map(|j| powers[(j * k as usize) % n as usize].re.clone())
            .collect();
        rows.push(re_row);
        if rows.len() < m {
            let im_row: Vec<BigInt> = (0..m)
                .map(|j| powers[(j * k as usize) % n as usize].im.clone())
                .collect();
            rows.push(im_row);
        }
    }
    let inverse = invert_fixed(&rows).ok_or(FieldError::RootIterationDiverged)?;

    let deg = per_embedding[0].len();
    let mut out = Vec::new();
    let tol_bits = 80;
    let mut choice = vec![0usize; reps.len()];
    for principal in 0..deg {
        choice[0] = principal;
        for slot in choice.iter_mut().skip(1) {
            *slot = 0;
        }
        loop {
            let mut rhs: Vec<BigInt> = Vec::with_capacity(m);
            for (e, &c) in choice.iter().enumerate() {
                let z = &per_embedding[e][c];
                rhs.push(z.re.clone());
                if rhs.len() < m {
                    rhs.push(z.im.clone());
                }
            }
            if let Some(r) = reconstruct(order, &inverse, &rhs, max_den, tol_bits) {
                out.push((principal, r));
            }
            // odometer over the non-principal embeddings
            let mut pos = 1;
            while pos < choice.len() {
                choice[pos] += 1;
                if choice[pos] < deg {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos >= choice.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// One exponent k per pair {k, −k} of units mod n, starting with 1.
fn embedding_reps(n: u32) -> Vec<u32> {
    if n <= 2 {
        return vec![1];
    }
    (1..n)
        .filter(|&k| k.gcd(&n) == 1 && 2 * k < n)
        .collect()
}

fn reconstruct(
    order: u32,
    inverse: &[Vec<BigInt>],
    rhs: &[BigInt],
    max_den: u64,
    tol_bits: u64,
) -> Option<CycNumber> {
    let mut coords = Vec::with_capacity(rhs.len());
    for row in inverse {
        let mut acc = BigInt::zero();
        for (a, b) in row.iter().zip(rhs) {
            acc += a * b;
        }
        let x = acc >> PREC;
        let (p, q) = fixed::reconstruct_rational(&x, max_den, tol_bits)?;
        coords.push(BigRational::new(p, q));
    }
    CycNumber::from_coords(order, &coords).ok()
}

/// Gauss–Jordan inverse of a fixed-point matrix with partial pivoting.
fn invert_fixed(a: &[Vec<BigInt>]) -> Option<Vec<Vec<BigInt>>> {
    let n = a.len();
    let s = fixed::scale();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { s.clone() } else { BigInt::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by_key(|&r| m[r][c].abs())?;
        if m[p][c].is_zero() {
            return None;
        }
        m.swap(c, p);
        let pv = m[c][c].clone();
        for v in m[c].iter_mut() {
            *v = (&*v << PREC).div_floor(&pv);
        }
        let pivot_row = m[c].clone();
        for r in 0..n {
            if r == c || m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].clone();
            for (v, p) in m[r].iter_mut().zip(&pivot_row) {
                *v -= (&f * p) >> PREC;
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}
