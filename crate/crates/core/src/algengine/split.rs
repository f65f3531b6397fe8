use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactfield::{roots_in_field, CycNumber, Poly};
use crate::linalg::{Echelon, Insertion, Mat, Subspace};

use super::{radical, AlgError, FinAlgebra};

const MAX_STALLS: usize = 32;

/// Anything whose elements are coordinate vectors with a bilinear product.
pub(crate) trait Multiplier {
    fn order(&self) -> u32;
    fn one(&self) -> Vec<CycNumber>;
    fn mul(&self, a: &[CycNumber], b: &[CycNumber]) -> Vec<CycNumber>;
}

/// n×n matrices flattened row-major.
pub(crate) struct MatAlgebra {
    order: u32,
    n: usize,
}

impl MatAlgebra {
    pub fn new(order: u32, n: usize) -> Self {
        MatAlgebra { order, n }
    }

    pub fn to_mat(&self, v: &[CycNumber]) -> Mat {
        Mat::from_flat(self.order, self.n, self.n, v.to_vec())
    }
}

impl Multiplier for MatAlgebra {
    fn order(&self) -> u32 {
        self.order
    }

    fn one(&self) -> Vec<CycNumber> {
        Mat::identity(self.order, self.n).into_flat()
    }

    fn mul(&self, a: &[CycNumber], b: &[CycNumber]) -> Vec<CycNumber> {
        self.to_mat(a).mul(&self.to_mat(b)).into_flat()
    }
}

/// Minimal polynomial of `a` inside the unital subalgebra whose identity is `one`.
pub(crate) fn min_poly<M: Multiplier>(alg: &M, one: &[CycNumber], a: &[CycNumber]) -> Poly {
    let order = alg.order();
    let mut ech = Echelon::new(order, one.len());
    let mut power = one.to_vec();
    loop {
        match ech.insert(&power) {
            Insertion::Independent(_) => power = alg.mul(&power, a),
            Insertion::Dependent(c) => {
                let mut coeffs: Vec<CycNumber> = c.iter().map(|x| -x).collect();
                coeffs.push(CycNumber::one(order));
                return Poly::new(order, coeffs);
            }
        }
    }
}

/// q(a) by Horner, with `one` standing in for a⁰.
pub(crate) fn eval_at<M: Multiplier>(alg: &M, q: &Poly, one: &[CycNumber], a: &[CycNumber]) -> Vec<CycNumber> {
    let mut acc = vec![CycNumber::zero(alg.order()); one.len()];
    for c in q.coeffs().iter().rev() {
        acc = alg.mul(&acc, a);
        for (x, u) in acc.iter_mut().zip(one) {
            if !u.is_zero() {
                *x += &(c * u);
            }
        }
    }
    acc
}

pub(crate) fn random_combination(
    order: u32,
    vectors: &[Vec<CycNumber>],
    rng: &mut impl Rng,
) -> Vec<CycNumber> {
    let coeffs: Vec<CycNumber> = (0..vectors.len())
        .map(|_| CycNumber::from_int(order, rng.gen_range(-4..=4)))
        .collect();
    super::combine(order, vectors, &coeffs)
}

/// Splits a commutative semisimple subalgebra (given by a basis, containing the identity)
/// into primitive idempotents: minimal polynomials of random elements, in-field roots, and
/// Lagrange idempotents q(a)/q(r) with q = p/(x − r).
pub(crate) fn split_center<M: Multiplier>(
    alg: &M,
    center: &[Vec<CycNumber>],
    rng: &mut impl Rng,
    max_den: u64,
) -> Result<Vec<Vec<CycNumber>>, AlgError> {
    let order = alg.order();
    let mut done = Vec::new();
    let mut work = vec![(alg.one(), center.to_vec())];
    let mut stalls = 0;
    while let Some((e, basis)) = work.pop() {
        if basis.len() <= 1 {
            done.push(e);
            continue;
        }
        let a = random_combination(order, &basis, rng);
        let p = min_poly(alg, &e, &a);
        let deg = p.degree().unwrap_or(0);
        if deg <= 1 {
            stalls += 1;
            if stalls > MAX_STALLS {
                return Err(AlgError::SplittingStalled { attempts: stalls });
            }
            work.push((e, basis));
            continue;
        }
        if p.squarefree_part()?.degree() != Some(deg) {
            return Err(AlgError::NotSemisimple);
        }
        let roots = roots_in_field(&p, max_den)?;
        if roots.len() < deg {
            return Err(AlgError::FieldNotSplitting { order });
        }
        for root in roots {
            let (q, _) = p.div_rem(&Poly::linear(&root.value))?;
            let norm = q.eval(&root.value).inv()?;
            let idem: Vec<CycNumber> = eval_at(alg, &q, &e, &a).iter().map(|x| x * &norm).collect();
            let images: Vec<Vec<CycNumber>> = basis.iter().map(|z| alg.mul(&idem, z)).collect();
            let block = Subspace::span(order, idem.len(), images).vectors();
            work.push((idem, block));
        }
    }
    Ok(done)
}

/// Complete set of orthogonal central primitive idempotents, sorted.
pub fn central_primitive_idempotents(
    a: &FinAlgebra,
    seed: u64,
    max_den: u64,
) -> Result<Vec<Vec<CycNumber>>, AlgError> {
    if !radical(a).is_zero() {
        return Err(AlgError::NotSemisimple);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idems = split_center(a, &a.center().vectors(), &mut rng, max_den)?;
    idems.sort();
    Ok(idems)
}
