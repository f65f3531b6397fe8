use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exactfield::{roots_in_field, CycNumber};
use crate::linalg::{unit_vector, Echelon, Insertion, Mat, Subspace};

use super::split::{min_poly, random_combination, split_center, MatAlgebra, Multiplier};
use super::{constrain, AlgError, FinAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// A module given by the matrices of the basis elements of its algebra.
#[derive(Clone, Debug)]
pub struct AlgModule {
    algebra: Arc<FinAlgebra>,
    side: Side,
    action: Vec<Mat>,
}

impl AlgModule {
    pub fn new(algebra: Arc<FinAlgebra>, side: Side, action: Vec<Mat>) -> Self {
        assert_eq!(action.len(), algebra.dim(), "one matrix per basis element");
        AlgModule {
            algebra,
            side,
            action,
        }
    }

    pub fn algebra(&self) -> &Arc<FinAlgebra> {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.action.first().map_or(0, Mat::rows)
    }

    pub fn order(&self) -> u32 {
        self.algebra.order()
    }

    pub fn actions(&self) -> &[Mat] {
        &self.action
    }

    /// ρ(a) for an arbitrary algebra element.
    pub fn act(&self, a: &[CycNumber]) -> Mat {
        let n = self.dim();
        let mut out = Mat::zeros(self.order(), n, n);
        for (c, m) in a.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// ρ(b_i)ρ(b_j) = ρ(b_i b_j) (left) or ρ(b_j b_i) (right), and ρ(1) = id.
    pub fn check_axioms(&self) -> Result<(), AlgError> {
        let a = &self.algebra;
        let n = self.dim();
        if self.act(a.unit()) != Mat::identity(self.order(), n) {
            return Err(AlgError::BadAction("unit does not act as identity".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let prod = self.action[i].mul(&self.action[j]);
                let (x, y) = match self.side {
                    Side::Left => (i, j),
                    Side::Right => (j, i),
                };
                if prod != self.act(&a.mul(&a.basis_vector(x), &a.basis_vector(y))) {
                    return Err(AlgError::BadAction(format!("basis pair ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    /// Submodule structure on an invariant subspace, in its echelon coordinates.
    pub fn restrict(&self, sub: &Subspace) -> AlgModule {
        let action = self.action.iter().map(|m| sub.restrict(m)).collect();
        AlgModule::new(self.algebra.clone(), self.side, action)
    }
}

/// An irreducible summand and the index of its isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub subspace: Subspace,
    pub iso_class: usize,
}

fn commutant(order: u32, n: usize, ops: &[Mat]) -> Vec<Vec<CycNumber>> {
    let full = (0..n * n).map(|k| unit_vector(order, n * n, k)).collect();
    constrain(order, full, ops.len(), |k, x| {
        let x = Mat::from_flat(order, n, n, x.to_vec());
        x.mul(&ops[k]).sub(&ops[k].mul(&x)).into_flat()
    })
}

/// Basis of {F : F·a_k = b_k·F for all k}, F of shape (dim_b × dim_a), flattened row-major.
pub fn intertwiners(order: u32, dim_a: usize, dim_b: usize, ops_a: &[Mat], ops_b: &[Mat]) -> Subspace {
    assert_eq!(ops_a.len(), ops_b.len());
    let total = dim_a * dim_b;
    let full = (0..total).map(|k| unit_vector(order, total, k)).collect();
    let basis = constrain(order, full, ops_a.len(), |k, f| {
        let f = Mat::from_flat(order, dim_b, dim_a, f.to_vec());
        f.mul(&ops_a[k]).sub(&ops_b[k].mul(&f)).into_flat()
    });
    Subspace::span(order, total, basis)
}

/// Hom_A(M, N) as a subspace of flattened (dim N × dim M) matrices.
pub fn hom_space(m: &AlgModule, n: &AlgModule) -> Subspace {
    assert_eq!(m.side, n.side, "modules on different sides");
    intertwiners(m.order(), m.dim(), n.dim(), &m.action, &n.action)
}

/// An invertible element of a Hom space, searching the basis and then random combinations.
pub fn find_isomorphism(hom: &Subspace, dim: usize, seed: u64) -> Option<Mat> {
    if hom.is_zero() || hom.ambient_dim() != dim * dim {
        return None;
    }
    let order = hom.order();
    let to_mat = |v: Vec<CycNumber>| Mat::from_flat(order, dim, dim, v);
    for v in hom.vectors() {
        let m = to_mat(v);
        if !m.det().is_zero() {
            return Some(m);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vectors = hom.vectors();
    (0..32).find_map(|_| {
        let m = to_mat(random_combination(order, &vectors, &mut rng));
        (!m.det().is_zero()).then_some(m)
    })
}

/// Dimension of the unital algebra generated by `ops` inside End(K^n).
pub fn generated_algebra_dim(order: u32, n: usize, ops: &[Mat]) -> usize {
    let mut ech = Echelon::new(order, n * n);
    let mut queue = vec![Mat::identity(order, n)];
    ech.insert(queue[0].entries());
    let mut head = 0;
    while head < queue.len() && !ech.is_full() {
        let cur = queue[head].clone();
        head += 1;
        for g in ops {
            let next = g.mul(&cur);
            if let Insertion::Independent(_) = ech.insert(next.entries()) {
                queue.push(next);
            }
        }
    }
    ech.dim()
}

/// Absolute irreducibility by Burnside: the operators generate all of End(K^n).
pub fn is_irreducible(order: u32, n: usize, ops: &[Mat]) -> bool {
    n > 0 && generated_algebra_dim(order, n, ops) == n * n
}

pub fn decompose_module(m: &AlgModule, seed: u64, max_den: u64) -> Result<Vec<Component>, AlgError> {
    decompose_operators(m.order(), m.dim(), &m.action, seed, max_den)
}

/// Decomposes K^n, semisimple under the algebra generated by `ops`, into irreducible
/// invariant subspaces tagged by isomorphism class. Isotypic components come from the
/// center of the commutant; each is then cut into simple pieces with eigenspaces of
/// commutant elements.
pub fn decompose_operators(
    order: u32,
    n: usize,
    ops: &[Mat],
    seed: u64,
    max_den: u64,
) -> Result<Vec<Component>, AlgError> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alg = MatAlgebra::new(order, n);
    let comm = commutant(order, n, ops);
    let center = constrain(order, comm.clone(), comm.len(), |j, z| {
        let (zj, jz) = (alg.mul(z, &comm[j]), alg.mul(&comm[j], z));
        zj.iter().zip(&jz).map(|(a, b)| a - b).collect()
    });
    let idems = split_center(&alg, &center, &mut rng, max_den)?;
    let mut blocks: Vec<Subspace> = idems
        .iter()
        .map(|e| Subspace::span(order, n, alg.to_mat(e).transpose().row_vecs()))
        .collect();
    blocks.sort_by_key(|b| (b.dim(), b.vectors()));
    let mut out = Vec::new();
    for (iso_class, block) in blocks.iter().enumerate() {
        for subspace in split_isotypic(order, ops, block, &mut rng, max_den)? {
            out.push(Component {
                subspace,
                iso_class,
            });
        }
    }
    Ok(out)
}

fn isqrt(x: usize) -> Option<usize> {
    let r = (x as f64).sqrt().round() as usize;
    (r * r == x).then_some(r)
}

/// Cuts an isotypic component S^m into m simple submodules.
fn split_isotypic(
    order: u32,
    ops: &[Mat],
    block: &Subspace,
    rng: &mut ChaCha8Rng,
    max_den: u64,
) -> Result<Vec<Subspace>, AlgError> {
    let k = block.dim();
    let local: Vec<Mat> = ops.iter().map(|g| block.restrict(g)).collect();
    let comm = commutant(order, k, &local);
    let mult = isqrt(comm.len()).ok_or(AlgError::FieldNotSplitting { order })?;
    if mult == 1 {
        return Ok(vec![block.clone()]);
    }
    let simple_dim = k / mult;
    let mut current = Subspace::full(order, k);
    while current.dim() > simple_dim {
        let cur_ops: Vec<Mat> = local.iter().map(|g| current.restrict(g)).collect();
        let sub = proper_submodule(order, &cur_ops, rng, max_den)?;
        let vectors = sub.vectors().iter().map(|c| current.combine(c)).collect();
        current = Subspace::span(order, k, vectors);
    }
    // translates of one simple piece under the commutant fill the component
    let comm_mats: Vec<Mat> = comm
        .into_iter()
        .map(|v| Mat::from_flat(order, k, k, v))
        .collect();
    let mut pieces = vec![current.clone()];
    let mut total = current;
    for a in &comm_mats {
        if total.dim() == k {
            break;
        }
        let image = pieces[0].image_under(a);
        if image.dim() != simple_dim {
            continue;
        }
        if total.intersect(&image).map_err(|e| AlgError::BadAction(e.to_string()))?.is_zero() {
            total = total.sum(&image).map_err(|e| AlgError::BadAction(e.to_string()))?;
            pieces.push(image);
        }
    }
    if total.dim() != k {
        return Err(AlgError::NotSemisimple);
    }
    Ok(pieces
        .into_iter()
        .map(|p| {
            let vectors = p.vectors().iter().map(|c| block.combine(c)).collect();
            Subspace::span(order, block.ambient_dim(), vectors)
        })
        .collect())
}

/// A nonzero proper invariant subspace of a reducible isotypic module: the smallest
/// in-field eigenspace of some commutant element.
fn proper_submodule(
    order: u32,
    ops: &[Mat],
    rng: &mut ChaCha8Rng,
    max_den: u64,
) -> Result<Subspace, AlgError> {
    let n = ops.first().map_or(0, Mat::rows);
    let alg = MatAlgebra::new(order, n);
    let one = alg.one();
    let comm = commutant(order, n, ops);
    let mut candidates: Vec<Vec<CycNumber>> = comm.clone();
    for a in &comm {
        for b in &comm {
            candidates.push(alg.mul(a, b));
        }
    }
    for i in 0..comm.len() {
        for j in i + 1..comm.len() {
            candidates.push(comm[i].iter().zip(&comm[j]).map(|(x, y)| x + y).collect());
        }
    }
    let structured = candidates.len();
    for attempt in 0..structured + 64 {
        let a = if attempt < structured {
            candidates[attempt].clone()
        } else {
            random_combination(order, &comm, rng)
        };
        let p = min_poly(&alg, &one, &a);
        if p.degree().unwrap_or(0) <= 1 {
            continue;
        }
        let roots = roots_in_field(&p, max_den)?;
        let best = roots
            .iter()
            .map(|r| {
                let shifted = alg.to_mat(&a).sub(&Mat::identity(order, n).scale(&r.value));
                shifted.kernel()
            })
            .min_by_key(Subspace::dim);
        if let Some(sub) = best {
            return Ok(sub);
        }
    }
    Err(AlgError::FieldNotSplitting { order })
}
