use std::sync::Arc;

use crate::algengine::{constrain, is_irreducible, AlgModule, FinAlgebra, Side};
use crate::braided::QTHopf;
use crate::exactfield::CycNumber;
use crate::linalg::{unit_vector, Mat, Subspace};

use super::{AdjStableCoalgebra, Coideal, YDModule, YdError};

/// ρ_R on H⊗W (index h·dim W + j): ρ_R(h⊗w) = Σ h₁·_ad w^⟨−1⟩ ⊗ h₂ ⊗ w^⟨0⟩.
pub fn tensor_h_w_slices(q: &QTHopf, w: &Coideal) -> Vec<Mat> {
    let h = q.hopf();
    let (d, s) = (q.dim(), w.dim());
    let n = d * s;
    let mut out = vec![Mat::zeros(q.order(), n, n); d];
    for hb in 0..d {
        for (p, r, c) in &h.comult_table()[hb] {
            let ad = &q.adjoint_matrices()[*p];
            for (a, k) in w.slices().iter().enumerate() {
                if k.is_zero() {
                    continue;
                }
                for e in (0..d).filter(|&e| !ad.get(e, a).is_zero()) {
                    let coef = c * ad.get(e, a);
                    for j in 0..s {
                        for l in (0..s).filter(|&l| !k.get(l, j).is_zero()) {
                            out[e].add_to(r * s + l, hb * s + j, &(&coef * k.get(l, j)));
                        }
                    }
                }
            }
        }
    }
    out
}

/// W*□_D V inside W*⊗V (index i·dim V + v), for V given by its ρ_R slices.
pub fn cotensor(
    q: &QTHopf,
    block: &AdjStableCoalgebra,
    w: &Coideal,
    v_slices: &[Mat],
) -> Result<Subspace, YdError> {
    let (order, d, s) = (q.order(), q.dim(), w.dim());
    let n = v_slices.first().map_or(0, Mat::rows);
    let support_in_block = (0..n).flat_map(|l| (0..n).map(move |k| (l, k))).all(|(l, k)| {
        let v: Vec<CycNumber> = (0..d).map(|a| v_slices[a].get(l, k).clone()).collect();
        block.subspace().contains_vector(&v)
    });
    if !support_in_block {
        return Err(YdError::BlockMismatch);
    }
    let total = s * n;
    let full = (0..total).map(|k| unit_vector(order, total, k)).collect();
    // for every (k, a): Σ_i K_a[i][k] x_i = V_a x_k
    let k_slices = w.slices();
    let basis = constrain(order, full, s * d, |c, x| {
        let (k, a) = (c / d, c % d);
        let mut out = v_slices[a].mul_vec(&x[k * n..(k + 1) * n]);
        for o in out.iter_mut() {
            *o = -&*o;
        }
        for i in 0..s {
            let coef = k_slices[a].get(i, k);
            if coef.is_zero() {
                continue;
            }
            for (o, xi) in out.iter_mut().zip(&x[i * n..(i + 1) * n]) {
                *o += &(coef * xi);
            }
        }
        out
    });
    Ok(Subspace::span(order, total, basis))
}

/// dim N_{WW′} = dim W*□_D(H⊗W′).
pub fn nww_dim(q: &QTHopf, block: &AdjStableCoalgebra, w: &Coideal, w2: &Coideal) -> Result<usize, YdError> {
    Ok(cotensor(q, block, w, &tensor_h_w_slices(q, w2))?.dim())
}

/// The R-adjoint-stable algebra N_W = W*□_D(H⊗W) with the composition product.
#[derive(Clone, Debug)]
pub struct NwAlgebra {
    coideal: Coideal,
    /// Carrier inside W*⊗H⊗W, index i·(d·s) + h·s + j for w*_i ⊗ b_h ⊗ w_j.
    carrier: Subspace,
    algebra: Arc<FinAlgebra>,
    /// Left action on H⊗W, one matrix per carrier basis element.
    action: Vec<Mat>,
    /// H-coaction slices on carrier coordinates.
    coaction: Vec<Mat>,
}

impl NwAlgebra {
    pub fn coideal(&self) -> &Coideal {
        &self.coideal
    }

    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn algebra(&self) -> &Arc<FinAlgebra> {
        &self.algebra
    }

    pub fn module_on_h_w(&self) -> AlgModule {
        AlgModule::new(self.algebra.clone(), Side::Left, self.action.clone())
    }

    pub fn coaction_slices(&self) -> &[Mat] {
        &self.coaction
    }

    /// For W = kg the carrier vectors w*⊗h⊗w, read as elements h ∈ H.
    pub fn as_h_elements(&self) -> Option<Vec<Vec<CycNumber>>> {
        (self.coideal.dim() == 1).then(|| self.carrier.vectors())
    }
}

/// x∘y on W*⊗H⊗W: (w*_i⊗h⊗w_m)∘… pairs y's right leg with x's left leg and multiplies
/// y's H part by x's.
fn compose(q: &QTHopf, s: usize, x: &[CycNumber], y: &[CycNumber]) -> Vec<CycNumber> {
    let d = q.dim();
    let h = q.hopf();
    let mut out = vec![CycNumber::zero(q.order()); s * d * s];
    let split = |k: usize| (k / (d * s), (k / s) % d, k % s);
    for (ky, cy) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (i, hy, m) = split(ky);
        for (kx, cx) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (m2, gx, l) = split(kx);
            if m != m2 {
                continue;
            }
            let coef = cy * cx;
            for (k, e) in h.algebra().basis_product(hy, gx) {
                out[i * d * s + k * s + l] += &(&coef * e);
            }
        }
    }
    out
}

pub fn build_nw(q: &QTHopf, block: &AdjStableCoalgebra, w: &Coideal) -> Result<NwAlgebra, YdError> {
    let (order, d, s) = (q.order(), q.dim(), w.dim());
    let h = q.hopf();
    let carrier = cotensor(q, block, w, &tensor_h_w_slices(q, w))?;
    let n = carrier.dim();
    if n * block.dim() != d * s * s {
        return Err(YdError::DimensionMismatch {
            expected: d * s * s,
            got: n * block.dim(),
        });
    }
    let coords = |v: &[CycNumber]| carrier.coordinates(v).ok_or(YdError::NotClosed);
    let vectors = carrier.vectors();
    let mut table = Vec::with_capacity(n * n);
    for x in &vectors {
        for y in &vectors {
            table.push(coords(&compose(q, s, x, y))?);
        }
    }
    let mut unit = vec![CycNumber::zero(order); s * d * s];
    for i in 0..s {
        for (k, u) in h.unit().iter().enumerate() {
            unit[i * d * s + k * s + i] = u.clone();
        }
    }
    let algebra = FinAlgebra::from_dense(order, n, table, coords(&unit)?);
    if algebra.associativity_witness().is_some() || algebra.unit_witness().is_some() {
        return Err(YdError::NotClosed);
    }

    // (w*_i⊗g⊗w_l)·(b_h⊗w_j) = δ_ij b_h g ⊗ w_l
    let action = vectors
        .iter()
        .map(|x| {
            let mut m = Mat::zeros(order, d * s, d * s);
            for (kx, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (i, g, l) = (kx / (d * s), (kx / s) % d, kx % s);
                for hb in 0..d {
                    for (k, e) in h.algebra().basis_product(hb, g) {
                        m.add_to(k * s + l, hb * s + i, &(c * e));
                    }
                }
            }
            m
        })
        .collect();

    // ρ(w*_i⊗h⊗w_j) = Σ S(h₂) ⊗ w*_i⊗h₁⊗w_j
    let mut ambient = vec![Mat::zeros(order, s * d * s, s * d * s); d];
    for i in 0..s {
        for hb in 0..d {
            for (p, r, c) in &h.comult_table()[hb] {
                let s_r = h.antipode().col(*r);
                for (a, sa) in s_r.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for j in 0..s {
                        ambient[a].add_to(i * d * s + p * s + j, i * d * s + hb * s + j, &(c * sa));
                    }
                }
            }
        }
    }
    let coaction = ambient
        .iter()
        .map(|m| carrier.is_invariant(m).then(|| carrier.restrict(m)).ok_or(YdError::NotClosed))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(NwAlgebra {
        coideal: w.clone(),
        carrier,
        algebra: Arc::new(algebra),
        action,
        coaction,
    })
}

/// {h : Σ h₁·_ad g ⊗ h₂ = g ⊗ h}, the grouplike shortcut for N_{kg}.
pub fn grouplike_carrier(q: &QTHopf, g: &[CycNumber]) -> Subspace {
    let h = q.hopf();
    let d = q.dim();
    let images: Vec<Vec<CycNumber>> = (0..d)
        .map(|k| {
            let mut t = vec![CycNumber::zero(q.order()); d * d];
            for (p, r, c) in &h.comult_table()[k] {
                for (a, x) in q.adjoint_matrices()[*p].mul_vec(g).iter().enumerate() {
                    if !x.is_zero() {
                        t[a * d + r] += &(c * x);
                    }
                }
            }
            for (a, x) in g.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                t[a * d + k] -= x;
            }
            t
        })
        .collect();
    Mat::from_cols(q.order(), d * d, &images).kernel()
}

/// Operators whose common invariant subspaces are the costable two-sided ideals.
fn h_simple_operators(nw: &NwAlgebra, coaction: &[Mat]) -> Vec<Mat> {
    let alg = &nw.algebra;
    (0..alg.dim())
        .flat_map(|k| {
            let b = alg.basis_vector(k);
            [alg.left_matrix(&b), alg.right_matrix(&b)]
        })
        .chain(coaction.iter().cloned())
        .collect()
}

/// N has no proper nonzero ideal stable under the given coaction slices.
pub fn is_h_simple(nw: &NwAlgebra, coaction: &[Mat]) -> bool {
    is_irreducible(nw.algebra.order(), nw.dim(), &h_simple_operators(nw, coaction))
}

pub fn check_h_simple(nw: &NwAlgebra) -> bool {
    is_h_simple(nw, &nw.coaction)
}

/// U⊗_{N}(H⊗W) for a right N-module U, as the quotient of U⊗H⊗W by the balancing
/// relations, with the H-action on the H tensorand and ρ_R from H⊗W.
pub fn induce(q: &QTHopf, nw: &NwAlgebra, u: &AlgModule) -> Result<YDModule, YdError> {
    let (order, d, s) = (q.order(), q.dim(), nw.coideal.dim());
    let m = d * s;
    let ud = u.dim();
    let big = ud * m;
    let mut relations = Vec::new();
    for (k, ux) in u.actions().iter().enumerate() {
        let xm = &nw.action[k];
        for uu in 0..ud {
            for mm in 0..m {
                let mut v = vec![CycNumber::zero(order); big];
                for (u2, c) in ux.col(uu).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    v[u2 * m + mm] += c;
                }
                for (m2, c) in xm.col(mm).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    v[uu * m + m2] -= c;
                }
                relations.push(v);
            }
        }
    }
    let rel = Subspace::span(order, big, relations);
    let expected = ud * d * s / nw.dim();
    if big - rel.dim() != expected || !(ud * d * s).is_multiple_of(nw.dim()) {
        return Err(YdError::DimensionMismatch {
            expected,
            got: big - rel.dim(),
        });
    }
    let pivots = rel.pivots().to_vec();
    let free: Vec<usize> = (0..big).filter(|c| !pivots.contains(c)).collect();
    let quotient = Mat::from_fn(order, free.len(), big, |k, col| {
        if col == free[k] {
            CycNumber::one(order)
        } else if let Some(r) = pivots.iter().position(|&p| p == col) {
            -rel.vector(r)[free[k]].clone()
        } else {
            CycNumber::zero(order)
        }
    });
    let lift = Mat::from_fn(order, big, free.len(), |row, k| {
        if row == free[k] {
            CycNumber::one(order)
        } else {
            CycNumber::zero(order)
        }
    });
    let descend = |op: &Mat| -> Result<Mat, YdError> {
        if !rel.is_invariant(op) {
            return Err(YdError::QuotientIllFormed);
        }
        Ok(quotient.mul(op).mul(&lift))
    };
    let id_u = Mat::identity(order, ud);
    let id_w = Mat::identity(order, s);
    let h = q.hopf();
    let action = (0..d)
        .map(|i| descend(&id_u.kron(&h.algebra().left_matrix(&h.basis_vector(i)).kron(&id_w))))
        .collect::<Result<Vec<_>, _>>()?;
    let coaction_r = tensor_h_w_slices(q, &nw.coideal)
        .iter()
        .map(|sl| descend(&id_u.kron(sl)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(YDModule::from_coaction_r(q, action, coaction_r))
}
