use rayon::prelude::*;
use serde::Serialize;

use crate::algengine::{decompose_module, find_isomorphism, AlgModule, Side};
use crate::braided::{CheckOutcome, IdentityCheck, QTHopf};
use crate::exactfield::CycNumber;
use crate::hopfcore::{coalgebra_grouplikes, grouplikes};
use crate::linalg::Mat;

use super::{
    adjoint_closure, build_nw, check_h_simple, cotensor, decompose_h, induce, nww_dim, simple_coideals,
    verify_yd, yd_hom_space, AdjStableCoalgebra, Coideal, NwAlgebra, YDModule, YdError,
};

/// An induced irreducible U⊗_{N_W}(H⊗W) and the dimension of U.
#[derive(Clone, Debug)]
pub struct InducedModule {
    pub u_dim: usize,
    pub module: YDModule,
}

#[derive(Clone, Debug)]
pub struct BlockClassification {
    pub block: AdjStableCoalgebra,
    pub coideal: Coideal,
    pub nw: NwAlgebra,
    pub h_simple: bool,
    pub modules: Vec<InducedModule>,
}

impl BlockClassification {
    pub fn dims(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.module.dim()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    /// Cyclotomic order of the field the classification was carried out over.
    pub order: u32,
    pub dim_h: usize,
    pub blocks: Vec<BlockClassification>,
}

impl Classification {
    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.modules.len()).sum()
    }

    pub fn sum_dim_sq(&self) -> usize {
        self.modules().map(|(_, m)| m.module.dim().pow(2)).sum()
    }

    /// (block dim, module dim) over all modules.
    pub fn dims(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.modules().map(|(b, m)| (b.block.dim(), m.module.dim())).collect();
        out.sort_unstable();
        out
    }

    pub fn modules(&self) -> impl Iterator<Item = (&BlockClassification, &InducedModule)> {
        self.blocks.iter().flat_map(|b| b.modules.iter().map(move |m| (b, m)))
    }
}

fn block_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn check_failed(what: impl Into<String>) -> YdError {
    YdError::CheckFailed(what.into())
}

/// Classifies the irreducibles whose ρ_R lands in `block`, through the simple coideal at
/// `coideal_index` of [`simple_coideals`].
pub fn classify_block(
    q: &QTHopf,
    block: &AdjStableCoalgebra,
    coideal_index: usize,
    seed: u64,
    max_den: u64,
) -> Result<BlockClassification, YdError> {
    let coideals = simple_coideals(q, block, seed, max_den)?;
    let coideal = coideals
        .get(coideal_index)
        .cloned()
        .ok_or_else(|| check_failed(format!("block has {} simple coideals", coideals.len())))?;
    if adjoint_closure(q, &coideal) != *block {
        return Err(YdError::BlockMismatch);
    }
    let nw = build_nw(q, block, &coideal)?;
    let h_simple = check_h_simple(&nw);
    let regular = nw.algebra().regular_module(Side::Right);
    let components = decompose_module(&regular, seed, max_den)?;
    let mut modules: Vec<InducedModule> = Vec::new();
    let mut seen = Vec::new();
    for c in components {
        if seen.contains(&c.iso_class) {
            continue;
        }
        seen.push(c.iso_class);
        let u = regular.restrict(&c.subspace);
        let module = induce(q, &nw, &u)?;
        if let Some(bad) = verify_yd(q, &module).iter().find(|c| c.outcome.is_fail()) {
            return Err(check_failed(format!("induced module fails {}", bad.name)));
        }
        if !module.is_irreducible() {
            return Err(check_failed("induced module is reducible"));
        }
        if !block.subspace().contains(&module.coaction_support()).unwrap_or(false) {
            return Err(YdError::BlockMismatch);
        }
        modules.push(InducedModule { u_dim: u.dim(), module });
    }
    for (i, a) in modules.iter().enumerate() {
        for b in &modules[i + 1..] {
            if !yd_hom_space(&a.module, &b.module).is_zero() {
                return Err(check_failed("two induced modules are isomorphic"));
            }
        }
    }
    modules.sort_by_key(|m| m.module.dim());
    Ok(BlockClassification {
        block: block.clone(),
        coideal,
        nw,
        h_simple,
        modules,
    })
}

/// Runs [`classify_block`] on every minimal adjoint-stable subcoalgebra, blocks in parallel.
pub fn classify_all(q: &QTHopf, seed: u64, max_den: u64) -> Result<Classification, YdError> {
    let blocks = decompose_h(q, seed, max_den)?;
    let total: usize = blocks.iter().map(AdjStableCoalgebra::dim).sum();
    if total != q.dim() {
        return Err(YdError::DimensionMismatch { expected: q.dim(), got: total });
    }
    let blocks = blocks
        .par_iter()
        .enumerate()
        .map(|(i, b)| classify_block(q, b, 0, block_seed(seed, i), max_den))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Classification {
        order: q.order(),
        dim_h: q.dim(),
        blocks,
    })
}

/// [`classify_all`] over ℚ(ζ_m) for the first m in order, 2·order, 4·order, … (up to
/// `max_order`) where every block splits. Returns the pair lifted to that field.
pub fn classify_splitting(
    q: &QTHopf,
    seed: u64,
    max_den: u64,
    max_order: u32,
) -> Result<(QTHopf, Classification), YdError> {
    let mut current = q.clone();
    loop {
        match classify_all(&current, seed, max_den) {
            Err(e) if e.is_field_not_splitting() && current.order() * 2 <= max_order => {
                current = current
                    .lift(current.order() * 2)
                    .map_err(|e| check_failed(e.to_string()))?;
            }
            Err(e) => return Err(e),
            Ok(c) => return Ok((current, c)),
        }
    }
}

/// (dim U·dim W) | dim N_W and dim V | dim H for every produced module.
pub fn check_divisibility(c: &Classification) -> Vec<IdentityCheck> {
    c.blocks
        .iter()
        .enumerate()
        .flat_map(|(bi, b)| {
            b.modules.iter().enumerate().map(move |(mi, m)| {
                let w = b.coideal.dim();
                let ok = b.nw.dim() % (m.u_dim * w) == 0 && c.dim_h.is_multiple_of(m.module.dim());
                IdentityCheck {
                    name: format!("divisibility[{bi}.{mi}]"),
                    outcome: if ok {
                        CheckOutcome::Pass
                    } else {
                        CheckOutcome::Fail { witness: vec![bi, mi] }
                    },
                }
            })
        })
        .collect()
}

/// One instance of dim N_{WW′}·dim D = dim H·dim W·dim W′.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionRecord {
    pub block: usize,
    pub block_dim: usize,
    pub w_dim: usize,
    pub w2_dim: usize,
    pub nww_dim: usize,
    pub holds: bool,
}

/// The dimension identity over all ordered pairs of simple coideals in every block.
pub fn dimension_identity(
    q: &QTHopf,
    blocks: &[AdjStableCoalgebra],
    seed: u64,
    max_den: u64,
) -> Result<Vec<DimensionRecord>, YdError> {
    let mut out = Vec::new();
    for (bi, block) in blocks.iter().enumerate() {
        let coideals = simple_coideals(q, block, block_seed(seed, bi), max_den)?;
        for w in &coideals {
            for w2 in &coideals {
                let n = nww_dim(q, block, w, w2)?;
                out.push(DimensionRecord {
                    block: bi,
                    block_dim: block.dim(),
                    w_dim: w.dim(),
                    w2_dim: w2.dim(),
                    nww_dim: n,
                    holds: n * block.dim() == q.dim() * w.dim() * w2.dim(),
                });
            }
        }
    }
    Ok(out)
}

/// W*□_D V as a right N_W-module: (Σ w*_j⊗x_j)·n = Σ_j w*_j ⊗ Σ n_{jgl} g·x_l.
pub fn cotensor_module(q: &QTHopf, block: &AdjStableCoalgebra, nw: &NwAlgebra, v: &YDModule) -> Result<AlgModule, YdError> {
    let (order, d, s, n) = (q.order(), q.dim(), nw.coideal().dim(), v.dim());
    let carrier = cotensor(q, block, nw.coideal(), v.coaction_r())?;
    let actions = nw
        .carrier()
        .vectors()
        .iter()
        .map(|x| {
            let mut m = Mat::zeros(order, s * n, s * n);
            for (k, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let (j, g, l) = (k / (d * s), (k / s) % d, k % s);
                let act = v.action()[g].scale(c);
                for r in 0..n {
                    for col in 0..n {
                        let e = act.get(r, col);
                        if !e.is_zero() {
                            m.add_to(j * n + r, l * n + col, e);
                        }
                    }
                }
            }
            if carrier.is_invariant(&m) {
                Ok(carrier.restrict(&m))
            } else {
                Err(YdError::NotClosed)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let expected = v.dim() * s;
    if carrier.dim() * block.dim() != expected {
        return Err(YdError::DimensionMismatch {
            expected,
            got: carrier.dim() * block.dim(),
        });
    }
    Ok(AlgModule::new(nw.algebra().clone(), Side::Right, actions))
}

/// Induces back from W*□_D V and returns an explicit YD isomorphism with V.
pub fn round_trip(q: &QTHopf, b: &BlockClassification, v: &YDModule, seed: u64) -> Result<Mat, YdError> {
    let u = cotensor_module(q, &b.block, &b.nw, v)?;
    let back = induce(q, &b.nw, &u)?;
    find_isomorphism(&yd_hom_space(v, &back), v.dim(), seed).ok_or_else(|| check_failed("round trip is not isomorphic"))
}

/// A one-dimensional YD module from a central grouplike and a character.
#[derive(Clone, Debug)]
pub struct OneDimYd {
    pub grouplike: Vec<CycNumber>,
    pub character: Vec<CycNumber>,
    pub module: YDModule,
}

/// ZG(H) × {characters of H}, each realized with h·v = χ(h)v and ρ_R(v) = g⊗v.
pub fn one_dim_yd(q: &QTHopf, seed: u64, max_den: u64) -> Result<Vec<OneDimYd>, YdError> {
    let h = q.hopf();
    let order = q.order();
    let central: Vec<_> = grouplikes(h, seed, max_den)?
        .into_iter()
        .filter(|g| g.central)
        .map(|g| g.element)
        .collect();
    let characters: Vec<_> = grouplikes(&h.dual(), seed, max_den)?
        .into_iter()
        .map(|g| g.element)
        .collect();
    let scalar = |c: &CycNumber| Mat::from_fn(order, 1, 1, |_, _| c.clone());
    let mut out = Vec::new();
    for g in &central {
        for chi in &characters {
            let module = YDModule::from_coaction_r(q, chi.iter().map(scalar).collect(), g.iter().map(scalar).collect());
            if let Some(bad) = verify_yd(q, &module).iter().find(|c| c.outcome.is_fail()) {
                return Err(check_failed(format!("one-dimensional module fails {}", bad.name)));
            }
            out.push(OneDimYd {
                grouplike: g.clone(),
                character: chi.clone(),
                module,
            });
        }
    }
    Ok(out)
}

/// G(H_R): grouplikes for Δ_R.
pub fn transmuted_grouplikes(q: &QTHopf, seed: u64, max_den: u64) -> Result<Vec<Vec<CycNumber>>, YdError> {
    let comult: Vec<_> = (0..q.dim())
        .map(|i| {
            q.delta_r_basis(i)
                .nonzeros()
                .map(|(idx, c)| (idx[0], idx[1], c.clone()))
                .collect()
        })
        .collect();
    Ok(coalgebra_grouplikes(q.order(), &comult, q.hopf().counit(), seed, max_den)?)
}
