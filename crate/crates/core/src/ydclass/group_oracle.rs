use serde::Serialize;

use crate::algengine::{decompose_module, find_isomorphism, FinAlgebra, Side};
use crate::braided::QTHopf;
use crate::catalog::GroupTable;
use crate::linalg::Mat;

use super::{yd_hom_space, Classification, YDModule, YdError};

/// M(g, U) = kG⊗_{kC(g)}U for a class representative g and an irreducible kC(g)-module U.
#[derive(Clone, Debug)]
pub struct OracleModule {
    pub representative: usize,
    pub class_size: usize,
    pub u_dim: usize,
    pub module: YDModule,
}

/// Every M(g, U), with g running over class representatives of `table`. `q` must be kG on
/// the basis of `table` with the trivial R-matrix.
pub fn centralizer_modules(q: &QTHopf, table: &GroupTable, seed: u64, max_den: u64) -> Result<Vec<OracleModule>, YdError> {
    let order = q.order();
    let n = table.len();
    if q.dim() != n {
        return Err(YdError::DimensionMismatch { expected: n, got: q.dim() });
    }
    let mut out = Vec::new();
    for class in table.conjugacy_classes() {
        let g = class[0];
        let cent = table.centralizer(g);
        let local = |x: usize| cent.iter().position(|&c| c == x);
        let rows: Vec<Vec<usize>> = cent
            .iter()
            .map(|&a| cent.iter().map(|&b| local(table.mul(a, b)).expect("centralizer is closed")).collect())
            .collect();
        let kc = std::sync::Arc::new(FinAlgebra::group_algebra(order, &rows));
        let regular = kc.regular_module(Side::Left);

        let mut reps: Vec<usize> = Vec::new();
        for t in 0..n {
            let covered = reps
                .iter()
                .any(|&r| local(table.mul(table.inverse(r), t)).is_some());
            if !covered {
                reps.push(t);
            }
        }
        // x·t_k = t_{k'}·c with c ∈ C(g)
        let coset_of = |x: usize, k: usize| {
            let y = table.mul(x, reps[k]);
            reps.iter()
                .enumerate()
                .find_map(|(k2, &t)| local(table.mul(table.inverse(t), y)).map(|c| (k2, c)))
                .expect("cosets cover G")
        };

        let mut seen = Vec::new();
        for comp in decompose_module(&regular, seed, max_den)? {
            if seen.contains(&comp.iso_class) {
                continue;
            }
            seen.push(comp.iso_class);
            let u = regular.restrict(&comp.subspace);
            let ud = u.dim();
            let dim = reps.len() * ud;
            let action = (0..n)
                .map(|x| {
                    let mut m = Mat::zeros(order, dim, dim);
                    for k in 0..reps.len() {
                        let (k2, c) = coset_of(x, k);
                        let uc = &u.actions()[c];
                        for i in 0..ud {
                            for j in 0..ud {
                                m.set(k2 * ud + i, k * ud + j, uc.get(i, j).clone());
                            }
                        }
                    }
                    m
                })
                .collect();
            let mut coaction = vec![Mat::zeros(order, dim, dim); n];
            for (k, &t) in reps.iter().enumerate() {
                let a = table.mul(table.mul(t, g), table.inverse(t));
                for i in 0..ud {
                    coaction[a].set(k * ud + i, k * ud + i, crate::exactfield::CycNumber::one(order));
                }
            }
            out.push(OracleModule {
                representative: g,
                class_size: class.len(),
                u_dim: ud,
                module: YDModule::from_coaction(q, action, coaction),
            });
        }
    }
    Ok(out)
}

/// Pipeline output against the centralizer construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupCrosscheck {
    /// Sorted (block dim, module dim) pairs from the pipeline.
    pub pipeline: Vec<(usize, usize)>,
    /// Sorted (class size, module dim) pairs from the oracle.
    pub oracle: Vec<(usize, usize)>,
    pub matched: usize,
    pub total: usize,
}

impl GroupCrosscheck {
    pub fn passed(&self) -> bool {
        self.pipeline == self.oracle && self.matched == self.total && self.total == self.pipeline.len()
    }
}

impl std::fmt::Display for GroupCrosscheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{} matched", self.matched, self.total)
    }
}

/// Pairs every oracle module with a YD-isomorphic pipeline module of the same block size.
pub fn crosscheck_group(
    classification: &Classification,
    oracle: &[OracleModule],
    seed: u64,
) -> GroupCrosscheck {
    let mut oracle_dims: Vec<_> = oracle.iter().map(|m| (m.class_size, m.module.dim())).collect();
    oracle_dims.sort_unstable();
    let candidates: Vec<(usize, &YDModule)> = classification
        .modules()
        .map(|(b, m)| (b.block.dim(), &m.module))
        .collect();
    let mut used = vec![false; candidates.len()];
    let mut matched = 0;
    for o in oracle {
        let hit = candidates.iter().enumerate().position(|(k, (size, v))| {
            !used[k]
                && *size == o.class_size
                && v.dim() == o.module.dim()
                && find_isomorphism(&yd_hom_space(&o.module, v), v.dim(), seed).is_some()
        });
        if let Some(k) = hit {
            used[k] = true;
            matched += 1;
        }
    }
    GroupCrosscheck {
        pipeline: classification.dims(),
        oracle: oracle_dims,
        matched,
        total: oracle.len(),
    }
}
