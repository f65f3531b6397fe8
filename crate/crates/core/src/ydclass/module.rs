use crate::algengine::intertwiners;
use crate::braided::{CheckOutcome, IdentityCheck, QTHopf};
use crate::exactfield::CycNumber;
use crate::linalg::{Mat, Subspace};

/// A Yetter-Drinfeld module in coordinates. `action[i]` is the matrix of b_i, and
/// `coaction[a]` is the slice with ρ(v) = Σ_a b_a ⊗ coaction[a]·v; `coaction_r` is the
/// same for the H_R-coaction ρ_R.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModule {
    order: u32,
    dim: usize,
    action: Vec<Mat>,
    coaction: Vec<Mat>,
    coaction_r: Vec<Mat>,
}

/// Σ_p coeffs[p]·mats, skipping zero coefficients.
fn accumulate(out: &mut [Mat], coeffs: &[CycNumber], scale: &CycNumber, m: &Mat) {
    for (p, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        out[p] = out[p].add(&m.scale(&(scale * c)));
    }
}

fn zero_slices(order: u32, count: usize, n: usize) -> Vec<Mat> {
    vec![Mat::zeros(order, n, n); count]
}

/// ρ_R(v) = Σ v₋₁(SR²) ⊗ R¹v₀.
pub(crate) fn rho_to_rho_r(q: &QTHopf, action: &[Mat], coaction: &[Mat]) -> Vec<Mat> {
    let h = q.hopf();
    let n = action.first().map_or(0, Mat::rows);
    let mut out = zero_slices(q.order(), q.dim(), n);
    for (idx, rc) in q.r_matrix().nonzeros() {
        let s_r2 = h.antipode().col(idx[1]);
        for (a, m) in coaction.iter().enumerate().filter(|(_, m)| !m.is_zero()) {
            let coeffs = h.mul(&h.basis_vector(a), &s_r2);
            accumulate(&mut out, &coeffs, rc, &action[idx[0]].mul(m));
        }
    }
    out
}

/// ρ(v) = Σ v^⟨−1⟩R² ⊗ R¹v^⟨0⟩.
pub(crate) fn rho_r_to_rho(q: &QTHopf, action: &[Mat], coaction_r: &[Mat]) -> Vec<Mat> {
    let h = q.hopf();
    let n = action.first().map_or(0, Mat::rows);
    let mut out = zero_slices(q.order(), q.dim(), n);
    for (idx, rc) in q.r_matrix().nonzeros() {
        for (a, m) in coaction_r.iter().enumerate().filter(|(_, m)| !m.is_zero()) {
            let coeffs = h.mul(&h.basis_vector(a), &h.basis_vector(idx[1]));
            accumulate(&mut out, &coeffs, rc, &action[idx[0]].mul(m));
        }
    }
    out
}

impl YDModule {
    /// From the H-action and the plain coaction ρ.
    pub fn from_coaction(q: &QTHopf, action: Vec<Mat>, coaction: Vec<Mat>) -> Self {
        let coaction_r = rho_to_rho_r(q, &action, &coaction);
        Self::assemble(q, action, coaction, coaction_r)
    }

    /// From the H-action and the H_R-coaction ρ_R.
    pub fn from_coaction_r(q: &QTHopf, action: Vec<Mat>, coaction_r: Vec<Mat>) -> Self {
        let coaction = rho_r_to_rho(q, &action, &coaction_r);
        Self::assemble(q, action, coaction, coaction_r)
    }

    fn assemble(q: &QTHopf, action: Vec<Mat>, coaction: Vec<Mat>, coaction_r: Vec<Mat>) -> Self {
        assert_eq!(action.len(), q.dim());
        assert_eq!(coaction.len(), q.dim());
        YDModule {
            order: q.order(),
            dim: action.first().map_or(0, Mat::rows),
            action,
            coaction,
            coaction_r,
        }
    }

    /// (H, ·_ad, Δ).
    pub fn regular(q: &QTHopf) -> Self {
        let h = q.hopf();
        let d = h.dim();
        let mut coaction = zero_slices(h.order(), d, d);
        for (k, terms) in h.comult_table().iter().enumerate() {
            for (j, l, c) in terms {
                coaction[*j].add_to(*l, k, c);
            }
        }
        Self::from_coaction(q, q.adjoint_matrices().to_vec(), coaction)
    }

    /// k with h·1 = ε(h) and ρ(1) = 1⊗1.
    pub fn trivial(q: &QTHopf) -> Self {
        let h = q.hopf();
        let scalar = |c: &CycNumber| Mat::from_fn(h.order(), 1, 1, |_, _| c.clone());
        let action = h.counit().iter().map(scalar).collect();
        let coaction = h.unit().iter().map(scalar).collect();
        Self::from_coaction(q, action, coaction)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    pub fn coaction(&self) -> &[Mat] {
        &self.coaction
    }

    pub fn coaction_r(&self) -> &[Mat] {
        &self.coaction_r
    }

    /// The action matrices followed by the coaction slices; YD submodules are exactly the
    /// subspaces stable under all of them.
    pub fn operators(&self) -> Vec<Mat> {
        self.action.iter().chain(&self.coaction).cloned().collect()
    }

    pub fn is_irreducible(&self) -> bool {
        crate::algengine::is_irreducible(self.order, self.dim, &self.operators())
    }

    /// The submodule on an invariant subspace, in the coordinates of its canonical basis.
    pub fn restrict(&self, sub: &Subspace) -> YDModule {
        let r = |ms: &[Mat]| ms.iter().map(|m| sub.restrict(m)).collect();
        YDModule {
            order: self.order,
            dim: sub.dim(),
            action: r(&self.action),
            coaction: r(&self.coaction),
            coaction_r: r(&self.coaction_r),
        }
    }

    /// The H-leg support of ρ_R: span of all vectors (coaction_r[a][l][k])_a.
    pub fn coaction_support(&self) -> Subspace {
        let d = self.coaction_r.len();
        let vectors = (0..self.dim)
            .flat_map(|l| (0..self.dim).map(move |k| (l, k)))
            .map(|(l, k)| (0..d).map(|a| self.coaction_r[a].get(l, k).clone()).collect())
            .collect();
        Subspace::span(self.order, d, vectors)
    }
}

/// Hom in the Yetter-Drinfeld category, as flattened (dim b × dim a) matrices.
pub fn yd_hom_space(a: &YDModule, b: &YDModule) -> Subspace {
    intertwiners(a.order, a.dim, b.dim, &a.operators(), &b.operators())
}

fn outcome(witness: Option<Vec<usize>>) -> CheckOutcome {
    match witness {
        Some(witness) => CheckOutcome::Fail { witness },
        None => CheckOutcome::Pass,
    }
}

fn comodule_witness(q: &QTHopf, slices: &[Mat], coproduct: impl Fn(usize) -> Vec<(usize, usize, CycNumber)>) -> Option<Vec<usize>> {
    let d = q.dim();
    let n = slices.first().map_or(0, Mat::rows);
    let mut lhs = vec![Mat::zeros(q.order(), n, n); d * d];
    for (c, m) in slices.iter().enumerate() {
        for (p, r, coef) in coproduct(c) {
            lhs[p * d + r] = lhs[p * d + r].add(&m.scale(&coef));
        }
    }
    (0..d * d)
        .find(|&pr| lhs[pr] != slices[pr % d].mul(&slices[pr / d]))
        .map(|pr| vec![pr / d, pr % d])
}

fn counit_witness(q: &QTHopf, slices: &[Mat]) -> Option<Vec<usize>> {
    let n = slices.first().map_or(0, Mat::rows);
    let mut total = Mat::zeros(q.order(), n, n);
    for (m, e) in slices.iter().zip(q.hopf().counit()) {
        total = total.add(&m.scale(e));
    }
    (total != Mat::identity(q.order(), n)).then(Vec::new)
}

/// Module and comodule axioms, the compatibility condition, the ρ ↔ ρ_R round trip and
/// the equivalent compatibility for ρ_R.
pub fn verify_yd(q: &QTHopf, v: &YDModule) -> Vec<IdentityCheck> {
    let h = q.hopf();
    let (order, d, n) = (q.order(), q.dim(), v.dim);
    let mut checks = Vec::new();
    let mut push = |name: &str, witness| {
        checks.push(IdentityCheck {
            name: name.to_string(),
            outcome: outcome(witness),
        })
    };

    let act = |x: &[CycNumber]| {
        let mut m = Mat::zeros(order, n, n);
        for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            m = m.add(&v.action[i].scale(c));
        }
        m
    };
    let module = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .find(|&(i, j)| act(&h.mul(&h.basis_vector(i), &h.basis_vector(j))) != v.action[i].mul(&v.action[j]))
        .map(|(i, j)| vec![i, j])
        .or_else(|| (act(h.unit()) != Mat::identity(order, n)).then(Vec::new));
    push("module", module);

    let plain = |c: usize| h.comult_table()[c].clone();
    let comodule = comodule_witness(q, &v.coaction, plain).or_else(|| counit_witness(q, &v.coaction));
    push("comodule", comodule);

    // ρ(hv) = Σ h₁v₋₁S(h₃) ⊗ h₂v₀
    let compat = (0..d)
        .find(|&i| {
            let delta2 = h.delta_leg(&h.comult_basis(i), 0);
            let mut rhs = zero_slices(order, d, n);
            for (idx, c) in delta2.nonzeros() {
                let left = h.basis_vector(idx[0]);
                let right = h.antipode().col(idx[2]);
                for (a, m) in v.coaction.iter().enumerate().filter(|(_, m)| !m.is_zero()) {
                    let coeffs = h.mul(&h.mul(&left, &h.basis_vector(a)), &right);
                    accumulate(&mut rhs, &coeffs, c, &v.action[idx[1]].mul(m));
                }
            }
            (0..d).any(|p| v.coaction[p].mul(&v.action[i]) != rhs[p])
        })
        .map(|i| vec![i]);
    push("yd_compat", compat);

    let back = rho_r_to_rho(q, &v.action, &v.coaction_r);
    let round_trip = (0..d)
        .find(|&p| back[p] != v.coaction[p])
        .map(|p| vec![p]);
    push("rho_round_trip", round_trip);

    let transmuted = |c: usize| {
        q.delta_r_basis(c)
            .nonzeros()
            .map(|(idx, x)| (idx[0], idx[1], x.clone()))
            .collect()
    };
    let comodule_r = comodule_witness(q, &v.coaction_r, transmuted).or_else(|| counit_witness(q, &v.coaction_r));
    push("rho_r_comodule", comodule_r);

    // ρ_R(hv) = Σ h₁·_ad v^⟨−1⟩ ⊗ h₂v^⟨0⟩
    let eqb = (0..d)
        .find(|&i| {
            let mut rhs = zero_slices(order, d, n);
            for (j, k, c) in &h.comult_table()[i] {
                for (a, m) in v.coaction_r.iter().enumerate().filter(|(_, m)| !m.is_zero()) {
                    let coeffs = q.adjoint_matrices()[*j].col(a);
                    accumulate(&mut rhs, &coeffs, c, &v.action[*k].mul(m));
                }
            }
            (0..d).any(|p| v.coaction_r[p].mul(&v.action[i]) != rhs[p])
        })
        .map(|i| vec![i]);
    push("eqb", eqb);
    checks
}
