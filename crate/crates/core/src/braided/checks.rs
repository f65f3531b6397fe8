use serde::Serialize;

use crate::exactfield::CycNumber;
use crate::hopfcore::{integrals, verify_hopf, HopfError, Tensor};
use crate::linalg::{unit_vector, Mat};

use super::{compare, r_axiom_witnesses, QTHopf};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail { witness: Vec<usize> },
    Skipped { reason: String },
}

impl CheckOutcome {
    fn from_witness(witness: Option<Vec<usize>>) -> Self {
        match witness {
            Some(witness) => CheckOutcome::Fail { witness },
            None => CheckOutcome::Pass,
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub outcome: CheckOutcome,
}

impl IdentityCheck {
    fn new(name: &str, outcome: CheckOutcome) -> Self {
        IdentityCheck {
            name: name.to_string(),
            outcome,
        }
    }
}

fn skipped(reason: &str) -> CheckOutcome {
    CheckOutcome::Skipped {
        reason: format!("skipped: hypothesis unmet ({reason})"),
    }
}

/// First coordinate where Σt¹⊗t² and Σt²⊗t¹ differ.
pub fn cocommutativity_witness(t: &Tensor) -> Option<Vec<usize>> {
    compare(t, &t.permute(&[1, 0]))
}

/// ᾶ = Σα(R¹)R².
pub fn alpha_tilde(q: &QTHopf, alpha: &[CycNumber]) -> Vec<CycNumber> {
    let mut out = q.hopf.zero_vector();
    for (idx, c) in q.r.nonzeros() {
        out[idx[1]] += &(c * &alpha[idx[0]]);
    }
    out
}

/// Δ_R(Λ) = flip Δ_R(Λ) for the normalized left integral.
pub fn check_integral_cocommutative(q: &QTHopf) -> CheckOutcome {
    let h = &q.hopf;
    let report = verify_hopf(h);
    if !report.unimodular {
        return skipped("H is not unimodular");
    }
    if !report.s_squared_identity {
        return skipped("S² ≠ id");
    }
    match integrals(h) {
        Ok(data) => CheckOutcome::from_witness(cocommutativity_witness(&q.delta_r(&data.left_integral))),
        Err(_) => skipped("no normalized left integral"),
    }
}

/// e_R = Σ R²⇀λ₁ ⊗ S*λ₂↼↼R¹ as a matrix: entry (a, b) is the coefficient of δ_a⊗δ_b.
pub fn separable_idempotent(q: &QTHopf, lambda: &[CycNumber]) -> Mat {
    let h = &q.hopf;
    let (order, d) = (h.order(), h.dim());
    // Δ(λ) in H*: λ(b_a b_b)
    let lambda_coproduct: Vec<(usize, usize, CycNumber)> = (0..d)
        .flat_map(|a| (0..d).map(move |b| (a, b)))
        .filter_map(|(a, b)| {
            let v = crate::linalg::dot(order, lambda, &h.mul(&h.basis_vector(a), &h.basis_vector(b)));
            (!v.is_zero()).then_some((a, b, v))
        })
        .collect();
    let s_star = h.antipode().transpose();
    let mut e = Mat::zeros(order, d, d);
    for (idx, rc) in q.r.nonzeros() {
        let r1 = h.basis_vector(idx[0]);
        let r2 = h.basis_vector(idx[1]);
        for (a, b, v) in &lambda_coproduct {
            let left = h.covector_hit_left(&r2, &unit_vector(order, d, *a));
            let right = q.coadjoint(&s_star.mul_vec(&unit_vector(order, d, *b)), &r1);
            let coeff = rc * v;
            for (x, lx) in left.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let cx = &coeff * lx;
                for (y, ry) in right.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    e.add_to(x, y, &(&cx * ry));
                }
            }
        }
    }
    e
}

/// Both parts of the separable-idempotent property of e_R, as (part 1, part 2).
pub fn check_separable_idempotent(q: &QTHopf) -> (CheckOutcome, CheckOutcome) {
    let h = &q.hopf;
    let report = verify_hopf(h);
    if !report.unimodular {
        return (skipped("H is not unimodular"), skipped("H is not unimodular"));
    }
    let data = match integrals(h) {
        Ok(data) => data,
        Err(HopfError::NonCosemisimple) => {
            return (skipped("H is not cosemisimple"), skipped("H is not cosemisimple"))
        }
        Err(_) => return (skipped("no integral"), skipped("no integral")),
    };
    let (order, d) = (h.order(), h.dim());
    let e = separable_idempotent(q, &data.dual_integral);

    // Σ E[a][b] (δ_a *_R δ_b) = ε
    let part1 = (0..d)
        .find(|&i| {
            let t = q.delta_r_basis(i);
            let total = t
                .nonzeros()
                .fold(CycNumber::zero(order), |acc, (idx, c)| &acc + &(c * e.get(idx[0], idx[1])));
            total != h.counit()[i]
        })
        .map(|i| vec![i]);

    // (f⊗ε) *_R e_R = e_R *_R (ε⊗f)
    let part2 = (0..d)
        .find(|&f| {
            let fv = unit_vector(order, d, f);
            let left_cols: Vec<_> = (0..d).map(|g| q.convolution_r(&fv, &unit_vector(order, d, g))).collect();
            let right_cols: Vec<_> = (0..d).map(|g| q.convolution_r(&unit_vector(order, d, g), &fv)).collect();
            let left = Mat::from_cols(order, d, &left_cols);
            let right = Mat::from_cols(order, d, &right_cols);
            left.mul(&e) != e.mul(&right.transpose())
        })
        .map(|f| vec![f]);
    (CheckOutcome::from_witness(part1), CheckOutcome::from_witness(part2))
}

/// Every identity of the quasi-triangular and transmuted layers, evaluated on basis sweeps.
pub fn identity_suite(q: &QTHopf) -> Vec<IdentityCheck> {
    let h = &q.hopf;
    let (order, d) = (h.order(), h.dim());
    let mut out: Vec<IdentityCheck> = r_axiom_witnesses(h, &q.r, &q.r_inv)
        .into_iter()
        .map(|(axiom, w)| IdentityCheck::new(&axiom.to_string(), CheckOutcome::from_witness(w)))
        .collect();

    let s_id = compare(&h.s_leg(&q.r, 0), &q.r_inv);
    out.push(IdentityCheck::new("s_id_r_inverse", CheckOutcome::from_witness(s_id)));

    let s = h.antipode();
    let s2 = s.mul(s);
    let drinfeld = (0..d)
        .find(|&i| {
            let b = h.basis_vector(i);
            h.mul(&h.mul(&q.drinfeld, &b), &q.drinfeld_inv) != s2.mul_vec(&b)
        })
        .map(|i| vec![i]);
    out.push(IdentityCheck::new("drinfeld", CheckOutcome::from_witness(drinfeld)));
    out.push(IdentityCheck::new(
        "delta_r_coassoc",
        CheckOutcome::from_witness(q.delta_r_coassoc_witness()),
    ));
    out.push(IdentityCheck::new(
        "delta_r_counit",
        CheckOutcome::from_witness(q.delta_r_counit_witness()),
    ));

    // Δ_R(h·_ad a) = Σ h₁·_ad a^(1) ⊗ h₂·_ad a^(2)
    let eqc = first_pair(d, |i, a| {
        let lhs = q.delta_r(&q.adjoint[i].col(a));
        let mut rhs = Tensor::zeros(order, d, 2);
        for (j, k, c) in &h.comult_table()[i] {
            let moved = h.linear_leg(&h.linear_leg(q.delta_r_basis(a), 0, &q.adjoint[*j]), 1, &q.adjoint[*k]);
            rhs = rhs.add(&moved.scale(c));
        }
        lhs != rhs
    });
    out.push(IdentityCheck::new("eqc", CheckOutcome::from_witness(eqc)));

    // Δ_R(h) = Σ R²·_ad h₂ ⊗ R¹h₁
    let flip = (0..d)
        .find(|&i| {
            let mut t = Tensor::zeros(order, d, 2);
            for (j, k, c) in &h.comult_table()[i] {
                for (idx, rc) in q.r.nonzeros() {
                    let left = q.adjoint[idx[1]].col(*k);
                    let right = h.mul(&h.basis_vector(idx[0]), &h.basis_vector(*j));
                    t = t.add(&Tensor::pure(order, d, &[&left, &right]).scale(&(c * rc)));
                }
            }
            &t != q.delta_r_basis(i)
        })
        .map(|i| vec![i]);
    out.push(IdentityCheck::new("delta_r_flip_path", CheckOutcome::from_witness(flip)));

    // Σ S_R(h^(1))h^(2) = ε(h)1 = Σ h^(1)S_R(h^(2))
    let antipode = (0..d)
        .find(|&i| {
            let t = q.delta_r_basis(i);
            let expected: Vec<_> = h.unit().iter().map(|u| u * &h.counit()[i]).collect();
            h.multiply_legs(&h.linear_leg(t, 0, &q.s_r)) != expected
                || h.multiply_legs(&h.linear_leg(t, 1, &q.s_r)) != expected
        })
        .map(|i| vec![i]);
    out.push(IdentityCheck::new("s_r_antipode", CheckOutcome::from_witness(antipode)));

    // f *_R g = Σ (SR²⇀f) * (g↼↼R¹)
    let cross = first_pair(d, |f, g| {
        let (fv, gv) = (unit_vector(order, d, f), unit_vector(order, d, g));
        let mut alt = h.zero_vector();
        for (idx, rc) in q.r.nonzeros() {
            let sr2 = h.s(&h.basis_vector(idx[1]));
            let term = h.convolve(
                &h.covector_hit_left(&sr2, &fv),
                &q.coadjoint(&gv, &h.basis_vector(idx[0])),
            );
            for (a, t) in alt.iter_mut().zip(&term) {
                *a += &(rc * t);
            }
        }
        alt != q.convolution_r(&fv, &gv)
    });
    out.push(IdentityCheck::new("star_r_cross_check", CheckOutcome::from_witness(cross)));

    // (f *_R g)↼↼h = Σ (f↼↼h₁) *_R (g↼↼h₂)
    let mut star_property = None;
    'outer: for x in 0..d {
        for f in 0..d {
            for g in 0..d {
                let (fv, gv) = (unit_vector(order, d, f), unit_vector(order, d, g));
                let lhs = q.adjoint[x].vec_mul(&q.convolution_r(&fv, &gv));
                let mut rhs = h.zero_vector();
                for (j, k, c) in &h.comult_table()[x] {
                    let term = q.convolution_r(&q.adjoint[*j].vec_mul(&fv), &q.adjoint[*k].vec_mul(&gv));
                    for (r, t) in rhs.iter_mut().zip(&term) {
                        *r += &(c * t);
                    }
                }
                if lhs != rhs {
                    star_property = Some(vec![f, g, x]);
                    break 'outer;
                }
            }
        }
    }
    out.push(IdentityCheck::new("star_r_property", CheckOutcome::from_witness(star_property)));

    let (part1, part2) = check_separable_idempotent(q);
    out.push(IdentityCheck::new("e_r_part1", part1));
    out.push(IdentityCheck::new("e_r_part2", part2));
    out.push(IdentityCheck::new("integral_cocommutative", check_integral_cocommutative(q)));
    out
}

fn first_pair(d: usize, fails: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .find(|&(i, j)| fails(i, j))
        .map(|(i, j)| vec![i, j])
}
