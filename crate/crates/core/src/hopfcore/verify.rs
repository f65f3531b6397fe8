use std::fmt;

use serde::Serialize;

use crate::algengine::radical;
use crate::linalg::Mat;

use super::integrals::{dual_left_integrals, dual_right_integrals, left_integrals, right_integrals};
use super::HopfAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComultMultiplicative,
    CounitMultiplicative,
    Antipode,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Associativity => "assoc",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassoc",
            Axiom::Counit => "counit",
            Axiom::ComultMultiplicative => "comult_hom",
            Axiom::CounitMultiplicative => "counit_hom",
            Axiom::Antipode => "antipode",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// Basis indices exhibiting the first failure.
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub checks: Vec<AxiomCheck>,
    pub s_squared_identity: bool,
    pub unimodular: bool,
    pub dual_unimodular: bool,
    pub semisimple: bool,
    pub cosemisimple: bool,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed())
    }
}

/// Exhaustive basis sweeps of every Hopf algebra axiom, plus structural flags.
pub fn verify_hopf(h: &HopfAlgebra) -> HopfReport {
    let d = h.dim();
    let mut checks = Vec::new();
    let mut push = |axiom, witness| checks.push(AxiomCheck { axiom, witness });

    push(
        Axiom::Associativity,
        h.algebra().associativity_witness().map(|(i, j, k)| vec![i, j, k]),
    );
    push(Axiom::Unit, h.algebra().unit_witness().map(|i| vec![i]));

    let coassoc = (0..d).find(|&i| {
        let delta = h.comult_basis(i);
        h.delta_leg(&delta, 0) != h.delta_leg(&delta, 1)
    });
    push(Axiom::Coassociativity, coassoc.map(|i| vec![i]));

    let counit = (0..d).find(|&i| {
        let delta = h.comult_basis(i);
        let b = h.vector_tensor(&h.basis_vector(i));
        h.eps_leg(&delta, 0) != b || h.eps_leg(&delta, 1) != b
    });
    push(Axiom::Counit, counit.map(|i| vec![i]));

    let unit_delta_ok = h.comult(h.unit()) == h.unit_tensor(2);
    let comult_hom = if unit_delta_ok {
        first_pair(d, |i, j| {
            let prod = h.mul(&h.basis_vector(i), &h.basis_vector(j));
            h.comult(&prod) != h.tensor_mul(&h.comult_basis(i), &h.comult_basis(j))
        })
    } else {
        Some(vec![])
    };
    push(Axiom::ComultMultiplicative, comult_hom);

    let eps_unit_ok = h.eps(h.unit()).is_one();
    let counit_hom = if eps_unit_ok {
        first_pair(d, |i, j| {
            let prod = h.mul(&h.basis_vector(i), &h.basis_vector(j));
            h.eps(&prod) != &h.counit()[i] * &h.counit()[j]
        })
    } else {
        Some(vec![])
    };
    push(Axiom::CounitMultiplicative, counit_hom);

    let antipode = (0..d).find(|&i| {
        let delta = h.comult_basis(i);
        let expected: Vec<_> = h.unit().iter().map(|u| u * &h.counit()[i]).collect();
        h.multiply_legs(&h.s_leg(&delta, 0)) != expected
            || h.multiply_legs(&h.s_leg(&delta, 1)) != expected
    });
    push(Axiom::Antipode, antipode.map(|i| vec![i]));

    let s = h.antipode();
    let s_squared_identity = s.mul(s) == Mat::identity(h.order(), d);
    let unimodular = left_integrals(h) == right_integrals(h);
    let dual_unimodular = dual_right_integrals(h) == dual_left_integrals(h);
    HopfReport {
        checks,
        s_squared_identity,
        unimodular,
        dual_unimodular,
        semisimple: radical(h.algebra()).is_zero(),
        cosemisimple: radical(&h.dual_algebra()).is_zero(),
    }
}

fn first_pair(d: usize, fails: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    for j in 0..d {
        for i in 0..d {
            if fails(i, j) {
                return Some(vec![i, j]);
            }
        }
    }
    None
}
