use super::*;
use crate::exactfield::{CycNumber, DEFAULT_MAX_DEN};

fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

fn dual_numbers() -> FinAlgebra {
    // basis 1, x with x² = 0
    let o = 1;
    let one = CycNumber::one(o);
    let mult = vec![
        vec![(0, one.clone())],
        vec![(1, one.clone())],
        vec![(1, one.clone())],
        vec![],
    ];
    FinAlgebra::from_sparse(o, 2, mult, vec![one, CycNumber::zero(o)])
}

#[test]
fn radical_examples() {
    assert!(radical(&FinAlgebra::matrix_algebra(1, 2)).is_zero());
    let rad = radical(&dual_numbers());
    assert_eq!(rad.dim(), 1);
    assert_eq!(rad.vector(0), &[CycNumber::zero(1), CycNumber::one(1)]);
    assert!(radical(&FinAlgebra::group_algebra(3, &cyclic_table(3))).is_zero());
}

#[test]
fn fourier_idempotents_of_cyclic_three() {
    let a = FinAlgebra::group_algebra(3, &cyclic_table(3));
    let idems = central_primitive_idempotents(&a, 0, DEFAULT_MAX_DEN).unwrap();
    assert_eq!(idems.len(), 3);
    // oracle: (1/3) Σ_k ζ^{-jk} g^k
    let mut expected: Vec<Vec<CycNumber>> = (0..3)
        .map(|j| {
            (0..3)
                .map(|k| &CycNumber::zeta_pow(3, -(j * k)) * &CycNumber::from_frac(3, 1, 3))
                .collect()
        })
        .collect();
    expected.sort();
    assert_eq!(idems, expected);
}

#[test]
fn idempotent_set_is_complete_and_orthogonal() {
    let a = FinAlgebra::group_algebra(12, &s3_table());
    let idems = central_primitive_idempotents(&a, 7, DEFAULT_MAX_DEN).unwrap();
    assert_eq!(idems.len(), 3);
    let mut total = vec![CycNumber::zero(12); 6];
    for (i, e) in idems.iter().enumerate() {
        for (t, x) in total.iter_mut().zip(e) {
            *t += x;
        }
        for (j, f) in idems.iter().enumerate() {
            let prod = a.mul(e, f);
            if i == j {
                assert_eq!(&prod, e);
            } else {
                assert!(prod.iter().all(CycNumber::is_zero));
            }
        }
    }
    assert_eq!(total, a.unit());
}

#[test]
fn matrix_algebra_is_simple() {
    let a = FinAlgebra::matrix_algebra(1, 2);
    let idems = central_primitive_idempotents(&a, 0, DEFAULT_MAX_DEN).unwrap();
    assert_eq!(idems, vec![a.unit().to_vec()]);
}

#[test]
fn rationals_do_not_split_cyclic_three() {
    let a = FinAlgebra::group_algebra(1, &cyclic_table(3));
    assert_eq!(
        central_primitive_idempotents(&a, 0, DEFAULT_MAX_DEN),
        Err(AlgError::FieldNotSplitting { order: 1 })
    );
}

pub(crate) fn s3_table() -> Vec<Vec<usize>> {
    // permutations of {0,1,2} as images, composed (p∘q)(i) = p(q(i))
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index([p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect()
}

#[test]
fn regular_module_of_cyclic_four() {
    let a = FinAlgebra::group_algebra(4, &cyclic_table(4));
    let m = a.regular_module(Side::Left);
    m.check_axioms().unwrap();
    let comps = decompose_module(&m, 3, DEFAULT_MAX_DEN).unwrap();
    assert_eq!(comps.len(), 4);
    assert!(comps.iter().all(|c| c.subspace.dim() == 1));
    let mut classes: Vec<usize> = comps.iter().map(|c| c.iso_class).collect();
    classes.sort();
    assert_eq!(classes, vec![0, 1, 2, 3]);
}

#[test]
fn regular_module_of_s3_has_multiplicities() {
    let a = FinAlgebra::group_algebra(12, &s3_table());
    for seed in [0, 1, 2] {
        let m = a.regular_module(Side::Right);
        let comps = decompose_module(&m, seed, DEFAULT_MAX_DEN).unwrap();
        let mut dims: Vec<(usize, usize)> =
            comps.iter().map(|c| (c.subspace.dim(), c.iso_class)).collect();
        dims.sort();
        assert_eq!(dims, vec![(1, 0), (1, 1), (2, 2), (2, 2)]);
        let mut sum = comps[0].subspace.clone();
        for c in &comps[1..] {
            assert!(sum.intersect(&c.subspace).unwrap().is_zero());
            sum = sum.sum(&c.subspace).unwrap();
            for g in m.actions() {
                assert!(c.subspace.is_invariant(g));
            }
        }
        assert_eq!(sum.dim(), 6);
    }
}

#[test]
fn regular_module_of_matrix_algebra() {
    let a = FinAlgebra::matrix_algebra(1, 3);
    let m = a.regular_module(Side::Left);
    let comps = decompose_module(&m, 0, DEFAULT_MAX_DEN).unwrap();
    assert_eq!(comps.len(), 3);
    for c in &comps {
        let sub = m.restrict(&c.subspace);
        assert!(is_irreducible(1, 3, sub.actions()));
    }
}

#[test]
fn hom_space_examples() {
    let z2 = std::sync::Arc::new(FinAlgebra::group_algebra(1, &cyclic_table(2)));
    let one = CycNumber::one(1);
    let trivial = AlgModule::new(
        z2.clone(),
        Side::Left,
        vec![Mat::from_rows(1, 1, vec![vec![one.clone()]]), Mat::from_rows(1, 1, vec![vec![one.clone()]])],
    );
    let sign = AlgModule::new(
        z2.clone(),
        Side::Left,
        vec![Mat::from_rows(1, 1, vec![vec![one.clone()]]), Mat::from_rows(1, 1, vec![vec![-one.clone()]])],
    );
    assert_eq!(hom_space(&trivial, &trivial).dim(), 1);
    assert!(hom_space(&trivial, &sign).is_zero());
    let reg = z2.regular_module(Side::Left);
    let h = hom_space(&reg, &reg);
    assert_eq!(h.dim(), 2);
    assert!(find_isomorphism(&h, 2, 0).is_some());
}

#[test]
fn burnside_closure() {
    let a = FinAlgebra::matrix_algebra(1, 2);
    let m = a.regular_module(Side::Left);
    assert_eq!(generated_algebra_dim(1, 4, m.actions()), 4);
    assert!(!is_irreducible(1, 4, m.actions()));
}

#[test]
fn opposite_swaps_products() {
    let a = FinAlgebra::group_algebra(12, &s3_table());
    let op = a.opposite();
    let (x, y) = (a.basis_vector(1), a.basis_vector(4));
    assert_eq!(op.mul(&x, &y), a.mul(&y, &x));
    assert!(op.associativity_witness().is_none());
}
