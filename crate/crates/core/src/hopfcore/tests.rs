use super::*;
use crate::catalog::{builtin, kac_paljutkin, sweedler, symmetric3_table};
use crate::exactfield::DEFAULT_MAX_DEN;

#[test]
fn group_algebra_report() {
    let h = builtin("s3").unwrap().hopf;
    let r = verify_hopf(&h);
    assert!(r.passed());
    assert!(r.s_squared_identity && r.unimodular && r.dual_unimodular);
}

#[test]
fn corrupted_square_reports_associativity_witness() {
    let (h, _) = kac_paljutkin();
    let mut z2 = h.mul(&h.basis_vector(4), &h.basis_vector(4));
    z2[3] = -&z2[3];
    let bad = h.with_product(4, 4, z2);
    let report = verify_hopf(&bad);
    let fail = report.first_failure().unwrap();
    assert_eq!(fail.axiom, Axiom::Associativity);
    assert_eq!(fail.witness, Some(vec![4, 4, 1]));
}

#[test]
fn duals() {
    let z2 = builtin("z2").unwrap().hopf;
    let d = z2.dual();
    assert!(verify_hopf(&d).passed());
    assert!(d.algebra().is_commutative());
    assert_eq!(grouplikes(&d, 0, DEFAULT_MAX_DEN).unwrap().len(), 2);

    let s3 = builtin("s3").unwrap().hopf;
    let ds3 = s3.dual();
    assert!(ds3.algebra().is_commutative());
    assert_ne!(ds3.comult_table(), ds3.opposite_comult().as_slice());
    let back = ds3.dual();
    assert_eq!(back.algebra(), s3.algebra());
    assert_eq!(back.antipode(), s3.antipode());
    assert_eq!(back.counit(), s3.counit());

    let (h8, _) = kac_paljutkin();
    let d8 = h8.dual();
    assert_eq!(d8.dim(), 8);
    assert!(verify_hopf(&d8).passed());
}

#[test]
fn harpoon_identities() {
    let (h, _) = kac_paljutkin();
    let eps = h.counit().to_vec();
    for i in 0..8 {
        let b = h.basis_vector(i);
        assert_eq!(harpoons(&h, &eps, &b, HarpoonMode::LeftHit), Harpooned::Vector(b.clone()));
        assert_eq!(harpoons(&h, &eps, &b, HarpoonMode::RightHit), Harpooned::Vector(b.clone()));
        let f = h.basis_vector(i);
        assert_eq!(
            harpoons(&h, &f, h.unit(), HarpoonMode::Coadjoint),
            Harpooned::Covector(f.clone())
        );
    }
}

#[test]
fn coadjoint_on_group_algebra_conjugates() {
    let table = symmetric3_table();
    let h = builtin("s3").unwrap().hopf;
    for g in 0..6 {
        for k in 0..6 {
            // δ_g ↼↼ k = δ_{k⁻¹ g k}
            let target = table.mul(table.mul(table.inverse(k), g), k);
            assert_eq!(h.coadjoint(&h.basis_vector(g), &h.basis_vector(k)), h.basis_vector(target));
        }
    }
}

#[test]
fn group_algebra_integrals() {
    let h = builtin("s3").unwrap().hopf;
    let data = integrals(&h).unwrap();
    let sixth = CycNumber::from_frac(h.order(), 1, 6);
    assert_eq!(data.left_integral, vec![sixth; 6]);
    assert_eq!(data.dual_integral, h.basis_vector(0));
    assert_eq!(data.modular_character, h.counit().to_vec());
    assert_eq!(data.modular_element, h.unit().to_vec());
}

#[test]
fn kac_paljutkin_integral_is_two_sided() {
    let (h, _) = kac_paljutkin();
    let data = integrals(&h).unwrap();
    assert!(h.eps(&data.left_integral).is_one());
    for i in 0..8 {
        let b = h.basis_vector(i);
        let scaled: Vec<_> = data.left_integral.iter().map(|x| x * &h.counit()[i]).collect();
        assert_eq!(h.mul(&b, &data.left_integral), scaled);
        assert_eq!(h.mul(&data.left_integral, &b), scaled);
    }
    assert!(crate::linalg::dot(4, &data.dual_integral, h.unit()).is_one());
}

#[test]
fn sweedler_has_no_normalized_integral() {
    assert_eq!(integrals(&sweedler()), Err(HopfError::NonSemisimple));
}

#[test]
fn grouplike_sets() {
    let s3 = builtin("s3").unwrap().hopf;
    assert_eq!(grouplikes(&s3, 0, DEFAULT_MAX_DEN).unwrap().len(), 6);
    let (h, _) = kac_paljutkin();
    let g = grouplikes(&h, 0, DEFAULT_MAX_DEN).unwrap();
    let elems: Vec<_> = g.iter().map(|x| x.element.clone()).collect();
    assert_eq!(elems, (0..4).map(|i| h.basis_vector(i)).collect::<Vec<_>>());
    let central: Vec<_> = g.iter().filter(|x| x.central).map(|x| x.element.clone()).collect();
    assert_eq!(central, vec![h.basis_vector(0), h.basis_vector(3)]);
    for x in &g {
        assert_eq!(h.mul(&h.s(&x.element), &x.element), h.unit().to_vec());
    }
}
