use proptest::prelude::*;

use ydkit_core::exactfield::CycNumber;
use ydkit_core::linalg::{Mat, Subspace};

const ORDER: u32 = 4;

/// Matrices over ℚ(i) with small Gaussian-integer entries; zeros are common so that
/// rank deficiency shows up.
fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec((-2i64..=2, -1i64..=1), rows * cols).prop_map(move |entries| {
        let i = CycNumber::zeta(ORDER);
        let data = entries
            .into_iter()
            .map(|(re, im)| &CycNumber::from_int(ORDER, re) + &(&i * &CycNumber::from_int(ORDER, im)))
            .collect();
        Mat::from_flat(ORDER, rows, cols, data)
    })
}

fn shaped() -> impl Strategy<Value = Mat> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(m in shaped()) {
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.dim(), m.cols());
        for v in kernel.vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(CycNumber::is_zero));
        }
    }

    #[test]
    fn rref_is_canonical(m in shaped(), mix in matrix(5, 5)) {
        let r = m.rref();
        prop_assert_eq!(&r.mat.rref().mat, &r.mat);
        // a row space does not depend on its spanning set
        let mix = mix.select(&(0..m.rows()).collect::<Vec<_>>(), &(0..m.rows()).collect::<Vec<_>>());
        let mixed = mix.mul(&m);
        let a = Subspace::span(ORDER, m.cols(), m.row_vecs());
        let b = Subspace::span(ORDER, m.cols(), m.row_vecs().into_iter().chain(mixed.row_vecs()).collect());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn kron_mixed_product(a in matrix(2, 3), b in matrix(2, 2), c in matrix(3, 2), d in matrix(2, 3)) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
        prop_assert_eq!(a.kron(&b).kron(&d), a.kron(&b.kron(&d)));
    }

    #[test]
    fn determinant_and_inverse(a in matrix(3, 3), b in matrix(3, 3)) {
        prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
        match a.inverse() {
            Some(inv) => prop_assert_eq!(a.mul(&inv), Mat::identity(ORDER, 3)),
            None => prop_assert!(a.det().is_zero()),
        }
    }

    #[test]
    fn intersection_and_sum_dimensions(a in matrix(3, 5), b in matrix(3, 5)) {
        let u = Subspace::span(ORDER, 5, a.row_vecs());
        let w = Subspace::span(ORDER, 5, b.row_vecs());
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains(&u).unwrap() && u.contains(&meet).unwrap() && w.contains(&meet).unwrap());
    }
}
