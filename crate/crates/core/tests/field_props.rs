use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use ydkit_core::exactfield::CycNumber;

const ORDER: u32 = 8;

fn number() -> impl Strategy<Value = CycNumber> {
    prop::collection::vec((-9i64..=9, 1i64..=6), 4).prop_map(|coords| {
        let coords: Vec<BigRational> = coords
            .into_iter()
            .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        CycNumber::from_coords(ORDER, &coords).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in number(), b in number(), c in number()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn inverses(a in number()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn galois_maps_are_ring_homomorphisms(a in number(), b in number(), k in prop::sample::select(vec![1i64, 3, 5, 7])) {
        prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn lifting_is_a_ring_homomorphism(a in number(), b in number()) {
        prop_assert_eq!((&a * &b).lift(24), &a.lift(24) * &b.lift(24));
        prop_assert_eq!((&a + &b).lift(16), &a.lift(16) + &b.lift(16));
    }

    #[test]
    fn text_format_round_trips(a in number()) {
        prop_assert_eq!(CycNumber::parse(&a.to_string(), ORDER).unwrap(), a);
    }
}
