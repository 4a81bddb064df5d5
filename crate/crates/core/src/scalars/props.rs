use super::*;
use num_traits::Zero;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|cs| IntPoly::from_i64s(&cs))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly(), -3i64..=3).prop_map(|(n, d, k)| {
        let d = if d.is_zero() { IntPoly::one() } else { d };
        RatFunc::new(k, n, d)
    })
}

fn quad(base: u64) -> impl Strategy<Value = QuadScalar> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(move |(a, ad, c, cd)| {
        QuadScalar::new(base, BigRational::new(a.into(), ad.into()), BigRational::new(c.into(), cd.into()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, RatFunc::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), RatFunc::one());
        }
    }

    #[test]
    fn canonical_form_is_idempotent(x in ratfunc()) {
        let (n, d) = x.to_poly_pair();
        prop_assert_eq!(RatFunc::new(0, n, d), x);
    }

    #[test]
    fn sqrt_evaluation_is_a_ring_homomorphism(x in ratfunc(), y in ratfunc(), b in prop::sample::select(vec![2u64, 3, 4, 5, 9])) {
        if let (Ok(ex), Ok(ey)) = (x.eval_sqrt(b), y.eval_sqrt(b)) {
            if let Ok(exy) = (&x * &y).eval_sqrt(b) {
                prop_assert_eq!(exy, &ex * &ey);
            }
            if let Ok(s) = (&x + &y).eval_sqrt(b) {
                prop_assert_eq!(s, &ex + &ey);
            }
        }
    }

    #[test]
    fn quad_field_axioms(x in quad(3), y in quad(3), z in quad(3)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv().unwrap(), QuadScalar::one(3));
        }
        prop_assert!((&x - &x).rational_part().is_zero());
    }
}
