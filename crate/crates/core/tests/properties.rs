use adu::algebra::suite::{random_coeff, random_monomial, random_phi};
use adu::algebra::{is_central, verify_cubic_relations, Algebra, BElement};
use adu::laurent::{inverse_psi_st, project_st, psi_st, AlgebraSignature, LaurentPoly};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn st() -> impl Strategy<Value = (i64, i64)> {
    (-3i64..=3, -3i64..=3).prop_filter("s != t", |(s, t)| s != t)
}

fn laurent(rng: &mut ChaCha8Rng) -> LaurentPoly {
    use rand::Rng;
    let mut p = LaurentPoly::zero();
    for _ in 0..rng.gen_range(0..=4) {
        p.add_term(rng.gen_range(-4..=4), random_coeff(rng));
    }
    p
}

fn element(rng: &mut ChaCha8Rng, alg: &Algebra) -> BElement {
    use rand::Rng;
    let mut x = alg.zero();
    for _ in 0..rng.gen_range(1..=2) {
        let mut m = random_monomial(rng);
        m.i = m.i.min(1);
        m.j = m.j.min(1);
        x = &x + &alg.monomial(m, random_coeff(rng));
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn psi_st_is_linear((s, t) in st(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (laurent(&mut rng), laurent(&mut rng), random_coeff(&mut rng));
        let lhs = psi_st(&(&a + &b.scale(&c)), s, t);
        let rhs = &psi_st(&a, s, t) + &psi_st(&b, s, t).scale(&c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn psi_st_kills_exactly_s_and_t((s, t) in st(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = laurent(&mut rng);
        let proj = project_st(&p, s, t);
        prop_assert_eq!(proj.reassemble(s, t), p.clone());
        prop_assert_eq!(psi_st(&p, s, t), psi_st(&proj.rest, s, t));
        let back = inverse_psi_st(&psi_st(&p, s, t), s, t).unwrap();
        prop_assert_eq!(back, proj.rest);
    }

    #[test]
    fn multiplication_is_associative((s, t) in st(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = Algebra::new(AlgebraSignature::new(s, t, random_phi(&mut rng, s, t)).unwrap());
        let (x, y, z) = (element(&mut rng, &alg), element(&mut rng, &alg), element(&mut rng, &alg));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn random_signatures_satisfy_relations((s, t) in st(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = Algebra::new(AlgebraSignature::new(s, t, random_phi(&mut rng, s, t)).unwrap());
        prop_assert!(verify_cubic_relations(&alg).passed());
        prop_assert!(is_central(&alg.cs()).is_central());
        prop_assert!(is_central(&alg.ct()).is_central());
    }
}
