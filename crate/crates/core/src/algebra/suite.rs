//! Seeded property suite for one algebra, and sweeps over many signatures.

use super::*;
use crate::laurent::{psi_st, AlgebraSignature, LaurentPoly};
use crate::report::Check;
use crate::scalars::{BigRational, RatFunc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Random monomial triples for associativity.
    pub triples: usize,
    /// Random samples for the grading, conjugation and commutation checks.
    pub samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { seed: 0x5eed, triples: 100, samples: 20 }
    }
}

/// Small Laurent polynomial in `q` with integer coefficients.
pub fn random_coeff<R: Rng>(rng: &mut R) -> RatFunc {
    let n = rng.gen_range(1..=2);
    let terms: Vec<(i64, BigRational)> = (0..n)
        .map(|_| {
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-3i64..=3);
            }
            (rng.gen_range(-2i64..=2), BigRational::from_integer(c.into()))
        })
        .collect();
    let r = RatFunc::from_laurent_terms(&terms);
    if r.is_zero() {
        RatFunc::one()
    } else {
        r
    }
}

/// Random `phi` with 1 to 3 terms, support in `[-3, 3]` avoiding `s` and `t`.
pub fn random_phi<R: Rng>(rng: &mut R, s: i64, t: i64) -> LaurentPoly {
    let allowed: Vec<i64> = (-3..=3).filter(|&i| i != s && i != t).collect();
    let n = rng.gen_range(1..=3);
    let mut phi = LaurentPoly::zero();
    for _ in 0..n {
        let i = allowed[rng.gen_range(0..allowed.len())];
        phi.add_term(i, random_coeff(rng));
    }
    phi
}

pub fn random_monomial<R: Rng>(rng: &mut R) -> NormalMonomial {
    NormalMonomial::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(0..=2), rng.gen_range(0..=2))
}

fn random_homogeneous<R: Rng>(rng: &mut R, alg: &Algebra, d: i64) -> BElement {
    let terms = (0..rng.gen_range(1..=3)).map(|_| {
        let mut m = random_monomial(rng);
        m.d = d;
        (m, random_coeff(rng))
    });
    BElement::from_terms(alg, terms)
}

fn first_nonzero(label: &str, x: &BElement) -> Option<String> {
    (!x.is_zero()).then(|| format!("{label}: {x}"))
}

/// Runs every algebra-level check on `alg` and returns one record per check.
pub fn run_suite(alg: &Algebra, opts: &SuiteOptions) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut checks = Vec::new();
    let (s, t) = (alg.s(), alg.t());

    for (name, which, target) in [("casimir_s", Which::S, alg.cs()), ("casimir_t", Which::T, alg.ct())] {
        let got = casimir_from_ladder(which, alg);
        checks.push(Check::from_witness(name, (got != target).then(|| format!("got {got}"))));
    }

    let cubic = verify_cubic_relations(alg);
    checks.push(Check::from_witness(
        "cubic_relations",
        first_nonzero("lowering relation residual", &cubic.lowering)
            .or_else(|| first_nonzero("raising relation residual", &cubic.raising)),
    ));

    let varphi = psi_st(alg.phi(), s, t);
    let pres = APresentation::new(s, t, varphi).expect("image of psi_st avoids s and t");
    let (r1, r2) = pres.relation_residuals();
    let (x11, x12) = pres.casimir_expansion_residuals();
    let w = first_nonzero("relation (e^2 f ...) residual", &r1)
        .or_else(|| first_nonzero("relation (e f^2 ...) residual", &r2))
        .or_else(|| (pres.casimir(Which::S) != pres.algebra().cs()).then(|| "c_s does not map to C_s".into()))
        .or_else(|| (pres.casimir(Which::T) != pres.algebra().ct()).then(|| "c_t does not map to C_t".into()))
        .or_else(|| first_nonzero("fe expansion residual", &x11))
        .or_else(|| first_nonzero("ef expansion residual", &x12));
    checks.push(Check::from_witness("presentation_isomorphism", w));

    let mut witness = None;
    for _ in 0..opts.triples {
        let (a, b, c) = (random_monomial(&mut rng), random_monomial(&mut rng), random_monomial(&mut rng));
        let (x, y, z) = (alg.basis(a), alg.basis(b), alg.basis(c));
        let left = &(&x * &y) * &z;
        let right = &x * &(&y * &z);
        if left != right {
            witness = Some(format!("({a})({b})({c})"));
            break;
        }
    }
    checks.push(Check::from_witness("associativity", witness));

    let mut witness = None;
    for _ in 0..opts.samples {
        let (m, n) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let x = random_homogeneous(&mut rng, alg, m);
        let y = random_homogeneous(&mut rng, alg, n);
        let p = &x * &y;
        if p.terms().any(|(mon, _)| mon.d != m + n) {
            witness = Some(format!("degree {m} times degree {n} gave {p}"));
            break;
        }
    }
    checks.push(Check::from_witness("grading_additivity", witness));

    let mut witness = None;
    for _ in 0..opts.samples {
        let n = rng.gen_range(-3..=3);
        let x = random_homogeneous(&mut rng, alg, n);
        if !conjugation_eigen_ok(&x, n) {
            witness = Some(format!("K^-1 x K != q^{} x for x = {x}", 2 * n));
            break;
        }
    }
    checks.push(Check::from_witness("k_conjugation", witness));

    let mut witness = None;
    'center: for i in 0..=3u32 {
        for j in 0..=3u32 {
            let c = is_central(&alg.basis(NormalMonomial::new(0, 0, i, j)));
            if !c.is_central() || !c.consistent() {
                witness = Some(format!("C_s^{i} C_t^{j} not central"));
                break 'center;
            }
        }
    }
    for h in [-3i64, -2, -1, 1, 2, 3] {
        if witness.is_some() {
            break;
        }
        let c = is_central(&alg.k(h));
        if c.is_central() || !c.consistent() {
            witness = Some(format!("K^{h} reported central"));
        }
    }
    checks.push(Check::from_witness("center", witness));

    let mut witness = None;
    for _ in 0..opts.samples {
        let mut a = random_monomial(&mut rng);
        let mut b = random_monomial(&mut rng);
        a.d = 0;
        b.d = 0;
        let (x, y) = (alg.basis(a), alg.basis(b));
        let expected = alg.basis(a.times_zero_part(b.h, b.i, b.j));
        if &x * &y != expected || &y * &x != expected {
            witness = Some(format!("{a} and {b}"));
            break;
        }
    }
    checks.push(Check::from_witness("degree_zero_commutative", witness));

    let mut witness = None;
    for k in 0..opts.samples {
        let x = if k % 2 == 0 {
            random_homogeneous(&mut rng, alg, 0)
        } else {
            let d = rng.gen_range(-2..=2);
            &random_homogeneous(&mut rng, alg, 0) + &random_homogeneous(&mut rng, alg, d)
        };
        let commutes = x.commutator(&alg.k(1)).is_zero();
        let deg0 = grade_decompose(&x).remove(&0).unwrap_or_else(|| alg.zero());
        if commutes != (deg0 == x) {
            witness = Some(format!("commutes with K = {commutes} for {x}"));
            break;
        }
    }
    checks.push(Check::from_witness("commutes_with_k_iff_degree_zero", witness));

    checks
}

/// Per-signature result of a sweep.
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub signature: AlgebraSignature,
    pub checks: Vec<Check>,
}

fn mix(seed: u64, a: i64, b: i64, c: usize) -> u64 {
    let mut x = seed ^ 0x9e37_79b9_7f4a_7c15;
    for v in [a as u64, b as u64, c as u64] {
        x = (x ^ v).wrapping_mul(0x100_0000_01b3).rotate_left(17);
    }
    x
}

/// Runs [`run_suite`] for every `s != t` in `range` and `phis` random `phi`
/// each. Work is spread over threads; results come back in signature order.
pub fn sweep(range: std::ops::RangeInclusive<i64>, phis: usize, opts: &SuiteOptions) -> Vec<SweepEntry> {
    let mut jobs = Vec::new();
    for s in range.clone() {
        for t in range.clone() {
            if s != t {
                for k in 0..phis {
                    jobs.push((s, t, k));
                }
            }
        }
    }
    jobs.par_iter()
        .map(|&(s, t, k)| {
            let seed = mix(opts.seed, s, t, k);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let sig = AlgebraSignature::new(s, t, random_phi(&mut rng, s, t)).expect("phi avoids s, t");
            let alg = Algebra::new(sig.clone());
            let checks = run_suite(&alg, &SuiteOptions { seed, ..*opts });
            SweepEntry { signature: sig, checks }
        })
        .collect()
}
