//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every identity is checked with exact equality; the only pinned tolerances
//! are the wall-clock limits below.

use adu::algebra::suite::{random_coeff, sweep, SuiteOptions};
use adu::algebra::{verify_cubic_relations, verify_cubic_relations_with, Algebra};
use adu::geometry::{
    attenuated_count, build_attenuated, build_form_poset, build_polar, build_polar_top, gaussian_binomial,
    DualPolarGraph, FiberRule, FormKind, FormModel, PolarKind, HEMMETER_GATE_MESSAGE,
};
use adu::laurent::{eigenvalue, inverse_psi_st, project_st, psi_st, AlgebraSignature, LaurentPoly};
use adu::rep::{table_check, verify_family, Family, Row, VerifyOptions};
use adu::report::all_pass;
use adu::scalars::RatFunc;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

const EXACT: &str = "exact equality";
const SPECTRAL_LIMIT: Duration = Duration::from_secs(10);
const TABLE_LIMIT: Duration = Duration::from_secs(5);
const ALGEBRA_LIMIT: Duration = Duration::from_secs(60);
const MODULE_CASE_LIMIT: Duration = Duration::from_secs(60);
const SEED: u64 = 20_240_601;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if took > limit {
        o.ok = false;
    }
    o.detail = format!("{}; {:.2}s (limit {}s)", o.detail, took.as_secs_f64(), limit.as_secs());
    o
}

fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let n = rng.gen_range(0..=5);
    LaurentPoly::from_terms((0..n).map(|_| (rng.gen_range(-4..=4), random_coeff(rng))))
}

fn criterion_1() -> Outcome {
    timed(SPECTRAL_LIMIT, || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut checked = 0;
        for s in -3..=3i64 {
            for t in -3..=3i64 {
                if s == t {
                    continue;
                }
                let kills = psi_st(&LaurentPoly::lambda_pow(s), s, t).is_zero()
                    && psi_st(&LaurentPoly::lambda_pow(t), s, t).is_zero();
                if !kills {
                    return outcome(false, format!("lambda^s or lambda^t survives at s={s} t={t}"));
                }
                for _ in 0..100 {
                    let psi = random_laurent(&mut rng);
                    let image = psi_st(&psi, s, t);
                    let diagonal = LaurentPoly::from_terms(psi.terms().map(|(i, a)| (i, a * &eigenvalue(i, s, t))));
                    if image != diagonal {
                        return outcome(false, format!("not diagonal at s={s} t={t}: {psi}"));
                    }
                    let off: Vec<i64> = psi.support().into_iter().filter(|&i| i != s && i != t).collect();
                    if image.support() != off {
                        return outcome(false, format!("kernel is not exactly {{s, t}} at s={s} t={t}: {psi}"));
                    }
                    let rest = project_st(&psi, s, t).rest;
                    if inverse_psi_st(&psi_st(&rest, s, t), s, t).as_ref() != Ok(&rest) {
                        return outcome(false, format!("inverse fails at s={s} t={t}: {rest}"));
                    }
                    checked += 1;
                }
            }
        }
        outcome(true, format!("{checked} polynomials over 42 (s,t) pairs, {EXACT}"))
    })
}

fn criterion_2() -> Outcome {
    timed(TABLE_LIMIT, || {
        let rows = table_check();
        let bad: Vec<String> = rows.iter().filter(|r| !r.1).map(|r| r.0.describe()).collect();
        outcome(bad.is_empty(), format!("{} row instances, {} inconsistent {bad:?}", rows.len(), bad.len()))
    })
}

fn criterion_3() -> Outcome {
    timed(ALGEBRA_LIMIT, || {
        let entries = sweep(-3..=3, 20, &SuiteOptions { seed: SEED, triples: 100, samples: 20 });
        let failed: Vec<String> = entries
            .iter()
            .filter(|e| !all_pass(&e.checks))
            .map(|e| {
                let names: Vec<&str> = e.checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
                format!("{}: {names:?}", e.signature)
            })
            .take(3)
            .collect();
        outcome(failed.is_empty(), format!("{} signatures, failures {failed:?}", entries.len()))
    })
}

fn criterion_4() -> Vec<(String, Outcome)> {
    let alt = |b, n| Family::Form { kind: FormKind::Alt, b, n };
    let cases = [
        ("Alt_2(2)", alt(2, 2)),
        ("Alt_2(3)", alt(2, 3)),
        ("Alt_4(3)", alt(4, 3)),
        ("Her_4(2)", Family::Form { kind: FormKind::Her, b: 4, n: 2 }),
        ("Quad_2(2)", Family::Form { kind: FormKind::Quad, b: 2, n: 2 }),
        ("Quad_2(3)", Family::Form { kind: FormKind::Quad, b: 2, n: 3 }),
        ("A_2(1,1)", Family::Attenuated { b: 2, n: 1, m: 1 }),
        ("A_2(2,1)", Family::Attenuated { b: 2, n: 2, m: 1 }),
        ("A_2(2,2)", Family::Attenuated { b: 2, n: 2, m: 2 }),
        ("Polar_2(2,1)", Family::Polar { b: 2, n: 2, kind: PolarKind::PARABOLIC }),
        ("Polar_2(2,0) hyperbolic", Family::Polar { b: 2, n: 2, kind: PolarKind::HYPERBOLIC }),
        ("Polar_2^top(2,1) all bases", Family::PolarTop { b: 2, n: 2, kind: PolarKind::PARABOLIC, base: None }),
    ];
    cases
        .into_iter()
        .map(|(name, fam)| {
            let o = timed(MODULE_CASE_LIMIT, || {
                match verify_family(&fam, &VerifyOptions { calibrate: true, ..Default::default() }) {
                    Ok(r) => {
                        let failed = r.checks.iter().find(|c| !c.passed());
                        let detail = format!(
                            "{} checks, fibers {:?}, convention: {}{}",
                            r.checks.len(),
                            r.fibers,
                            r.convention,
                            failed.map(|c| format!(", first failure {} {:?}", c.name, c.witness)).unwrap_or_default()
                        );
                        outcome(r.passed(), detail)
                    }
                    Err(e) => outcome(false, format!("error: {e}")),
                }
            });
            (name.to_string(), o)
        })
        .collect()
}

/// Alternating `n x n` matrices of rank `2h` over `GF(b)`.
fn alternating_rank_count(b: u128, n: u32, h: u32) -> u128 {
    let mut num = b.pow(h * h.saturating_sub(1));
    let mut den = 1;
    for i in 0..h {
        num *= (b.pow(n - 2 * i) - 1) * (b.pow(n - 2 * i - 1) - 1);
        den *= b.pow(2 * i + 2) - 1;
    }
    num / den
}

/// Totally singular `i`-spaces of a parabolic quadric in dimension `2N+1`.
fn parabolic_count(b: u128, n: u32, i: u32) -> u128 {
    let mut c = gaussian_binomial(n, i, b);
    for j in 0..i {
        c *= b.pow(n - j) + 1;
    }
    c
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    let mut record = |name: &str, enumerated: Vec<usize>, formula: Vec<usize>, want: Vec<usize>| {
        let good = enumerated == want && formula == want;
        ok &= good;
        notes.push(format!("{name} {enumerated:?}/{formula:?}"));
    };

    let alt = build_form_poset(FormKind::Alt, 2, 3, FormModel::RankMetric(FiberRule::HalfRank)).unwrap();
    record("Alt_2(3)", alt.fiber_sizes(), (0..=1).map(|h| alternating_rank_count(2, 3, h) as usize).collect(), vec![1, 7]);

    let att = build_attenuated(2, 1, 1).unwrap();
    record("A_2(1,1)", att.fiber_sizes(), (0..=1).map(|i| attenuated_count(2, 1, 1, i) as usize).collect(), vec![1, 2]);

    let polar = build_polar(2, 2, PolarKind::PARABOLIC).unwrap();
    record("Polar_2(2,1)", polar.fiber_sizes(), (0..=2).map(|i| parabolic_count(2, 2, i) as usize).collect(), vec![1, 15, 15]);

    // distance distribution of a dual polar graph: [N,i]_b b^(i(i-1)/2 + i e)
    let g = DualPolarGraph::from_poset(&polar).unwrap();
    let closed: Vec<usize> = (0..=2u32).map(|i| (gaussian_binomial(2, i, 2) * 2u128.pow(i * (i.max(1) - 1) / 2 + i)) as usize).collect();
    let all_bases: Vec<Vec<usize>> = (0..g.len()).map(|x| build_polar_top(&g, x).unwrap().fiber_sizes()).collect();
    let bfs = all_bases[0].clone();
    let uniform = all_bases.iter().all(|s| *s == bfs);
    record("Polar_2^top(2,1)", if uniform { bfs } else { vec![] }, closed, vec![1, 6, 8]);

    outcome(ok, format!("enumeration/closed form: {}", notes.join(", ")))
}

fn criterion_6() -> Outcome {
    let phi = LaurentPoly::from_terms([(2, RatFunc::from_int(3)), (-1, RatFunc::q_pow(1))]);
    let alg = Algebra::new(AlgebraSignature::new(0, 1, phi.clone()).unwrap());
    let honest = verify_cubic_relations(&alg).passed();
    let mut varphi = psi_st(&phi, 0, 1);
    varphi.add_term(2, RatFunc::one());
    let perturbed = verify_cubic_relations_with(&alg, &varphi).passed();

    let fam = Family::Form { kind: FormKind::Alt, b: 2, n: 3 };
    let mismatched = std::panic::catch_unwind(|| {
        verify_family(&fam, &VerifyOptions { calibrate: true, row: Some(Row::Quad), convention: None })
    });
    let (module_rejected, note) = match mismatched {
        Ok(Ok(r)) => (!r.passed() && r.checks.iter().any(|c| c.witness.is_some()), "reported failure"),
        Ok(Err(_)) => (false, "returned an error"),
        Err(_) => (false, "panicked"),
    };
    outcome(
        honest && !perturbed && module_rejected,
        format!(
            "true varphi passes: {honest}; perturbed varphi rejected: {}; Alt_2(3) with Quad row: {note}",
            !perturbed
        ),
    )
}

fn criterion_7() -> Outcome {
    let code = adu::cli::main_with(["adu", "verify-module", "--family", "hem", "--b", "3", "--N", "3"]);
    let err = adu::geometry::build_hemmeter(3, 3).unwrap_err().to_string();
    outcome(
        code == adu::cli::EXIT_GATED && err.contains("construction pending") && err == HEMMETER_GATE_MESSAGE,
        format!("exit code {code}, message {err:?}"),
    )
}

fn main() {
    // `cargo test -- --list` and similar probes expect no work.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let mut all = true;
    let mut line = |name: &str, o: &Outcome| {
        all &= o.ok;
        println!("criterion {name}: {} ({})", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    };
    line("1 spectral map", &criterion_1());
    line("2 table consistency", &criterion_2());
    line("3 algebra core", &criterion_3());
    for (name, o) in criterion_4() {
        line(&format!("4 module {name}"), &o);
    }
    line("5 combinatorial anchors", &criterion_5());
    line("6 negative controls", &criterion_6());
    line("7 hem gate", &criterion_7());
    if !all {
        std::process::exit(1);
    }
}
