//! Lowering, raising and q-rank operators, and the exact module checks.

use super::sparse::SparseMat;
use super::table::TableRow;
use crate::error::Result;
use crate::geometry::RankedPoset;
use crate::laurent::{psi_st, LaurentPoly};
use crate::report::Check;
use crate::scalars::{QuadScalar, RatFunc};

/// Column `x` has a one in each row covered by `x`.
pub fn lowering_matrix(p: &RankedPoset, base: u64) -> SparseMat {
    SparseMat::from_pattern(p.len(), base, p.covers.iter().copied())
}

/// Column `x` has a one in each row covering `x`.
pub fn raising_matrix(p: &RankedPoset, base: u64) -> SparseMat {
    SparseMat::from_pattern(p.len(), base, p.covers.iter().map(|&(lo, hi)| (hi, lo)))
}

/// `q^(N - 2i)` on fiber `i`, with `q = sqrt(b)` and `N` the poset's top rank.
pub fn qrank_matrix(p: &RankedPoset, b: u64) -> SparseMat {
    qrank_power(p, b, 1)
}

/// `k^h` as a diagonal matrix.
pub fn qrank_power(p: &RankedPoset, b: u64, h: i64) -> SparseMat {
    let q = QuadScalar::sqrt_base(b);
    let top = p.top_rank() as i64;
    let d = p.rank_of().into_iter().map(|i| q.pow(h * (top - 2 * i as i64))).collect();
    SparseMat::diagonal(d, b)
}

/// `psi(q^c k) = sum alpha_i q^(c i) k^i` as a diagonal matrix.
pub fn laurent_at_k(psi: &LaurentPoly, c: i64, p: &RankedPoset, b: u64) -> Result<SparseMat> {
    let q = QuadScalar::sqrt_base(b);
    let top = p.top_rank() as i64;
    let coeffs: Vec<(i64, QuadScalar)> =
        psi.terms().map(|(i, a)| Ok((i, a.mul_q_pow(c * i).eval_sqrt(b)?))).collect::<Result<_>>()?;
    let d = p
        .rank_of()
        .into_iter()
        .map(|r| {
            let kv = q.pow(top - 2 * r as i64);
            coeffs.iter().fold(QuadScalar::zero(b), |acc, (i, a)| &acc + &(a * &kv.pow(*i)))
        })
        .collect();
    Ok(SparseMat::diagonal(d, b))
}

/// A table row attached to the field order of its poset.
#[derive(Clone, Debug)]
pub struct ModuleSpec {
    pub row: TableRow,
    pub b: u64,
}

/// The operators `e`, `f`, `k` on `CP`.
pub struct Operators {
    pub b: u64,
    pub e: SparseMat,
    pub f: SparseMat,
    pub k: SparseMat,
}

impl Operators {
    pub fn new(p: &RankedPoset, b: u64) -> Self {
        Self { b, e: lowering_matrix(p, b), f: raising_matrix(p, b), k: qrank_matrix(p, b) }
    }
}

fn q_pow(b: u64, k: i64) -> QuadScalar {
    QuadScalar::sqrt_base(b).pow(k)
}

fn eval(c: &RatFunc, b: u64) -> Result<QuadScalar> {
    c.eval_sqrt(b)
}

/// `Check` that passes when `m` is zero, otherwise reports its largest entry.
pub fn zero_check(name: &str, m: &SparseMat, p: &RankedPoset) -> Check {
    let witness = m.max_entry().map(|(r, c, x)| {
        format!("entry ({r}, {c}) = {x} [{} / {}], {} nonzero entries", p.elements[r], p.elements[c], m.nnz())
    });
    Check::from_witness(name, witness)
}

/// Relations (1), (2), the `k`-commutation rules and the matrix form of
/// `varphi = phi_{s,t}`.
pub fn verify_module(spec: &ModuleSpec, p: &RankedPoset) -> Result<Vec<Check>> {
    let b = spec.b;
    let row = &spec.row;
    let ops = Operators::new(p, b);
    let (e, f, k) = (&ops.e, &ops.f, &ops.k);
    let q2 = q_pow(b, 2);
    let alpha = &q_pow(b, -2 * row.s) + &q_pow(b, -2 * row.t);
    let beta = q_pow(b, -2 * row.s - 2 * row.t);
    let vk = laurent_at_k(&row.varphi, 0, p, b)?;

    let mut checks = vec![
        zero_check("ke = q^2 ek", &k.mul(e).sub(&e.mul(k).scale(&q2)), p),
        zero_check("kf = q^-2 fk", &k.mul(f).sub(&f.mul(k).scale(&q2.pow(-1))), p),
    ];
    let ee = e.mul(e);
    let ff = f.mul(f);
    let ef = e.mul(f);
    let fe = f.mul(e);
    let r1 = ee.mul(f).sub(&ef.mul(e).scale(&alpha)).add(&fe.mul(e).scale(&beta)).sub(&e.mul(&vk));
    let r2 = e.mul(&ff).sub(&fe.mul(f).scale(&alpha)).add(&ff.mul(e).scale(&beta)).sub(&vk.mul(f));
    checks.push(zero_check("cubic relation in e", &r1, p));
    checks.push(zero_check("cubic relation in f", &r2, p));
    let via_phi = laurent_at_k(&psi_st(&row.phi, row.s, row.t), 0, p, b)?;
    checks.push(zero_check("varphi(k) = phi_st(k)", &vk.sub(&via_phi), p));
    Ok(checks)
}

/// Matrices of `c_s` and `c_t` from their defining expressions in `e, f, k`.
pub fn casimir_action(spec: &ModuleSpec, p: &RankedPoset) -> Result<(SparseMat, SparseMat)> {
    let b = spec.b;
    let ops = Operators::new(p, b);
    let fe = ops.f.mul(&ops.e);
    let ef = ops.e.mul(&ops.f);
    let phi_lo = laurent_at_k(&spec.row.phi, -1, p, b)?;
    let phi_hi = laurent_at_k(&spec.row.phi, 1, p, b)?;
    let build = |own: i64, other: i64| -> Result<SparseMat> {
        let numer = fe
            .scale(&q_pow(b, -other))
            .sub(&ef.scale(&q_pow(b, other)))
            .add(&phi_lo.scale(&q_pow(b, other)))
            .sub(&phi_hi.scale(&q_pow(b, -other)));
        let denom = eval(&(&RatFunc::q_pow(own - other) - &RatFunc::q_pow(other - own)), b)?.inv()?;
        Ok(numer.scale(&denom).mul(&qrank_power(p, b, -own)))
    };
    Ok((build(spec.row.s, spec.row.t)?, build(spec.row.t, spec.row.s)?))
}

/// Centrality of `c_s`, `c_t` and the expansions of fe and ef.
pub fn casimir_checks(spec: &ModuleSpec, p: &RankedPoset) -> Result<Vec<Check>> {
    let b = spec.b;
    let (s, t) = (spec.row.s, spec.row.t);
    let ops = Operators::new(p, b);
    let (cs, ct) = casimir_action(spec, p)?;
    let mut checks = Vec::new();
    for (name, c) in [("c_s", &cs), ("c_t", &ct)] {
        for (g, m) in [("e", &ops.e), ("f", &ops.f), ("k", &ops.k)] {
            checks.push(zero_check(&format!("[{name}, {g}] = 0"), &c.commutator(m), p));
        }
    }
    let expand = |sign: i64| -> Result<SparseMat> {
        Ok(cs
            .mul(&qrank_power(p, b, s))
            .scale(&q_pow(b, sign * s))
            .add(&ct.mul(&qrank_power(p, b, t)).scale(&q_pow(b, sign * t)))
            .add(&laurent_at_k(&spec.row.phi, sign, p, b)?))
    };
    checks.push(zero_check("fe = c_s q^s k^s + c_t q^t k^t + phi(qk)", &ops.f.mul(&ops.e).sub(&expand(1)?), p));
    checks.push(zero_check("ef = c_s q^-s k^s + c_t q^-t k^t + phi(q^-1 k)", &ops.e.mul(&ops.f).sub(&expand(-1)?), p));
    Ok(checks)
}
