use super::element::{Algebra, BElement};
use crate::scalars::RatFunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    S,
    T,
}

/// Rebuilds `C_s` (or `C_t`) from `E`, `F`, `K` alone:
///
/// `C_s = (q^-t FE - q^t EF + q^t phi(q^-1 K) - q^-t phi(qK)) / (q^(s-t) - q^(t-s)) * K^-s`
///
/// and symmetrically for `C_t` with `s` and `t` exchanged. With the normal-form
/// arithmetic this must collapse to the single monomial `C_s` (resp. `C_t`).
pub fn casimir_from_ladder(which: Which, alg: &Algebra) -> BElement {
    let (own, other) = match which {
        Which::S => (alg.s(), alg.t()),
        Which::T => (alg.t(), alg.s()),
    };
    let fe = &alg.f() * &alg.e();
    let ef = &alg.e() * &alg.f();
    let phi = alg.phi();
    let numer = &(&(&fe.scale(&RatFunc::q_pow(-other)) - &ef.scale(&RatFunc::q_pow(other)))
        + &alg.laurent_at_k(phi, -1).scale(&RatFunc::q_pow(other)))
        - &alg.laurent_at_k(phi, 1).scale(&RatFunc::q_pow(-other));
    let denom = &RatFunc::q_pow(own - other) - &RatFunc::q_pow(other - own);
    let inv = denom.inv().expect("s != t, so q^(s-t) - q^(t-s) is nonzero");
    &numer.scale(&inv) * &alg.k(-own)
}
