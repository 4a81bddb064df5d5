use super::element::BElement;
use crate::scalars::RatFunc;
use std::collections::BTreeMap;

/// Splits `x` into homogeneous components keyed by ladder degree.
pub fn grade_decompose(x: &BElement) -> BTreeMap<i64, BElement> {
    let mut parts: BTreeMap<i64, Vec<_>> = BTreeMap::new();
    for (m, c) in x.terms() {
        parts.entry(m.d).or_default().push((*m, c.clone()));
    }
    parts.into_iter().map(|(d, ts)| (d, BElement::from_terms(x.algebra(), ts))).collect()
}

/// `K^-1 x K`.
pub fn k_conjugate(x: &BElement) -> BElement {
    let alg = x.algebra();
    &(&alg.k(-1) * x) * &alg.k(1)
}

/// Checks `K^-1 x K = q^(2n) x` for `x` homogeneous of degree `n`.
pub fn conjugation_eigen_ok(x: &BElement, n: i64) -> bool {
    k_conjugate(x) == x.scale(&RatFunc::q_pow(2 * n))
}
