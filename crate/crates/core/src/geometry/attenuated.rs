//! Subspaces of `GF(b)^(N+M)` meeting a fixed `M`-space trivially.

use super::field::FiniteField;
use super::guard::check_size;
use super::poset::RankedPoset;
use super::subspace::{for_each_subspace, gaussian_binomial, Subspace};
use crate::error::{AduError, Result};
use serde_json::json;
use std::collections::HashMap;

/// Number of `i`-subspaces meeting the fixed `M`-space trivially.
pub fn attenuated_count(b: u128, n: u32, m: u32, i: u32) -> u128 {
    b.pow(i * m) * gaussian_binomial(n, i, b)
}

/// The fixed space `w` is spanned by the last `M` coordinates, so a subspace
/// avoids it exactly when all of its RREF pivots lie in the first `N` columns.
pub fn build_attenuated(b: usize, n: usize, m: usize) -> Result<RankedPoset> {
    if n == 0 || m == 0 {
        return Err(AduError::Unsupported("attenuated space needs N, M >= 1".into()));
    }
    check_size((0..=n as u32).map(|i| attenuated_count(b as u128, n as u32, m as u32, i)).sum())?;
    let f = FiniteField::new(b)?;
    let dim = n + m;
    let mut subs: Vec<Subspace> = Vec::new();
    for k in 0..=n {
        for_each_subspace(&f, dim, k, n, &mut |u| subs.push(u));
    }
    let index: HashMap<&Subspace, usize> = subs.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let mut covers = Vec::new();
    for (hi, u) in subs.iter().enumerate() {
        for (h, _) in u.hyperplanes(&f) {
            covers.push((index[&h], hi));
        }
    }
    let items = subs.iter().map(|u| (u.key(), u.dim())).collect();
    RankedPoset::from_parts("attenuated", json!({ "b": b, "N": n, "M": m }), items, covers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_match_transversal_count() {
        for (b, n, m) in [(2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1), (2, 3, 1)] {
            let p = build_attenuated(b, n, m).unwrap();
            let want: Vec<usize> =
                (0..=n as u32).map(|i| attenuated_count(b as u128, n as u32, m as u32, i) as usize).collect();
            assert_eq!(p.fiber_sizes(), want);
        }
        assert_eq!(build_attenuated(2, 1, 1).unwrap().fiber_sizes(), vec![1, 2]);
    }

    #[test]
    fn zero_space_is_unique_minimum() {
        let p = build_attenuated(2, 2, 1).unwrap();
        assert_eq!(p.fibers[0].len(), 1);
        let rank = p.rank_of();
        for x in 0..p.len() {
            if rank[x] > 0 {
                assert!(!p.lower_covers(x).is_empty());
            }
        }
    }
}
