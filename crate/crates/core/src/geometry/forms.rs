//! Posets of alternating, Hermitean and quadratic forms.
//!
//! Two models are provided. [`FormModel::RankMetric`] takes all forms on
//! `GF(b)^N` ordered by `rank(y - x) = rank(y) - rank(x)`. [`FormModel::Extension`]
//! takes pairs `(U, g)` of a subspace `U` and a form `g` on `U`, ordered by
//! `U <= U'` with `g'` restricting to `g`; its rank is `N`.

use super::field::FiniteField;
use super::guard::check_size;
use super::poset::RankedPoset;
use super::subspace::{gaussian_binomial, rank, subspaces, Subspace};
use crate::error::{AduError, Result};
use serde_json::json;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Alt,
    Her,
    Quad,
}

impl FormKind {
    pub fn name(self) -> &'static str {
        match self {
            FormKind::Alt => "alt",
            FormKind::Her => "her",
            FormKind::Quad => "quad",
        }
    }
}

/// How a form's rank becomes a fiber index in the rank-metric model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiberRule {
    Rank,
    HalfRank,
    HalfRankCeil,
}

impl FiberRule {
    pub fn apply(self, r: usize) -> usize {
        match self {
            FiberRule::Rank => r,
            FiberRule::HalfRank => r / 2,
            FiberRule::HalfRankCeil => r.div_ceil(2),
        }
    }

    fn name(self) -> &'static str {
        match self {
            FiberRule::Rank => "rank",
            FiberRule::HalfRank => "rank/2",
            FiberRule::HalfRankCeil => "ceil(rank/2)",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormModel {
    RankMetric(FiberRule),
    Extension,
}

impl fmt::Display for FormModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormModel::RankMetric(r) => write!(f, "rank-metric, fiber = {}", r.name()),
            FormModel::Extension => write!(f, "extension"),
        }
    }
}

impl FormModel {
    /// Candidate models tried by calibration, in order.
    pub fn candidates(kind: FormKind) -> Vec<FormModel> {
        let literal = match kind {
            FormKind::Alt => vec![FiberRule::HalfRank],
            FormKind::Her => vec![FiberRule::Rank],
            FormKind::Quad => vec![FiberRule::HalfRankCeil, FiberRule::Rank],
        };
        literal.into_iter().map(FormModel::RankMetric).chain([FormModel::Extension]).collect()
    }
}

type Mat = Vec<Vec<u8>>;

struct Forms<'a> {
    f: &'a FiniteField,
    kind: FormKind,
    fixed: Vec<u8>,
}

impl<'a> Forms<'a> {
    fn new(f: &'a FiniteField, kind: FormKind) -> Result<Self> {
        let fixed = match kind {
            FormKind::Her => {
                if f.sqrt_order().is_none() {
                    return Err(AduError::Unsupported(format!(
                        "Hermitean forms need a square field order, got {}",
                        f.order()
                    )));
                }
                f.elements().filter(|&x| f.conj(x) == x).collect()
            }
            _ => Vec::new(),
        };
        Ok(Self { f, kind, fixed })
    }

    fn conj(&self, x: u8) -> u8 {
        match self.kind {
            FormKind::Her => self.f.conj(x),
            _ => x,
        }
    }

    /// All forms on a `k`-space: skew with zero diagonal (alt), Hermitean
    /// (her), or upper triangular (quad).
    fn all(&self, k: usize) -> Vec<Mat> {
        let b = self.f.order() as u8;
        let mut slots: Vec<(usize, usize, Vec<u8>)> = Vec::new();
        for i in 0..k {
            for j in i..k {
                let vals: Vec<u8> = match (self.kind, i == j) {
                    (FormKind::Alt, true) => continue,
                    (FormKind::Her, true) => self.fixed.clone(),
                    _ => (0..b).collect(),
                };
                slots.push((i, j, vals));
            }
        }
        let mut out = Vec::new();
        let mut pick = vec![0usize; slots.len()];
        loop {
            let mut g = vec![vec![0u8; k]; k];
            for ((i, j, vals), &p) in slots.iter().zip(&pick) {
                let v = vals[p];
                g[*i][*j] = v;
                if i != j {
                    match self.kind {
                        FormKind::Alt => g[*j][*i] = self.f.neg(v),
                        FormKind::Her => g[*j][*i] = self.f.conj(v),
                        FormKind::Quad => {}
                    }
                }
            }
            out.push(g);
            let mut pos = 0;
            loop {
                if pos == pick.len() {
                    return out;
                }
                pick[pos] += 1;
                if pick[pos] < slots[pos].2.len() {
                    break;
                }
                pick[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Form induced on the span of the rows of `c` (coordinates).
    fn restrict(&self, g: &Mat, c: &Mat) -> Mat {
        let f = self.f;
        let k = c.len();
        let mut m = vec![vec![0u8; k]; k];
        for a in 0..k {
            for bb in 0..k {
                let mut s = 0;
                for (i, row) in g.iter().enumerate() {
                    if c[a][i] == 0 {
                        continue;
                    }
                    for (j, &gij) in row.iter().enumerate() {
                        s = f.add(s, f.mul(f.mul(c[a][i], gij), self.conj(c[bb][j])));
                    }
                }
                m[a][bb] = s;
            }
        }
        if self.kind == FormKind::Quad {
            for a in 0..k {
                for bb in a + 1..k {
                    m[a][bb] = f.add(m[a][bb], m[bb][a]);
                    m[bb][a] = 0;
                }
            }
        }
        m
    }

    fn sub(&self, x: &Mat, y: &Mat) -> Mat {
        x.iter().zip(y).map(|(r, s)| r.iter().zip(s).map(|(a, b)| self.f.sub(*a, *b)).collect()).collect()
    }

    /// Rank of the form; for quadratic forms, codimension of the singular radical.
    fn rank(&self, g: &Mat) -> usize {
        let n = g.len();
        if self.kind != FormKind::Quad {
            return rank(self.f, g, n);
        }
        let f = self.f;
        // polar form G + G^T
        let polar: Mat = (0..n).map(|i| (0..n).map(|j| f.add(g[i][j], g[j][i])).collect()).collect();
        let rad = kernel(f, &polar, n);
        let b = f.order();
        let mut singular = 0usize;
        for code in 0..b.pow(rad.len() as u32) {
            let mut c = code;
            let mut v = vec![0u8; n];
            for r in &rad {
                let coef = (c % b) as u8;
                c /= b;
                for (x, y) in v.iter_mut().zip(r) {
                    *x = f.add(*x, f.mul(coef, *y));
                }
            }
            if quad_value(f, g, &v) == 0 {
                singular += 1;
            }
        }
        let dim = (singular as f64).log(b as f64).round() as usize;
        n - dim
    }

    fn key(&self, g: &Mat) -> String {
        g.iter().map(|r| r.iter().map(|&x| char::from_digit(x as u32, 16).unwrap()).collect::<String>()).collect::<Vec<_>>().join(",")
    }

    fn count(&self, k: u32) -> u128 {
        let b = self.f.order() as u128;
        match self.kind {
            FormKind::Alt => b.pow(k * k.saturating_sub(1) / 2),
            FormKind::Quad => b.pow(k * (k + 1) / 2),
            FormKind::Her => (self.fixed.len() as u128).pow(k * k),
        }
    }
}

fn quad_value(f: &FiniteField, g: &Mat, v: &[u8]) -> u8 {
    let mut s = 0;
    for (i, row) in g.iter().enumerate() {
        for (j, &gij) in row.iter().enumerate() {
            s = f.add(s, f.mul(f.mul(v[i], gij), v[j]));
        }
    }
    s
}

/// Basis of `{v : M v = 0}`.
fn kernel(f: &FiniteField, m: &Mat, n: usize) -> Vec<Vec<u8>> {
    let r = super::subspace::rref(f, m, n);
    let pivots: Vec<usize> = r.iter().map(|row| row.iter().position(|&x| x != 0).unwrap()).collect();
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u8; n];
            v[free] = 1;
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = f.neg(row[free]);
            }
            v
        })
        .collect()
}

/// Total element count for the model, before building.
pub fn form_poset_size(kind: FormKind, b: usize, n: usize, model: FormModel) -> Result<u128> {
    let f = FiniteField::new(b)?;
    let forms = Forms::new(&f, kind)?;
    Ok(match model {
        FormModel::RankMetric(_) => forms.count(n as u32),
        FormModel::Extension => {
            (0..=n as u32).map(|i| gaussian_binomial(n as u32, i, b as u128) * forms.count(i)).sum()
        }
    })
}

pub fn build_form_poset(kind: FormKind, b: usize, n: usize, model: FormModel) -> Result<RankedPoset> {
    check_size(form_poset_size(kind, b, n, model)?)?;
    let f = FiniteField::new(b)?;
    let forms = Forms::new(&f, kind)?;
    let params = json!({ "b": b, "N": n, "model": model.to_string() });
    match model {
        FormModel::RankMetric(rule) => {
            let all = forms.all(n);
            let ranks: Vec<usize> = all.iter().map(|g| forms.rank(g)).collect();
            let fiber: Vec<usize> = ranks.iter().map(|&r| rule.apply(r)).collect();
            let mut covers = Vec::new();
            for (x, gx) in all.iter().enumerate() {
                for (y, gy) in all.iter().enumerate() {
                    if fiber[y] == fiber[x] + 1 && forms.rank(&forms.sub(gy, gx)) + ranks[x] == ranks[y] {
                        covers.push((x, y));
                    }
                }
            }
            let items = all.iter().zip(&fiber).map(|(g, &r)| (forms.key(g), r)).collect();
            RankedPoset::from_parts(kind.name(), params, items, covers)
        }
        FormModel::Extension => {
            let mut elems: Vec<(Subspace, Mat)> = Vec::new();
            for k in 0..=n {
                for u in subspaces(&f, n, k) {
                    for g in forms.all(k) {
                        elems.push((u.clone(), g));
                    }
                }
            }
            let index: HashMap<(&Subspace, &Mat), usize> =
                elems.iter().enumerate().map(|(i, (u, g))| ((u, g), i)).collect();
            let mut hyper_cache: HashMap<&Subspace, Vec<(Subspace, Mat)>> = HashMap::new();
            let mut covers = Vec::new();
            for (hi, (u, g)) in elems.iter().enumerate() {
                let hs = hyper_cache.entry(u).or_insert_with(|| u.hyperplanes(&f));
                for (w, coords) in hs.iter() {
                    let gw = forms.restrict(g, coords);
                    covers.push((index[&(w, &gw)], hi));
                }
            }
            let items = elems.iter().map(|(u, g)| (format!("{}/{}", u.key(), forms.key(g)), u.dim())).collect();
            RankedPoset::from_parts(kind.name(), params, items, covers)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LITERAL_ALT: FormModel = FormModel::RankMetric(FiberRule::HalfRank);

    #[test]
    fn alternating_rank_metric_fibers() {
        assert_eq!(build_form_poset(FormKind::Alt, 2, 3, LITERAL_ALT).unwrap().fiber_sizes(), vec![1, 7]);
        assert_eq!(build_form_poset(FormKind::Alt, 2, 2, LITERAL_ALT).unwrap().fiber_sizes(), vec![1, 1]);
        assert_eq!(build_form_poset(FormKind::Alt, 2, 4, LITERAL_ALT).unwrap().fiber_sizes(), vec![1, 35, 28]);
    }

    #[test]
    fn hermitean_one_by_one() {
        let p = build_form_poset(FormKind::Her, 4, 1, FormModel::RankMetric(FiberRule::Rank)).unwrap();
        assert_eq!(p.fiber_sizes(), vec![1, 1]);
        assert!(build_form_poset(FormKind::Her, 2, 1, FormModel::Extension).is_err());
    }

    #[test]
    fn quadratic_rank_in_characteristic_two() {
        let f = FiniteField::new(2).unwrap();
        let forms = Forms::new(&f, FormKind::Quad).unwrap();
        // x^2 has rank 1; xy has rank 2; x^2 + xy + y^2 has rank 2
        assert_eq!(forms.rank(&vec![vec![1, 0], vec![0, 0]]), 1);
        assert_eq!(forms.rank(&vec![vec![0, 1], vec![0, 0]]), 2);
        assert_eq!(forms.rank(&vec![vec![1, 1], vec![0, 1]]), 2);
        // x^2 + y^2 = (x + y)^2 has rank 1
        assert_eq!(forms.rank(&vec![vec![1, 0], vec![0, 1]]), 1);
    }

    #[test]
    fn extension_model_counts() {
        // sum over i of [N,i]_b times the number of forms on an i-space
        let cases = [
            (FormKind::Alt, 2, 2, vec![1, 3, 2]),
            (FormKind::Alt, 2, 3, vec![1, 7, 14, 8]),
            (FormKind::Quad, 2, 2, vec![1, 6, 8]),
            (FormKind::Her, 4, 2, vec![1, 10, 16]),
        ];
        for (kind, b, n, want) in cases {
            let p = build_form_poset(kind, b, n, FormModel::Extension).unwrap();
            assert_eq!(p.fiber_sizes(), want, "{kind:?}");
            let total: usize = want.iter().sum();
            assert_eq!(form_poset_size(kind, b, n, FormModel::Extension).unwrap(), total as u128);
        }
    }

    #[test]
    fn full_space_form_covers_restrictions() {
        let p = build_form_poset(FormKind::Alt, 3, 2, FormModel::Extension).unwrap();
        let rank = p.rank_of();
        for x in 0..p.len() {
            // each form on a k-space restricts to one form on each hyperplane
            let want = gaussian_binomial(rank[x] as u32, 1, 3) as usize;
            assert_eq!(p.lower_covers(x).len(), if rank[x] == 0 { 0 } else { want });
        }
    }
}
