//! Totally isotropic subspaces of the classical polar spaces.

use super::field::{Field, FiniteField};
use super::guard::check_size;
use super::poset::RankedPoset;
use super::subspace::{gaussian_binomial, Subspace};
use crate::error::{AduError, Result};
use serde_json::json;
use std::collections::HashMap;

/// Polar space type, named by twice its catalog parameter `e`:
/// 0 hyperbolic, 1 Hermitean (dim 2N), 2 parabolic, 3 Hermitean (dim 2N+1),
/// 4 elliptic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolarKind {
    e2: u8,
}

impl PolarKind {
    pub const HYPERBOLIC: Self = Self { e2: 0 };
    pub const PARABOLIC: Self = Self { e2: 2 };
    pub const ELLIPTIC: Self = Self { e2: 4 };

    pub fn from_doubled(e2: i64) -> Result<Self> {
        match e2 {
            0..=4 => Ok(Self { e2: e2 as u8 }),
            _ => Err(AduError::Unsupported(format!("polar parameter eps = {} is not in the catalog", fmt_half(e2)))),
        }
    }

    /// Parses `0`, `1`, `2`, `1/2`, `3/2` (or `0.5`, `1.5`).
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_doubled(parse_half(text)?)
    }

    pub fn doubled(self) -> i64 {
        self.e2 as i64
    }

    pub fn is_hermitean(self) -> bool {
        self.e2 % 2 == 1
    }

    pub fn name(self) -> &'static str {
        ["hyperbolic", "hermitean-even", "parabolic", "hermitean-odd", "elliptic"][self.e2 as usize]
    }

    pub fn ambient_dim(self, n: usize) -> usize {
        2 * n + self.e2 as usize / 2
    }

    pub fn validate_field(self, b: usize) -> Result<()> {
        if self.is_hermitean() && FiniteField::new(b)?.sqrt_order().is_none() {
            return Err(AduError::Unsupported(format!("Hermitean polar space needs a square field order, got {b}")));
        }
        Ok(())
    }
}

/// Parses an integer or half-integer and returns it doubled.
pub fn parse_half(text: &str) -> Result<i64> {
    let t = text.trim();
    let err = || AduError::Parse(format!("expected an integer or half-integer, got {t:?}"));
    if let Some(num) = t.strip_suffix("/2") {
        let n: i64 = num.trim().parse().map_err(|_| err())?;
        return Ok(n);
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let w: i64 = whole.parse().map_err(|_| err())?;
        let sign = if t.starts_with('-') { -1 } else { 1 };
        return match frac.trim_end_matches('0') {
            "" => Ok(2 * w),
            "5" => Ok(2 * w + sign),
            _ => Err(err()),
        };
    }
    t.parse::<i64>().map(|n| 2 * n).map_err(|_| err())
}

pub fn fmt_half(e2: i64) -> String {
    if e2 % 2 == 0 {
        (e2 / 2).to_string()
    } else {
        format!("{e2}/2")
    }
}

/// `b^(x/2)`; `b` must be a square when `x` is odd.
fn pow_half(b: u128, x: i64) -> u128 {
    assert!(x >= 0);
    if x % 2 == 0 {
        b.pow((x / 2) as u32)
    } else {
        let r = (b as f64).sqrt().round() as u128;
        assert_eq!(r * r, b);
        r.pow(x as u32)
    }
}

/// Number of totally isotropic `i`-subspaces.
pub fn polar_count(b: u128, n: u32, kind: PolarKind, i: u32) -> u128 {
    let mut c = gaussian_binomial(n, i, b);
    for j in 0..i {
        c *= pow_half(b, 2 * (n as i64 - j as i64 - 1) + kind.doubled()) + 1;
    }
    c
}

pub fn polar_total(b: u128, n: u32, kind: PolarKind) -> u128 {
    (0..=n).map(|i| polar_count(b, n, kind, i)).sum()
}

/// The defining form of a polar space on `GF(b)^dim`.
pub struct PolarForm {
    f: Field,
    kind: PolarKind,
    n: usize,
    dim: usize,
    nu: u8,
}

impl PolarForm {
    pub fn new(f: Field, n: usize, kind: PolarKind) -> Result<Self> {
        kind.validate_field(f.order())?;
        let dim = kind.ambient_dim(n);
        // x^2 + x y + nu y^2 is irreducible iff t^2 + t + nu has no root
        let nu = if kind == PolarKind::ELLIPTIC {
            f.elements()
                .find(|&nu| f.elements().all(|x| f.add(f.add(f.mul(x, x), x), nu) != 0))
                .ok_or_else(|| AduError::Unsupported("no irreducible binary quadratic".into()))?
        } else {
            0
        };
        Ok(Self { f, kind, n, dim, nu })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &FiniteField {
        &self.f
    }

    /// Quadratic form value (quadratic types only).
    pub fn quad(&self, v: &[u8]) -> u8 {
        let f = &self.f;
        let mut s = 0;
        for i in 0..self.n {
            s = f.add(s, f.mul(v[2 * i], v[2 * i + 1]));
        }
        let m = 2 * self.n;
        match self.kind.e2 {
            2 => s = f.add(s, f.mul(v[m], v[m])),
            4 => {
                let (x, y) = (v[m], v[m + 1]);
                s = f.add(s, f.add(f.add(f.mul(x, x), f.mul(x, y)), f.mul(self.nu, f.mul(y, y))));
            }
            _ => {}
        }
        s
    }

    /// Associated bilinear form (quadratic types) or the Hermitean form.
    pub fn pair(&self, u: &[u8], v: &[u8]) -> u8 {
        let f = &self.f;
        if self.kind.is_hermitean() {
            let mut s = 0;
            for i in 0..self.n {
                s = f.add(s, f.mul(u[2 * i], f.conj(v[2 * i + 1])));
                s = f.add(s, f.mul(u[2 * i + 1], f.conj(v[2 * i])));
            }
            if self.kind.e2 == 3 {
                s = f.add(s, f.mul(u[2 * self.n], f.conj(v[2 * self.n])));
            }
            return s;
        }
        let w: Vec<u8> = u.iter().zip(v).map(|(a, b)| f.add(*a, *b)).collect();
        f.sub(f.sub(self.quad(&w), self.quad(u)), self.quad(v))
    }

    pub fn is_singular(&self, v: &[u8]) -> bool {
        if self.kind.is_hermitean() {
            self.pair(v, v) == 0
        } else {
            self.quad(v) == 0
        }
    }

    pub fn is_totally_isotropic(&self, u: &Subspace) -> bool {
        let rows = u.rows();
        rows.iter().all(|r| self.is_singular(r)) && rows.iter().all(|a| rows.iter().all(|b| self.pair(a, b) == 0))
    }

    /// Projective singular points, each normalized to leading coordinate 1.
    pub fn singular_points(&self) -> Vec<Vec<u8>> {
        let b = self.f.order();
        let mut out = Vec::new();
        let mut v = vec![0u8; self.dim];
        for lead in 0..self.dim {
            let free = self.dim - lead - 1;
            let total = b.pow(free as u32);
            for code in 0..total {
                v.iter_mut().for_each(|x| *x = 0);
                v[lead] = 1;
                let mut c = code;
                for x in v.iter_mut().skip(lead + 1) {
                    *x = (c % b) as u8;
                    c /= b;
                }
                if self.is_singular(&v) {
                    out.push(v.clone());
                }
            }
        }
        out
    }
}

/// All totally isotropic subspaces, grown one singular point at a time.
pub fn build_polar(b: usize, n: usize, kind: PolarKind) -> Result<RankedPoset> {
    kind.validate_field(b)?;
    check_size(polar_total(b as u128, n as u32, kind))?;
    let f = FiniteField::new(b)?;
    let form = PolarForm::new(f.clone(), n, kind)?;
    let dim = form.dim();
    let points = form.singular_points();

    let mut index: HashMap<Subspace, usize> = HashMap::new();
    let mut items: Vec<(String, usize)> = Vec::new();
    let mut covers = Vec::new();
    let zero = Subspace::zero(dim);
    index.insert(zero.clone(), 0);
    items.push((zero.key(), 0));
    let mut level = vec![zero];
    for k in 0..=n {
        let mut next = Vec::new();
        for u in &level {
            let lo = index[u];
            for p in &points {
                if u.rows().iter().any(|r| form.pair(r, p) != 0) || u.contains(&f, p) {
                    continue;
                }
                if k == n {
                    return Err(AduError::Unsupported(format!(
                        "Witt index mismatch: found a totally isotropic subspace of dimension {}",
                        n + 1
                    )));
                }
                let w = u.extend(&f, p);
                let hi = *index.entry(w.clone()).or_insert_with(|| {
                    items.push((w.key(), k + 1));
                    next.push(w);
                    items.len() - 1
                });
                covers.push((lo, hi));
            }
        }
        if k < n && next.is_empty() {
            return Err(AduError::Unsupported(format!("Witt index mismatch: no totally isotropic {}-space", k + 1)));
        }
        level = next;
    }
    let params = json!({ "b": b, "N": n, "eps": fmt_half(kind.doubled()), "form": kind.name() });
    RankedPoset::from_parts("polar", params, items, covers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_half_integers() {
        assert_eq!(parse_half("3/2").unwrap(), 3);
        assert_eq!(parse_half("1.5").unwrap(), 3);
        assert_eq!(parse_half("2").unwrap(), 4);
        assert_eq!(parse_half("-1").unwrap(), -2);
        assert!(parse_half("x").is_err());
        assert_eq!(fmt_half(3), "3/2");
        assert_eq!(fmt_half(-2), "-1");
    }

    #[test]
    fn ambient_dimensions() {
        let dims: Vec<usize> = (0..5).map(|e| PolarKind::from_doubled(e).unwrap().ambient_dim(2)).collect();
        assert_eq!(dims, vec![4, 4, 5, 5, 6]);
    }

    #[test]
    fn parabolic_quadrangle() {
        let p = build_polar(2, 2, PolarKind::PARABOLIC).unwrap();
        assert_eq!(p.fiber_sizes(), vec![1, 15, 15]);
        // each line has 3 points, each point on 3 lines
        assert_eq!(p.covers.len(), 15 + 45);
    }

    #[test]
    fn hyperbolic_plane_has_two_points() {
        assert_eq!(build_polar(2, 1, PolarKind::HYPERBOLIC).unwrap().fiber_sizes(), vec![1, 2]);
    }

    #[test]
    fn enumeration_matches_closed_form() {
        for (b, n, e2) in [(2, 2, 0), (2, 2, 4), (3, 2, 0), (3, 2, 2), (3, 1, 4), (4, 2, 1), (4, 1, 3), (2, 3, 2), (4, 2, 3)] {
            let kind = PolarKind::from_doubled(e2).unwrap();
            let p = build_polar(b, n, kind).unwrap();
            let want: Vec<usize> = (0..=n).map(|i| polar_count(b as u128, n as u32, kind, i as u32) as usize).collect();
            assert_eq!(p.fiber_sizes(), want, "b={b} n={n} e2={e2}");
        }
    }

    #[test]
    fn hermitean_needs_square_order() {
        assert!(build_polar(2, 2, PolarKind::from_doubled(1).unwrap()).is_err());
    }
}
