//! The seven catalog rows `(s, t, varphi, phi)`.

use crate::geometry::fmt_half;
use crate::laurent::{psi_st, LaurentPoly};
use crate::scalars::{BigRational, RatFunc};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Row {
    Polar,
    Attenuated,
    Alt,
    Her,
    Quad,
    Hem,
    PolarTop,
}

impl Row {
    pub const ALL: [Row; 7] = [Row::Polar, Row::Attenuated, Row::Alt, Row::Her, Row::Quad, Row::Hem, Row::PolarTop];

    pub fn name(self) -> &'static str {
        match self {
            Row::Polar => "polar",
            Row::Attenuated => "attenuated",
            Row::Alt => "alt",
            Row::Her => "her",
            Row::Quad => "quad",
            Row::Hem => "hem",
            Row::PolarTop => "polar_top",
        }
    }

    pub fn parse(text: &str) -> Option<Row> {
        let t = text.trim().to_ascii_lowercase().replace('-', "_");
        Row::ALL.into_iter().find(|r| r.name() == t).or(match t.as_str() {
            "a" | "att" => Some(Row::Attenuated),
            "top" | "polartop" => Some(Row::PolarTop),
            _ => None,
        })
    }

    pub fn uses_m(self) -> bool {
        self == Row::Attenuated
    }

    pub fn uses_eps(self) -> bool {
        matches!(self, Row::Polar | Row::PolarTop)
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Row parameters; `eps2` is twice the row's `eps`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RowParams {
    pub n: i64,
    pub m: i64,
    pub eps2: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub row: Row,
    pub params: RowParams,
    pub s: i64,
    pub t: i64,
    pub varphi: LaurentPoly,
    pub phi: LaurentPoly,
}

/// `-(q + q^-1) q^k`
fn varphi_coeff(k: i64) -> RatFunc {
    let m1 = BigRational::from_integer((-1).into());
    RatFunc::from_laurent_terms(&[(k + 1, m1.clone()), (k - 1, m1)])
}

/// `-q^k / (q - q^-1)^2`
fn phi_coeff(k: i64) -> RatFunc {
    let d = RatFunc::from_laurent_terms(&[
        (2, BigRational::from_integer(1.into())),
        (0, BigRational::from_integer((-2).into())),
        (-2, BigRational::from_integer(1.into())),
    ]);
    (-RatFunc::q_pow(k)).div(&d).expect("(q - q^-1)^2 is nonzero")
}

pub fn table_row(row: Row, p: RowParams) -> TableRow {
    let RowParams { n, m, eps2: e } = p;
    let single = |lam: i64, vk: i64, pk: i64| {
        (LaurentPoly::monomial(lam, varphi_coeff(vk)), LaurentPoly::monomial(lam, phi_coeff(pk)))
    };
    let (s, t, (varphi, phi)) = match row {
        Row::Polar => {
            let varphi = LaurentPoly::from_terms([(2, varphi_coeff(2 * n + 1 + e)), (-1, varphi_coeff(n - 3))]);
            let phi = LaurentPoly::from_terms([(2, phi_coeff(2 * n + e)), (-1, phi_coeff(n - 1))]);
            (0, 1, (varphi, phi))
        }
        Row::Attenuated => (-1, 0, single(1, n + 2 * m + 1, n + 2 * m - 1)),
        Row::Alt | Row::Hem => (-2, -1, single(0, 2 * n + 1, 2 * n - 2)),
        Row::Her => (-2, -1, single(0, 2 * n + 2, 2 * n - 1)),
        Row::Quad => (-2, -1, single(0, 2 * n + 3, 2 * n)),
        Row::PolarTop => (-2, -1, single(0, 2 * n + 3 + e, 2 * n + e)),
    };
    TableRow { row, params: p, s, t, varphi, phi }
}

impl TableRow {
    /// Whether `psi_{s,t}(phi) = varphi` holds exactly.
    pub fn consistent(&self) -> bool {
        psi_st(&self.phi, self.s, self.t) == self.varphi
    }

    pub fn describe(&self) -> String {
        let mut d = format!("{}(N={}", self.row, self.params.n);
        if self.row.uses_m() {
            d += &format!(", M={}", self.params.m);
        }
        if self.row.uses_eps() {
            d += &format!(", eps={}", fmt_half(self.params.eps2));
        }
        d + ")"
    }
}

/// Symbolic check of every row over `N in {1,2,3}`, `M in {1,2}` and `eps` in
/// `{-1, -1/2, ..., 2}` (catalog values with both offsets).
pub fn table_check() -> Vec<(TableRow, bool)> {
    let mut out = Vec::new();
    for row in Row::ALL {
        let ms: &[i64] = if row.uses_m() { &[1, 2] } else { &[1] };
        let eps: Vec<i64> = if row.uses_eps() { (-2..=4).collect() } else { vec![0] };
        for n in 1..=3 {
            for &m in ms {
                for &eps2 in &eps {
                    let r = table_row(row, RowParams { n, m, eps2 });
                    let ok = r.consistent();
                    out.push((r, ok));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::inverse_psi_st;

    #[test]
    fn every_row_is_consistent() {
        let rows = table_check();
        assert_eq!(rows.len(), 3 * (7 + 7 + 2 + 4));
        for (r, ok) in rows {
            assert!(ok, "{}", r.describe());
        }
    }

    #[test]
    fn alternating_row_by_hand() {
        // (1-q^4)(1-q^2)/(q-q^-1)^2 = q^2(1+q^2), so phi_{s,t} picks up -(q+q^-1) q^(2N+1)
        let r = table_row(Row::Alt, RowParams { n: 3, m: 0, eps2: 0 });
        assert_eq!(r.varphi.coeff(0), varphi_coeff(7));
        assert_eq!(inverse_psi_st(&r.varphi, -2, -1).unwrap(), r.phi);
    }

    #[test]
    fn quad_row_differs_from_alt_row() {
        let p = RowParams { n: 3, m: 0, eps2: 0 };
        assert_ne!(table_row(Row::Alt, p).varphi, table_row(Row::Quad, p).varphi);
    }
}
