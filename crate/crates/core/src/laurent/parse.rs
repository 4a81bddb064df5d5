//! Compact text grammar for user-supplied Laurent polynomials.
//!
//! ```text
//! laurent := term (';' term)*          e.g.  "2:q^3 - 1; const:-1/2; -1:q"
//! term    := EXP ':' qpoly             EXP is an integer or `const` (= 0)
//! qpoly   := Laurent polynomial in q with rational coefficients,
//!            e.g. "3/2*q^2 - q^-1 + 5", "2q", "-q^(-3)"
//! ```
//! Commas are accepted as separators too.

use super::LaurentPoly;
use crate::error::{AduError, Result};
use crate::scalars::{BigRational, RatFunc};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn perr(msg: impl Into<String>) -> AduError {
    AduError::Parse(msg.into())
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| perr(format!("bad number {s:?}")))?;
    let d: BigInt = d.parse().map_err(|_| perr(format!("bad number {s:?}")))?;
    if d.is_zero() {
        return Err(AduError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

fn parse_q_term(term: &str) -> Result<(i64, BigRational)> {
    let Some(qpos) = term.find('q') else {
        return Ok((0, parse_rational(term)?));
    };
    let coeff_part = term[..qpos].trim_end_matches('*');
    let coeff = if coeff_part.is_empty() { BigRational::one() } else { parse_rational(coeff_part)? };
    let rest = &term[qpos + 1..];
    let exp = if rest.is_empty() {
        1
    } else {
        let e = rest.strip_prefix('^').ok_or_else(|| perr(format!("bad q term {term:?}")))?;
        let e = e.trim_start_matches('(').trim_end_matches(')');
        e.parse::<i64>().map_err(|_| perr(format!("bad exponent in {term:?}")))?
    };
    Ok((exp, coeff))
}

/// Parses a Laurent polynomial in `q` with rational coefficients.
pub fn parse_q_laurent(text: &str) -> Result<RatFunc> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(perr("empty coefficient"));
    }
    let bytes = s.as_bytes();
    let mut terms = Vec::new();
    let mut start = 0;
    for k in 1..bytes.len() {
        let c = bytes[k];
        let prev = bytes[k - 1];
        if (c == b'+' || c == b'-') && prev != b'^' && prev != b'(' && prev != b'*' {
            terms.push(&s[start..k]);
            start = k;
        }
    }
    terms.push(&s[start..]);
    let mut parsed = Vec::new();
    for t in terms {
        let (neg, body) = match t.as_bytes()[0] {
            b'-' => (true, &t[1..]),
            b'+' => (false, &t[1..]),
            _ => (false, t),
        };
        if body.is_empty() {
            return Err(perr(format!("dangling sign in {text:?}")));
        }
        let (e, c) = parse_q_term(body)?;
        parsed.push((e, if neg { -c } else { c }));
    }
    Ok(RatFunc::from_laurent_terms(&parsed))
}

/// Parses the `EXP:COEFF; ...` grammar, or JSON when the text starts with `[`.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly> {
    let text = text.trim();
    if text.starts_with('[') {
        return LaurentPoly::from_json(text);
    }
    let mut p = LaurentPoly::zero();
    if text.is_empty() || text == "0" {
        return Ok(p);
    }
    for part in text.split([';', ',']).map(str::trim).filter(|s| !s.is_empty()) {
        let (e, c) = part.split_once(':').ok_or_else(|| perr(format!("expected EXP:COEFF, got {part:?}")))?;
        let e = match e.trim() {
            "const" => 0,
            other => other.parse::<i64>().map_err(|_| perr(format!("bad lambda exponent {other:?}")))?,
        };
        p.add_term(e, parse_q_laurent(c)?);
    }
    Ok(p)
}
