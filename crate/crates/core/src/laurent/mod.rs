//! Laurent polynomials in `lambda` with rational-function coefficients, and
//! the spectral map `psi -> psi_{s,t}`.

mod json;
mod parse;
mod signature;
mod spectral;

pub use json::{CoeffJson, LaurentTermJson, QTermJson};
pub use parse::{parse_laurent, parse_q_laurent};
pub use signature::AlgebraSignature;
pub use spectral::{eigenvalue, inverse_psi_st, project_st, psi_st, scale_arg, StProjection};

use crate::scalars::RatFunc;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Finite sum `sum_i alpha_i lambda^i`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, RatFunc>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::monomial(0, c)
    }

    /// `c * lambda^i`.
    pub fn monomial(i: i64, c: RatFunc) -> Self {
        let mut p = Self::zero();
        p.add_term(i, c);
        p
    }

    /// `lambda^i`.
    pub fn lambda_pow(i: i64) -> Self {
        Self::monomial(i, RatFunc::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, RatFunc)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (i, c) in terms {
            p.add_term(i, c);
        }
        p
    }

    pub fn add_term(&mut self, i: i64, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(i).or_insert_with(RatFunc::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &RatFunc)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff(&self, i: i64) -> RatFunc {
        self.terms.get(&i).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_terms(self.terms().map(|(i, a)| (i, a * c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out.add_term(i + j, a * b);
            }
        }
        out
    }

    /// True when every coefficient is a Laurent polynomial in `q`.
    pub fn has_laurent_coeffs(&self) -> bool {
        self.terms.values().all(RatFunc::is_laurent)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (i, c) in rhs.terms() {
            out.add_term(i, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(i, c)| (i, -c)))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (i, c)) in self.terms().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "({})", c.pretty())?,
                _ => write!(f, "({})*lambda^{i}", c.pretty())?,
            }
        }
        Ok(())
    }
}
