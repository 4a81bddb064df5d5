use super::LaurentPoly;
use crate::error::{AduError, Result};
use std::fmt;

/// Parameters `(s, t, phi)` of an ADU algebra: distinct integers and a Laurent
/// polynomial whose support avoids `s` and `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSignature {
    s: i64,
    t: i64,
    phi: LaurentPoly,
}

impl AlgebraSignature {
    pub fn new(s: i64, t: i64, phi: LaurentPoly) -> Result<Self> {
        if s == t {
            return Err(AduError::InvalidSignature(format!("s and t must differ (both are {s})")));
        }
        if let Some(e) = phi.support().into_iter().find(|&e| e == s || e == t) {
            return Err(AduError::SupportViolation { exponent: e, s, t });
        }
        Ok(Self { s, t, phi })
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn phi(&self) -> &LaurentPoly {
        &self.phi
    }
}

impl fmt::Display for AlgebraSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(s={}, t={}, phi={})", self.s, self.t, self.phi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_equal_s_t() {
        assert!(matches!(AlgebraSignature::new(1, 1, LaurentPoly::zero()), Err(AduError::InvalidSignature(_))));
    }

    #[test]
    fn rejects_phi_on_s() {
        let err = AlgebraSignature::new(0, 1, LaurentPoly::lambda_pow(0)).unwrap_err();
        assert_eq!(err, AduError::SupportViolation { exponent: 0, s: 0, t: 1 });
    }
}
