use super::LaurentPoly;
use crate::error::{AduError, Result};
use crate::scalars::RatFunc;

/// Substitutes `lambda -> q^m lambda`: each `alpha_i` becomes `alpha_i q^(m i)`.
pub fn scale_arg(psi: &LaurentPoly, m: i64) -> LaurentPoly {
    LaurentPoly::from_terms(psi.terms().map(|(i, c)| (i, c.mul_q_pow(m * i))))
}

/// Eigenvalue of `psi -> psi_{s,t}` on `lambda^i`:
/// `q^(3i) (q^(-2i) - q^(-2s)) (q^(-2i) - q^(-2t))`. Zero iff `i` is `s` or `t`.
pub fn eigenvalue(i: i64, s: i64, t: i64) -> RatFunc {
    let a = &RatFunc::q_pow(-2 * i) - &RatFunc::q_pow(-2 * s);
    let b = &RatFunc::q_pow(-2 * i) - &RatFunc::q_pow(-2 * t);
    (&a * &b).mul_q_pow(3 * i)
}

/// `psi(q^-1 lambda) - (q^-2s + q^-2t) psi(q lambda) + q^(-2s-2t) psi(q^3 lambda)`.
///
/// Computed from the substitution itself rather than from [`eigenvalue`], so the
/// two can be checked against each other.
pub fn psi_st(psi: &LaurentPoly, s: i64, t: i64) -> LaurentPoly {
    let alpha = &RatFunc::q_pow(-2 * s) + &RatFunc::q_pow(-2 * t);
    let beta = RatFunc::q_pow(-2 * s - 2 * t);
    let a = scale_arg(psi, -1);
    let b = scale_arg(psi, 1).scale(&alpha);
    let c = scale_arg(psi, 3).scale(&beta);
    &(&a - &b) + &c
}

/// Inverse of `psi_st` restricted to polynomials supported off `{s, t}`.
pub fn inverse_psi_st(varphi: &LaurentPoly, s: i64, t: i64) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for (i, c) in varphi.terms() {
        if i == s || i == t {
            return Err(AduError::SupportViolation { exponent: i, s, t });
        }
        out.add_term(i, c.div(&eigenvalue(i, s, t))?);
    }
    Ok(out)
}

/// Direct-sum split `psi = rest + a lambda^s + b lambda^t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StProjection {
    pub rest: LaurentPoly,
    pub s_coeff: RatFunc,
    pub t_coeff: RatFunc,
}

impl StProjection {
    pub fn reassemble(&self, s: i64, t: i64) -> LaurentPoly {
        let mut p = self.rest.clone();
        p.add_term(s, self.s_coeff.clone());
        p.add_term(t, self.t_coeff.clone());
        p
    }
}

pub fn project_st(psi: &LaurentPoly, s: i64, t: i64) -> StProjection {
    StProjection {
        rest: LaurentPoly::from_terms(psi.terms().filter(|(i, _)| *i != s && *i != t).map(|(i, c)| (i, c.clone()))),
        s_coeff: psi.coeff(s),
        t_coeff: psi.coeff(t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::BigRational;

    fn q(k: i64) -> RatFunc {
        RatFunc::q_pow(k)
    }

    fn lam(i: i64) -> LaurentPoly {
        LaurentPoly::lambda_pow(i)
    }

    #[test]
    fn scale_arg_examples() {
        assert_eq!(scale_arg(&lam(2), 1), LaurentPoly::monomial(2, q(2)));
        assert_eq!(scale_arg(&lam(-1), 3), LaurentPoly::monomial(-1, q(-3)));
        let five = LaurentPoly::constant(RatFunc::from_int(5));
        assert_eq!(scale_arg(&five, -1), five);
    }

    #[test]
    fn kernel_contains_lambda_s_and_t() {
        for (s, t) in [(0, 1), (-2, -1), (3, -3)] {
            assert!(psi_st(&lam(s), s, t).is_zero());
            assert!(psi_st(&lam(t), s, t).is_zero());
            assert!(eigenvalue(s, s, t).is_zero());
        }
    }

    #[test]
    fn eigenvalue_examples() {
        // i = 2, s = 0, t = 1: q^6 (q^-4 - 1)(q^-4 - q^-2)
        let expected = &(&(&q(-4) - &RatFunc::one()) * &(&q(-4) - &q(-2))) * &q(6);
        assert_eq!(eigenvalue(2, 0, 1), expected);
        assert_eq!(psi_st(&lam(2), 0, 1), LaurentPoly::monomial(2, expected));
        // i = 0, s = -2, t = -1: (1 - q^4)(1 - q^2)
        let e0 = &(&RatFunc::one() - &q(4)) * &(&RatFunc::one() - &q(2));
        assert_eq!(eigenvalue(0, -2, -1), e0);
        let c = RatFunc::from_rational(&BigRational::new(7.into(), 3.into()));
        assert_eq!(psi_st(&LaurentPoly::constant(c.clone()), -2, -1), LaurentPoly::constant(&c * &e0));
    }

    #[test]
    fn inverse_of_alternating_forms_row() {
        // N = 3: -(q + q^-1) q^7  ->  -q^4 / (q - q^-1)^2
        let varphi = LaurentPoly::constant(-(&(&q(1) + &q(-1)) * &q(7)));
        let d = &q(1) - &q(-1);
        let expected = LaurentPoly::constant(-(q(4).div(&(&d * &d)).unwrap()));
        assert_eq!(inverse_psi_st(&varphi, -2, -1).unwrap(), expected);
        assert!(inverse_psi_st(&LaurentPoly::zero(), 0, 1).unwrap().is_zero());
    }

    #[test]
    fn inverse_rejects_kernel_exponents() {
        let err = inverse_psi_st(&lam(1), 0, 1).unwrap_err();
        assert_eq!(err, AduError::SupportViolation { exponent: 1, s: 0, t: 1 });
    }

    #[test]
    fn projection_examples() {
        let p = &lam(-2) + &lam(2);
        let pr = project_st(&p, -2, 1);
        assert_eq!(pr.rest, lam(2));
        assert!(pr.s_coeff.is_one());
        assert!(pr.t_coeff.is_zero());
        assert_eq!(pr.reassemble(-2, 1), p);
        let z = project_st(&LaurentPoly::zero(), 0, 1);
        assert!(z.rest.is_zero() && z.s_coeff.is_zero() && z.t_coeff.is_zero());
    }
}
