use super::element::{Algebra, BElement};
use crate::laurent::{psi_st, LaurentPoly};
use crate::scalars::RatFunc;

/// Residuals of the two cubic relations
///
/// ```text
/// E^2F - (q^-2s + q^-2t) EFE + q^(-2s-2t) FE^2 - E varphi(K)
/// EF^2 - (q^-2s + q^-2t) FEF + q^(-2s-2t) F^2E - varphi(K) F
/// ```
#[derive(Clone, Debug)]
pub struct CubicReport {
    pub lowering: BElement,
    pub raising: BElement,
}

impl CubicReport {
    pub fn passed(&self) -> bool {
        self.lowering.is_zero() && self.raising.is_zero()
    }
}

/// `q^-2s + q^-2t` and `q^(-2s-2t)`.
pub fn cubic_coefficients(s: i64, t: i64) -> (RatFunc, RatFunc) {
    (&RatFunc::q_pow(-2 * s) + &RatFunc::q_pow(-2 * t), RatFunc::q_pow(-2 * s - 2 * t))
}

/// Checks the cubic relations with `varphi = psi_{s,t}(phi)`.
pub fn verify_cubic_relations(alg: &Algebra) -> CubicReport {
    let varphi = psi_st(alg.phi(), alg.s(), alg.t());
    verify_cubic_relations_with(alg, &varphi)
}

/// Same check against an explicitly supplied `varphi`; a mismatched `varphi`
/// leaves nonzero residuals.
pub fn verify_cubic_relations_with(alg: &Algebra, varphi: &LaurentPoly) -> CubicReport {
    let (alpha, beta) = cubic_coefficients(alg.s(), alg.t());
    let (e, f) = (alg.e(), alg.f());
    let vk = alg.laurent_at_k(varphi, 0);
    let ee = &e * &e;
    let ff = &f * &f;
    let lowering = &(&(&(&ee * &f) - &(&(&e * &f) * &e).scale(&alpha)) + &(&f * &ee).scale(&beta)) - &(&e * &vk);
    let raising = &(&(&(&e * &ff) - &(&(&f * &e) * &f).scale(&alpha)) + &(&ff * &e).scale(&beta)) - &(&vk * &f);
    CubicReport { lowering, raising }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::AlgebraSignature;

    fn alg(s: i64, t: i64, phi: LaurentPoly) -> Algebra {
        Algebra::new(AlgebraSignature::new(s, t, phi).unwrap())
    }

    #[test]
    fn lambda_squared_signature_passes() {
        let a = alg(0, 1, LaurentPoly::lambda_pow(2));
        assert!(verify_cubic_relations(&a).passed());
    }

    #[test]
    fn constant_phi_gives_down_up_relations() {
        let c = RatFunc::from_int(-5);
        let a = alg(-2, -1, LaurentPoly::constant(c));
        assert!(verify_cubic_relations(&a).passed());
        // e^2 f = alpha efe + beta fe^2 + gamma e with beta = -q^(-2s-2t)
        let (alpha, b) = cubic_coefficients(-2, -1);
        let beta = -&b;
        let varphi = psi_st(a.phi(), -2, -1);
        let gamma = varphi.coeff(0);
        let (e, f) = (a.e(), a.f());
        let lhs = &(&e * &e) * &f;
        let rhs = &(&(&(&e * &f) * &e).scale(&alpha) + &(&(&f * &e) * &e).scale(&beta)) + &e.scale(&gamma);
        assert_eq!(lhs, rhs);
        let lhs2 = &(&e * &f) * &f;
        let rhs2 = &(&(&(&f * &e) * &f).scale(&alpha) + &(&(&f * &f) * &e).scale(&beta)) + &f.scale(&gamma);
        assert_eq!(lhs2, rhs2);
    }

    #[test]
    fn perturbed_varphi_fails() {
        let phi = LaurentPoly::from_terms([(2, RatFunc::one()), (0, RatFunc::from_int(3))]);
        let a = alg(-1, 1, phi.clone());
        let mut varphi = psi_st(&phi, -1, 1);
        varphi.add_term(2, RatFunc::one());
        let r = verify_cubic_relations_with(&a, &varphi);
        assert!(!r.passed());
        assert!(!r.lowering.is_zero());
    }
}
