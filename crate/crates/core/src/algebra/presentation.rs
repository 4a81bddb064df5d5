//! The presentation with generators `e, f, k^{+-1}` and parameter `varphi`,
//! evaluated through the isomorphism `e -> E, f -> F, k -> K` into the normal
//! form algebra with `phi = psi_{s,t}^{-1}(varphi)`.

use super::casimir::Which;
use super::element::{Algebra, BElement};
use super::relations::cubic_coefficients;
use crate::error::{AduError, Result};
use crate::laurent::{inverse_psi_st, AlgebraSignature, LaurentPoly};
use crate::scalars::RatFunc;

#[derive(Clone, Debug)]
pub struct APresentation {
    varphi: LaurentPoly,
    alg: Algebra,
}

/// Parses a word such as `"e^2 f"`, `"k^-1 e k"` or `"efe"` into
/// `(generator, exponent)` pairs. The empty word and `"1"` are the identity.
pub fn parse_word(word: &str) -> Result<Vec<(char, i64)>> {
    let chars: Vec<char> = word.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if chars == ['1'] {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let g = chars[k];
        if !matches!(g, 'e' | 'f' | 'k') {
            return Err(AduError::Parse(format!("unknown generator {g:?} in {word:?}")));
        }
        k += 1;
        let mut exp = 1;
        if k < chars.len() && chars[k] == '^' {
            k += 1;
            let start = k;
            if k < chars.len() && (chars[k] == '-' || chars[k] == '(') {
                k += 1;
            }
            while k < chars.len() && (chars[k].is_ascii_digit() || chars[k] == '-' || chars[k] == ')') {
                k += 1;
            }
            let text: String = chars[start..k].iter().filter(|c| **c != '(' && **c != ')').collect();
            exp = text.parse().map_err(|_| AduError::Parse(format!("bad exponent in {word:?}")))?;
        }
        if g != 'k' && exp < 0 {
            return Err(AduError::Parse(format!("negative power of {g} in {word:?}")));
        }
        out.push((g, exp));
    }
    Ok(out)
}

impl APresentation {
    pub fn new(s: i64, t: i64, varphi: LaurentPoly) -> Result<Self> {
        if s == t {
            return Err(AduError::InvalidSignature(format!("s and t must differ (both are {s})")));
        }
        let phi = inverse_psi_st(&varphi, s, t)?;
        Ok(Self { varphi, alg: Algebra::new(AlgebraSignature::new(s, t, phi)?) })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn varphi(&self) -> &LaurentPoly {
        &self.varphi
    }

    /// Image of a word in `e, f, k^{+-1}`.
    pub fn word(&self, word: &str) -> Result<BElement> {
        let alg = &self.alg;
        let mut acc = alg.one();
        for (g, n) in parse_word(word)? {
            let factor = match g {
                'e' => alg.e().pow(n as u32),
                'f' => alg.f().pow(n as u32),
                _ => alg.k(n),
            };
            acc = &acc * &factor;
        }
        Ok(acc)
    }

    fn w(&self, word: &str) -> BElement {
        self.word(word).expect("built-in word")
    }

    /// Residuals of the defining relations
    /// `e^2f - (q^-2s + q^-2t) efe + q^(-2s-2t) fe^2 - e varphi(k)` and
    /// `ef^2 - (q^-2s + q^-2t) fef + q^(-2s-2t) f^2e - varphi(k) f`.
    pub fn relation_residuals(&self) -> (BElement, BElement) {
        let (alpha, beta) = cubic_coefficients(self.alg.s(), self.alg.t());
        let vk = self.alg.laurent_at_k(&self.varphi, 0);
        let r1 = &(&(&self.w("e^2 f") - &self.w("efe").scale(&alpha)) + &self.w("f e^2").scale(&beta)) - &(&self.w("e") * &vk);
        let r2 = &(&(&self.w("e f^2") - &self.w("fef").scale(&alpha)) + &self.w("f^2 e").scale(&beta)) - &(&vk * &self.w("f"));
        (r1, r2)
    }

    /// `c_s` (or `c_t`) assembled from the images of `fe`, `ef` and `k`.
    pub fn casimir(&self, which: Which) -> BElement {
        let (own, other) = match which {
            Which::S => (self.alg.s(), self.alg.t()),
            Which::T => (self.alg.t(), self.alg.s()),
        };
        let phi = self.alg.phi();
        let numer = &(&(&self.w("fe").scale(&RatFunc::q_pow(-other)) - &self.w("ef").scale(&RatFunc::q_pow(other)))
            + &self.alg.laurent_at_k(phi, -1).scale(&RatFunc::q_pow(other)))
            - &self.alg.laurent_at_k(phi, 1).scale(&RatFunc::q_pow(-other));
        let denom = (&RatFunc::q_pow(own - other) - &RatFunc::q_pow(other - own)).inv().expect("s != t");
        &numer.scale(&denom) * &self.alg.k(-own)
    }

    /// Residuals of `fe = c_s q^s k^s + c_t q^t k^t + phi(qk)` and
    /// `ef = c_s q^-s k^s + c_t q^-t k^t + phi(q^-1 k)`.
    pub fn casimir_expansion_residuals(&self) -> (BElement, BElement) {
        let (s, t) = (self.alg.s(), self.alg.t());
        let cs = self.casimir(Which::S);
        let ct = self.casimir(Which::T);
        let phi = self.alg.phi();
        let expand = |sign: i64| {
            &(&(&cs * &self.alg.k(s)).scale(&RatFunc::q_pow(sign * s)) + &(&ct * &self.alg.k(t)).scale(&RatFunc::q_pow(sign * t)))
                + &self.alg.laurent_at_k(phi, sign)
        };
        (&self.w("fe") - &expand(1), &self.w("ef") - &expand(-1))
    }
}

/// Image of an `e, f, k` word under the isomorphism, for the algebra with
/// parameters `(s, t, varphi)`.
pub fn a_to_b(word: &str, s: i64, t: i64, varphi: &LaurentPoly) -> Result<BElement> {
    APresentation::new(s, t, varphi.clone())?.word(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::NormalMonomial;

    fn pres() -> APresentation {
        let varphi = LaurentPoly::from_terms([(2, RatFunc::q_pow(1)), (-1, RatFunc::from_int(-3))]);
        APresentation::new(0, 1, varphi).unwrap()
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("e^2 f").unwrap(), vec![('e', 2), ('f', 1)]);
        assert_eq!(parse_word("k^-1ek").unwrap(), vec![('k', -1), ('e', 1), ('k', 1)]);
        assert_eq!(parse_word("1").unwrap(), vec![]);
        assert!(parse_word("e^-1").is_err());
        assert!(parse_word("x").is_err());
    }

    #[test]
    fn generators_map_to_generators() {
        let p = pres();
        assert_eq!(p.word("e").unwrap(), p.algebra().e());
        assert_eq!(p.word("k^-1").unwrap(), p.algebra().k(-1));
        assert_eq!(p.word("ke").unwrap(), p.algebra().basis(NormalMonomial::new(-1, 1, 0, 0)).scale(&RatFunc::q_pow(2)));
    }

    #[test]
    fn defining_relations_vanish() {
        let (r1, r2) = pres().relation_residuals();
        assert!(r1.is_zero(), "{r1}");
        assert!(r2.is_zero(), "{r2}");
    }

    #[test]
    fn casimirs_and_expansions() {
        let p = pres();
        assert_eq!(p.casimir(Which::S), p.algebra().cs());
        assert_eq!(p.casimir(Which::T), p.algebra().ct());
        let (a, b) = p.casimir_expansion_residuals();
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn kernel_exponent_in_varphi_is_rejected() {
        assert!(APresentation::new(0, 1, LaurentPoly::lambda_pow(1)).is_err());
    }
}
