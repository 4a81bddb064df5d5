use super::element::BElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E,
    F,
    K,
}

/// Centrality verdict for an element.
#[derive(Clone, Debug)]
pub struct Centrality {
    /// `[x, g] = 0` for `g` in `{E, F, K}`.
    pub commutes: bool,
    /// Every term is a monomial `C_s^i C_t^j`.
    pub in_center_span: bool,
    /// First nonzero commutator when `commutes` is false.
    pub witness: Option<(Generator, BElement)>,
}

impl Centrality {
    pub fn is_central(&self) -> bool {
        self.commutes
    }

    /// The commutator criterion and the basis criterion coincide.
    pub fn consistent(&self) -> bool {
        self.commutes == self.in_center_span
    }
}

/// Tests centrality by commutators with the generators `E, F, K` (which
/// generate the algebra together with `K^-1`) and independently by membership
/// in the span of `C_s^i C_t^j`.
pub fn is_central(x: &BElement) -> Centrality {
    let alg = x.algebra();
    let mut witness = None;
    for (g, gen) in [(Generator::E, alg.e()), (Generator::F, alg.f()), (Generator::K, alg.k(1))] {
        let c = x.commutator(&gen);
        if !c.is_zero() {
            witness = Some((g, c));
            break;
        }
    }
    Centrality {
        commutes: witness.is_none(),
        in_center_span: x.terms().all(|(m, _)| m.is_central_basis()),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, NormalMonomial};
    use crate::laurent::{AlgebraSignature, LaurentPoly};
    use crate::scalars::RatFunc;

    fn alg() -> Algebra {
        Algebra::new(AlgebraSignature::new(-2, -1, LaurentPoly::constant(RatFunc::from_int(2))).unwrap())
    }

    #[test]
    fn one_and_casimir_monomials_are_central() {
        let a = alg();
        for x in [a.one(), a.basis(NormalMonomial::new(0, 0, 2, 1))] {
            let c = is_central(&x);
            assert!(c.is_central() && c.consistent());
        }
    }

    #[test]
    fn k_is_not_central() {
        let a = alg();
        let c = is_central(&a.k(1));
        assert!(!c.is_central() && c.consistent());
        let (g, w) = c.witness.unwrap();
        assert_eq!(g, Generator::E);
        // [K, E] = KE - EK = (q^2 - 1) EK
        let expected = a.monomial(NormalMonomial::new(-1, 1, 0, 0), &RatFunc::q_pow(2) - &RatFunc::one());
        assert_eq!(w, expected);
    }
}
