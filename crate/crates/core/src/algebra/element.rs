use super::monomial::NormalMonomial;
use crate::error::{AduError, Result};
use crate::laurent::{AlgebraSignature, LaurentPoly};
use crate::scalars::RatFunc;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

type Terms = BTreeMap<NormalMonomial, RatFunc>;

/// One summand `coeff * K^h C_s^i C_t^j` of the right-hand side of `FE = ...`
/// or `EF = ...`.
#[derive(Clone, Debug)]
struct ZeroTerm {
    h: i64,
    i: u32,
    j: u32,
    coeff: RatFunc,
}

struct Inner {
    sig: AlgebraSignature,
    /// `FE = C_s q^s K^s + C_t q^t K^t + phi(qK)`
    fe: Vec<ZeroTerm>,
    /// `EF = C_s q^-s K^s + C_t q^-t K^t + phi(q^-1 K)`
    ef: Vec<ZeroTerm>,
    /// normal forms of pure ladder products `X^a Y^b`
    ladder_cache: Mutex<HashMap<(i64, i64), Arc<Terms>>>,
}

/// The algebra `B_q(s, t, phi)`: a cheap-to-clone handle shared by all its elements.
#[derive(Clone)]
pub struct Algebra {
    inner: Arc<Inner>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Algebra").field(&self.inner.sig).finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.sig == other.inner.sig
    }
}

impl Eq for Algebra {}

fn rhs_terms(sig: &AlgebraSignature, sign: i64) -> Vec<ZeroTerm> {
    let (s, t) = (sig.s(), sig.t());
    let mut out = vec![
        ZeroTerm { h: s, i: 1, j: 0, coeff: RatFunc::q_pow(sign * s) },
        ZeroTerm { h: t, i: 0, j: 1, coeff: RatFunc::q_pow(sign * t) },
    ];
    for (m, a) in sig.phi().terms() {
        out.push(ZeroTerm { h: m, i: 0, j: 0, coeff: a.mul_q_pow(sign * m) });
    }
    out
}

fn add_into(terms: &mut Terms, m: NormalMonomial, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&m) {
        Some(slot) => {
            *slot = &*slot + &c;
            if slot.is_zero() {
                terms.remove(&m);
            }
        }
        None => {
            terms.insert(m, c);
        }
    }
}

impl Algebra {
    pub fn new(sig: AlgebraSignature) -> Self {
        let fe = rhs_terms(&sig, 1);
        let ef = rhs_terms(&sig, -1);
        Self { inner: Arc::new(Inner { sig, fe, ef, ladder_cache: Mutex::new(HashMap::new()) }) }
    }

    pub fn signature(&self) -> &AlgebraSignature {
        &self.inner.sig
    }

    pub fn s(&self) -> i64 {
        self.inner.sig.s()
    }

    pub fn t(&self) -> i64 {
        self.inner.sig.t()
    }

    pub fn phi(&self) -> &LaurentPoly {
        self.inner.sig.phi()
    }

    pub fn zero(&self) -> BElement {
        BElement { alg: self.clone(), terms: Terms::new() }
    }

    pub fn one(&self) -> BElement {
        self.monomial(NormalMonomial::ONE, RatFunc::one())
    }

    pub fn scalar(&self, c: RatFunc) -> BElement {
        self.monomial(NormalMonomial::ONE, c)
    }

    pub fn monomial(&self, m: NormalMonomial, c: RatFunc) -> BElement {
        let mut terms = Terms::new();
        add_into(&mut terms, m, c);
        BElement { alg: self.clone(), terms }
    }

    pub fn basis(&self, m: NormalMonomial) -> BElement {
        self.monomial(m, RatFunc::one())
    }

    pub fn e(&self) -> BElement {
        self.basis(NormalMonomial::new(-1, 0, 0, 0))
    }

    pub fn f(&self) -> BElement {
        self.basis(NormalMonomial::new(1, 0, 0, 0))
    }

    /// `K^h` (negative `h` for powers of `K^-1`).
    pub fn k(&self, h: i64) -> BElement {
        self.basis(NormalMonomial::new(0, h, 0, 0))
    }

    pub fn cs(&self) -> BElement {
        self.basis(NormalMonomial::new(0, 0, 1, 0))
    }

    pub fn ct(&self) -> BElement {
        self.basis(NormalMonomial::new(0, 0, 0, 1))
    }

    /// `psi(q^c K) = sum_m alpha_m q^(c m) K^m`.
    pub fn laurent_at_k(&self, psi: &LaurentPoly, c: i64) -> BElement {
        let mut terms = Terms::new();
        for (m, a) in psi.terms() {
            add_into(&mut terms, NormalMonomial::new(0, m, 0, 0), a.mul_q_pow(c * m));
        }
        BElement { alg: self.clone(), terms }
    }

    /// Normal form of `X^a Y^b` for pure ladder monomials (`K`-free).
    fn ladder(&self, a: i64, b: i64) -> Arc<Terms> {
        if let Some(t) = self.inner.ladder_cache.lock().unwrap().get(&(a, b)) {
            return Arc::clone(t);
        }
        let mut out = Terms::new();
        if a == 0 || b == 0 || (a > 0) == (b > 0) {
            out.insert(NormalMonomial::new(a + b, 0, 0, 0), RatFunc::one());
        } else {
            // Peel one generator off each side of the junction and substitute
            // FE (a > 0) or EF (a < 0). The K^h produced moves right past the
            // remaining X^(b') with factor q^(-2 h b').
            let (rhs, a1, b1) = if a > 0 { (&self.inner.fe, a - 1, b + 1) } else { (&self.inner.ef, a + 1, b - 1) };
            let rest = self.ladder(a1, b1);
            for z in rhs {
                let factor = z.coeff.mul_q_pow(-2 * z.h * b1);
                for (m, c) in rest.iter() {
                    add_into(&mut out, m.times_zero_part(z.h, z.i, z.j), c * &factor);
                }
            }
        }
        let out = Arc::new(out);
        self.inner.ladder_cache.lock().unwrap().insert((a, b), Arc::clone(&out));
        out
    }

    /// Product of two basis monomials, in normal form.
    pub fn monomial_mul(&self, x: NormalMonomial, y: NormalMonomial) -> BElement {
        let mut terms = Terms::new();
        self.accumulate_product(&mut terms, x, y, &RatFunc::one());
        BElement { alg: self.clone(), terms }
    }

    fn accumulate_product(&self, acc: &mut Terms, x: NormalMonomial, y: NormalMonomial, coeff: &RatFunc) {
        // K^h_x X^d_y = q^(-2 h_x d_y) X^d_y K^h_x
        let factor = coeff.mul_q_pow(-2 * x.h * y.d);
        let ladder = self.ladder(x.d, y.d);
        for (m, c) in ladder.iter() {
            add_into(acc, m.times_zero_part(x.h + y.h, x.i + y.i, x.j + y.j), c * &factor);
        }
    }
}

/// Element of `B_q(s, t, phi)` as a linear combination of normal monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct BElement {
    alg: Algebra,
    terms: Terms,
}

impl fmt::Debug for BElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BElement({self})")
    }
}

impl BElement {
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &NormalMonomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn from_terms(alg: &Algebra, terms: impl IntoIterator<Item = (NormalMonomial, RatFunc)>) -> Self {
        let mut t = Terms::new();
        for (m, c) in terms {
            add_into(&mut t, m, c);
        }
        Self { alg: alg.clone(), terms: t }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(AduError::SignatureMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, *m, c.clone());
        }
        Ok(Self { alg: self.alg.clone(), terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms = Terms::new();
        for (mx, cx) in &self.terms {
            for (my, cy) in &other.terms {
                self.alg.accumulate_product(&mut terms, *mx, *my, &(cx * cy));
            }
        }
        Ok(Self { alg: self.alg.clone(), terms })
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_terms(&self.alg, self.terms.iter().map(|(m, x)| (*m, x * c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(self.alg.one(), |acc, _| &acc * self)
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Degrees present in the element, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|m| m.d).collect();
        d.dedup();
        d
    }
}

impl fmt::Display for BElement {
    /// Canonical text: terms in `(d, h, i, j)` order as `(coeff) * monomial`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}) * {}", c.pretty(), m)?;
        }
        Ok(())
    }
}

impl Add for &BElement {
    type Output = BElement;
    fn add(self, rhs: &BElement) -> BElement {
        self.try_add(rhs).expect("adding elements of different algebras")
    }
}

impl Sub for &BElement {
    type Output = BElement;
    fn sub(self, rhs: &BElement) -> BElement {
        self.try_sub(rhs).expect("subtracting elements of different algebras")
    }
}

impl Mul for &BElement {
    type Output = BElement;
    fn mul(self, rhs: &BElement) -> BElement {
        self.try_mul(rhs).expect("multiplying elements of different algebras")
    }
}

impl Neg for &BElement {
    type Output = BElement;
    fn neg(self) -> BElement {
        BElement { alg: self.alg.clone(), terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}
