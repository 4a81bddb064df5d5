//! Rational functions in the indeterminate `q` over the rationals.

use super::poly::IntPoly;
use super::quad::QuadScalar;
use crate::error::{AduError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `q^shift * num(q) / den(q)` in canonical form.
///
/// Canonical means: `num(0) != 0` and `den(0) != 0` (all powers of `q` live in
/// `shift`), `gcd(num, den) = 1`, the integer coefficients of `num` and `den`
/// taken together are coprime, and `den` has a positive leading coefficient.
/// Zero is `0 / 1` with shift 0. Two values are equal iff their canonical
/// forms agree field by field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: i64,
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { shift: 0, num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::new(0, IntPoly::constant(c), IntPoly::one())
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(0, IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()))
    }

    /// The monomial `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self { shift: k, num: IntPoly::one(), den: IntPoly::one() }
    }

    /// `c * q^k`.
    pub fn monomial(c: BigRational, k: i64) -> Self {
        Self::from_rational(&c).mul_q_pow(k)
    }

    /// Builds `sum c_k q^k` from a list of `(k, c_k)` pairs (Laurent polynomial in `q`).
    pub fn from_laurent_terms(terms: &[(i64, BigRational)]) -> Self {
        terms
            .iter()
            .fold(Self::zero(), |acc, (k, c)| &acc + &Self::monomial(c.clone(), *k))
    }

    /// Builds `q^shift * num / den` and canonicalizes. Panics if `den` is zero.
    pub fn new(shift: i64, num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let vn = num.low_order();
        let vd = den.low_order();
        let mut num = num.shift_down(vn);
        let mut den = den.shift_down(vd);
        let shift = shift + vn as i64 - vd as i64;
        if !den.is_constant() && !num.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        let mut c = num.content().gcd(&den.content());
        if den.leading().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_exact_scalar(&c);
            den = den.div_exact_scalar(&c);
        }
        Self { shift, num, den }
    }

    /// Numerator and denominator as ordinary polynomials: a negative shift is
    /// folded into the denominator as `q^|shift|`.
    pub fn to_poly_pair(&self) -> (IntPoly, IntPoly) {
        if self.shift >= 0 {
            (self.num.shift_up(self.shift as usize), self.den.clone())
        } else {
            (self.num.clone(), self.den.shift_up((-self.shift) as usize))
        }
    }

    pub fn from_poly_pair(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(AduError::DivisionByZero);
        }
        Ok(Self::new(0, num, den))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial in `q` (constant denominator).
    pub fn is_laurent(&self) -> bool {
        self.den.is_constant()
    }

    /// The `(q-exponent, coefficient)` pairs when the value is a Laurent polynomial.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, BigRational)>> {
        if !self.is_laurent() {
            return None;
        }
        let d = &self.den.coeffs()[0];
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (self.shift + k as i64, BigRational::new(c.clone(), d.clone())))
                .collect(),
        )
    }

    /// Multiplies by `q^k`.
    pub fn mul_q_pow(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { shift: self.shift + k, num: self.num.clone(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AduError::DivisionByZero);
        }
        Ok(Self::new(-self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact value at a rational point, `None` at a pole.
    pub fn eval_rational(&self, x: &BigRational) -> Option<BigRational> {
        let ev = |p: &IntPoly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
        };
        let d = ev(&self.den);
        if d.is_zero() || (x.is_zero() && self.shift < 0) {
            return None;
        }
        let qs = if self.shift >= 0 {
            num_traits::pow(x.clone(), self.shift as usize)
        } else {
            num_traits::pow(x.recip(), (-self.shift) as usize)
        };
        Some(qs * ev(&self.num) / d)
    }

    /// Exact value at `q = sqrt(base)`.
    pub fn eval_sqrt(&self, base: u64) -> Result<QuadScalar> {
        let ev = |p: &IntPoly| {
            let mut even = BigRational::zero();
            let mut odd = BigRational::zero();
            let b = BigRational::from_integer(BigInt::from(base));
            let mut bpow = BigRational::one();
            for (k, c) in p.coeffs().iter().enumerate() {
                let term = BigRational::from_integer(c.clone()) * &bpow;
                if k % 2 == 0 {
                    even += term;
                } else {
                    odd += term;
                    bpow *= &b;
                }
            }
            QuadScalar::new(base, even, odd)
        };
        let den = ev(&self.den);
        if den.is_zero() {
            return Err(AduError::PoleAtSqrt { base });
        }
        let num = ev(&self.num);
        let qs = QuadScalar::sqrt_base(base).pow(self.shift);
        Ok(&(&qs * &num) * &den.inv().expect("nonzero"))
    }

    /// Human-readable polynomial text, e.g. `-1 + q^2` or `(1)/(-1 + q^2)`.
    pub fn pretty(&self) -> String {
        let (n, d) = self.to_poly_pair();
        if d.is_one() {
            poly_text(&n)
        } else {
            format!("({})/({})", poly_text(&n), poly_text(&d))
        }
    }
}

fn poly_text(p: &IntPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "q".into(),
            _ => format!("q^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

impl fmt::Display for RatFunc {
    /// `num/den` as coefficient lists, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.to_poly_pair();
        write!(f, "{n}/{d}")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let m = self.shift.min(rhs.shift);
        let a = self.num.shift_up((self.shift - m) as usize);
        let b = rhs.num.shift_up((rhs.shift - m) as usize);
        if self.den == rhs.den {
            RatFunc::new(m, a.add(&b), self.den.clone())
        } else {
            RatFunc::new(m, a.mul(&rhs.den).add(&b.mul(&self.den)), self.den.mul(&rhs.den))
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let shift = self.shift + rhs.shift;
        if self.is_laurent() && rhs.is_laurent() {
            return RatFunc::new(shift, self.num.mul(&rhs.num), self.den.mul(&rhs.den));
        }
        // cross-cancel before multiplying to keep the final gcd small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n = self.num.div_exact(&g1).mul(&rhs.num.div_exact(&g2));
        let d = self.den.div_exact(&g2).mul(&rhs.den.div_exact(&g1));
        RatFunc::new(shift, n, d)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> RatFunc {
        RatFunc::q_pow(k)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn monomial_product() {
        assert_eq!(&q(2) * &q(2), q(4));
    }

    #[test]
    fn reciprocal_of_q_minus_inverse() {
        let x = &q(1) - &q(-1);
        let r = RatFunc::one().div(&x).unwrap();
        let (n, d) = r.to_poly_pair();
        assert_eq!(n, IntPoly::from_i64s(&[0, 1]));
        assert_eq!(d, IntPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(r.to_string(), "[0,1]/[-1,0,1]");
    }

    #[test]
    fn difference_of_squares() {
        let a = &q(1) + &q(-1);
        let b = &q(1) - &q(-1);
        assert_eq!(&a * &b, &q(2) - &q(-2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatFunc::one().div(&RatFunc::zero()), Err(AduError::DivisionByZero));
    }

    #[test]
    fn rational_content_is_kept_in_denominator() {
        let h = RatFunc::from_rational(&rat(3, 6));
        assert_eq!(h.to_string(), "[1]/[2]");
        let x = RatFunc::new(0, IntPoly::from_i64s(&[2, 2]), IntPoly::from_i64s(&[-4, 4]));
        assert_eq!(x.to_string(), "[1,1]/[-2,2]");
        assert_eq!(RatFunc::new(0, IntPoly::from_i64s(&[1]), IntPoly::from_i64s(&[-1])), RatFunc::from_int(-1));
    }

    #[test]
    fn sqrt_evaluations() {
        assert_eq!(q(2).eval_sqrt(2).unwrap(), QuadScalar::from_int(2, 2));
        let v = (&q(1) + &q(-1)).eval_sqrt(2).unwrap();
        assert_eq!(v, QuadScalar::new(2, BigRational::zero(), rat(3, 2)));
        let w = RatFunc::one().div(&(&q(1) - &q(-1))).unwrap().eval_sqrt(4).unwrap();
        assert_eq!(w, QuadScalar::new(4, rat(2, 3), BigRational::zero()));
    }

    #[test]
    fn pole_is_reported() {
        let f = RatFunc::one().div(&(&q(2) - &RatFunc::from_int(2))).unwrap();
        assert_eq!(f.eval_sqrt(2), Err(AduError::PoleAtSqrt { base: 2 }));
    }

    #[test]
    fn laurent_terms_roundtrip() {
        let terms = vec![(-2, rat(1, 3)), (0, rat(-1, 1)), (5, rat(7, 2))];
        let f = RatFunc::from_laurent_terms(&terms);
        assert_eq!(f.laurent_terms().unwrap(), terms);
    }

    #[test]
    fn pretty_text() {
        assert_eq!((&q(2) - &RatFunc::one()).pretty(), "-1 + q^2");
        assert_eq!(RatFunc::zero().pretty(), "0");
    }
}
