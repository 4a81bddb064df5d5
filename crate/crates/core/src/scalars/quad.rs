//! Elements `a + c*sqrt(b)` of the quadratic field `Q(sqrt(b))`.

use crate::error::{AduError, Result};
use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + c*sqrt(base)`. When `base` is a perfect square, `c` is always zero and
/// the integer root is absorbed into `a`.
///
/// Every arithmetic operator asserts that both operands use the same base;
/// mixing fields is a programming error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    base: u64,
    a: BigRational,
    c: BigRational,
}

fn square_root(base: u64) -> Option<u64> {
    let r = base.sqrt();
    (r * r == base).then_some(r)
}

impl QuadScalar {
    pub fn new(base: u64, a: BigRational, c: BigRational) -> Self {
        assert!(base > 0, "base must be positive");
        match square_root(base) {
            Some(r) if !c.is_zero() => {
                Self { base, a: a + c * BigRational::from_integer(r.into()), c: BigRational::zero() }
            }
            _ => Self { base, a, c },
        }
    }

    pub fn zero(base: u64) -> Self {
        Self::new(base, BigRational::zero(), BigRational::zero())
    }

    pub fn one(base: u64) -> Self {
        Self::from_int(base, 1)
    }

    pub fn from_int(base: u64, v: i64) -> Self {
        Self::new(base, BigRational::from_integer(v.into()), BigRational::zero())
    }

    pub fn from_rational(base: u64, v: BigRational) -> Self {
        Self::new(base, v, BigRational::zero())
    }

    /// `sqrt(base)` itself.
    pub fn sqrt_base(base: u64) -> Self {
        Self::new(base, BigRational::zero(), BigRational::one())
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.c.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.c.is_zero()
    }

    /// Field norm `a^2 - b c^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.c * &self.c * BigRational::from_integer(BigInt::from(self.base))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AduError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::new(self.base, &self.a / &n, -(&self.c / &n)))
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("power of zero with negative exponent") } else { self.clone() };
        let mut acc = Self::one(self.base);
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            k >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(self.base, &self.a * r, &self.c * r)
    }

    /// Approximate magnitude, only for ranking residual witnesses.
    pub fn magnitude(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::INFINITY);
        let c = self.c.to_f64().unwrap_or(f64::INFINITY);
        (a + c * (self.base as f64).sqrt()).abs()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.base, other.base, "mixed quadratic fields Q(sqrt({})) and Q(sqrt({}))", self.base, other.base);
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({})", self.c, self.base);
        }
        let sign = if self.c.is_negative() { "-" } else { "+" };
        write!(f, "{} {} {}*sqrt({})", self.a, sign, self.c.abs(), self.base)
    }
}

impl Add for &QuadScalar {
    type Output = QuadScalar;
    fn add(self, rhs: &QuadScalar) -> QuadScalar {
        self.check(rhs);
        QuadScalar { base: self.base, a: &self.a + &rhs.a, c: &self.c + &rhs.c }
    }
}

impl Sub for &QuadScalar {
    type Output = QuadScalar;
    fn sub(self, rhs: &QuadScalar) -> QuadScalar {
        self.check(rhs);
        QuadScalar { base: self.base, a: &self.a - &rhs.a, c: &self.c - &rhs.c }
    }
}

impl Mul for &QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: &QuadScalar) -> QuadScalar {
        self.check(rhs);
        let b = BigRational::from_integer(BigInt::from(self.base));
        QuadScalar {
            base: self.base,
            a: &self.a * &rhs.a + &self.c * &rhs.c * b,
            c: &self.a * &rhs.c + &rhs.a * &self.c,
        }
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar { base: self.base, a: -&self.a, c: -&self.c }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn perfect_square_base_is_rational() {
        let x = QuadScalar::sqrt_base(9);
        assert_eq!(x, QuadScalar::from_int(9, 3));
        assert!(x.surd_part().is_zero());
    }

    #[test]
    fn product_rule() {
        let x = QuadScalar::new(2, r(1, 1), r(1, 1));
        let y = QuadScalar::new(2, r(1, 1), r(-1, 1));
        assert_eq!(&x * &y, QuadScalar::from_int(2, -1));
        assert_eq!(&x * &x.inv().unwrap(), QuadScalar::one(2));
    }

    #[test]
    fn negative_powers() {
        let s = QuadScalar::sqrt_base(2);
        assert_eq!(s.pow(-1), QuadScalar::new(2, r(0, 1), r(1, 2)));
        assert_eq!(s.pow(4), QuadScalar::from_int(2, 4));
    }

    #[test]
    #[should_panic(expected = "mixed quadratic fields")]
    fn mixing_bases_panics() {
        let _ = &QuadScalar::one(2) + &QuadScalar::one(3);
    }
}
