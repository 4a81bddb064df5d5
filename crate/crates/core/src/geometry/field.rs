use crate::error::{AduError, Result};
use std::sync::Arc;

/// `GF(b)` for prime powers `b <= 16`, elements encoded as `0..b` (base-`p`
/// digits of the polynomial representative), with full operation tables.
#[derive(Debug, PartialEq, Eq)]
pub struct FiniteField {
    order: usize,
    char_p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

pub type Field = Arc<FiniteField>;

fn prime_power(b: usize) -> Option<(usize, u32)> {
    if b < 2 {
        return None;
    }
    let p = (2..=b).find(|p| b.is_multiple_of(*p))?;
    let mut n = b;
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    (n == 1).then_some((p, k))
}

fn digits(x: usize, p: usize, k: u32) -> Vec<usize> {
    let mut v = Vec::with_capacity(k as usize);
    let mut x = x;
    for _ in 0..k {
        v.push(x % p);
        x /= p;
    }
    v
}

fn undigits(d: &[usize], p: usize) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Product of polynomial representatives modulo the monic `modulus` (low first,
/// leading 1 implied).
fn poly_mulmod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let k = modulus.len();
    let mut prod = vec![0; 2 * k];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        // q^k = -modulus(q)
        for (j, m) in modulus.iter().enumerate() {
            prod[deg - k + j] = (prod[deg - k + j] + p * p - c * m % p) % p;
        }
    }
    prod.truncate(k);
    prod
}

impl FiniteField {
    pub const MAX_ORDER: usize = 16;

    pub fn new(order: usize) -> Result<Field> {
        let (p, k) = prime_power(order)
            .filter(|_| order <= Self::MAX_ORDER)
            .ok_or_else(|| AduError::Unsupported(format!("field order {order} is not a prime power <= 16")))?;
        // try monic moduli until the tables form a field
        for cand in 0..p.pow(k) {
            let modulus = digits(cand, p, k);
            let mut mul = vec![0u8; order * order];
            for x in 0..order {
                for y in 0..order {
                    let r = poly_mulmod(&digits(x, p, k), &digits(y, p, k), &modulus, p);
                    mul[x * order + y] = undigits(&r, p) as u8;
                }
            }
            let mut add = vec![0u8; order * order];
            for x in 0..order {
                for y in 0..order {
                    let s: Vec<usize> = digits(x, p, k).iter().zip(digits(y, p, k)).map(|(a, b)| (a + b) % p).collect();
                    add[x * order + y] = undigits(&s, p) as u8;
                }
            }
            let mut inv = vec![0u8; order];
            let mut ok = true;
            for x in 1..order {
                match (1..order).find(|&y| mul[x * order + y] == 1) {
                    Some(y) => inv[x] = y as u8,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            let neg = (0..order).map(|x| (0..order).find(|&y| add[x * order + y] == 0).unwrap() as u8).collect();
            let f = FiniteField { order, char_p: p, add, mul, neg, inv };
            f.check_axioms()?;
            return Ok(Arc::new(f));
        }
        Err(AduError::Unsupported(format!("no irreducible modulus found for GF({order})")))
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.order as u8;
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(AduError::Unsupported("field tables are not commutative".into()));
                }
                for c in 0..n {
                    let assoc = self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                        && self.add(self.add(a, b), c) == self.add(a, self.add(b, c));
                    let distrib = self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c));
                    if !assoc || !distrib {
                        return Err(AduError::Unsupported("field tables fail the ring axioms".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn characteristic(&self) -> usize {
        self.char_p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero in GF({})", self.order);
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u8, e: usize) -> u8 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.order as u8
    }

    /// `r` with `r^2 = order`, if the order is a square.
    pub fn sqrt_order(&self) -> Option<usize> {
        let r = (self.order as f64).sqrt().round() as usize;
        (r * r == self.order).then_some(r)
    }

    /// The involution `x -> x^r` of `GF(r^2)`.
    pub fn conj(&self, a: u8) -> u8 {
        let r = self.sqrt_order().expect("conjugation needs a square field order");
        self.pow(a, r)
    }
}
