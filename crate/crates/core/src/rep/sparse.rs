use crate::scalars::QuadScalar;
use std::collections::BTreeMap;

/// Square sparse matrix over `Q(sqrt(base))`, stored by rows without zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    base: u64,
    rows: Vec<BTreeMap<usize, QuadScalar>>,
}

impl SparseMat {
    pub fn zero(n: usize, base: u64) -> Self {
        Self { base, rows: vec![BTreeMap::new(); n] }
    }

    pub fn identity(n: usize, base: u64) -> Self {
        Self::diagonal((0..n).map(|_| QuadScalar::one(base)).collect(), base)
    }

    pub fn diagonal(d: Vec<QuadScalar>, base: u64) -> Self {
        let mut m = Self::zero(d.len(), base);
        for (i, x) in d.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    /// 0/1 matrix with a one at each `(row, col)` pair.
    pub fn from_pattern(n: usize, base: u64, entries: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut m = Self::zero(n, base);
        for (r, c) in entries {
            m.set(r, c, QuadScalar::one(base));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> QuadScalar {
        self.rows[r].get(&c).cloned().unwrap_or_else(|| QuadScalar::zero(self.base))
    }

    pub fn set(&mut self, r: usize, c: usize, x: QuadScalar) {
        assert_eq!(x.base(), self.base, "mixed quadratic fields");
        if x.is_zero() {
            self.rows[r].remove(&c);
        } else {
            self.rows[r].insert(c, x);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &QuadScalar)> {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(&c, x)| (r, c, x)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.dim(), self.base);
        for (r, c, x) in self.entries() {
            t.rows[c].insert(r, x.clone());
        }
        t
    }

    pub fn scale(&self, k: &QuadScalar) -> Self {
        if k.is_zero() {
            return Self::zero(self.dim(), self.base);
        }
        Self { base: self.base, rows: self.rows.iter().map(|row| row.iter().map(|(&c, x)| (c, x * k)).collect()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        assert_eq!(self.base, other.base, "mixed quadratic fields");
        let mut out = self.clone();
        for (r, c, x) in other.entries() {
            let slot = out.rows[r].entry(c).or_insert_with(|| QuadScalar::zero(self.base));
            *slot = if negate { &*slot - x } else { &*slot + x };
            if slot.is_zero() {
                out.rows[r].remove(&c);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        assert_eq!(self.base, other.base, "mixed quadratic fields");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, QuadScalar> = BTreeMap::new();
                for (&k, a) in row {
                    for (&c, b) in &other.rows[k] {
                        let p = a * b;
                        match acc.get_mut(&c) {
                            Some(v) => *v = &*v + &p,
                            None => {
                                acc.insert(c, p);
                            }
                        }
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                acc
            })
            .collect();
        Self { base: self.base, rows }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Entry of largest magnitude, for failure witnesses.
    pub fn max_entry(&self) -> Option<(usize, usize, QuadScalar)> {
        self.entries()
            .max_by(|a, b| a.2.magnitude().total_cmp(&b.2.magnitude()))
            .map(|(r, c, x)| (r, c, x.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_two() {
        let e = SparseMat::from_pattern(2, 2, [(0, 1)]);
        let f = e.transpose();
        assert_eq!(f.get(1, 0), QuadScalar::one(2));
        assert!(e.mul(&e).is_zero());
        let ef = e.mul(&f);
        assert_eq!(ef, SparseMat::diagonal(vec![QuadScalar::one(2), QuadScalar::zero(2)], 2));
    }

    #[test]
    fn diagonal_inverse() {
        let q = QuadScalar::sqrt_base(2);
        let k = SparseMat::diagonal(vec![q.clone(), q.pow(-1)], 2);
        let kinv = SparseMat::diagonal(vec![q.pow(-1), q.clone()], 2);
        assert_eq!(k.mul(&kinv), SparseMat::identity(2, 2));
        assert!(k.sub(&k).is_zero());
    }
}
