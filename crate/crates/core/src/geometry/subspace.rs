//! Subspaces of `GF(b)^n` in reduced row-echelon form.

use super::field::FiniteField;

/// A subspace stored by its RREF basis; equal subspaces have identical rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    rows: Vec<Vec<u8>>,
}

/// Row-reduces `rows` (length-`n` vectors) and drops zero rows.
pub fn rref(f: &FiniteField, rows: &[Vec<u8>], n: usize) -> Vec<Vec<u8>> {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let iv = f.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(*x, iv);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let factor = f.neg(m[i][c]);
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = f.add(*x, f.mul(factor, *y));
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m
}

pub fn rank(f: &FiniteField, rows: &[Vec<u8>], n: usize) -> usize {
    rref(f, rows, n).len()
}

/// Calls `visit` with every `k`-subspace of `GF(b)^n` whose pivot columns all
/// lie in `pivot_cols`, by iterating over echelon profiles and free entries.
pub fn for_each_subspace(f: &FiniteField, n: usize, k: usize, pivot_cols: usize, visit: &mut dyn FnMut(Subspace)) {
    let b = f.order() as u8;
    let mut pivots = Vec::with_capacity(k);
    fn choose(
        f: &FiniteField,
        n: usize,
        k: usize,
        limit: usize,
        b: u8,
        start: usize,
        pivots: &mut Vec<usize>,
        visit: &mut dyn FnMut(Subspace),
    ) {
        if pivots.len() == k {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|i| ((pivots[i] + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (i, c)))
                .collect();
            let mut vals = vec![0u8; free.len()];
            loop {
                let mut rows = vec![vec![0u8; n]; k];
                for (i, &p) in pivots.iter().enumerate() {
                    rows[i][p] = 1;
                }
                for (&(i, c), &v) in free.iter().zip(&vals) {
                    rows[i][c] = v;
                }
                visit(Subspace { n, rows });
                // odometer over free entries
                let mut pos = 0;
                loop {
                    if pos == vals.len() {
                        return;
                    }
                    vals[pos] += 1;
                    if vals[pos] < b {
                        break;
                    }
                    vals[pos] = 0;
                    pos += 1;
                }
            }
        }
        for p in start..limit {
            pivots.push(p);
            choose(f, n, k, limit, b, p + 1, pivots, visit);
            pivots.pop();
        }
    }
    choose(f, n, k, pivot_cols.min(n), b, 0, &mut pivots, visit);
}

pub fn subspaces(f: &FiniteField, n: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for_each_subspace(f, n, k, n, &mut |s| out.push(s));
    out
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Self { n, rows: Vec::new() }
    }

    pub fn from_rows(f: &FiniteField, rows: &[Vec<u8>], n: usize) -> Self {
        Self { n, rows: rref(f, rows, n) }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect()
    }

    /// Coordinates of `v` (assumed to lie in the subspace) in the RREF basis.
    pub fn coords(&self, v: &[u8]) -> Vec<u8> {
        self.pivots().into_iter().map(|p| v[p]).collect()
    }

    /// Linear combination `sum c_i row_i`.
    pub fn combine(&self, f: &FiniteField, c: &[u8]) -> Vec<u8> {
        let mut v = vec![0u8; self.n];
        for (ci, row) in c.iter().zip(&self.rows) {
            if *ci != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(*ci, *y));
                }
            }
        }
        v
    }

    pub fn contains(&self, f: &FiniteField, v: &[u8]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        rank(f, &rows, self.n) == self.dim()
    }

    /// All codimension-one subspaces, each with its basis expressed in
    /// coordinates of this subspace's basis.
    pub fn hyperplanes(&self, f: &FiniteField) -> Vec<(Subspace, Vec<Vec<u8>>)> {
        let k = self.dim();
        if k == 0 {
            return Vec::new();
        }
        subspaces(f, k, k - 1)
            .into_iter()
            .map(|local| {
                let ambient: Vec<Vec<u8>> = local.rows.iter().map(|c| self.combine(f, c)).collect();
                let sub = Subspace::from_rows(f, &ambient, self.n);
                let coords = sub.rows.iter().map(|r| self.coords(r)).collect();
                (sub, coords)
            })
            .collect()
    }

    /// Span of this subspace and `v`.
    pub fn extend(&self, f: &FiniteField, v: &[u8]) -> Subspace {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        Subspace::from_rows(f, &rows, self.n)
    }

    /// Canonical text key: rows of hex digits separated by `|`, `0` for the zero space.
    pub fn key(&self) -> String {
        if self.rows.is_empty() {
            return "0".into();
        }
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| char::from_digit(x as u32, 16).unwrap()).collect::<String>())
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// Gaussian binomial `[n choose k]_b`.
pub fn gaussian_binomial(n: u32, k: u32, b: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= b.pow(n - i) - 1;
        den *= b.pow(i + 1) - 1;
    }
    num / den
}
