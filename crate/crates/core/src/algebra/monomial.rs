use std::fmt;

/// Basis element `X^|d| K^h C_s^i C_t^j` where `X = F` for `d > 0` and
/// `X = E` for `d < 0`. `d` is also the degree in the Z-grading.
///
/// The derived ordering is lexicographic in `(d, h, i, j)`, which is the
/// canonical term order for printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalMonomial {
    pub d: i64,
    pub h: i64,
    pub i: u32,
    pub j: u32,
}

impl NormalMonomial {
    pub const ONE: Self = Self { d: 0, h: 0, i: 0, j: 0 };

    pub fn new(d: i64, h: i64, i: u32, j: u32) -> Self {
        Self { d, h, i, j }
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    /// Right multiplication by the degree-zero monomial `K^h C_s^i C_t^j`.
    pub fn times_zero_part(self, h: i64, i: u32, j: u32) -> Self {
        Self { d: self.d, h: self.h + h, i: self.i + i, j: self.j + j }
    }

    pub fn is_central_basis(&self) -> bool {
        self.d == 0 && self.h == 0
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.d {
            0 => {}
            d if d > 0 => parts.push(format!("F^{d}")),
            d => parts.push(format!("E^{}", -d)),
        }
        if self.h != 0 {
            parts.push(format!("K^{}", self.h));
        }
        if self.i != 0 {
            parts.push(format!("Cs^{}", self.i));
        }
        if self.j != 0 {
            parts.push(format!("Ct^{}", self.j));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}
