//! Exact arithmetic tower: integers, rationals, rational functions in `q`,
//! and the quadratic fields `Q(sqrt(b))` used when `q = sqrt(b)`.

mod poly;
mod quad;
mod ratfunc;

pub use num_rational::BigRational;
pub use poly::IntPoly;
pub use quad::QuadScalar;
pub use ratfunc::RatFunc;

#[cfg(test)]
mod props;
