//! Exact computation in augmented down-up (ADU) algebras.
//!
//! The crate covers four layers:
//!
//! * [`scalars`]: rationals, rational functions in the quantum parameter `q`,
//!   and `Q(sqrt(b))` for evaluating at `q = sqrt(b)`;
//! * [`laurent`]: Laurent polynomials in `lambda` and the spectral map
//!   `psi -> psi_{s,t}`;
//! * [`algebra`]: normal-form arithmetic in the algebra with generators
//!   `C_s, C_t, E, F, K^{+-1}`, its grading, Casimir elements and center;
//! * [`geometry`] and [`rep`]: ranked posets from finite geometries and the
//!   lowering/raising/q-rank module structure on them.
//!
//! Everything is exact. `q` is an indeterminate in symbolic work and is only
//! specialized to `sqrt(b)` when acting on a poset.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod laurent;
pub mod report;
pub mod rep;
pub mod scalars;

pub use error::{AduError, Result};
