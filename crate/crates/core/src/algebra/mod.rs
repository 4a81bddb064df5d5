//! Normal-form arithmetic in `B_q(s, t, phi)`.
//!
//! Every element is a combination of the monomials `F^n K^h C_s^i C_t^j`,
//! `K^h C_s^i C_t^j` and `E^n K^h C_s^i C_t^j`. Products are reduced by
//! pushing `K` to the right (`KE = q^2 EK`, `KF = q^-2 FK`), letting the
//! central `C_s`, `C_t` commute out, and replacing each adjacent `FE` or `EF`
//! by its degree-zero expansion. Every substitution shortens the ladder word by
//! two, so reduction terminates.

mod casimir;
mod center;
mod element;
mod grading;
mod monomial;
mod presentation;
mod relations;
pub mod suite;

pub use casimir::{casimir_from_ladder, Which};
pub use center::{is_central, Centrality, Generator};
pub use element::{Algebra, BElement};
pub use grading::{conjugation_eigen_ok, grade_decompose, k_conjugate};
pub use monomial::NormalMonomial;
pub use presentation::{a_to_b, parse_word, APresentation};
pub use relations::{cubic_coefficients, verify_cubic_relations, verify_cubic_relations_with, CubicReport};
