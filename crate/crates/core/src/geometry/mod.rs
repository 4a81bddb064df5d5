//! Finite-geometry ranked posets over small fields.

pub mod attenuated;
pub mod dual_polar;
pub mod field;
pub mod forms;
pub mod guard;
pub mod hemmeter;
pub mod polar;
pub mod poset;
pub mod subspace;

pub use attenuated::{attenuated_count, build_attenuated};
pub use dual_polar::{build_polar_top, graph_json, DualPolarGraph};
pub use field::{Field, FiniteField};
pub use forms::{build_form_poset, form_poset_size, FiberRule, FormKind, FormModel};
pub use guard::{check_size, size_limit, DEFAULT_SIZE_GUARD, SIZE_GUARD_ENV};
pub use hemmeter::{build_hemmeter, HEMMETER_GATE_MESSAGE};
pub use polar::{build_polar, fmt_half, parse_half, polar_count, polar_total, PolarForm, PolarKind};
pub use poset::RankedPoset;
pub use subspace::{gaussian_binomial, rank, rref, subspaces, Subspace};
