//! Exact realization of `e`, `f`, `k` on `CP` and verification of the module
//! relations for the catalog families.

pub mod family;
pub mod module;
pub mod sparse;
pub mod table;

pub use family::{parse_family, verify_family, Attempt, Convention, Family, ModuleReport, RowJson, VerifyOptions};
pub use module::{
    casimir_action, casimir_checks, laurent_at_k, lowering_matrix, qrank_matrix, qrank_power, raising_matrix,
    verify_module, zero_check, ModuleSpec, Operators,
};
pub use sparse::SparseMat;
pub use table::{table_check, table_row, Row, RowParams, TableRow};
