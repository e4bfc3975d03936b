//! Test domains and functions, the error-measurement protocol and
//! convergence tables.

pub mod domains;
pub mod erf;
pub mod functions;
pub mod report;

pub use domains::{builtin_domain, Rect, ShiftParams, TestDomain, BUILTIN_NAMES};
pub use erf::erf;
pub use functions::{f1, f2, f2_printed, TestFunction};
pub use report::{
    convergence_table, error_on_grid, with_thread_cap, write_csv, write_json, ErrorReport,
    Experiment, GridError,
};
