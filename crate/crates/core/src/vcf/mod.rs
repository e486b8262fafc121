//! The Jacobi-Perron vector continued fraction: stage coefficients, tail
//! vectors, finite evaluation, the alternative bi-diagonal expansion, and
//! the machine-checked identity suites with structured reports.

mod eval;
mod report;
mod suites;
mod tail;
mod term;

pub use eval::{akv_expansion, eval_finite_cf};
pub use report::{
    all_passed, check_series, check_vectors, report_from_failures, Failure, IdentityReport,
    ReportStatus,
};
pub use suites::{
    verify_approximation_order, verify_ascending_identities, verify_counts, verify_finite_cf,
    verify_genetic_sums, verify_moment_oracle, verify_reflection, verify_restricted_identities,
    verify_tail_chain, verify_two_sided_identities, Tamper,
};
pub use tail::{base_vector, tail_stage_weight, tail_vector, TailVector};
pub use term::{cf_term, CfTerm};
