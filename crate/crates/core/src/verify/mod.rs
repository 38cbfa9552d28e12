//! Suites checking the presented algebra against the oracle and against
//! the counting and limit identities. Each returns a
//! [`VerificationReport`]; failures are collected, not thrown.

mod crosscheck;
mod relations;
mod report;
mod suites;

pub use crosscheck::{basis_images, crosscheck_many, crosscheck_structure, crosscheck_with_table};
pub use relations::relation_suite;
pub use report::{Counterexample, Status, VerificationReport, VerifyOptions, TIMING_SUFFIX};
pub use suites::{
    dimension_suite, gram_positivity, limit_suite, semisimplicity_probe,
    smallest_positive_definite_nu,
};
