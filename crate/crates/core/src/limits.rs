//! Size limits for the enumeration-heavy operations.

use crate::error::{check_capacity, Result};

/// Environment variable overriding [`Limits::max_alpha`].
pub const MAX_ALPHA_ENV: &str = "DCOSET_MAX_ALPHA";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest alpha for rook monoid enumeration and dimension counting.
    pub max_alpha: usize,
    /// Largest alpha for full structure tables of the presented algebra.
    pub max_table_alpha: usize,
    /// Largest alpha + n for which the oracle runs full brute-force checks.
    pub max_group_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_alpha: 6,
            max_table_alpha: 4,
            max_group_degree: 8,
        }
    }
}

impl Limits {
    /// Defaults, with `max_alpha` taken from `DCOSET_MAX_ALPHA` when it is set
    /// to a valid integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var(MAX_ALPHA_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            limits.max_alpha = v;
        }
        limits
    }

    pub fn check_alpha(&self, alpha: usize) -> Result<()> {
        check_capacity("alpha", alpha, self.max_alpha)
    }

    pub fn check_table_alpha(&self, alpha: usize) -> Result<()> {
        check_capacity("alpha (structure table)", alpha, self.max_table_alpha)
    }

    pub fn check_group_degree(&self, degree: usize) -> Result<()> {
        check_capacity("alpha + n", degree, self.max_group_degree)
    }
}
