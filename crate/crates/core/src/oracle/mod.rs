//! Ground-truth arithmetic in the group algebra of `S_{α+n}` over exact
//! rationals, and its subalgebra of functions constant on `S_n` double cosets.
//!
//! `S_α` acts on the points `0..α` and `K = S_n` on `α..α+n`. Double cosets
//! are indexed by their upper-left corner (a [`PartialInjection`]) and the
//! basis element of a coset is `e_σ = (1/n!) Σ_{[h]_α = σ} δ_h`.
//!
//! [`PartialInjection`]: crate::combinatorics::PartialInjection

mod algebra;
mod biinvariant;
mod coset;
mod group_algebra;

pub use algebra::OracleAlgebra;
pub use biinvariant::{gen_a, gen_theta, BiinvariantElement};
pub use coset::{canonical_completion, coset_enumerate, coset_size, printed_coset_size};
pub use group_algebra::{GaFunctionals, GroupAlgebraElement};

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// The pair `(α, n)` fixing the group `S_{α+n}` and the subgroup `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ctx {
    pub alpha: usize,
    pub n: usize,
}

impl Ctx {
    pub fn new(alpha: usize, n: usize) -> Self {
        Ctx { alpha, n }
    }

    pub fn degree(&self) -> usize {
        self.alpha + self.n
    }

    /// Elements of `K`, embedded as `1 × k`.
    pub fn subgroup(&self) -> Vec<Permutation> {
        let id = Permutation::identity(self.alpha);
        Permutation::all(self.n)
            .iter()
            .map(|k| id.block_sum(k))
            .collect()
    }

    pub(crate) fn ensure_same(&self, other: &Ctx) -> Result<()> {
        if self != other {
            Err(Error::Context(format!("{self:?} vs {other:?}")))
        } else {
            Ok(())
        }
    }
}
