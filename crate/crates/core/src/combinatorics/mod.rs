//! Permutations, the rook monoid, and Young-diagram dimension counting.

mod perm;
mod rook;
mod young;

pub use perm::Permutation;
pub use rook::{corner_map, rook_count_formula, rook_enumerate, PartialInjection};
pub use young::{partitions, sfixed_multiplicities, YoungDiagram};
