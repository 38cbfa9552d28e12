//! Exact computation with the algebras of functions on `S_{α+n}` that are
//! constant on `S_n` double cosets.
//!
//! Two independent routes are provided. The [`oracle`] multiplies double
//! cosets by brute force inside the group algebra. The [`presented`] module
//! builds the interpolating algebra from generators `A(g)`, `Θ_i` and five
//! families of relations, with structure constants that are polynomials in a
//! formal parameter `ν`. The [`verify`] suites check that the two agree at
//! `ν = n`.

// Index loops read more naturally than iterator chains in the matrix code.
#![allow(clippy::needless_range_loop)]

pub mod combinatorics;
pub mod error;
pub mod limits;
pub mod linalg;
pub mod oracle;
pub mod presented;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
pub use rational::Q;
