//! Exact-arithmetic combinatorics for Schur-positive sets.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`]: permutations, partitions, subsets of `[n]` and the classical
//!   statistics (descents, inversions, major index, cycle type).
//! * [`tableaux`]: standard Young tableaux of straight and skew shape, RSK.
//! * [`qsym`]: quasisymmetric functions in the fundamental basis and their
//!   Schur expansion.
//! * [`ncpl`]: factorizations of the long cycle, Goulden–Yong trees and
//!   convex caterpillars.
//! * [`cde`]: hook polynomials and cyclic descent extension criteria.
//! * [`unimodal`]: unimodal permutations, unimodal cycles and unimodal sums.
//! * [`verify`]: the bundled identity checks used by the `verify` command.
//!
//! Everything is exact: integers, big rationals where a linear solve needs
//! them, never floating point.

pub mod arith;
pub mod cde;
mod error;
pub mod ncpl;
pub mod perm;
pub mod poly;
pub mod qsym;
pub mod tableaux;
pub mod unimodal;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{Partition, Permutation, Subset};
pub use poly::IntPolynomial;
