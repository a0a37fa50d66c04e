//! Exact linear algebra over the rationals.

pub mod matrix;
pub mod rational;
pub mod subspace;

pub use matrix::{kernel_basis, rank, rref, solve, Echelon, RatMatrix, SparseVec};
pub use rational::{format_rational, frac, int, parse_rational, Rational};
pub use subspace::{LinearSubspace, Quotient};
