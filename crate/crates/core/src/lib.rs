//! Exact cohomology of current Lie algebras `L ⊗ A` with coefficients in `M ⊗ V`.

pub mod error;
pub mod linalg;

pub use error::{Error, Result};
pub mod algebra;
pub mod bulk;
pub mod cli;
pub mod io;
pub mod cohomology;
pub mod multilinear;
pub mod subspaces;
pub mod prolong;
pub mod verify;
