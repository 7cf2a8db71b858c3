//! Exact rational linear algebra: scalars, dense matrices, canonical subspaces,
//! quotients, and a sparse nullspace solver for large block systems.

pub mod matrix;
pub mod rational;
pub mod sparse;
pub mod subspace;

pub use matrix::{image, kernel, solve, Matrix};
pub use rational::Rational;
pub use sparse::SparseSystem;
pub use subspace::{quotient_basis, QuotientFrame, Subspace};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("small subspace is not contained in big subspace")]
    NotSubspace,
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}
