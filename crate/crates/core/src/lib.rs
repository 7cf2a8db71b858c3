//! Exact computations for finite-dimensional gl(1|1)-representations: the two
//! spectral sequences built from x and y, Duflo-Serganova functors, filtrations
//! and semisimplification, Krull-Schmidt decomposition, and q(n) arc diagrams.

pub mod cli;
pub mod corpus;
pub mod decompose;
pub mod expr;
pub mod filtration;
pub mod homspace;
pub mod linalg;
pub mod pages;
pub mod qn;
pub mod supermod;
pub mod verify;
