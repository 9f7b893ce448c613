//! Integer exchange matrices, Cartan counterparts and Dynkin classification.

mod cartan;
mod classify;
mod dynkin;
mod matrix;

pub use cartan::{cartan_counterpart, determinant, kernel_basis, rank, CartanMatrix};
pub use classify::{classify_cartan, find_isomorphism, CartanClass};
pub use dynkin::{DynkinType, Family};
pub use matrix::ExchangeMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("nonzero diagonal entry at mutable index {0}")]
    NonZeroDiagonal(usize),
    #[error("index {index} out of range for {n} mutable indices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("semidefinite corank-1 matrix {0} matches no catalog diagram")]
    UnknownDiagram(String),
    #[error("classification supports at most 12 nodes, got {0}")]
    TooLarge(usize),
}

/// Free-function forms of the matrix methods.
pub fn skew_symmetrizer(b: &ExchangeMatrix) -> Option<Vec<u64>> {
    b.skew_symmetrizer()
}

pub fn is_acyclic(b: &ExchangeMatrix) -> bool {
    b.is_acyclic()
}
