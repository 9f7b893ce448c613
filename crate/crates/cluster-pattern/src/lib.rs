//! Exact seed, Y-seed and Coxeter mutation over Laurent polynomials.

mod fraction;
mod laurent;
mod roots;
mod seed;

pub use fraction::{poly_gcd, Fraction};
pub use laurent::{parse_laurent, LaurentPoly, Monomial};
pub use roots::{root_membership, RootKind, RootSystem};
pub use seed::{
    bipartition, coxeter_mutation, denominator_vector, mutate_matrix, mutate_seed, mutate_yseed, Seed, YSeed,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PatternError {
    #[error("index {index} out of range for {n} mutable indices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("exchange relation is not Laurent: {0}")]
    NonLaurentResult(String),
    #[error("principal quiver is not bipartite")]
    NotBipartite,
    #[error("zero polynomial has no denominator vector")]
    ZeroPolynomial,
    #[error("Cartan matrix is not of finite or affine type")]
    IndefiniteType,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] exchange_core::CoreError),
}
