//! Group actions on exchange matrices, folding and the folding-triple catalog.

mod action;
mod catalog;
mod fold;

pub use action::{GroupAction, MAX_GROUP_ORDER};
pub use catalog::{
    affine_a_cycle, affine_d_quiver, affine_e_quiver, all_triples, catalog_names, catalog_triple, FoldingTriple,
    PRINCIPAL_TRIPLES,
};
pub use fold::{
    check_admissible, check_invariant, fold, orbit_mutate, orbit_walk, verify_globally_foldable, Admissibility,
    Foldability,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FoldError {
    #[error("action degree {got} does not match {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("generator is not a permutation")]
    NotAPermutation,
    #[error("group has more than {} elements", MAX_GROUP_ORDER)]
    GroupTooLarge,
    #[error("matrix is not invariant under the action")]
    NotInvariant,
    #[error("matrix is not admissible: {0:?}")]
    NotAdmissible(Admissibility),
    #[error("not a mutable orbit")]
    NotAnOrbit,
    #[error("unknown folding triple {0:?}")]
    UnknownTriple(String),
    #[error(transparent)]
    Core(#[from] exchange_core::CoreError),
}
