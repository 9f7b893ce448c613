//! Seed classes, bounded exchange-graph exploration and normal forms.

mod canonical;
mod explore;
mod export;
mod normal;

pub use canonical::{canonical_form, permute_seed, SeedClass};
pub use explore::{explore, explore_with_jobs, Edge, ExchangeGraphSlice, DEFAULT_NODE_CAP};
pub use export::{to_dot, to_json};
pub use normal::{normal_form_decompose, NormalForm};

use cluster_pattern::PatternError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("no explored seed contains the variable")]
    VariableAbsent,
    #[error("no certificate within the given bounds")]
    NotFoundWithinBounds,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}
