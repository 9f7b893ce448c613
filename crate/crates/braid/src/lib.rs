//! Positive braid words: parsing, rewriting, bounded equivalence search and
//! brick quivers.

mod brick;
pub mod fixtures;
mod rewrite;
mod word;

pub use brick::{brick_quiver, BrickDiagram};
pub use rewrite::{apply_relation, equivalent_bounded, replay, Equivalence, Rule};
pub use word::{half_twist, parse_braid, BraidWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("syntax error at byte {0}")]
    SyntaxError(usize),
    #[error("generator s{generator} out of range for {strands} strands")]
    GeneratorOutOfRange { generator: usize, strands: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("rule does not match at position {0}")]
    PatternMismatch(usize),
    #[error("words differ in length ({0} vs {1}) or strand count")]
    LengthMismatch(usize, usize),
    #[error("generator s{0} never occurs")]
    LevelUnused(usize),
}
