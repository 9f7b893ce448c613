//! Combinatorial N-graphs on the disk and the annulus, stored as rotation
//! systems: cycles and their intersection quivers, Legendrian mutation as a
//! local rewrite, Coxeter paddings, concatenation and Moves I/II.

mod catalog;
mod cycles;
mod embed;
mod graph;
mod iso;
mod moves;
mod mutation;
mod padding;

pub use catalog::{build_initial, CatalogType};
pub use cycles::{classify_cycle, intersection_quiver, Cycle, CycleKind, CycleSet};
pub use graph::{Edge, End, Half, Id, NGraph, Surface, VertexKind, Violation};
pub use iso::{isomorphism, Isomorphism};
pub use moves::{move_reduce, Move};
pub use mutation::mutate_cycle;
pub use padding::{
    concatenate, coxeter_padding, legendrian_coxeter_mutation, padding_from_movie, AnnularPadding, PaddingLabel,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NGraphError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cycles {0} and {1} share an edge")]
    CyclesShareEdge(usize, usize),
    #[error("cycle {0} is not a valid cycle of this graph")]
    InvalidCycle(usize),
    #[error("cycle {0} cannot be mutated here")]
    NotMutableKind(usize),
    #[error("cycle index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("unknown padding label {0:?}")]
    UnknownLabel(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("intersection quiver is not bipartite")]
    NotBipartite,
    #[error("not a catalog shape: {0}")]
    NotCatalogShape(String),
    #[error("invalid N-graph: {0:?}")]
    Invalid(Vec<Violation>),
    #[error("json: {0}")]
    Json(String),
    #[error("braid: {0}")]
    Braid(#[from] braid::BraidError),
}
