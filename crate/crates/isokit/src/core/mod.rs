//! Domain types shared by the whole toolkit: items, itemsets, datasets,
//! graphs, hypergraphs, permutations, and their file formats.
//!
//! All types are immutable after construction; every operation returns a new
//! value and none mutates its inputs, so values can be shared freely across
//! threads.

mod dataset;
mod domain;
pub mod formats;
mod graph;
mod hypergraph;
mod item;
mod itemset;
mod perm;

pub use dataset::Dataset;
pub use domain::Domain;
pub use formats::ParseError;
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use item::Item;
pub use itemset::Itemset;
pub use perm::Permutation;

/// Bijection between two equal-size element domains; `map[i] = j` sends
/// element `d_{i+1}` of the source to element `d_{j+1}` of the target.
pub type DomainBijection = Permutation;

/// Bijection between the vertex sets of two equal-order graphs or
/// hypergraphs.
pub type VertexBijection = Permutation;

/// Structural errors raised when constructing or combining core objects.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("map of length {len} is not a permutation")]
    NotAPermutation { len: usize },
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate label {label:?}")]
    DuplicateLabel { label: String },
    #[error("itemsets span different domains ({expected} vs {got} elements)")]
    MixedDomains { expected: usize, got: usize },
}
