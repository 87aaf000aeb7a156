//! Combinatorial isomorphism toolkit for itemsets, graphs and hypergraphs.
//!
//! The crate revolves around three decision problems — itemset isomorphism
//! (II), subitemset isomorphism (SI) and graph/hypergraph isomorphism
//! (GI/HGI) — and the constructive reductions connecting them:
//!
//! * [`reduce::gi_to_ii`] turns a graph pair into an itemset pair over the
//!   edge domain,
//! * [`reduce::ii_to_hgi`] turns an itemset pair into a hypergraph pair
//!   (items become vertices, domain elements become hyperedges),
//! * [`reduce::hgi_to_gi`] closes the loop through a triangle-gadgeted
//!   incidence encoding.
//!
//! Each reduction comes with witness translators in both directions, so a
//! bijection certifying one instance can be carried to the other and checked
//! with the polynomial-time verifiers in [`solve`].
//!
//! The [`sortnet`] module applies the machinery to comparator networks:
//! a network is identified with its output itemset, and prefix families are
//! pruned to subitemset-isomorphism representatives while searching for
//! depth-optimal sorting networks.

pub mod cli;
pub mod core;
pub mod reduce;
pub mod solve;
pub mod sortnet;

pub use crate::core::{
    Dataset, Domain, DomainBijection, Graph, Hypergraph, Item, Itemset, Permutation,
    VertexBijection,
};
