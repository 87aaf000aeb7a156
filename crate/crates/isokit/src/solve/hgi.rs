//! Hypergraph-isomorphism decision, two configurable routes.
//!
//! The itemset route views hyperedges as rows over the vertex domain and
//! runs the itemset search with a multiplicity filter at the leaves. The
//! incidence route builds the colored incidence encoding and runs the graph
//! solver, skipping the triangle gadget since both ends stay in process.

use std::collections::HashMap;
use std::time::Instant;

use super::ii::ii_search_where;
use super::verify::verify_hgi_witness;
use super::SearchStats;
use crate::core::{Domain, Item, Itemset, Permutation, VertexBijection};
use crate::reduce::{colored_incidence_graph, GiInstance, HgiInstance, IiInstance};

/// Which decision route `hgi_decide` takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HgiRoute {
    /// Transpose view: hyperedges as items, vertices as domain elements.
    #[default]
    Itemset,
    /// Colored incidence graph through the plain-graph solver.
    Incidence,
}

pub fn hgi_decide(inst: &HgiInstance, route: HgiRoute) -> Option<VertexBijection> {
    hgi_decide_stats(inst, route).0
}

pub fn hgi_decide_stats(
    inst: &HgiInstance,
    route: HgiRoute,
) -> (Option<VertexBijection>, SearchStats) {
    let started = Instant::now();
    let mut stats = SearchStats::default();
    let out = search(inst, route, &mut stats);
    stats.elapsed = started.elapsed();
    if let Some(i) = &out {
        debug_assert!(verify_hgi_witness(inst, i));
    }
    (out, stats)
}

fn search(inst: &HgiInstance, route: HgiRoute, stats: &mut SearchStats) -> Option<VertexBijection> {
    let (g, h) = (&inst.g, &inst.h);
    if g.vertex_count() != h.vertex_count()
        || g.hyperedge_count() != h.hyperedge_count()
        || g.size_multiset() != h.size_multiset()
        || multiplicity_multiset(g.hyperedges()) != multiplicity_multiset(h.hyperedges())
    {
        stats.prunes_by_cardinality += 1;
        return None;
    }
    match route {
        HgiRoute::Itemset => via_itemset(inst, stats),
        HgiRoute::Incidence => via_incidence(inst, stats),
    }
}

/// Sorted multiset of duplicate-group sizes.
fn multiplicity_multiset(edges: &[Item]) -> Vec<usize> {
    let mut counts: HashMap<&Item, usize> = HashMap::new();
    for e in edges {
        *counts.entry(e).or_insert(0) += 1;
    }
    let mut out: Vec<usize> = counts.into_values().collect();
    out.sort_unstable();
    out
}

fn via_itemset(inst: &HgiInstance, stats: &mut SearchStats) -> Option<VertexBijection> {
    let nv = inst.g.vertex_count();
    let mult_g = multiplicities(inst.g.hyperedges());
    let mult_h = multiplicities(inst.h.hyperedges());

    let s = Itemset::new(Domain::new(nv), inst.g.hyperedges().to_vec()).expect("uniform length");
    let t = Itemset::new(Domain::new(nv), inst.h.hyperedges().to_vec()).expect("uniform length");
    let ii = IiInstance { s, t };

    let filter = |perm: &Permutation| {
        mult_g.iter().all(|(edge, count)| {
            let image = edge.permute(perm).expect("matching vertex count");
            mult_h.get(&image) == Some(count)
        })
    };
    ii_search_where(&ii, stats, filter)
}

fn multiplicities(edges: &[Item]) -> HashMap<Item, usize> {
    let mut map = HashMap::new();
    for e in edges {
        *map.entry(e.clone()).or_insert(0) += 1;
    }
    map
}

fn via_incidence(inst: &HgiInstance, stats: &mut SearchStats) -> Option<VertexBijection> {
    let nv = inst.g.vertex_count();
    let gi = GiInstance {
        g: colored_incidence_graph(&inst.g),
        h: colored_incidence_graph(&inst.h),
    };
    let (witness, gi_stats) = super::gi_decide_stats(&gi);
    stats.nodes_explored += gi_stats.nodes_explored;
    stats.prunes_by_cardinality += gi_stats.prunes_by_cardinality;
    stats.prunes_by_refinement += gi_stats.prunes_by_refinement;
    let full = witness?;
    // Colors force vertex-nodes onto vertex-nodes; the prefix restriction
    // is the hypergraph witness.
    let restricted: Vec<usize> = (0..nv).map(|v| full.apply(v)).collect();
    Permutation::new(restricted).ok()
}
