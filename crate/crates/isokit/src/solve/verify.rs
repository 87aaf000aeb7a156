//! Polynomial-time witness verification for all four problems.
//!
//! A structurally unusable witness (wrong length) is simply a wrong
//! witness: the verifiers return `false` rather than erroring.

use crate::core::{DomainBijection, Graph, VertexBijection};
use crate::reduce::{GiInstance, HgiInstance, IiInstance};

/// Checks `J(S) = T`: apply the bijection and compare canonical row lists.
pub fn verify_ii_witness(inst: &IiInstance, j: &DomainBijection) -> bool {
    if j.len() != inst.s.domain_size() || j.len() != inst.t.domain_size() {
        return false;
    }
    match inst.s.apply(j) {
        Ok(mapped) => mapped == inst.t,
        Err(_) => false,
    }
}

/// Checks `J(S) ⊆ T` over one shared domain.
pub fn verify_si_witness(inst: &IiInstance, j: &DomainBijection) -> bool {
    if j.len() != inst.s.domain_size() || j.len() != inst.t.domain_size() {
        return false;
    }
    match inst.s.apply(j) {
        Ok(mapped) => mapped.is_subset_of(&inst.t),
        Err(_) => false,
    }
}

fn color_of(g: &Graph, v: usize) -> u64 {
    g.colors().map_or(0, |c| c[v])
}

/// Checks `(v,w) ∈ E_G iff (I(v), I(w)) ∈ E_H`, and that vertex colors (an
/// uncolored graph is uniformly color 0) are preserved.
pub fn verify_gi_witness(inst: &GiInstance, i: &VertexBijection) -> bool {
    let (g, h) = (&inst.g, &inst.h);
    if i.len() != g.vertex_count() || g.vertex_count() != h.vertex_count() {
        return false;
    }
    if g.edge_count() != h.edge_count() {
        return false;
    }
    for v in 0..g.vertex_count() {
        if color_of(g, v) != color_of(h, i.apply(v)) {
            return false;
        }
    }
    // Injectivity plus equal edge counts make the forward direction enough.
    g.edges()
        .iter()
        .all(|&(u, v)| h.has_edge(i.apply(u), i.apply(v)))
}

/// Checks `A ∈ E_G iff I(A) ∈ E_H` as multisets of hyperedges.
pub fn verify_hgi_witness(inst: &HgiInstance, i: &VertexBijection) -> bool {
    let (g, h) = (&inst.g, &inst.h);
    if i.len() != g.vertex_count() || g.vertex_count() != h.vertex_count() {
        return false;
    }
    match g.apply(i) {
        Ok(mapped) => mapped == *h,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{Domain, Hypergraph, Itemset, Permutation};

    fn itemset(rows: &[&str]) -> Itemset {
        let n = rows.first().map_or(0, |r| r.len());
        Itemset::from_rows(Domain::new(n), rows).unwrap()
    }

    #[test]
    fn identity_on_equal_itemsets() {
        let s = itemset(&["110", "101"]);
        let inst = IiInstance { s: s.clone(), t: s };
        assert!(verify_ii_witness(&inst, &Permutation::identity(3)));
    }

    #[test]
    fn swap_witness_for_shifted_itemset() {
        let inst = IiInstance {
            s: itemset(&["110", "101"]),
            t: itemset(&["110", "011"]),
        };
        let j = Permutation::new(vec![1, 0, 2]).unwrap();
        assert!(verify_ii_witness(&inst, &j));
        assert!(!verify_ii_witness(&inst, &Permutation::identity(3)));
    }

    #[test]
    fn wrong_size_witness_is_false_not_an_error() {
        let s = itemset(&["10"]);
        let inst = IiInstance { s: s.clone(), t: s };
        assert!(!verify_ii_witness(&inst, &Permutation::identity(3)));
    }

    #[test]
    fn si_witness_is_subset_not_equality() {
        let inst = IiInstance {
            s: itemset(&["100"]),
            t: itemset(&["010", "110"]),
        };
        // d1 -> d2 sends 100 to 010 which lies in T.
        let j = Permutation::new(vec![1, 0, 2]).unwrap();
        assert!(verify_si_witness(&inst, &j));
        assert!(!verify_ii_witness(&inst, &j));
    }

    #[test]
    fn gi_witness_checks_edges_and_colors() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let h = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        // g's middle vertex is 1; h's middle vertex is 0.
        let i = Permutation::new(vec![1, 0, 2]).unwrap();
        let inst = GiInstance { g: g.clone(), h: h.clone() };
        assert!(verify_gi_witness(&inst, &i));
        assert!(!verify_gi_witness(&inst, &Permutation::identity(3)));

        // Colors ride along: the same edge map passes when the colors
        // correspond under it and fails when they do not.
        let consistent = GiInstance {
            g: g.clone().with_colors(vec![9, 5, 5]).unwrap(),
            h: h.clone().with_colors(vec![5, 9, 5]).unwrap(),
        };
        assert!(verify_gi_witness(&consistent, &i));
        let clashing = GiInstance {
            g: g.with_colors(vec![9, 5, 5]).unwrap(),
            h: h.with_colors(vec![9, 5, 5]).unwrap(),
        };
        assert!(!verify_gi_witness(&clashing, &i));
    }

    #[test]
    fn hgi_witness_respects_multiplicity() {
        let g = Hypergraph::new(2, &[vec![0], vec![0]]).unwrap();
        let h = Hypergraph::new(2, &[vec![0], vec![1]]).unwrap();
        let id = Permutation::identity(2);
        assert!(!verify_hgi_witness(&HgiInstance { g: g.clone(), h }, &id));
        assert!(verify_hgi_witness(&HgiInstance { g: g.clone(), h: g }, &id));
    }
}
