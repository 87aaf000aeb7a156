use super::{CoreError, Item, Permutation};

/// An undirected hypergraph: hyperedges are arbitrary vertex subsets
/// (possibly empty) kept as a multiset.
///
/// Multiplicity is preserved deliberately: the itemset-to-hypergraph
/// reduction emits one hyperedge per domain element, and two identical
/// columns must still yield two hyperedges for the inverse witness to be a
/// bijection. Hyperedges are stored sorted, so structural equality is
/// multiset equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    hyperedges: Vec<Item>,
}

impl Hypergraph {
    /// Builds a hypergraph from vertex-index lists (0-based).
    pub fn new(vertex_count: usize, hyperedges: &[Vec<usize>]) -> Result<Self, CoreError> {
        let edges = hyperedges
            .iter()
            .map(|vs| Item::from_indices(vertex_count, vs))
            .collect::<Result<Vec<_>, _>>()?;
        Hypergraph::from_edge_items(vertex_count, edges)
    }

    /// Builds a hypergraph from hyperedges given as vertex bit sets.
    pub fn from_edge_items(vertex_count: usize, mut edges: Vec<Item>) -> Result<Self, CoreError> {
        for e in &edges {
            if e.len() != vertex_count {
                return Err(CoreError::SizeMismatch {
                    expected: vertex_count,
                    got: e.len(),
                });
            }
        }
        edges.sort();
        Ok(Hypergraph {
            vertex_count,
            hyperedges: edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Hyperedges in canonical order, duplicates kept.
    pub fn hyperedges(&self) -> &[Item] {
        &self.hyperedges
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    /// Multiset of hyperedge sizes, ascending — a permutation invariant.
    pub fn size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.hyperedges.iter().map(Item::cardinality).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Relabels vertices by `perm`; the hyperedge multiset follows.
    pub fn apply(&self, perm: &Permutation) -> Result<Hypergraph, CoreError> {
        if perm.len() != self.vertex_count {
            return Err(CoreError::SizeMismatch {
                expected: self.vertex_count,
                got: perm.len(),
            });
        }
        let edges = self
            .hyperedges
            .iter()
            .map(|e| e.permute(perm))
            .collect::<Result<Vec<_>, _>>()?;
        Hypergraph::from_edge_items(self.vertex_count, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_are_kept() {
        let h = Hypergraph::new(3, &[vec![0, 1], vec![0, 1], vec![]]).unwrap();
        assert_eq!(h.hyperedge_count(), 3);
        assert_eq!(h.size_multiset(), vec![0, 2, 2]);
    }

    #[test]
    fn out_of_range_vertex_rejected() {
        assert!(Hypergraph::new(2, &[vec![2]]).is_err());
    }

    #[test]
    fn zero_vertices_with_empty_edges() {
        let h = Hypergraph::new(0, &[vec![], vec![]]).unwrap();
        assert_eq!(h.vertex_count(), 0);
        assert_eq!(h.hyperedge_count(), 2);
    }

    #[test]
    fn relabeling_preserves_multiset_structure() {
        let h = Hypergraph::new(4, &[vec![0, 1, 2], vec![0, 2], vec![0, 2]]).unwrap();
        let p = Permutation::new(vec![3, 1, 0, 2]).unwrap();
        let moved = h.apply(&p).unwrap();
        assert_eq!(moved.size_multiset(), h.size_multiset());
        assert_eq!(moved.apply(&p.inverse()).unwrap(), h);
    }
}
