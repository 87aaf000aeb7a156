//! Constructive polynomial-time reductions between the isomorphism
//! problems, plus witness translation along each reduction.
//!
//! * `gi_to_ii` — each vertex becomes the item of its incident edges, so a
//!   graph pair becomes an itemset pair over the edge domain.
//! * `ii_to_hgi` — each item becomes a vertex and each domain element the
//!   hyperedge of items containing it.
//! * `hgi_to_gi` — incidence encoding with a triangle gadget per hyperedge
//!   occurrence, producing a plain graph pair.
//!
//! Every reduction is a pure restructuring of its input and runs in time
//! linear in the instance size.

mod idx;
mod witness;

pub use idx::{parse_index, serialize_index, IndexFile};
pub use witness::{
    lift_witness_hgi_to_gi, translate_witness_gi_to_hgi, translate_witness_gi_to_ii,
    translate_witness_ii_to_gi, translate_witness_ii_to_hgi, translate_witness_hgi_to_ii,
    WitnessError,
};

use crate::core::{Domain, Graph, Hypergraph, Item, Itemset};

/// A graph-isomorphism instance. Unequal orders are allowed; deciders
/// answer "no".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GiInstance {
    pub g: Graph,
    pub h: Graph,
}

/// An itemset-isomorphism instance; the domains may differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IiInstance {
    pub s: Itemset,
    pub t: Itemset,
}

/// A hypergraph-isomorphism instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HgiInstance {
    pub g: Hypergraph,
    pub h: Hypergraph,
}

/// Orders a graph's edges; position `k` is the domain element the edge
/// becomes under the vertex-to-incident-edges reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeIndex {
    edges: Vec<(usize, usize)>,
}

impl EdgeIndex {
    pub fn from_graph(g: &Graph) -> Self {
        EdgeIndex {
            edges: g.edges().to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edge at position `k`.
    pub fn edge(&self, k: usize) -> (usize, usize) {
        self.edges[k]
    }

    /// Position of the (unordered) edge `(u, v)`, if present.
    pub fn position(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }
}

/// The item of edges incident to each vertex; equal items collapse
/// (isolated vertices all yield the empty item, the two endpoints of an
/// isolated edge yield the same singleton).
pub fn incidence_itemset(g: &Graph, index: &EdgeIndex) -> Itemset {
    let m = index.len();
    let mut incident = vec![Vec::new(); g.vertex_count()];
    for (pos, &(u, v)) in index.edges().iter().enumerate() {
        incident[u].push(pos);
        incident[v].push(pos);
    }
    let items: Vec<Item> = incident
        .into_iter()
        .map(|ones| Item::from_indices(m, &ones).expect("positions in range"))
        .collect();
    Itemset::new(Domain::new(m), items).expect("uniform length")
}

/// Reduction from graph isomorphism to itemset isomorphism: `S` holds one
/// item per vertex of `G` over the domain of `G`'s edges (through the
/// returned [`EdgeIndex`]), and likewise `T` for `H`.
pub fn gi_to_ii(inst: &GiInstance) -> (IiInstance, EdgeIndex, EdgeIndex) {
    let eg = EdgeIndex::from_graph(&inst.g);
    let eh = EdgeIndex::from_graph(&inst.h);
    let s = incidence_itemset(&inst.g, &eg);
    let t = incidence_itemset(&inst.h, &eh);
    (IiInstance { s, t }, eg, eh)
}

/// Column contents of both itemsets, in domain order: entry `c` is the set
/// of row indices whose item contains element `c` — the hyperedge that
/// column becomes under the itemset-to-hypergraph reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnIndex {
    pub s_columns: Vec<Item>,
    pub t_columns: Vec<Item>,
}

/// The hyperedge each column of `s` induces: vertex `g` is row `g` of the
/// canonical row order, and element `c` becomes the set of rows containing
/// it. Duplicate columns yield duplicate hyperedges (multiplicity kept).
pub fn column_hyperedges(s: &Itemset) -> Vec<Item> {
    let rows = s.len();
    (0..s.domain_size())
        .map(|c| {
            let members: Vec<usize> = s
                .items()
                .iter()
                .enumerate()
                .filter(|(_, item)| item.contains(c))
                .map(|(g, _)| g)
                .collect();
            Item::from_indices(rows, &members).expect("rows in range")
        })
        .collect()
}

/// Reduction from itemset isomorphism to hypergraph isomorphism: vertices
/// are items (`|V| = |S|`), hyperedges are columns (`|E| = |D_S|`, kept
/// with multiplicity).
pub fn ii_to_hgi(inst: &IiInstance) -> (HgiInstance, ColumnIndex) {
    let s_columns = column_hyperedges(&inst.s);
    let t_columns = column_hyperedges(&inst.t);
    let g = Hypergraph::from_edge_items(inst.s.len(), s_columns.clone())
        .expect("columns sized to rows");
    let h = Hypergraph::from_edge_items(inst.t.len(), t_columns.clone())
        .expect("columns sized to rows");
    (HgiInstance { g, h }, ColumnIndex { s_columns, t_columns })
}

/// Role of a node in the gadgeted incidence graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeRole {
    /// Original hypergraph vertex.
    Vertex(usize),
    /// Incidence node of hyperedge occurrence `k` (canonical order).
    EdgeNode(usize),
    /// One of the two triangle companions of edge-node `k`.
    Gadget(usize, u8),
}

/// Node roles for both sides of a gadgeted instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeRoles {
    pub g: Vec<NodeRole>,
    pub h: Vec<NodeRole>,
}

/// Incidence encoding of one hypergraph: one node per vertex, one node per
/// hyperedge occurrence, an edge between a vertex-node and an edge-node iff
/// the vertex lies in the hyperedge, plus a fresh two-node triangle on each
/// edge-node. The incidence part is bipartite and hence triangle-free, so
/// exactly the gadgeted nodes lie on triangles and any isomorphism of the
/// encodings must map vertex-nodes to vertex-nodes.
pub fn gadget_graph(h: &Hypergraph) -> (Graph, Vec<NodeRole>) {
    let nv = h.vertex_count();
    let m = h.hyperedge_count();
    let total = nv + 3 * m;
    let mut roles = Vec::with_capacity(total);
    for v in 0..nv {
        roles.push(NodeRole::Vertex(v));
    }
    let mut edges = Vec::new();
    for (k, edge) in h.hyperedges().iter().enumerate() {
        let e = nv + 3 * k;
        let a = e + 1;
        let b = e + 2;
        roles.push(NodeRole::EdgeNode(k));
        roles.push(NodeRole::Gadget(k, 0));
        roles.push(NodeRole::Gadget(k, 1));
        for v in edge.ones() {
            edges.push((v, e));
        }
        edges.push((e, a));
        edges.push((e, b));
        edges.push((a, b));
    }
    (
        Graph::new(total, &edges).expect("construction in range"),
        roles,
    )
}

/// Reduction from hypergraph isomorphism to plain graph isomorphism via
/// the gadgeted incidence encoding of both sides.
pub fn hgi_to_gi(inst: &HgiInstance) -> (GiInstance, NodeRoles) {
    let (g, roles_g) = gadget_graph(&inst.g);
    let (h, roles_h) = gadget_graph(&inst.h);
    (
        GiInstance { g, h },
        NodeRoles {
            g: roles_g,
            h: roles_h,
        },
    )
}

/// Colored incidence encoding used by the in-process hypergraph solver:
/// vertex-nodes get color 0 and edge-occurrence nodes color 1, which makes
/// the triangle gadget unnecessary when both ends stay in memory.
pub fn colored_incidence_graph(h: &Hypergraph) -> Graph {
    let nv = h.vertex_count();
    let m = h.hyperedge_count();
    let mut edges = Vec::new();
    for (k, edge) in h.hyperedges().iter().enumerate() {
        for v in edge.ones() {
            edges.push((v, nv + k));
        }
    }
    let mut colors = vec![0u64; nv + m];
    for c in colors.iter_mut().skip(nv) {
        *c = 1;
    }
    Graph::new(nv + m, &edges)
        .expect("construction in range")
        .with_colors(colors)
        .expect("one color per node")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::Domain;

    fn itemset(rows: &[&str]) -> Itemset {
        let n = rows.first().map_or(0, |r| r.len());
        Itemset::from_rows(Domain::new(n), rows).unwrap()
    }

    #[test]
    fn path_reduces_to_incidence_items() {
        // path 1-2-3 with edges e1=(1,2), e2=(2,3): items {e1}, {e1,e2}, {e2}.
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let h = g.clone();
        let (ii, eg, _) = gi_to_ii(&GiInstance { g, h });
        assert_eq!(eg.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(ii.s, itemset(&["10", "11", "01"]));
    }

    #[test]
    fn edgeless_graph_collapses_to_single_empty_item() {
        let g = Graph::new(3, &[]).unwrap();
        let (ii, eg, _) = gi_to_ii(&GiInstance { g: g.clone(), h: g });
        assert_eq!(eg.len(), 0);
        assert_eq!(ii.s.len(), 1);
        assert_eq!(ii.s.domain_size(), 0);
        assert_eq!(ii.s.items()[0].cardinality(), 0);
    }

    #[test]
    fn triangle_reduces_to_two_of_three_rows() {
        let g = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let (ii, _, _) = gi_to_ii(&GiInstance { g: g.clone(), h: g });
        assert_eq!(ii.s, itemset(&["110", "101", "011"]));
    }

    #[test]
    fn isolated_edge_endpoints_collapse() {
        // Two disjoint edges on 4 vertices: both endpoints of each edge
        // carry the same singleton item, so only 2 items remain.
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let (ii, _, _) = gi_to_ii(&GiInstance { g: g.clone(), h: g });
        assert_eq!(ii.s.len(), 2);
    }

    #[test]
    fn fig_style_itemset_column_hyperedges() {
        // Columns of {1100, 1010, 1110}: d1 covers rows {1,2,3}, d2 covers
        // rows {1,3}, d3 covers {2,3}, d4 is empty.
        let s = itemset(&["1100", "1010", "1110"]);
        let cols = column_hyperedges(&s);
        let members: Vec<Vec<usize>> = cols.iter().map(|c| c.ones().collect()).collect();
        assert_eq!(members[0], vec![0, 1, 2]);
        assert_eq!(members[1], vec![0, 2]);
        assert_eq!(members[2], vec![1, 2]);
        assert_eq!(members[3], Vec::<usize>::new());
    }

    #[test]
    fn ii_to_hgi_size_accounting() {
        let s = itemset(&["1100", "1010", "1110"]);
        let t = itemset(&["0110", "0101", "0111"]);
        let (hgi, _) = ii_to_hgi(&IiInstance { s: s.clone(), t });
        assert_eq!(hgi.g.vertex_count(), s.len());
        assert_eq!(hgi.g.hyperedge_count(), s.domain_size());
    }

    #[test]
    fn empty_itemset_reduces_to_empty_hyperedges() {
        let s = Itemset::empty(Domain::new(4));
        let (hgi, _) = ii_to_hgi(&IiInstance { s: s.clone(), t: s });
        assert_eq!(hgi.g.vertex_count(), 0);
        assert_eq!(hgi.g.hyperedge_count(), 4);
        assert!(hgi.g.hyperedges().iter().all(|e| e.cardinality() == 0));
    }

    #[test]
    fn two_singleton_rows_give_singleton_hyperedges() {
        let s = itemset(&["10", "01"]);
        let (hgi, _) = ii_to_hgi(&IiInstance { s: s.clone(), t: s });
        assert_eq!(hgi.g.vertex_count(), 2);
        let members: Vec<Vec<usize>> = hgi.g.hyperedges().iter().map(|e| e.ones().collect()).collect();
        assert_eq!(members, vec![vec![0], vec![1]]);
    }

    #[test]
    fn gadget_of_single_full_hyperedge() {
        // 3 vertices, one hyperedge {1,2,3}: 6 nodes, incidence edges to
        // node 4, triangle on nodes 4,5,6.
        let h = Hypergraph::new(3, &[vec![0, 1, 2]]).unwrap();
        let (g, roles) = gadget_graph(&h);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(
            g.edges(),
            &[(0, 3), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]
        );
        assert_eq!(roles[3], NodeRole::EdgeNode(0));
        // exactly one triangle
        let mut triangles = 0;
        for a in 0..6 {
            for b in (a + 1)..6 {
                for c in (b + 1)..6 {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        triangles += 1;
                    }
                }
            }
        }
        assert_eq!(triangles, 1);
    }

    #[test]
    fn gadget_of_edgeless_hypergraph_is_isolated_nodes() {
        let h = Hypergraph::new(4, &[]).unwrap();
        let (g, _) = gadget_graph(&h);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_empty_hyperedges_become_disjoint_triangles() {
        let h = Hypergraph::new(0, &[vec![], vec![]]).unwrap();
        let (g, roles) = gadget_graph(&h);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(
            g.edges(),
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
        );
        assert_eq!(roles[0], NodeRole::EdgeNode(0));
        assert_eq!(roles[3], NodeRole::EdgeNode(1));
    }

    #[test]
    fn colored_incidence_marks_roles() {
        let h = Hypergraph::new(2, &[vec![0, 1], vec![1]]).unwrap();
        let g = colored_incidence_graph(&h);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.colors(), Some(&[0, 0, 1, 1][..]));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn reduction_is_fast_on_a_thousand_bit_instance() {
        // 50-vertex graph with ~300 edges is over 10^3 bits of incidence.
        let mut edges = Vec::new();
        for u in 0..50usize {
            for v in (u + 1)..50 {
                if (u * 7 + v * 13) % 4 == 0 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(50, &edges).unwrap();
        let inst = GiInstance { g: g.clone(), h: g };
        let start = std::time::Instant::now();
        let (ii, _, _) = gi_to_ii(&inst);
        let (_, _) = ii_to_hgi(&ii);
        assert!(start.elapsed().as_secs_f64() < 1.0);
    }
}
