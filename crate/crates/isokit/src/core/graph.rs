use super::{CoreError, Item, Permutation};

/// An undirected simple graph on vertices `0 .. vertex_count-1`.
///
/// Edges are stored as sorted `(min, max)` pairs without duplicates. The
/// optional vertex coloring is internal solver state (incidence encodings
/// tag node roles with it); it is not part of any file format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    colors: Option<Vec<u64>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, CoreError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= vertex_count {
                return Err(CoreError::VertexOutOfRange {
                    vertex: u + 1,
                    count: vertex_count,
                });
            }
            if v >= vertex_count {
                return Err(CoreError::VertexOutOfRange {
                    vertex: v + 1,
                    count: vertex_count,
                });
            }
            if u == v {
                return Err(CoreError::SelfLoop { vertex: u + 1 });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Graph {
            vertex_count,
            edges: normalized,
            colors: None,
        })
    }

    /// Attaches a vertex coloring; isomorphisms must then preserve colors.
    pub fn with_colors(mut self, colors: Vec<u64>) -> Result<Self, CoreError> {
        if colors.len() != self.vertex_count {
            return Err(CoreError::LabelCount {
                expected: self.vertex_count,
                got: colors.len(),
            });
        }
        self.colors = Some(colors);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges as sorted `(min, max)` pairs in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn colors(&self) -> Option<&[u64]> {
        self.colors.as_deref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Sorted degree multiset — invariant under vertex permutation.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable();
        deg
    }

    /// Adjacency rows as bit vectors over the vertex domain.
    pub fn adjacency_rows(&self) -> Vec<Item> {
        self.neighbor_lists()
            .into_iter()
            .map(|ns| Item::from_indices(self.vertex_count, &ns).expect("in-range"))
            .collect()
    }

    /// Sorted neighbor list per vertex.
    pub fn neighbor_lists(&self) -> Vec<Vec<usize>> {
        let mut nbrs = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        for ns in &mut nbrs {
            ns.sort_unstable();
        }
        nbrs
    }

    /// Relabels vertices: edge `(u,v)` becomes `(perm(u), perm(v))`; the
    /// adjacency matrix of the result is the original with rows and columns
    /// permuted alike. Colors follow their vertices.
    pub fn apply(&self, perm: &Permutation) -> Result<Graph, CoreError> {
        if perm.len() != self.vertex_count {
            return Err(CoreError::SizeMismatch {
                expected: self.vertex_count,
                got: perm.len(),
            });
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm.apply(u), perm.apply(v)))
            .collect();
        let mut out = Graph::new(self.vertex_count, &edges)?;
        if let Some(colors) = &self.colors {
            let mut moved = vec![0; self.vertex_count];
            for (v, &c) in colors.iter().enumerate() {
                moved[perm.apply(v)] = c;
            }
            out = out.with_colors(moved)?;
        }
        Ok(out)
    }
}
