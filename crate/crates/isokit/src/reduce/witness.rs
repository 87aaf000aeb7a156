//! Witness translation in both directions along each reduction.
//!
//! Each translator takes a witness for one instance and produces a witness
//! for the other; the output always passes the corresponding verifier or an
//! error is raised instead.

use super::{
    column_hyperedges, EdgeIndex, GiInstance, HgiInstance, IiInstance, NodeRole, NodeRoles,
};
use crate::core::{DomainBijection, Item, Permutation, VertexBijection};
use crate::solve::{verify_gi_witness, verify_hgi_witness, verify_ii_witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("invalid witness: {0}")]
    InvalidWitness(&'static str),
    /// The vertex-to-items reduction collapsed equal items, so no bijection
    /// between vertices and items exists; decide the graph instance
    /// directly instead.
    #[error(
        "reduction collapsed {vertices} vertices to {items} items; witness translation undefined"
    )]
    DegenerateCollapse { vertices: usize, items: usize },
}

/// Graph witness to itemset witness: the edge `(v, w)` at position `k` of
/// `G`'s index maps to the position of `(I(v), I(w))` in `H`'s index.
pub fn translate_witness_gi_to_ii(
    i: &VertexBijection,
    inst: &GiInstance,
    eg: &EdgeIndex,
    eh: &EdgeIndex,
) -> Result<DomainBijection, WitnessError> {
    if i.len() != inst.g.vertex_count() || i.len() != inst.h.vertex_count() {
        return Err(WitnessError::InvalidWitness("wrong witness length"));
    }
    if eg.len() != eh.len() {
        return Err(WitnessError::InvalidWitness("edge counts differ"));
    }
    let mut map = Vec::with_capacity(eg.len());
    for &(u, v) in eg.edges() {
        let pos = eh
            .position(i.apply(u), i.apply(v))
            .ok_or(WitnessError::InvalidWitness("edge maps to a non-edge"))?;
        map.push(pos);
    }
    Permutation::new(map).map_err(|_| WitnessError::InvalidWitness("edge map is not a bijection"))
}

/// Itemset witness back to graph witness: `σ(u)` is the vertex of `H`
/// whose item equals `J(S_u)`. Refuses collapsed instances, where no
/// vertex-item bijection exists.
pub fn translate_witness_ii_to_gi(
    j: &DomainBijection,
    inst: &GiInstance,
    eg: &EdgeIndex,
    eh: &EdgeIndex,
) -> Result<VertexBijection, WitnessError> {
    if j.len() != eg.len() || j.len() != eh.len() {
        return Err(WitnessError::InvalidWitness("wrong witness length"));
    }
    let g_items = vertex_items(inst.g.vertex_count(), eg);
    let h_items = vertex_items(inst.h.vertex_count(), eh);
    let distinct_g = distinct_count(&g_items);
    let distinct_h = distinct_count(&h_items);
    if distinct_g < inst.g.vertex_count() || distinct_h < inst.h.vertex_count() {
        return Err(WitnessError::DegenerateCollapse {
            vertices: inst.g.vertex_count().max(inst.h.vertex_count()),
            items: distinct_g.min(distinct_h),
        });
    }
    if inst.g.vertex_count() != inst.h.vertex_count() {
        return Err(WitnessError::InvalidWitness("vertex counts differ"));
    }
    let lookup: std::collections::HashMap<&Item, usize> =
        h_items.iter().enumerate().map(|(w, it)| (it, w)).collect();
    let mut map = Vec::with_capacity(g_items.len());
    for item in &g_items {
        let image = item
            .permute(j)
            .map_err(|_| WitnessError::InvalidWitness("wrong witness length"))?;
        let w = lookup
            .get(&image)
            .ok_or(WitnessError::InvalidWitness("no consistent item match"))?;
        map.push(*w);
    }
    let sigma = Permutation::new(map)
        .map_err(|_| WitnessError::InvalidWitness("item match is not a bijection"))?;
    if !verify_gi_witness(inst, &sigma) {
        return Err(WitnessError::InvalidWitness("translated map fails edge check"));
    }
    Ok(sigma)
}

fn vertex_items(vertex_count: usize, index: &EdgeIndex) -> Vec<Item> {
    let mut incident = vec![Vec::new(); vertex_count];
    for (pos, &(u, v)) in index.edges().iter().enumerate() {
        incident[u].push(pos);
        incident[v].push(pos);
    }
    incident
        .into_iter()
        .map(|ones| Item::from_indices(index.len(), &ones).expect("positions in range"))
        .collect()
}

fn distinct_count(items: &[Item]) -> usize {
    let set: std::collections::HashSet<&Item> = items.iter().collect();
    set.len()
}

/// Itemset witness to hypergraph witness: vertex `g` (row `g` of `S`) maps
/// to the row of `T` equal to `J(S_g)`.
pub fn translate_witness_ii_to_hgi(
    j: &DomainBijection,
    inst: &IiInstance,
) -> Result<VertexBijection, WitnessError> {
    if j.len() != inst.s.domain_size() || j.len() != inst.t.domain_size() {
        return Err(WitnessError::InvalidWitness("wrong witness length"));
    }
    if inst.s.len() != inst.t.len() {
        return Err(WitnessError::InvalidWitness("item counts differ"));
    }
    let mut map = Vec::with_capacity(inst.s.len());
    for item in inst.s.items() {
        let image = item
            .permute(j)
            .map_err(|_| WitnessError::InvalidWitness("wrong witness length"))?;
        match inst.t.items().binary_search(&image) {
            Ok(h) => map.push(h),
            Err(_) => return Err(WitnessError::InvalidWitness("image item not in target")),
        }
    }
    Permutation::new(map).map_err(|_| WitnessError::InvalidWitness("item map is not a bijection"))
}

/// Hypergraph witness back to itemset witness: `γ(s) = t` iff
/// `I(E_s) = E_t`. Among duplicate hyperedges the first free consistent
/// target in domain order is taken; any consistent completion verifies.
pub fn translate_witness_hgi_to_ii(
    i: &VertexBijection,
    inst: &IiInstance,
) -> Result<DomainBijection, WitnessError> {
    if i.len() != inst.s.len() || i.len() != inst.t.len() {
        return Err(WitnessError::InvalidWitness("wrong witness length"));
    }
    if inst.s.domain_size() != inst.t.domain_size() {
        return Err(WitnessError::InvalidWitness("domain sizes differ"));
    }
    let s_cols = column_hyperedges(&inst.s);
    let t_cols = column_hyperedges(&inst.t);
    let mut used = vec![false; t_cols.len()];
    let mut map = Vec::with_capacity(s_cols.len());
    for e in &s_cols {
        let image = e
            .permute(i)
            .map_err(|_| WitnessError::InvalidWitness("wrong witness length"))?;
        let target = t_cols
            .iter()
            .enumerate()
            .find(|(t, col)| !used[*t] && **col == image)
            .map(|(t, _)| t)
            .ok_or(WitnessError::InvalidWitness("no matching hyperedge"))?;
        used[target] = true;
        map.push(target);
    }
    let gamma = Permutation::new(map)
        .map_err(|_| WitnessError::InvalidWitness("hyperedge match is not a bijection"))?;
    if !verify_ii_witness(inst, &gamma) {
        return Err(WitnessError::InvalidWitness("translated map fails itemset check"));
    }
    Ok(gamma)
}

/// Witness on the gadgeted graphs restricted to vertex-nodes. A valid
/// isomorphism cannot map a vertex-node onto a gadgeted node (only the
/// latter lie on triangles), so any violation marks the witness invalid.
pub fn translate_witness_gi_to_hgi(
    i: &VertexBijection,
    inst: &HgiInstance,
    roles: &NodeRoles,
) -> Result<VertexBijection, WitnessError> {
    if i.len() != roles.g.len() || roles.g.len() != roles.h.len() {
        return Err(WitnessError::InvalidWitness("wrong witness length"));
    }
    let nv = inst.g.vertex_count();
    if inst.h.vertex_count() != nv {
        return Err(WitnessError::InvalidWitness("vertex counts differ"));
    }
    let mut map = Vec::with_capacity(nv);
    for (node, role) in roles.g.iter().enumerate() {
        if let NodeRole::Vertex(v) = role {
            debug_assert_eq!(*v, node);
            match roles.h[i.apply(node)] {
                NodeRole::Vertex(w) => map.push(w),
                _ => {
                    return Err(WitnessError::InvalidWitness(
                        "vertex-node maps to a gadget node",
                    ))
                }
            }
        }
    }
    let witness = Permutation::new(map)
        .map_err(|_| WitnessError::InvalidWitness("restriction is not a bijection"))?;
    if !verify_hgi_witness(inst, &witness) {
        return Err(WitnessError::InvalidWitness(
            "restriction fails hyperedge check",
        ));
    }
    Ok(witness)
}

/// Lifts a hypergraph witness onto the gadgeted graphs: vertex-nodes map
/// by `I`, and each hyperedge occurrence maps to the first free occurrence
/// with matching image content, carrying its triangle companions along.
pub fn lift_witness_hgi_to_gi(
    i: &VertexBijection,
    inst: &HgiInstance,
    roles: &NodeRoles,
) -> Result<VertexBijection, WitnessError> {
    let nv = inst.g.vertex_count();
    if i.len() != nv || inst.h.vertex_count() != nv {
        return Err(WitnessError::InvalidWitness("wrong witness length"));
    }
    let g_edges = inst.g.hyperedges();
    let h_edges = inst.h.hyperedges();
    if g_edges.len() != h_edges.len() {
        return Err(WitnessError::InvalidWitness("hyperedge counts differ"));
    }
    let mut used = vec![false; h_edges.len()];
    let mut occurrence_map = Vec::with_capacity(g_edges.len());
    for e in g_edges {
        let image = e
            .permute(i)
            .map_err(|_| WitnessError::InvalidWitness("wrong witness length"))?;
        let target = h_edges
            .iter()
            .enumerate()
            .find(|(t, col)| !used[*t] && **col == image)
            .map(|(t, _)| t)
            .ok_or(WitnessError::InvalidWitness("no matching hyperedge"))?;
        used[target] = true;
        occurrence_map.push(target);
    }
    let total = nv + 3 * g_edges.len();
    debug_assert_eq!(roles.g.len(), total);
    let mut map = vec![usize::MAX; total];
    for (v, slot) in map.iter_mut().enumerate().take(nv) {
        *slot = i.apply(v);
    }
    for (k, &k2) in occurrence_map.iter().enumerate() {
        for offset in 0..3 {
            map[nv + 3 * k + offset] = nv + 3 * k2 + offset;
        }
    }
    Permutation::new(map).map_err(|_| WitnessError::InvalidWitness("lift is not a bijection"))
}
