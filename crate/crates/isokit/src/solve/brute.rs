//! Factorial brute-force oracles: exhaustive trial of all `n!` bijections,
//! used as reference answers in property tests and behind `--oracle`.

use itertools::Itertools;

use super::verify::{verify_ii_witness, verify_si_witness};
use super::{check_guard, SolveError};
use crate::core::{DomainBijection, Permutation, VertexBijection};
use crate::reduce::{GiInstance, HgiInstance, IiInstance};

fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (0..n)
        .permutations(n)
        .map(|map| Permutation::new(map).expect("generated permutations are valid"))
}

/// Exhaustive itemset-isomorphism oracle; first witness in lexicographic
/// permutation order.
pub fn ii_decide_bruteforce(
    inst: &IiInstance,
    guard: usize,
) -> Result<Option<DomainBijection>, SolveError> {
    let n = inst.s.domain_size();
    if n != inst.t.domain_size() || inst.s.len() != inst.t.len() {
        return Ok(None);
    }
    check_guard(n, guard)?;
    Ok(permutations(n).find(|j| verify_ii_witness(inst, j)))
}

/// All itemset-isomorphism witnesses, in lexicographic permutation order.
pub fn ii_witnesses_bruteforce(
    inst: &IiInstance,
    guard: usize,
) -> Result<Vec<DomainBijection>, SolveError> {
    let n = inst.s.domain_size();
    if n != inst.t.domain_size() || inst.s.len() != inst.t.len() {
        return Ok(Vec::new());
    }
    check_guard(n, guard)?;
    Ok(permutations(n)
        .filter(|j| verify_ii_witness(inst, j))
        .collect())
}

/// Exhaustive subitemset-isomorphism oracle over one shared domain.
pub fn si_decide_bruteforce(
    inst: &IiInstance,
    guard: usize,
) -> Result<Option<DomainBijection>, SolveError> {
    let n = inst.s.domain_size();
    if inst.t.domain_size() != n {
        return Err(SolveError::DomainMismatch {
            left: n,
            right: inst.t.domain_size(),
        });
    }
    if inst.s.len() > inst.t.len() {
        return Ok(None);
    }
    check_guard(n, guard)?;
    Ok(permutations(n).find(|j| verify_si_witness(inst, j)))
}

/// Exhaustive graph-isomorphism oracle.
pub fn gi_decide_bruteforce(
    inst: &GiInstance,
    guard: usize,
) -> Result<Option<VertexBijection>, SolveError> {
    let n = inst.g.vertex_count();
    if n != inst.h.vertex_count() || inst.g.edge_count() != inst.h.edge_count() {
        return Ok(None);
    }
    check_guard(n, guard)?;
    Ok(permutations(n).find(|i| super::verify_gi_witness(inst, i)))
}

/// Exhaustive hypergraph-isomorphism oracle (multiset edge comparison).
pub fn hgi_decide_bruteforce(
    inst: &HgiInstance,
    guard: usize,
) -> Result<Option<VertexBijection>, SolveError> {
    let n = inst.g.vertex_count();
    if n != inst.h.vertex_count() || inst.g.hyperedge_count() != inst.h.hyperedge_count() {
        return Ok(None);
    }
    check_guard(n, guard)?;
    Ok(permutations(n).find(|i| super::verify_hgi_witness(inst, i)))
}
