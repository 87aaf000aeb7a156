//! Itemset-isomorphism decision by refinement-guided backtracking over
//! column assignments.

use std::time::Instant;

use super::refine::refine_sides;
use super::verify::verify_ii_witness;
use super::SearchStats;
use crate::core::{DomainBijection, Itemset, Permutation};
use crate::reduce::IiInstance;

pub fn ii_decide(inst: &IiInstance) -> Option<DomainBijection> {
    ii_decide_stats(inst).0
}

pub fn ii_decide_stats(inst: &IiInstance) -> (Option<DomainBijection>, SearchStats) {
    let mut stats = SearchStats::default();
    let witness = ii_search_where(inst, &mut stats, |_| true);
    (witness, stats)
}

/// Backtracking search with a leaf filter: witnesses are produced in
/// deterministic order and the first one passing both verification and
/// `accept` is returned. The hypergraph route uses the filter to enforce
/// hyperedge multiplicities.
pub(crate) fn ii_search_where<F>(
    inst: &IiInstance,
    stats: &mut SearchStats,
    accept: F,
) -> Option<DomainBijection>
where
    F: FnMut(&Permutation) -> bool,
{
    let started = Instant::now();
    let out = search(inst, stats, accept);
    stats.elapsed = started.elapsed();
    out
}

fn search<F>(inst: &IiInstance, stats: &mut SearchStats, accept: F) -> Option<DomainBijection>
where
    F: FnMut(&Permutation) -> bool,
{
    let (s, t) = (&inst.s, &inst.t);
    let n = s.domain_size();
    if n != t.domain_size() || s.len() != t.len() {
        stats.prunes_by_cardinality += 1;
        return None;
    }
    if s.cardinality_multiset() != t.cardinality_multiset() {
        stats.prunes_by_cardinality += 1;
        return None;
    }
    let joint = refine_sides(&[s, t]);
    if !joint.sides_compatible() {
        stats.prunes_by_refinement += 1;
        return None;
    }

    // S-columns in (color, index) order; T-candidates per color, ascending.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&c| (joint.col_colors[0][c], c));
    let mut t_by_color: Vec<Vec<usize>> = vec![Vec::new(); joint.col_color_count];
    for c in 0..n {
        t_by_color[joint.col_colors[1][c]].push(c);
    }

    let mut state = ColumnSearch {
        inst,
        order,
        t_by_color,
        col_color_s: joint.col_colors[0].clone(),
        cooc_s: cooc(s),
        cooc_t: cooc(t),
        assignment: vec![usize::MAX; n],
        used: vec![false; n],
        assigned: Vec::with_capacity(n),
        accept,
    };
    state.descend(0, stats)
}

struct ColumnSearch<'a, F> {
    inst: &'a IiInstance,
    order: Vec<usize>,
    t_by_color: Vec<Vec<usize>>,
    col_color_s: Vec<usize>,
    cooc_s: Vec<Vec<usize>>,
    cooc_t: Vec<Vec<usize>>,
    assignment: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<(usize, usize)>,
    accept: F,
}

impl<F> ColumnSearch<'_, F>
where
    F: FnMut(&Permutation) -> bool,
{
    fn descend(&mut self, depth: usize, stats: &mut SearchStats) -> Option<Permutation> {
        if depth == self.order.len() {
            let perm = Permutation::new(self.assignment.clone()).ok()?;
            if verify_ii_witness(self.inst, &perm) && (self.accept)(&perm) {
                return Some(perm);
            }
            return None;
        }
        let c = self.order[depth];
        let color = self.col_color_s[c];
        for k in 0..self.t_by_color[color].len() {
            let c2 = self.t_by_color[color][k];
            if self.used[c2] {
                continue;
            }
            stats.nodes_explored += 1;
            // Any witness preserves pairwise co-occurrence counts.
            let consistent = self
                .assigned
                .iter()
                .all(|&(a, a2)| self.cooc_s[c][a] == self.cooc_t[c2][a2]);
            if !consistent {
                continue;
            }
            self.assignment[c] = c2;
            self.used[c2] = true;
            self.assigned.push((c, c2));
            let found = self.descend(depth + 1, stats);
            self.assigned.pop();
            self.used[c2] = false;
            self.assignment[c] = usize::MAX;
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

fn cooc(s: &Itemset) -> Vec<Vec<usize>> {
    let n = s.domain_size();
    let mut m = vec![vec![0; n]; n];
    for item in s.items() {
        let ones: Vec<usize> = item.ones().collect();
        for (k, &a) in ones.iter().enumerate() {
            for &b in &ones[k + 1..] {
                m[a][b] += 1;
                m[b][a] += 1;
            }
        }
    }
    m
}
