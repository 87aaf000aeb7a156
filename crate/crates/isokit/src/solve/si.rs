//! Subitemset-isomorphism decision: match the items of `S` to distinct
//! equal-cardinality items of `T`, propagating the column constraints each
//! pairing implies, then extract a column bijection by bipartite matching.

use std::time::Instant;

use super::verify::verify_si_witness;
use super::{SearchStats, SolveError};
use crate::core::{DomainBijection, Item, Permutation};
use crate::reduce::IiInstance;

pub fn si_decide(inst: &IiInstance) -> Result<Option<DomainBijection>, SolveError> {
    si_decide_stats(inst).map(|(w, _)| w)
}

pub fn si_decide_stats(
    inst: &IiInstance,
) -> Result<(Option<DomainBijection>, SearchStats), SolveError> {
    let started = Instant::now();
    let mut stats = SearchStats::default();
    let out = search(inst, &mut stats)?;
    stats.elapsed = started.elapsed();
    Ok((out, stats))
}

fn search(
    inst: &IiInstance,
    stats: &mut SearchStats,
) -> Result<Option<DomainBijection>, SolveError> {
    let (s, t) = (&inst.s, &inst.t);
    let n = s.domain_size();
    if t.domain_size() != n {
        return Err(SolveError::DomainMismatch {
            left: n,
            right: t.domain_size(),
        });
    }
    if s.len() > t.len() {
        stats.prunes_by_cardinality += 1;
        return Ok(None);
    }
    // Every cardinality class of S must fit into T's.
    let mut class_s = std::collections::BTreeMap::new();
    for item in s.items() {
        *class_s.entry(item.cardinality()).or_insert(0usize) += 1;
    }
    let mut class_t = std::collections::BTreeMap::new();
    for item in t.items() {
        *class_t.entry(item.cardinality()).or_insert(0usize) += 1;
    }
    for (card, count) in &class_s {
        if class_t.get(card).copied().unwrap_or(0) < *count {
            stats.prunes_by_cardinality += 1;
            return Ok(None);
        }
    }

    let allowed: Vec<Item> = vec![Item::full(n); n];
    let t_comps: Vec<Item> = t.items().iter().map(Item::complement).collect();
    let mut assigned_t = vec![false; t.len()];
    let mut remaining: Vec<usize> = (0..s.len()).collect();
    let witness = assign_items(
        inst,
        &t_comps,
        &mut remaining,
        &mut assigned_t,
        allowed,
        stats,
    );
    if let Some(j) = &witness {
        debug_assert!(verify_si_witness(inst, j));
    }
    Ok(witness)
}

/// True iff pairing `s_item` with `t_item` leaves every column a candidate.
fn compatible(s_item: &Item, t_item: &Item, t_comp: &Item, allowed: &[Item]) -> bool {
    if s_item.cardinality() != t_item.cardinality() {
        return false;
    }
    for (c, row) in allowed.iter().enumerate() {
        let target = if s_item.contains(c) { t_item } else { t_comp };
        if row.intersect(target).is_zero() {
            return false;
        }
    }
    true
}

fn assign_items(
    inst: &IiInstance,
    t_comps: &[Item],
    remaining: &mut Vec<usize>,
    assigned_t: &mut Vec<bool>,
    allowed: Vec<Item>,
    stats: &mut SearchStats,
) -> Option<DomainBijection> {
    if remaining.is_empty() {
        let map = perfect_matching(&allowed)?;
        return Permutation::new(map).ok();
    }

    let (s, t) = (&inst.s, &inst.t);

    // Most-constrained-first: the S-item with the fewest live candidates.
    let mut pick = 0;
    let mut pick_candidates: Option<Vec<usize>> = None;
    for (slot, &si) in remaining.iter().enumerate() {
        let cands: Vec<usize> = (0..t.len())
            .filter(|&ti| {
                !assigned_t[ti]
                    && compatible(&s.items()[si], &t.items()[ti], &t_comps[ti], &allowed)
            })
            .collect();
        let better = match &pick_candidates {
            None => true,
            Some(best) => cands.len() < best.len(),
        };
        if better {
            pick = slot;
            pick_candidates = Some(cands);
            if pick_candidates.as_ref().is_some_and(Vec::is_empty) {
                break;
            }
        }
    }
    let candidates = pick_candidates.unwrap_or_default();
    if candidates.is_empty() {
        return None;
    }

    let si = remaining.swap_remove(pick);
    for ti in candidates {
        stats.nodes_explored += 1;
        let s_item = &s.items()[si];
        let t_item = &t.items()[ti];
        let mut constrained = allowed.clone();
        let mut dead = false;
        for (c, row) in constrained.iter_mut().enumerate() {
            let target = if s_item.contains(c) { t_item } else { &t_comps[ti] };
            *row = row.intersect(target);
            if row.is_zero() {
                dead = true;
                break;
            }
        }
        if dead {
            continue;
        }
        assigned_t[ti] = true;
        let found = assign_items(inst, t_comps, remaining, assigned_t, constrained, stats);
        assigned_t[ti] = false;
        if found.is_some() {
            remaining.push(si);
            let last = remaining.len() - 1;
            remaining.swap(pick, last);
            return found;
        }
    }
    remaining.push(si);
    let last = remaining.len() - 1;
    remaining.swap(pick, last);
    None
}

/// Kuhn's augmenting-path matching over the allowed columns; candidates are
/// tried in ascending index order, so the result is deterministic.
fn perfect_matching(allowed: &[Item]) -> Option<Vec<usize>> {
    let n = allowed.len();
    let mut match_of_target: Vec<Option<usize>> = vec![None; n];

    fn augment(
        c: usize,
        allowed: &[Item],
        visited: &mut Vec<bool>,
        match_of_target: &mut Vec<Option<usize>>,
    ) -> bool {
        for c2 in allowed[c].ones() {
            if visited[c2] {
                continue;
            }
            visited[c2] = true;
            let free = match match_of_target[c2] {
                None => true,
                Some(prev) => augment(prev, allowed, visited, match_of_target),
            };
            if free {
                match_of_target[c2] = Some(c);
                return true;
            }
        }
        false
    }

    for c in 0..n {
        let mut visited = vec![false; n];
        if !augment(c, allowed, &mut visited, &mut match_of_target) {
            return None;
        }
    }
    let mut map = vec![0; n];
    for (c2, source) in match_of_target.iter().enumerate() {
        map[source.expect("perfect matching")] = c2;
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{Domain, Itemset};
    use crate::solve::{si_decide_bruteforce, verify_si_witness};

    fn itemset(rows: &[&str]) -> Itemset {
        let n = rows.first().map_or(0, |r| r.len());
        Itemset::from_rows(Domain::new(n), rows).unwrap()
    }

    #[test]
    fn singleton_embeds_by_relabeling() {
        let inst = IiInstance {
            s: itemset(&["100"]),
            t: itemset(&["010", "110"]),
        };
        let j = si_decide(&inst).unwrap().expect("embeds");
        assert!(verify_si_witness(&inst, &j));
    }

    #[test]
    fn missing_cardinality_is_no() {
        let inst = IiInstance {
            s: itemset(&["111"]),
            t: itemset(&["110", "011", "101"]),
        };
        let (ans, stats) = si_decide_stats(&inst).unwrap();
        assert!(ans.is_none());
        assert!(stats.prunes_by_cardinality > 0);
    }

    #[test]
    fn reflexive_on_every_itemset() {
        for s in [
            itemset(&["1100", "1010", "1110"]),
            Itemset::empty(Domain::new(3)),
            itemset(&["10", "01"]),
        ] {
            let inst = IiInstance { s: s.clone(), t: s };
            assert!(si_decide(&inst).unwrap().is_some());
        }
    }

    #[test]
    fn domain_mismatch_is_structural_error() {
        let inst = IiInstance {
            s: itemset(&["10"]),
            t: itemset(&["100"]),
        };
        assert!(matches!(
            si_decide(&inst),
            Err(SolveError::DomainMismatch { .. })
        ));
    }

    #[test]
    fn more_items_than_target_is_no() {
        let inst = IiInstance {
            s: itemset(&["100", "010"]),
            t: itemset(&["001"]),
        };
        assert_eq!(si_decide(&inst).unwrap(), None);
    }

    #[test]
    fn agrees_with_brute_force_over_three_element_domains() {
        // Sampled sweep: all itemsets with at most 2 rows over 3 elements.
        let all_rows = ["000", "100", "010", "110", "001", "101", "011", "111"];
        let mut sets = Vec::new();
        for mask in 0u32..256 {
            if mask.count_ones() > 2 {
                continue;
            }
            let chosen: Vec<&str> = (0..8)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| all_rows[i])
                .collect();
            sets.push(Itemset::from_rows(Domain::new(3), &chosen).unwrap());
        }
        for s in &sets {
            for t in &sets {
                let inst = IiInstance { s: s.clone(), t: t.clone() };
                let fast = si_decide(&inst).unwrap();
                let brute = si_decide_bruteforce(&inst, 9).unwrap();
                assert_eq!(fast.is_some(), brute.is_some(), "S={s:?} T={t:?}");
                if let Some(j) = fast {
                    assert!(verify_si_witness(&inst, &j));
                }
            }
        }
    }
}
