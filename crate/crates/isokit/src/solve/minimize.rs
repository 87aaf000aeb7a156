//! Dataset minimization: one representative per subitemset-isomorphism
//! minimal equivalence class.
//!
//! Itemsets are processed in dataset order (item count ascending, canonical
//! ties), so any subsumer of an itemset has already been decided and checks
//! only look backward. A plain-subset pre-filter (no relabeling) removes
//! the easy cases before the relabeling search runs; mutually isomorphic
//! minimal itemsets collapse to the first in canonical order.

use rayon::prelude::*;

use super::si::si_decide;
use crate::core::Dataset;
use crate::reduce::IiInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscardReason {
    /// Discarded by the extremal-sets pre-filter: a proper subset (or an
    /// identical earlier itemset) exists, no relabeling needed.
    PlainSubset,
    /// Discarded because a retained itemset embeds into it under some
    /// domain bijection.
    Subsumed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimizeDecision {
    Retained { index: usize },
    Discarded { index: usize, by: usize, reason: DiscardReason },
}

/// Per-itemset decisions, indexed by position in the (sorted) input
/// dataset; `by` always names a retained index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimizeReport {
    pub decisions: Vec<MinimizeDecision>,
}

impl MinimizeReport {
    pub fn retained_indices(&self) -> Vec<usize> {
        self.decisions
            .iter()
            .filter_map(|d| match d {
                MinimizeDecision::Retained { index } => Some(*index),
                _ => None,
            })
            .collect()
    }
}

/// Returns the minimal representatives of `d` and the decision log.
///
/// The output is subsumption-free and complete: no retained itemset embeds
/// into another, and every discarded itemset has a retained subsumer.
/// Subsumption checks against the retained set may run in parallel; the
/// first (lowest-index) subsumer is reported, so results do not depend on
/// the schedule.
pub fn dataset_minimize(d: &Dataset) -> (Dataset, MinimizeReport) {
    let items = d.itemsets();
    let k = items.len();

    // Extremal-sets pre-filter: find the minimal itemsets first. Any
    // subset relation points backward in dataset order.
    let mut plain_by: Vec<Option<usize>> = vec![None; k];
    for i in 0..k {
        for j in 0..i {
            let proper = items[j].len() < items[i].len() && items[j].is_subset_of(&items[i]);
            let duplicate = items[j] == items[i];
            if proper || duplicate {
                plain_by[i] = Some(j);
                break;
            }
        }
    }

    // Relabeling scan over the survivors, backward against retained only.
    let mut retained: Vec<usize> = Vec::new();
    let mut subsumed_by: Vec<Option<usize>> = vec![None; k];
    for i in 0..k {
        if plain_by[i].is_some() {
            continue;
        }
        let hit = retained
            .par_iter()
            .position_first(|&r| {
                let inst = IiInstance {
                    s: items[r].clone(),
                    t: items[i].clone(),
                };
                matches!(si_decide(&inst), Ok(Some(_)))
            })
            .map(|pos| retained[pos]);
        match hit {
            Some(r) => subsumed_by[i] = Some(r),
            None => retained.push(i),
        }
    }

    // Resolve pre-filter chains to a retained subsumer (transitivity).
    let final_subsumer = |mut j: usize| -> usize {
        loop {
            if subsumed_by[j].is_none() && plain_by[j].is_none() {
                return j;
            }
            j = subsumed_by[j].or(plain_by[j]).expect("checked");
        }
    };

    let decisions: Vec<MinimizeDecision> = (0..k)
        .map(|i| {
            if let Some(r) = subsumed_by[i] {
                MinimizeDecision::Discarded {
                    index: i,
                    by: r,
                    reason: DiscardReason::Subsumed,
                }
            } else if let Some(j) = plain_by[i] {
                MinimizeDecision::Discarded {
                    index: i,
                    by: final_subsumer(j),
                    reason: DiscardReason::PlainSubset,
                }
            } else {
                MinimizeDecision::Retained { index: i }
            }
        })
        .collect();

    let kept = retained.iter().map(|&i| items[i].clone()).collect();
    (
        Dataset::new(kept).expect("subset of a valid dataset"),
        MinimizeReport { decisions },
    )
}
