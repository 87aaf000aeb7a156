//! Search-space pruning and depth-optimal search for sorting networks.
//!
//! A prefix is identified with its output itemset; a prefix family is
//! pruned to one representative per minimal equivalence class under
//! subitemset isomorphism. If some prefix's outputs embed into another's
//! under a channel relabeling, any sorting completion of the larger prefix
//! relabels into one for the smaller, so discarding the larger preserves
//! the optimal depth within a fixed-layer-count family.

use rayon::prelude::*;
use std::collections::HashMap;

use super::enumerate::matchings;
use super::{itemset_from_masks, mask_is_sorted, Comparator, ComparatorNetwork, SortnetError};
use crate::core::{Dataset, Itemset};
use crate::solve::{dataset_minimize, MinimizeDecision};

pub const DEFAULT_DEPTH_CHANNEL_CAP: usize = 6;

/// Whether `depth_search` prunes each level to representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    #[default]
    Pruned,
    Unpruned,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruneOutcome {
    /// One prefix per retained representative itemset, in enumeration
    /// order (the first prefix attaining each representative).
    pub representatives: Vec<ComparatorNetwork>,
    /// Prefixes discarded (exact duplicates included).
    pub discarded: usize,
}

/// Prunes a same-channel-count prefix family to subitemset-isomorphism
/// representatives of their output itemsets.
pub fn prune_prefixes(
    prefixes: &[ComparatorNetwork],
    eval_cap: usize,
) -> Result<PruneOutcome, SortnetError> {
    if let Some(first) = prefixes.first() {
        let channels = first.channels();
        for net in prefixes {
            if net.channels() != channels {
                return Err(SortnetError::InputLength {
                    expected: channels,
                    got: net.channels(),
                });
            }
        }
    }
    let outputs: Vec<Itemset> = prefixes
        .iter()
        .map(|net| net.output_itemset(eval_cap))
        .collect::<Result<_, _>>()?;

    // First prefix attaining each distinct itemset, in enumeration order.
    let mut first_by_itemset: HashMap<&Itemset, usize> = HashMap::new();
    let mut distinct: Vec<Itemset> = Vec::new();
    for (i, outs) in outputs.iter().enumerate() {
        if !first_by_itemset.contains_key(outs) {
            first_by_itemset.insert(outs, i);
            distinct.push(outs.clone());
        }
    }

    let dataset = Dataset::new(distinct)?;
    let (kept, _) = dataset_minimize(&dataset);
    let mut indices: Vec<usize> = kept
        .itemsets()
        .iter()
        .map(|s| first_by_itemset[s])
        .collect();
    indices.sort_unstable();
    let representatives: Vec<ComparatorNetwork> =
        indices.iter().map(|&i| prefixes[i].clone()).collect();
    Ok(PruneOutcome {
        discarded: prefixes.len() - representatives.len(),
        representatives,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStats {
    pub depth: usize,
    /// Extensions generated at this level.
    pub candidates: usize,
    /// Prefixes carried to the next level.
    pub representatives: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DepthSearchOutcome {
    Found {
        depth: usize,
        network: ComparatorNetwork,
        levels: Vec<LevelStats>,
    },
    /// No sorting network within the depth bound; with pruning enabled the
    /// scanned representatives cover the whole family, so this is an
    /// exhaustive refutation of every smaller depth as well.
    Exhausted {
        max_depth: usize,
        levels: Vec<LevelStats>,
    },
}

/// Iterative layer-by-layer search for the smallest depth that sorts.
///
/// Levels extend the current prefix set by every non-empty matching (an
/// empty layer never changes outputs, so it cannot help). In pruned mode
/// each level is minimized to representatives before extending.
pub fn depth_search(
    channels: usize,
    max_depth: usize,
    mode: SearchMode,
    channel_cap: usize,
) -> Result<DepthSearchOutcome, SortnetError> {
    if channels > channel_cap {
        return Err(SortnetError::GuardExceeded {
            what: "depth search channels",
            limit: channel_cap,
            requested: channels,
        });
    }
    let empty = ComparatorNetwork::empty(channels);
    let all_inputs: Vec<u64> = (0..1u64 << channels).collect();
    let sorted_count = channels + 1;
    let mut levels = Vec::new();

    if all_inputs.len() == sorted_count {
        return Ok(DepthSearchOutcome::Found {
            depth: 0,
            network: empty,
            levels,
        });
    }

    let layers: Vec<Vec<Comparator>> = matchings(channels)
        .into_iter()
        .filter(|m| !m.is_empty())
        .collect();
    let mut frontier: Vec<(ComparatorNetwork, Vec<u64>)> = vec![(empty, all_inputs)];

    for depth in 1..=max_depth {
        // Children in scan order: frontier-major, layer-minor.
        let children: Vec<(usize, usize, Vec<u64>)> = frontier
            .par_iter()
            .enumerate()
            .flat_map_iter(|(pi, (_, outputs))| {
                layers
                    .iter()
                    .enumerate()
                    .map(move |(li, layer)| (pi, li, apply_layer(outputs, layer)))
            })
            .collect();

        for &(pi, li, ref outputs) in &children {
            if outputs.len() == sorted_count {
                debug_assert!(outputs.iter().all(|&m| mask_is_sorted(channels, m)));
                let network = frontier[pi].0.with_layer(layers[li].clone())?;
                levels.push(LevelStats {
                    depth,
                    candidates: children.len(),
                    representatives: 0,
                });
                return Ok(DepthSearchOutcome::Found {
                    depth,
                    network,
                    levels,
                });
            }
        }

        let candidates = children.len();
        frontier = match mode {
            SearchMode::Unpruned => children
                .into_iter()
                .map(|(pi, li, outputs)| {
                    Ok((frontier[pi].0.with_layer(layers[li].clone())?, outputs))
                })
                .collect::<Result<_, SortnetError>>()?,
            SearchMode::Pruned => {
                // Exact-duplicate collapse first, keeping scan order.
                let mut first_by_outputs: HashMap<&[u64], usize> = HashMap::new();
                let mut order: Vec<(usize, usize, &Vec<u64>)> = Vec::new();
                for (ci, &(pi, li, ref outputs)) in children.iter().enumerate() {
                    if !first_by_outputs.contains_key(outputs.as_slice()) {
                        first_by_outputs.insert(outputs.as_slice(), ci);
                        order.push((pi, li, outputs));
                    }
                }
                let itemsets: Vec<Itemset> = order
                    .iter()
                    .map(|&(_, _, outputs)| itemset_from_masks(channels, outputs))
                    .collect();
                let dataset = Dataset::new(itemsets.clone())?;
                let (_, report) = dataset_minimize(&dataset);
                // Map retained dataset entries back to scan positions.
                let mut keep: Vec<usize> = report
                    .decisions
                    .iter()
                    .filter_map(|d| match d {
                        MinimizeDecision::Retained { index } => {
                            let retained_itemset = &dataset.itemsets()[*index];
                            itemsets.iter().position(|s| s == retained_itemset)
                        }
                        _ => None,
                    })
                    .collect();
                keep.sort_unstable();
                keep.into_iter()
                    .map(|pos| {
                        let (pi, li, outputs) = order[pos];
                        Ok((
                            frontier[pi].0.with_layer(layers[li].clone())?,
                            outputs.clone(),
                        ))
                    })
                    .collect::<Result<_, SortnetError>>()?
            }
        };
        levels.push(LevelStats {
            depth,
            candidates,
            representatives: frontier.len(),
        });
    }

    Ok(DepthSearchOutcome::Exhausted { max_depth, levels })
}

fn apply_layer(outputs: &[u64], layer: &[Comparator]) -> Vec<u64> {
    let mut next: Vec<u64> = outputs
        .iter()
        .map(|&mask| {
            let mut v = mask;
            for c in layer {
                let a = v >> c.lo() & 1;
                let b = v >> c.hi() & 1;
                v = (v & !(1 << c.lo()) & !(1 << c.hi())) | ((a & b) << c.lo()) | ((a | b) << c.hi());
            }
            v
        })
        .collect();
    next.sort_unstable();
    next.dedup();
    next
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sortnet::DEFAULT_EVAL_CHANNEL_CAP;

    fn depth_of(outcome: &DepthSearchOutcome) -> Option<usize> {
        match outcome {
            DepthSearchOutcome::Found { depth, .. } => Some(*depth),
            DepthSearchOutcome::Exhausted { .. } => None,
        }
    }

    #[test]
    fn two_channels_sort_in_one_layer() {
        let out = depth_search(2, 5, SearchMode::Pruned, 6).unwrap();
        match &out {
            DepthSearchOutcome::Found { depth, network, .. } => {
                assert_eq!(*depth, 1);
                assert_eq!(network.size(), 1);
                assert!(network.sorts(DEFAULT_EVAL_CHANNEL_CAP).unwrap());
            }
            _ => panic!("expected a sorting network"),
        }
    }

    #[test]
    fn pruned_and_unpruned_agree_for_three_channels() {
        let pruned = depth_search(3, 4, SearchMode::Pruned, 6).unwrap();
        let unpruned = depth_search(3, 4, SearchMode::Unpruned, 6).unwrap();
        assert_eq!(depth_of(&pruned), Some(3));
        assert_eq!(depth_of(&pruned), depth_of(&unpruned));
    }

    #[test]
    fn bounded_search_reports_exhaustion() {
        let out = depth_search(3, 2, SearchMode::Pruned, 6).unwrap();
        assert!(matches!(out, DepthSearchOutcome::Exhausted { max_depth: 2, .. }));
    }

    #[test]
    fn prune_keeps_the_subsuming_prefix() {
        // On 2 channels the comparator prefix subsumes the empty prefix.
        let prefixes: Vec<ComparatorNetwork> =
            crate::sortnet::PrefixEnumeration::new(2, 1).unwrap().collect();
        let outcome = prune_prefixes(&prefixes, DEFAULT_EVAL_CHANNEL_CAP).unwrap();
        assert_eq!(outcome.representatives.len(), 1);
        assert_eq!(outcome.representatives[0].size(), 1);
        assert_eq!(outcome.discarded, 1);
    }

    #[test]
    fn relabeled_single_comparators_collapse_to_one() {
        let prefixes: Vec<ComparatorNetwork> = crate::sortnet::PrefixEnumeration::new(3, 1)
            .unwrap()
            .collect();
        let outcome = prune_prefixes(&prefixes, DEFAULT_EVAL_CHANNEL_CAP).unwrap();
        // (1,2), (1,3), (2,3) are channel relabelings of one another and
        // subsume the empty prefix.
        assert_eq!(outcome.representatives.len(), 1);
        assert_eq!(outcome.representatives[0].size(), 1);
    }

    #[test]
    fn single_prefix_passes_through() {
        let net = ComparatorNetwork::new(3, vec![vec![Comparator::new(0, 1).unwrap()]]).unwrap();
        let outcome = prune_prefixes(std::slice::from_ref(&net), DEFAULT_EVAL_CHANNEL_CAP).unwrap();
        assert_eq!(outcome.representatives, vec![net]);
        assert_eq!(outcome.discarded, 0);
    }

    #[test]
    fn guard_refuses_oversized_channel_counts() {
        assert!(matches!(
            depth_search(7, 3, SearchMode::Pruned, 6),
            Err(SortnetError::GuardExceeded { .. })
        ));
    }
}
