//! Comparator networks and their itemset representation.
//!
//! A network on `n` channels is identified with the itemset of outputs it
//! produces over all `2^n` binary inputs. By the zero-one principle the
//! network sorts every input iff that itemset is exactly the `n+1` sorted
//! vectors, so binary evaluation is the certification path; arbitrary-value
//! evaluation is provided for running networks on real data.

mod enumerate;
mod search;

pub use enumerate::{matchings, PrefixEnumeration, DEFAULT_ENUM_CHANNEL_CAP, DEFAULT_ENUM_LAYER_CAP};
pub use search::{
    depth_search, prune_prefixes, DepthSearchOutcome, LevelStats, PruneOutcome, SearchMode,
    DEFAULT_DEPTH_CHANNEL_CAP,
};

use crate::core::{CoreError, Domain, Item, Itemset, Permutation};

/// Channel cap for `2^n` output enumeration.
pub const DEFAULT_EVAL_CHANNEL_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SortnetError {
    #[error("channel {channel} out of range for {count} channels")]
    ChannelOutOfRange { channel: usize, count: usize },
    #[error("channel {channel} used twice in one layer")]
    ChannelRepeated { channel: usize },
    #[error("input length {got} does not match {expected} channels")]
    InputLength { expected: usize, got: usize },
    #[error("{what} guard exceeded: limit {limit}, requested {requested}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// A min/max comparator between two channels, `lo < hi` (0-based).
///
/// On evaluation the smaller value moves to `lo`, the larger to `hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Comparator {
    lo: usize,
    hi: usize,
}

impl Comparator {
    /// Normalizes the endpoint order; equal endpoints are rejected.
    pub fn new(a: usize, b: usize) -> Result<Self, SortnetError> {
        if a == b {
            return Err(SortnetError::ChannelRepeated { channel: a });
        }
        Ok(Comparator {
            lo: a.min(b),
            hi: a.max(b),
        })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }
}

/// A comparator network: ordered layers of channel-disjoint comparators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComparatorNetwork {
    channels: usize,
    layers: Vec<Vec<Comparator>>,
}

impl ComparatorNetwork {
    /// Validates channel ranges and within-layer disjointness; comparators
    /// inside each layer are kept sorted by their low channel.
    pub fn new(channels: usize, layers: Vec<Vec<Comparator>>) -> Result<Self, SortnetError> {
        let mut normalized = Vec::with_capacity(layers.len());
        for layer in layers {
            let mut used = vec![false; channels];
            let mut sorted = layer;
            for c in &sorted {
                if c.hi >= channels {
                    return Err(SortnetError::ChannelOutOfRange {
                        channel: c.hi + 1,
                        count: channels,
                    });
                }
                for ch in [c.lo, c.hi] {
                    if used[ch] {
                        return Err(SortnetError::ChannelRepeated { channel: ch + 1 });
                    }
                    used[ch] = true;
                }
            }
            sorted.sort_unstable();
            normalized.push(sorted);
        }
        Ok(ComparatorNetwork {
            channels,
            layers: normalized,
        })
    }

    pub fn empty(channels: usize) -> Self {
        ComparatorNetwork {
            channels,
            layers: Vec::new(),
        }
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn layers(&self) -> &[Vec<Comparator>] {
        &self.layers
    }

    /// Number of layers.
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// Total comparator count.
    pub fn size(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// Returns a copy extended by one more layer.
    pub fn with_layer(&self, layer: Vec<Comparator>) -> Result<Self, SortnetError> {
        let mut layers = self.layers.clone();
        layers.push(layer);
        ComparatorNetwork::new(self.channels, layers)
    }

    /// Evaluates one binary input given as a bit mask (bit `i` = channel
    /// `i+1`). Requires `channels ≤ 64`.
    pub fn eval_mask(&self, x: u64) -> u64 {
        debug_assert!(self.channels <= 64);
        let mut v = x;
        for layer in &self.layers {
            for c in layer {
                let a = v >> c.lo & 1;
                let b = v >> c.hi & 1;
                let min = a & b;
                let max = a | b;
                v = (v & !(1 << c.lo) & !(1 << c.hi)) | (min << c.lo) | (max << c.hi);
            }
        }
        v
    }

    /// Evaluates the network on arbitrary ordered values.
    pub fn eval_values<T: Ord + Clone>(&self, input: &[T]) -> Result<Vec<T>, SortnetError> {
        if input.len() != self.channels {
            return Err(SortnetError::InputLength {
                expected: self.channels,
                got: input.len(),
            });
        }
        let mut v = input.to_vec();
        for layer in &self.layers {
            for c in layer {
                if v[c.lo] > v[c.hi] {
                    v.swap(c.lo, c.hi);
                }
            }
        }
        Ok(v)
    }

    /// Evaluates one binary input given as a bit vector.
    pub fn eval_bits(&self, input: &[bool]) -> Result<Vec<bool>, SortnetError> {
        self.eval_values(input)
    }

    /// Distinct outputs over all `2^n` binary inputs, as sorted masks.
    pub fn output_masks(&self, cap: usize) -> Result<Vec<u64>, SortnetError> {
        let limit = cap.min(63);
        if self.channels > limit {
            return Err(SortnetError::GuardExceeded {
                what: "output enumeration channels",
                limit,
                requested: self.channels,
            });
        }
        let total = 1u64 << self.channels;
        let mut seen = vec![false; total as usize];
        for x in 0..total {
            seen[self.eval_mask(x) as usize] = true;
        }
        Ok((0..total).filter(|&m| seen[m as usize]).collect())
    }

    /// The itemset of outputs when the network is applied to all binary
    /// inputs: one item per distinct output vector, channel `i` read as
    /// domain element `d_i`.
    pub fn output_itemset(&self, cap: usize) -> Result<Itemset, SortnetError> {
        let masks = self.output_masks(cap)?;
        Ok(itemset_from_masks(self.channels, &masks))
    }

    /// True iff the network sorts every binary input (zero-one principle).
    pub fn sorts(&self, cap: usize) -> Result<bool, SortnetError> {
        let limit = cap.min(63);
        if self.channels > limit {
            return Err(SortnetError::GuardExceeded {
                what: "output enumeration channels",
                limit,
                requested: self.channels,
            });
        }
        let total = 1u64 << self.channels;
        for x in 0..total {
            if !mask_is_sorted(self.channels, self.eval_mask(x)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Renames channels by `perm` and re-standardizes: a comparator whose
    /// image would put the minimum on the higher channel is flipped, and
    /// the two wire labels are exchanged in everything downstream.
    ///
    /// Returns the relabeled network together with the effective output
    /// permutation `rho`: the relabeled network's outputs are exactly the
    /// original outputs with channels renamed by `rho` (which equals `perm`
    /// whenever no comparator needed flipping).
    pub fn relabel(
        &self,
        perm: &Permutation,
    ) -> Result<(ComparatorNetwork, Permutation), SortnetError> {
        if perm.len() != self.channels {
            return Err(SortnetError::InputLength {
                expected: self.channels,
                got: perm.len(),
            });
        }
        let mut rho: Vec<usize> = perm.as_slice().to_vec();
        let mut layers = Vec::with_capacity(self.layers.len());
        for layer in &self.layers {
            let mut mapped = Vec::with_capacity(layer.len());
            for c in layer {
                let (a, b) = (rho[c.lo], rho[c.hi]);
                if a > b {
                    rho.swap(c.lo, c.hi);
                }
                mapped.push(Comparator::new(a, b).expect("distinct channels"));
            }
            layers.push(mapped);
        }
        let net = ComparatorNetwork::new(self.channels, layers)?;
        let rho = Permutation::new(rho).expect("swaps preserve bijectivity");
        Ok((net, rho))
    }
}

/// True iff the mask reads as a non-decreasing channel sequence
/// (`0^k 1^(n-k)` with channel 1 in the least significant bit).
pub fn mask_is_sorted(channels: usize, mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let t = mask.trailing_zeros() as usize;
    mask >> t == (1u64 << (channels - t)) - 1
}

/// Builds the itemset over an `n`-channel domain from output masks.
pub fn itemset_from_masks(channels: usize, masks: &[u64]) -> Itemset {
    let items = masks
        .iter()
        .map(|&m| Item::from_mask(channels, m))
        .collect();
    Itemset::new(Domain::new(channels), items).expect("masks fit the channel domain")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net(channels: usize, layers: &[&[(usize, usize)]]) -> ComparatorNetwork {
        let layers = layers
            .iter()
            .map(|layer| {
                layer
                    .iter()
                    .map(|&(a, b)| Comparator::new(a - 1, b - 1).unwrap())
                    .collect()
            })
            .collect();
        ComparatorNetwork::new(channels, layers).unwrap()
    }

    #[test]
    fn single_comparator_moves_min_down() {
        // (1,2) on input 10 gives 01.
        let n = net(2, &[&[(1, 2)]]);
        assert_eq!(n.eval_mask(0b01), 0b10); // channel1=1, channel2=0 -> 0,1
        assert_eq!(n.eval_bits(&[true, false]).unwrap(), vec![false, true]);
    }

    #[test]
    fn sorted_inputs_are_fixed_points() {
        let n = net(4, &[&[(1, 3), (2, 4)], &[(1, 2)]]);
        for k in 0..=4u32 {
            let mask = if k == 0 { 0 } else { ((1u64 << k) - 1) << (4 - k) };
            assert!(mask_is_sorted(4, mask));
            assert_eq!(n.eval_mask(mask), mask);
        }
    }

    #[test]
    fn two_sequential_layers_on_110() {
        // Layers [(1,2)] then [(2,3)] on input 110: first layer fixes 110,
        // second swaps channels 2 and 3 giving 101.
        let n = net(3, &[&[(1, 2)], &[(2, 3)]]);
        // input "110" = channels (1,1,0) = mask 0b011
        assert_eq!(n.eval_mask(0b011), 0b101);
        // full 8-input table, worked by hand comparator by comparator
        let table = [
            ("000", "000"),
            ("100", "001"),
            ("010", "001"),
            ("110", "101"),
            ("001", "001"),
            ("101", "011"),
            ("011", "011"),
            ("111", "111"),
        ];
        for (input, expect) in table {
            let bits: Vec<bool> = input.chars().map(|c| c == '1').collect();
            let out: String = n
                .eval_bits(&bits)
                .unwrap()
                .into_iter()
                .map(|b| if b { '1' } else { '0' })
                .collect();
            assert_eq!(out, expect, "input {input}");
        }
    }

    #[test]
    fn output_itemset_of_empty_net_is_everything() {
        let n = ComparatorNetwork::empty(3);
        assert_eq!(n.output_itemset(20).unwrap().len(), 8);
    }

    #[test]
    fn output_itemset_of_single_comparator() {
        let n = net(2, &[&[(1, 2)]]);
        let outputs = n.output_itemset(20).unwrap();
        assert_eq!(outputs.row_strings(), vec!["00", "01", "11"]);
    }

    #[test]
    fn sorts_examples() {
        assert!(net(2, &[&[(1, 2)]]).sorts(20).unwrap());
        assert!(!ComparatorNetwork::empty(2).sorts(20).unwrap());
        assert!(!net(3, &[&[(1, 2)], &[(2, 3)]]).sorts(20).unwrap());
        // Insertion sort for 3 channels.
        assert!(net(3, &[&[(1, 2)], &[(2, 3)], &[(1, 2)]]).sorts(20).unwrap());
    }

    #[test]
    fn sorting_network_outputs_are_the_sorted_vectors() {
        let n = net(3, &[&[(1, 2)], &[(2, 3)], &[(1, 2)]]);
        let outputs = n.output_itemset(20).unwrap();
        assert_eq!(outputs.len(), 4);
        assert_eq!(outputs.row_strings(), vec!["000", "001", "011", "111"]);
    }

    #[test]
    fn guard_on_channel_count() {
        let n = ComparatorNetwork::empty(25);
        assert!(matches!(
            n.output_itemset(20),
            Err(SortnetError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn layer_disjointness_enforced() {
        let c1 = Comparator::new(0, 1).unwrap();
        let c2 = Comparator::new(1, 2).unwrap();
        assert!(matches!(
            ComparatorNetwork::new(3, vec![vec![c1, c2]]),
            Err(SortnetError::ChannelRepeated { .. })
        ));
    }

    #[test]
    fn appending_a_comparator_never_grows_outputs() {
        let base = net(4, &[&[(1, 2), (3, 4)]]);
        let before = base.output_itemset(20).unwrap().len();
        for a in 1..=4 {
            for b in (a + 1)..=4 {
                let bigger = base
                    .with_layer(vec![Comparator::new(a - 1, b - 1).unwrap()])
                    .unwrap();
                assert!(bigger.output_itemset(20).unwrap().len() <= before);
            }
        }
    }

    #[test]
    fn relabeling_transports_output_itemsets() {
        let n = net(4, &[&[(1, 2), (3, 4)], &[(2, 3)]]);
        let outputs = n.output_itemset(20).unwrap();
        for map in [vec![2, 0, 3, 1], vec![3, 2, 1, 0], vec![0, 1, 2, 3], vec![1, 0, 2, 3]] {
            let perm = Permutation::new(map).unwrap();
            let (relabeled, rho) = n.relabel(&perm).unwrap();
            let lhs = relabeled.output_itemset(20).unwrap();
            assert_eq!(lhs, outputs.apply(&rho).unwrap());
        }
        // Orientation-preserving relabelings transport by perm itself.
        let id = Permutation::identity(4);
        let (same, rho) = n.relabel(&id).unwrap();
        assert_eq!(same, n);
        assert_eq!(rho, id);
    }
}
