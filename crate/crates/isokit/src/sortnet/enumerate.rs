//! Prefix enumeration: all `k`-layer networks whose layers are (possibly
//! empty) matchings on the channel set, streamed in deterministic order.

use super::{Comparator, ComparatorNetwork, SortnetError};

pub const DEFAULT_ENUM_CHANNEL_CAP: usize = 8;
pub const DEFAULT_ENUM_LAYER_CAP: usize = 3;

/// All matchings on `channels` channels, sorted lexicographically by
/// comparator list; the empty matching comes first.
pub fn matchings(channels: usize) -> Vec<Vec<Comparator>> {
    let mut out = Vec::new();
    let available: Vec<usize> = (0..channels).collect();
    let mut current = Vec::new();
    collect_matchings(&available, &mut current, &mut out);
    out.sort();
    out
}

fn collect_matchings(
    available: &[usize],
    current: &mut Vec<Comparator>,
    out: &mut Vec<Vec<Comparator>>,
) {
    match available.first() {
        None => out.push(current.clone()),
        Some(&c) => {
            // Leave the smallest channel unmatched.
            collect_matchings(&available[1..], current, out);
            // Or pair it with any later channel.
            for (k, &d) in available.iter().enumerate().skip(1) {
                let mut rest: Vec<usize> = available[1..].to_vec();
                rest.remove(k - 1);
                current.push(Comparator::new(c, d).expect("distinct channels"));
                collect_matchings(&rest, current, out);
                current.pop();
            }
        }
    }
}

/// Odometer over `matchings(n)^k`: yields every `k`-layer prefix, first
/// layer most significant.
pub struct PrefixEnumeration {
    channels: usize,
    matchings: Vec<Vec<Comparator>>,
    indices: Vec<usize>,
    done: bool,
}

impl PrefixEnumeration {
    pub fn new(channels: usize, layers: usize) -> Result<Self, SortnetError> {
        Self::with_caps(channels, layers, DEFAULT_ENUM_CHANNEL_CAP, DEFAULT_ENUM_LAYER_CAP)
    }

    pub fn with_caps(
        channels: usize,
        layers: usize,
        channel_cap: usize,
        layer_cap: usize,
    ) -> Result<Self, SortnetError> {
        if channels > channel_cap {
            return Err(SortnetError::GuardExceeded {
                what: "prefix enumeration channels",
                limit: channel_cap,
                requested: channels,
            });
        }
        if layers > layer_cap {
            return Err(SortnetError::GuardExceeded {
                what: "prefix enumeration layers",
                limit: layer_cap,
                requested: layers,
            });
        }
        Ok(PrefixEnumeration {
            channels,
            matchings: matchings(channels),
            indices: vec![0; layers],
            done: false,
        })
    }

    /// Total number of prefixes the stream will yield.
    pub fn total(&self) -> u64 {
        (self.matchings.len() as u64).pow(self.indices.len() as u32)
    }
}

impl Iterator for PrefixEnumeration {
    type Item = ComparatorNetwork;

    fn next(&mut self) -> Option<ComparatorNetwork> {
        if self.done {
            return None;
        }
        let layers: Vec<Vec<Comparator>> = self
            .indices
            .iter()
            .map(|&i| self.matchings[i].clone())
            .collect();
        let net = ComparatorNetwork::new(self.channels, layers).expect("matchings are disjoint");
        // Advance the odometer, last layer fastest.
        let mut pos = self.indices.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.indices[pos] += 1;
            if self.indices[pos] < self.matchings.len() {
                break;
            }
            self.indices[pos] = 0;
        }
        Some(net)
    }
}
