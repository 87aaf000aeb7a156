use std::fmt;

use super::{CoreError, Permutation};

const BLOCK_BITS: usize = 64;

/// A subset of an `n`-element domain, stored as an `n`-bit vector.
///
/// Bit `i` (0-based) is set iff element `d_{i+1}` belongs to the item.
/// Items compare in colexicographic order: the bit vector is read as a
/// binary number with `d_1` as the least significant bit, so an itemset's
/// rows have one unambiguous storage order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Item {
    len: usize,
    blocks: Vec<u64>,
}

impl Item {
    /// The empty item over an `n`-element domain.
    pub fn empty(len: usize) -> Self {
        Item {
            len,
            blocks: vec![0; len.div_ceil(BLOCK_BITS)],
        }
    }

    /// Builds an item from the 0-based indices of its members.
    pub fn from_indices(len: usize, indices: &[usize]) -> Result<Self, CoreError> {
        let mut item = Item::empty(len);
        for &i in indices {
            if i >= len {
                return Err(CoreError::VertexOutOfRange {
                    vertex: i + 1,
                    count: len,
                });
            }
            item.blocks[i / BLOCK_BITS] |= 1 << (i % BLOCK_BITS);
        }
        Ok(item)
    }

    /// Builds an item from a slice of membership flags.
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut item = Item::empty(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                item.blocks[i / BLOCK_BITS] |= 1 << (i % BLOCK_BITS);
            }
        }
        item
    }

    /// Builds an item over `len ≤ 64` elements from a bit mask
    /// (bit `i` of the mask = element `d_{i+1}`).
    pub fn from_mask(len: usize, mask: u64) -> Self {
        debug_assert!(len <= 64);
        debug_assert!(len == 64 || mask < (1u64 << len));
        let mut item = Item::empty(len);
        if !item.blocks.is_empty() {
            item.blocks[0] = mask;
        }
        item
    }

    /// The domain size this item lives over (number of bits, not members).
    pub fn len(&self) -> usize {
        self.len
    }

    /// True iff the domain has zero elements (`len() == 0`); for
    /// "contains no members" see [`Item::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Membership test for the 0-based element index `i`.
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / BLOCK_BITS] >> (i % BLOCK_BITS) & 1 == 1
    }

    /// Number of members (popcount of the bit vector).
    pub fn cardinality(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Iterates the 0-based indices of the members, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let tz = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(bi * BLOCK_BITS + tz)
                }
            })
        })
    }

    /// Size of the intersection with another item of the same length.
    pub fn intersection_size(&self, other: &Item) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// The item containing every element of the domain.
    pub fn full(len: usize) -> Self {
        let mut item = Item {
            len,
            blocks: vec![u64::MAX; len.div_ceil(BLOCK_BITS)],
        };
        item.mask_tail();
        item
    }

    pub fn complement(&self) -> Item {
        let mut out = Item {
            len: self.len,
            blocks: self.blocks.iter().map(|b| !b).collect(),
        };
        out.mask_tail();
        out
    }

    pub fn intersect(&self, other: &Item) -> Item {
        debug_assert_eq!(self.len, other.len);
        Item {
            len: self.len,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    fn mask_tail(&mut self) {
        let rem = self.len % BLOCK_BITS;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Applies a domain bijection: member `i` becomes member `map[i]`.
    pub fn permute(&self, perm: &Permutation) -> Result<Item, CoreError> {
        if perm.len() != self.len {
            return Err(CoreError::SizeMismatch {
                expected: self.len,
                got: perm.len(),
            });
        }
        let mut out = Item::empty(self.len);
        for i in self.ones() {
            let j = perm.apply(i);
            out.blocks[j / BLOCK_BITS] |= 1 << (j % BLOCK_BITS);
        }
        Ok(out)
    }

    /// The bit mask of the first block; only meaningful for `len ≤ 64`.
    pub fn mask(&self) -> u64 {
        debug_assert!(self.len <= 64);
        self.blocks.first().copied().unwrap_or(0)
    }

    /// Renders the item as a 0/1 string, `d_1` first.
    pub fn bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }
}

impl Ord for Item {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.blocks.iter().rev().cmp(other.blocks.iter().rev()))
    }
}

impl PartialOrd for Item {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Item({})", self.bit_string())
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bit_string())
    }
}
