use std::cmp::Ordering;

use super::{CoreError, Domain, Item, Permutation};

/// A duplicate-free set of items over one domain; equivalently a 0/1 matrix
/// whose rows are items and whose columns are domain elements.
///
/// Rows are kept sorted in the colexicographic item order, so itemset
/// equality is equality of the sorted row lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Itemset {
    domain: Domain,
    items: Vec<Item>,
}

impl Itemset {
    /// Builds the set of `items` (duplicates collapse) over `domain`.
    pub fn new(domain: Domain, mut items: Vec<Item>) -> Result<Self, CoreError> {
        for item in &items {
            if item.len() != domain.size() {
                return Err(CoreError::SizeMismatch {
                    expected: domain.size(),
                    got: item.len(),
                });
            }
        }
        items.sort();
        items.dedup();
        Ok(Itemset { domain, items })
    }

    pub fn empty(domain: Domain) -> Self {
        Itemset {
            domain,
            items: Vec::new(),
        }
    }

    /// Parses rows of `0`/`1` characters, one item per string.
    pub fn from_rows(domain: Domain, rows: &[&str]) -> Result<Self, CoreError> {
        let items = rows
            .iter()
            .map(|row| {
                let bits: Vec<bool> = row.chars().map(|c| c == '1').collect();
                if bits.len() != domain.size() {
                    return Err(CoreError::SizeMismatch {
                        expected: domain.size(),
                        got: bits.len(),
                    });
                }
                Ok(Item::from_bits(&bits))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Itemset::new(domain, items)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn domain_size(&self) -> usize {
        self.domain.size()
    }

    /// Number of items (matrix rows).
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Rows in canonical (colexicographic ascending) order.
    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn contains(&self, item: &Item) -> bool {
        self.items.binary_search(item).is_ok()
    }

    /// Applies a domain bijection: every item's bits are permuted (a column
    /// permutation of the matrix) and rows are re-sorted. Distinct items
    /// stay distinct, so the size is preserved.
    pub fn apply(&self, perm: &Permutation) -> Result<Itemset, CoreError> {
        if perm.len() != self.domain.size() {
            return Err(CoreError::SizeMismatch {
                expected: self.domain.size(),
                got: perm.len(),
            });
        }
        let mut items = self
            .items
            .iter()
            .map(|item| item.permute(perm))
            .collect::<Result<Vec<_>, _>>()?;
        items.sort();
        debug_assert!(items.windows(2).all(|w| w[0] != w[1]));
        Ok(Itemset {
            domain: Domain::new(self.domain.size()),
            items,
        })
    }

    /// Multiset of item cardinalities, ascending — invariant under any
    /// domain bijection.
    pub fn cardinality_multiset(&self) -> Vec<usize> {
        let mut counts: Vec<usize> = self.items.iter().map(Item::cardinality).collect();
        counts.sort_unstable();
        counts
    }

    /// Number of items containing the 0-based element `col`.
    pub fn column_sum(&self, col: usize) -> usize {
        self.items.iter().filter(|item| item.contains(col)).count()
    }

    /// Number of items containing both elements.
    pub fn cooccurrence(&self, a: usize, b: usize) -> usize {
        self.items
            .iter()
            .filter(|item| item.contains(a) && item.contains(b))
            .count()
    }

    /// True iff every item of `self` is an item of `other` (no relabeling).
    pub fn is_subset_of(&self, other: &Itemset) -> bool {
        self.domain == other.domain && self.items.iter().all(|item| other.contains(item))
    }

    /// Rows rendered as 0/1 strings in storage order.
    pub fn row_strings(&self) -> Vec<String> {
        self.items.iter().map(Item::bit_string).collect()
    }
}

impl Ord for Itemset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.items
            .len()
            .cmp(&other.items.len())
            .then_with(|| self.domain.size().cmp(&other.domain.size()))
            .then_with(|| self.items.cmp(&other.items))
    }
}

impl PartialOrd for Itemset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
