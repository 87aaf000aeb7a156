use super::{CoreError, Itemset};

/// A list of itemsets over one shared domain, ordered by item count
/// ascending with ties broken by the canonical itemset order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    itemsets: Vec<Itemset>,
}

impl Dataset {
    pub fn new(mut itemsets: Vec<Itemset>) -> Result<Self, CoreError> {
        if let Some(first) = itemsets.first() {
            let n = first.domain_size();
            for s in &itemsets {
                if s.domain_size() != n {
                    return Err(CoreError::MixedDomains {
                        expected: n,
                        got: s.domain_size(),
                    });
                }
            }
        }
        itemsets.sort();
        Ok(Dataset { itemsets })
    }

    pub fn itemsets(&self) -> &[Itemset] {
        &self.itemsets
    }

    pub fn len(&self) -> usize {
        self.itemsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.itemsets.is_empty()
    }

    pub fn domain_size(&self) -> Option<usize> {
        self.itemsets.first().map(Itemset::domain_size)
    }
}
