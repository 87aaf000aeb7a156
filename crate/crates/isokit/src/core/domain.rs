use std::hash::{Hash, Hasher};

use super::CoreError;

/// An ordered set of `n` distinct elements `d_1 .. d_n`.
///
/// Labels are display metadata only: two domains are equal iff they have the
/// same size, so relabeled objects still compare structurally. A size of
/// zero is permitted — reductions over edge domains produce it for edgeless
/// graphs.
#[derive(Debug, Clone)]
pub struct Domain {
    size: usize,
    labels: Option<Vec<String>>,
}

impl Domain {
    pub fn new(size: usize) -> Self {
        Domain { size, labels: None }
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self, CoreError> {
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(CoreError::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        Ok(Domain {
            size: labels.len(),
            labels: Some(labels),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Display label of the 0-based element `i` (`d{i+1}` by default).
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(labels) => labels[i].clone(),
            None => format!("d{}", i + 1),
        }
    }
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
    }
}

impl Eq for Domain {}

impl Hash for Domain {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.size.hash(state);
    }
}
