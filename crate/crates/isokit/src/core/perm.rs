use std::fmt;

use super::CoreError;

/// A permutation of `{0, .., n-1}`; `map[i]` is the image of `i`.
///
/// Serves as both a domain bijection (element relabeling) and a vertex
/// bijection (graph/hypergraph witness). File formats and display are
/// 1-based, the in-memory map is 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Validates that `map` is a bijection of `{0, .., n-1}`.
    pub fn new(map: Vec<usize>) -> Result<Self, CoreError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &j in &map {
            if j >= n || seen[j] {
                return Err(CoreError::NotAPermutation { len: n });
            }
            seen[j] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// The transposition swapping `a` and `b` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(a, b);
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Image of index `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { map: inv }
    }

    /// The composition applying `self` first, `next` second.
    pub fn then(&self, next: &Permutation) -> Result<Permutation, CoreError> {
        if next.len() != self.len() {
            return Err(CoreError::SizeMismatch {
                expected: self.len(),
                got: next.len(),
            });
        }
        Ok(Permutation {
            map: self.map.iter().map(|&j| next.map[j]).collect(),
        })
    }

    /// Renders the 1-based image list, e.g. `2 1 3`.
    pub fn display_one_based(&self) -> String {
        self.map
            .iter()
            .map(|&j| (j + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.display_one_based())
    }
}
