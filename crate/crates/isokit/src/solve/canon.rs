//! Canonical form of an itemset under column permutation.
//!
//! The canonical matrix is the least itemset (rows kept sorted, row lists
//! compared elementwise) reachable by any column permutation; equality of
//! canonical matrices therefore decides itemset isomorphism. The placement
//! search skips columns with identical content at the same choice point,
//! which collapses the factorial blowup on symmetric inputs.

use crate::core::{Item, Itemset, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// The least reachable matrix, as an itemset.
    pub matrix: Itemset,
    /// One column permutation achieving it: `s.apply(&cert_perm) == matrix`.
    pub cert_perm: Permutation,
}

pub fn canonical_form(s: &Itemset) -> CanonicalForm {
    let n = s.domain_size();
    let columns: Vec<Item> = (0..n)
        .map(|c| {
            let rows: Vec<usize> = s
                .items()
                .iter()
                .enumerate()
                .filter(|(_, item)| item.contains(c))
                .map(|(r, _)| r)
                .collect();
            Item::from_indices(s.len(), &rows).expect("rows in range")
        })
        .collect();

    let mut used = vec![false; n];
    let mut placement: Vec<usize> = Vec::with_capacity(n); // position -> original column
    let mut best: Option<(Itemset, Permutation)> = None;
    descend(s, &columns, &mut used, &mut placement, &mut best);
    let (matrix, cert_perm) = best.expect("at least one placement exists");
    CanonicalForm { matrix, cert_perm }
}

fn descend(
    s: &Itemset,
    columns: &[Item],
    used: &mut Vec<bool>,
    placement: &mut Vec<usize>,
    best: &mut Option<(Itemset, Permutation)>,
) {
    let n = columns.len();
    if placement.len() == n {
        let mut map = vec![0; n];
        for (pos, &col) in placement.iter().enumerate() {
            map[col] = pos;
        }
        let perm = Permutation::new(map).expect("placement is a bijection");
        let candidate = s.apply(&perm).expect("matching domain size");
        let better = match best {
            None => true,
            Some((cur, _)) => candidate < *cur,
        };
        if better {
            *best = Some((candidate, perm));
        }
        return;
    }
    let mut tried: Vec<&Item> = Vec::new();
    for col in 0..n {
        if used[col] {
            continue;
        }
        if tried.iter().any(|&t| *t == columns[col]) {
            continue;
        }
        tried.push(&columns[col]);
        used[col] = true;
        placement.push(col);
        descend(s, columns, used, placement, best);
        placement.pop();
        used[col] = false;
    }
}
