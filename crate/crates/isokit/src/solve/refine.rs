//! Iterated signature refinement on the row/column structure of itemsets.
//!
//! Columns are partitioned by (column sum, multiset of covering-row colors,
//! multiset of per-cell co-occurrence counts), rows by (cardinality,
//! multiset of member-column colors); the two partitions refine each other
//! until a fixpoint. Color ids are assigned by sorted signature, so they are
//! comparable across itemsets refined together and stable under relabeling.
//! Any itemset isomorphism maps cells onto cells of equal color.

use std::collections::BTreeMap;

use crate::core::Itemset;

/// Stable ordered partition of one itemset's columns and rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementPartition {
    /// Column cells in canonical (signature) order.
    pub column_cells: Vec<Vec<usize>>,
    /// Row cells in canonical (signature) order.
    pub row_cells: Vec<Vec<usize>>,
}

/// Refinement of one or two itemsets with shared color ids.
#[derive(Debug, Clone)]
pub(crate) struct JointRefinement {
    pub col_colors: Vec<Vec<usize>>,
    pub row_colors: Vec<Vec<usize>>,
    pub col_color_count: usize,
    pub row_color_count: usize,
}

impl JointRefinement {
    /// True iff both sides have identical per-color counts on rows and
    /// columns. A mismatch certifies non-isomorphism.
    pub fn sides_compatible(&self) -> bool {
        debug_assert_eq!(self.col_colors.len(), 2);
        histogram(&self.col_colors[0], self.col_color_count)
            == histogram(&self.col_colors[1], self.col_color_count)
            && histogram(&self.row_colors[0], self.row_color_count)
                == histogram(&self.row_colors[1], self.row_color_count)
    }
}

fn histogram(colors: &[usize], count: usize) -> Vec<usize> {
    let mut h = vec![0; count];
    for &c in colors {
        h[c] += 1;
    }
    h
}

type RowSig = (usize, usize, Vec<usize>);
type ColSig = (usize, usize, Vec<usize>, Vec<(usize, usize)>);

pub(crate) fn refine_sides(sides: &[&Itemset]) -> JointRefinement {
    let cooc: Vec<Vec<Vec<usize>>> = sides.iter().map(|s| cooc_matrix(s)).collect();
    let mut row_colors: Vec<Vec<usize>> = sides.iter().map(|s| vec![0; s.len()]).collect();
    let mut col_colors: Vec<Vec<usize>> = sides.iter().map(|s| vec![0; s.domain_size()]).collect();
    let mut row_count = 1usize.min(sides.iter().map(|s| s.len()).max().unwrap_or(0));
    let mut col_count = 1usize.min(sides.iter().map(|s| s.domain_size()).max().unwrap_or(0));

    loop {
        // Rows: previous color, cardinality, member column colors.
        let mut row_sigs: Vec<Vec<RowSig>> = Vec::with_capacity(sides.len());
        for (si, s) in sides.iter().enumerate() {
            let sigs = s
                .items()
                .iter()
                .enumerate()
                .map(|(r, item)| {
                    let mut members: Vec<usize> =
                        item.ones().map(|c| col_colors[si][c]).collect();
                    members.sort_unstable();
                    (row_colors[si][r], item.cardinality(), members)
                })
                .collect();
            row_sigs.push(sigs);
        }
        let new_row_count = assign_colors(&row_sigs, &mut row_colors);

        // Columns: previous color, column sum, covering-row colors, and
        // co-occurrence counts tagged with the other column's cell.
        let mut col_sigs: Vec<Vec<ColSig>> = Vec::with_capacity(sides.len());
        for (si, s) in sides.iter().enumerate() {
            let n = s.domain_size();
            let sigs = (0..n)
                .map(|c| {
                    let mut covering: Vec<usize> = s
                        .items()
                        .iter()
                        .enumerate()
                        .filter(|(_, item)| item.contains(c))
                        .map(|(r, _)| row_colors[si][r])
                        .collect();
                    covering.sort_unstable();
                    let sum = covering.len();
                    let mut pairs: Vec<(usize, usize)> = (0..n)
                        .filter(|&c2| c2 != c)
                        .map(|c2| (col_colors[si][c2], cooc[si][c][c2]))
                        .collect();
                    pairs.sort_unstable();
                    (col_colors[si][c], sum, covering, pairs)
                })
                .collect();
            col_sigs.push(sigs);
        }
        let new_col_count = assign_colors(&col_sigs, &mut col_colors);

        if new_row_count == row_count && new_col_count == col_count {
            break;
        }
        row_count = new_row_count;
        col_count = new_col_count;
    }

    JointRefinement {
        col_colors,
        row_colors,
        col_color_count: col_count,
        row_color_count: row_count,
    }
}

/// Maps each signature to its rank in sorted order; ranks are canonical
/// color ids shared across sides.
fn assign_colors<S: Ord>(sigs: &[Vec<S>], colors: &mut [Vec<usize>]) -> usize {
    let distinct: std::collections::BTreeSet<&S> = sigs.iter().flatten().collect();
    let rank: BTreeMap<&S, usize> = distinct
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    for (si, side) in sigs.iter().enumerate() {
        for (idx, sig) in side.iter().enumerate() {
            colors[si][idx] = rank[sig];
        }
    }
    rank.len()
}

fn cooc_matrix(s: &Itemset) -> Vec<Vec<usize>> {
    let n = s.domain_size();
    let mut m = vec![vec![0; n]; n];
    for item in s.items() {
        let ones: Vec<usize> = item.ones().collect();
        for (k, &a) in ones.iter().enumerate() {
            for &b in &ones[k..] {
                m[a][b] += 1;
                if a != b {
                    m[b][a] += 1;
                }
            }
        }
    }
    m
}

/// Fixpoint partition of a single itemset, cells in canonical order.
pub fn refinement_partition(s: &Itemset) -> RefinementPartition {
    let joint = refine_sides(&[s]);
    RefinementPartition {
        column_cells: cells_of(&joint.col_colors[0], joint.col_color_count),
        row_cells: cells_of(&joint.row_colors[0], joint.row_color_count),
    }
}

fn cells_of(colors: &[usize], count: usize) -> Vec<Vec<usize>> {
    let mut cells = vec![Vec::new(); count];
    for (i, &c) in colors.iter().enumerate() {
        cells[c].push(i);
    }
    cells.retain(|cell| !cell.is_empty());
    cells
}
