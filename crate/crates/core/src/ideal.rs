//! Determinantal description of `MSV_w` and `Y_w` from the essential set.
//!
//! Each essential cell `(a, b)` with `r = rk_w(a, b)` imposes that every
//! `(r + 1)`-minor of the lower-left block on rows `a..=n`, columns `1..=b`
//! vanishes. Minors are emitted as descriptors; determinants are never
//! expanded.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::cells::{Cell, CellSet};
use crate::diagrams::{dominant_of, essential_of, opposite_rothe};
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_MINOR_CAP: u128 = 1_000_000;

/// `rk_M(a, b) <= bound` for an essential cell `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankCondition {
    pub cell: Cell,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorDescriptor {
    /// Essential cell whose rank condition this minor encodes.
    pub essential: Cell,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub size: usize,
    /// Entries of the minor set to zero in the `Y_w` form.
    pub zero_cells: Vec<Cell>,
}

impl fmt::Display for MinorDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size == 1 {
            write!(f, "z({},{})", self.rows[0], self.cols[0])?;
        } else {
            write!(f, "det z[{{{}}},{{{}}}]", self.rows.iter().join(","), self.cols.iter().join(","))?;
        }
        if !self.zero_cells.is_empty() {
            let zeros = self.zero_cells.iter().map(|c| format!("z({},{})=0", c.row, c.col)).join(", ");
            write!(f, " with {zeros}")?;
        }
        Ok(())
    }
}

/// One condition per essential cell, ordered by `(row, col)`.
pub fn rank_conditions(w: &Permutation) -> Vec<RankCondition> {
    essential_of(&opposite_rothe(w))
        .iter()
        .map(|cell| RankCondition { cell, bound: w.rank_unchecked(cell.row, cell.col) })
        .collect()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Total number of minors imposed by the essential set:
/// `sum C(n - a + 1, r + 1) * C(b, r + 1)`.
pub fn minor_count(w: &Permutation) -> u128 {
    let n = w.n();
    rank_conditions(w)
        .iter()
        .map(|rc| binomial(n - rc.cell.row + 1, rc.bound + 1) * binomial(rc.cell.col, rc.bound + 1))
        .sum()
}

/// Lazily yields every minor descriptor.
///
/// With `for_y`, entries lying in `dom(w)` are recorded as zero and minors
/// that vanish identically under those zeros are skipped.
pub fn minor_iter(w: &Permutation, for_y: bool) -> impl Iterator<Item = MinorDescriptor> + '_ {
    let n = w.n();
    let dominant = if for_y { dominant_of(&opposite_rothe(w)) } else { CellSet::empty(n) };
    rank_conditions(w).into_iter().flat_map(move |rc| {
        let size = rc.bound + 1;
        let dominant = dominant.clone();
        (rc.cell.row..=n)
            .combinations(size)
            .cartesian_product((1..=rc.cell.col).combinations(size).collect::<Vec<_>>())
            .filter_map(move |(rows, cols)| {
                let zero_cells: Vec<Cell> = rows
                    .iter()
                    .flat_map(|&r| cols.iter().map(move |&c| Cell::new(r, c)))
                    .filter(|&c| dominant.contains(c))
                    .collect();
                if !zero_cells.is_empty() && !has_perfect_matching(&rows, &cols, &dominant) {
                    return None;
                }
                Some(MinorDescriptor { essential: rc.cell, rows, cols, size, zero_cells })
            })
    })
}

/// Collects [`minor_iter`], refusing when the unfiltered count exceeds `cap`.
pub fn minor_generators(w: &Permutation, for_y: bool, cap: u128) -> Result<Vec<MinorDescriptor>> {
    let count = minor_count(w);
    if count > cap {
        return Err(Error::TooManyMinors { count, cap });
    }
    Ok(minor_iter(w, for_y).collect())
}

/// Whether the square pattern of entries outside `zeros` admits a perfect
/// matching, i.e. whether the determinant is not identically zero.
fn has_perfect_matching(rows: &[usize], cols: &[usize], zeros: &CellSet) -> bool {
    fn augment(
        r: usize,
        rows: &[usize],
        cols: &[usize],
        zeros: &CellSet,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for (c, &col) in cols.iter().enumerate() {
            if seen[c] || zeros.contains(Cell::new(rows[r], col)) {
                continue;
            }
            seen[c] = true;
            if owner[c].is_none_or(|o| augment(o, rows, cols, zeros, seen, owner)) {
                owner[c] = Some(r);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; cols.len()];
    (0..rows.len()).all(|r| {
        let mut seen = vec![false; cols.len()];
        augment(r, rows, cols, zeros, &mut seen, &mut owner)
    })
}
