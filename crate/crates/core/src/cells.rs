//! Cells of the `n x n` grid and bitset-backed sets of them.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::perm::MAX_N;

/// A grid position in matrix coordinates: row 1 is north, column 1 is west.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(serializer)
    }
}

/// Set of cells in `[n] x [n]`, one `u64` per row (bit `j - 1` is column `j`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CellSet {
    n: usize,
    rows: SmallVec<[u64; 16]>,
}

#[inline]
pub(crate) fn prefix_mask(b: usize) -> u64 {
    if b >= 64 {
        u64::MAX
    } else {
        (1u64 << b) - 1
    }
}

impl CellSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_N, "grid size {n} exceeds {MAX_N}");
        CellSet { n, rows: SmallVec::from_elem(0, n) }
    }

    /// Builds a set from explicit cells, rejecting anything outside the grid.
    pub fn from_cells<I, C>(n: usize, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: Into<Cell>,
    {
        if n > MAX_N {
            return Err(Error::TooLarge { n, max: MAX_N });
        }
        let mut set = CellSet::empty(n);
        for cell in cells {
            let cell = cell.into();
            for index in [cell.row, cell.col] {
                if index == 0 || index > n {
                    return Err(Error::IndexOutOfRange { index, n, expected: format!("1..={n}") });
                }
            }
            set.insert(cell);
        }
        Ok(set)
    }

    /// `masks[i]` holds row `i + 1`; bits at or above `n` must be clear.
    pub(crate) fn from_row_masks(n: usize, masks: &[u64]) -> Self {
        debug_assert_eq!(masks.len(), n);
        debug_assert!(masks.iter().all(|m| m & !prefix_mask(n) == 0));
        CellSet { n, rows: SmallVec::from_slice(masks) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// # Panics
    /// If the cell lies outside the grid.
    pub fn insert(&mut self, cell: Cell) {
        assert!(self.in_grid(cell), "cell {cell} outside {}x{} grid", self.n, self.n);
        self.rows[cell.row - 1] |= 1 << (cell.col - 1);
    }

    pub fn remove(&mut self, cell: Cell) {
        if self.in_grid(cell) {
            self.rows[cell.row - 1] &= !(1 << (cell.col - 1));
        }
    }

    fn in_grid(&self, cell: Cell) -> bool {
        (1..=self.n).contains(&cell.row) && (1..=self.n).contains(&cell.col)
    }

    /// Out-of-grid cells are simply absent.
    pub fn contains(&self, cell: Cell) -> bool {
        self.in_grid(cell) && self.rows[cell.row - 1] >> (cell.col - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Columns occupied in row `row` as a bitmask.
    pub fn row_mask(&self, row: usize) -> u64 {
        self.rows[row - 1]
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.rows
    }

    /// Number of nonempty rows.
    pub fn occupied_row_count(&self) -> usize {
        self.rows.iter().filter(|&&r| r != 0).count()
    }

    /// Bitmask of nonempty columns.
    pub fn occupied_col_mask(&self) -> u64 {
        self.rows.iter().fold(0, |acc, &r| acc | r)
    }

    pub fn occupied_rows(&self) -> Vec<usize> {
        (1..=self.n).filter(|&r| self.rows[r - 1] != 0).collect()
    }

    pub fn occupied_cols(&self) -> Vec<usize> {
        bits(self.occupied_col_mask()).map(|b| b + 1).collect()
    }

    fn zip_with(&self, other: &CellSet, op: impl Fn(u64, u64) -> u64) -> CellSet {
        assert_eq!(self.n, other.n, "cell sets over different grids");
        let rows = self.rows.iter().zip(&other.rows).map(|(&a, &b)| op(a, b)).collect();
        CellSet { n: self.n, rows }
    }

    pub fn difference(&self, other: &CellSet) -> CellSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &CellSet) -> CellSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(&a, &b)| a & !b == 0)
    }

    /// Cells in row-major order: by row, then by column.
    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, &mask)| bits(mask).map(move |c| Cell::new(r + 1, c + 1)))
    }

    pub fn to_vec(&self) -> Vec<Cell> {
        self.iter().collect()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.iter().map(|c| (c.row, c.col)).collect()
    }
}

/// Indices of set bits, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

impl fmt::Debug for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| (c.row, c.col))).finish()
    }
}

impl Serialize for CellSet {
    /// Sorted array of `[row, col]` pairs.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for cell in self.iter() {
            seq.serialize_element(&cell)?;
        }
        seq.end()
    }
}
