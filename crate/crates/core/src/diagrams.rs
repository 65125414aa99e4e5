//! Opposite Rothe diagram and the diagrams derived from it.
//!
//! All diagrams live in matrix coordinates. Connectivity is edge adjacency:
//! two cells are neighbours when they share a side.

use serde::Serialize;

use crate::cells::{prefix_mask, Cell, CellSet};
use crate::perm::Permutation;

/// Every diagram attached to a permutation, computed once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramBundle {
    pub w: Permutation,
    pub opposite_rothe: CellSet,
    pub essential: CellSet,
    pub dominant: CellSet,
    pub southwest: CellSet,
    pub l_diagram: CellSet,
    pub l_prime: CellSet,
}

/// `D°(w) = {(i, j) : w(j) < i, w^{-1}(i) > j}`.
pub fn opposite_rothe(w: &Permutation) -> CellSet {
    opposite_rothe_of_word(w.word())
}

pub(crate) fn opposite_rothe_of_word(word: &[u8]) -> CellSet {
    let n = word.len();
    let mut pos = [0usize; 65];
    for (j, &v) in word.iter().enumerate() {
        pos[v as usize] = j + 1;
    }
    let mut rows = [0u64; 64];
    // Columns j whose dot lies strictly above row i.
    let mut above = 0u64;
    for i in 1..=n {
        rows[i - 1] = above & prefix_mask(pos[i] - 1);
        above |= 1 << (pos[i] - 1);
    }
    CellSet::from_row_masks(n, &rows[..n])
}

/// North-east corners: cells with no diagram cell directly north or east.
pub fn essential_of(diagram: &CellSet) -> CellSet {
    let n = diagram.n();
    let d = diagram.masks();
    let mut rows = [0u64; 64];
    for r in 0..n {
        let north = if r == 0 { 0 } else { d[r - 1] };
        rows[r] = d[r] & !north & !(d[r] >> 1);
    }
    CellSet::from_row_masks(n, &rows[..n])
}

pub fn essential_set(w: &Permutation) -> CellSet {
    essential_of(&opposite_rothe(w))
}

/// Cells weakly south-west of some cell of `essential`.
pub fn southwest_of(essential: &CellSet) -> CellSet {
    let n = essential.n();
    let mut rows = [0u64; 64];
    let mut reach = 0usize;
    for r in 0..n {
        let mask = essential.row_mask(r + 1);
        if mask != 0 {
            reach = reach.max(64 - mask.leading_zeros() as usize);
        }
        rows[r] = prefix_mask(reach);
    }
    CellSet::from_row_masks(n, &rows[..n])
}

pub fn southwest_closure(w: &Permutation) -> CellSet {
    southwest_of(&essential_set(w))
}

/// Edge-connected component of `cells` containing `seed`, empty if `seed`
/// is not in `cells`.
pub fn component_of(cells: &CellSet, seed: Cell) -> CellSet {
    let n = cells.n();
    if !cells.contains(seed) {
        return CellSet::empty(n);
    }
    let d = cells.masks();
    let mut cur = [0u64; 64];
    cur[seed.row - 1] = 1 << (seed.col - 1);
    loop {
        let mut changed = false;
        for r in 0..n {
            let mut grow = cur[r] | cur[r] << 1 | cur[r] >> 1;
            if r > 0 {
                grow |= cur[r - 1];
            }
            if r + 1 < n {
                grow |= cur[r + 1];
            }
            let next = d[r] & grow;
            if next != cur[r] {
                cur[r] = next;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    CellSet::from_row_masks(n, &cur[..n])
}

/// Maximal edge-connected pieces, ordered by their south-west-most cell
/// (largest row first, then smallest column).
pub fn connected_components(cells: &CellSet) -> Vec<CellSet> {
    let mut rest = cells.clone();
    let mut comps = Vec::new();
    loop {
        let Some(seed) = rest.iter().next() else { break };
        let comp = component_of(&rest, seed);
        rest = rest.difference(&comp);
        comps.push(comp);
    }
    comps.sort_by_key(|c| {
        let sw = southwest_most(c);
        (std::cmp::Reverse(sw.row), sw.col)
    });
    comps
}

fn southwest_most(cells: &CellSet) -> Cell {
    let row = (1..=cells.n()).rev().find(|&r| cells.row_mask(r) != 0).expect("nonempty component");
    Cell::new(row, cells.row_mask(row).trailing_zeros() as usize + 1)
}

/// Connected component of `(n, 1)` in `D°(w)`, or empty.
pub fn dominant_of(diagram: &CellSet) -> CellSet {
    let n = diagram.n();
    component_of(diagram, Cell::new(n, 1))
}

pub fn dominant_piece(w: &Permutation) -> CellSet {
    dominant_of(&opposite_rothe(w))
}

/// `L(w) = sw(w) \ dom(w)`.
pub fn l_diagram(w: &Permutation) -> CellSet {
    let d = opposite_rothe(w);
    southwest_of(&essential_of(&d)).difference(&dominant_of(&d))
}

/// `L'(w) = sw(w) \ D°(w)`.
pub fn l_prime_diagram(w: &Permutation) -> CellSet {
    let d = opposite_rothe(w);
    southwest_of(&essential_of(&d)).difference(&d)
}

pub fn bundle(w: &Permutation) -> DiagramBundle {
    let opposite_rothe = opposite_rothe(w);
    let essential = essential_of(&opposite_rothe);
    let dominant = dominant_of(&opposite_rothe);
    let southwest = southwest_of(&essential);
    let l_diagram = southwest.difference(&dominant);
    let l_prime = southwest.difference(&opposite_rothe);
    DiagramBundle { w: w.clone(), opposite_rothe, essential, dominant, southwest, l_diagram, l_prime }
}

/// True when the cells form a single left-justified shape whose rows get
/// weakly shorter going north (a Young diagram drawn in French notation).
pub fn is_french_young(cells: &CellSet) -> bool {
    if cells.is_empty() {
        return true;
    }
    let occupied = cells.occupied_rows();
    let (top, bottom) = (occupied[0], *occupied.last().unwrap());
    let left = cells.occupied_col_mask().trailing_zeros();
    let mut prev_len = usize::MAX;
    for r in (top..=bottom).rev() {
        let mask = cells.row_mask(r) >> left;
        let len = mask.count_ones() as usize;
        if len == 0 || mask != prefix_mask(len) || len > prev_len {
            return false;
        }
        prev_len = len;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(n: usize, cells: &[(usize, usize)]) -> CellSet {
        CellSet::from_cells(n, cells.iter().copied()).unwrap()
    }

    fn lower_triangle(n: usize) -> CellSet {
        let cells: Vec<_> = (1..=n).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
        set(n, &cells)
    }

    #[test]
    fn opposite_rothe_examples() {
        assert_eq!(opposite_rothe(&p("34512")), set(5, &[(4, 1), (5, 1), (5, 2), (2, 4)]));
        assert_eq!(opposite_rothe(&p("3412")), set(4, &[(4, 1), (2, 3)]));
        for n in 1..=6 {
            assert_eq!(opposite_rothe(&Permutation::identity(n).unwrap()), lower_triangle(n));
            assert!(opposite_rothe(&Permutation::longest_element(n).unwrap()).is_empty());
        }
    }

    #[test]
    fn component_examples() {
        let comps = connected_components(&opposite_rothe(&p("34512")));
        assert_eq!(comps, vec![set(5, &[(4, 1), (5, 1), (5, 2)]), set(5, &[(2, 4)])]);
        assert!(connected_components(&CellSet::empty(4)).is_empty());
        let comps = connected_components(&opposite_rothe(&p("3412")));
        assert_eq!(comps, vec![set(4, &[(4, 1)]), set(4, &[(2, 3)])]);
    }

    #[test]
    fn essential_examples() {
        assert_eq!(essential_set(&p("34512")), set(5, &[(2, 4), (4, 1), (5, 2)]));
        assert_eq!(essential_set(&p("3412")), set(4, &[(4, 1), (2, 3)]));
        assert!(essential_set(&p("4321")).is_empty());
    }

    #[test]
    fn dominant_examples() {
        assert_eq!(dominant_piece(&p("3412")), set(4, &[(4, 1)]));
        assert!(dominant_piece(&p("54132")).is_empty());
        assert_eq!(dominant_piece(&Permutation::identity(5).unwrap()), lower_triangle(5));
    }

    #[test]
    fn southwest_examples() {
        let sw = southwest_closure(&p("3412"));
        assert_eq!(sw.len(), 9);
        assert_eq!(sw.occupied_rows(), vec![2, 3, 4]);
        assert_eq!(sw.occupied_cols(), vec![1, 2, 3]);
        let sw = southwest_closure(&p("54312"));
        assert_eq!(sw.len(), 16);
        assert_eq!(sw.occupied_rows(), vec![2, 3, 4, 5]);
        assert_eq!(sw.occupied_cols(), vec![1, 2, 3, 4]);
        assert!(southwest_closure(&p("54321")).is_empty());
    }

    #[test]
    fn l_examples() {
        let l = l_diagram(&p("3412"));
        assert_eq!(l.len(), 8);
        assert!(!l.contains(Cell::new(4, 1)));
        assert_eq!(l_diagram(&p("54132")).len(), 12);
        assert!(l_diagram(&Permutation::identity(5).unwrap()).is_empty());
    }

    #[test]
    fn l_prime_examples() {
        assert_eq!(l_prime_diagram(&p("3412")).len(), 7);
        assert!(l_prime_diagram(&p("4321")).is_empty());
        // D°(51423) = {(2,2), (3,2), (4,2), (3,4)}; sw covers rows 3..5 x cols 1..4
        // and (2,1), (2,2), so L' has holes in rows 3 and 4.
        let lp = l_prime_diagram(&p("51423"));
        assert_eq!(opposite_rothe(&p("51423")), set(5, &[(2, 2), (3, 2), (4, 2), (3, 4)]));
        assert_eq!(
            lp,
            set(5, &[(2, 1), (3, 1), (3, 3), (4, 1), (4, 3), (4, 4), (5, 1), (5, 2), (5, 3), (5, 4)])
        );
        assert!(!is_french_young(&lp));
    }

    #[test]
    fn bundle_examples() {
        let b = bundle(&p("3412"));
        let sizes = |b: &DiagramBundle| {
            (b.opposite_rothe.len(), b.dominant.len(), b.southwest.len(), b.l_diagram.len(), b.l_prime.len())
        };
        assert_eq!(sizes(&b), (2, 1, 9, 8, 7));
        let b = bundle(&Permutation::identity(4).unwrap());
        assert!(b.l_diagram.is_empty() && b.l_prime.is_empty());
        let b = bundle(&p("54132"));
        assert_eq!((b.opposite_rothe.len(), b.dominant.len(), b.l_diagram.len()), (2, 0, 12));
    }

    #[test]
    fn french_young_examples() {
        assert!(is_french_young(&set(5, &[(4, 1), (5, 1), (5, 2)])));
        assert!(is_french_young(&CellSet::empty(3)));
        assert!(!is_french_young(&set(5, &[(2, 4), (4, 1)])));
        // English-notation staircase is not French.
        assert!(!is_french_young(&set(3, &[(1, 1), (1, 2), (2, 1)])));
        // gap inside a row
        assert!(!is_french_young(&set(3, &[(3, 1), (3, 3)])));
        assert!(is_french_young(&set(4, &[(3, 2), (4, 2), (4, 3)])));
    }
}
