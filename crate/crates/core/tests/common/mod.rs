//! Naive reference implementation used as a test oracle.
//!
//! Everything here works on plain `BTreeSet<(row, col)>` values and one-line
//! words, and shares no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Cells = BTreeSet<(usize, usize)>;

/// Opposite Rothe diagram as the image of the noninversions:
/// `{(w(i), j) : j < i, w(j) < w(i)}`.
pub fn rothe(w: &[usize]) -> Cells {
    let n = w.len();
    let mut out = Cells::new();
    for i in 1..=n {
        for j in 1..i {
            if w[j - 1] < w[i - 1] {
                out.insert((w[i - 1], j));
            }
        }
    }
    out
}

/// `#{j <= b : w(j) >= a}`.
pub fn rank(w: &[usize], a: usize, b: usize) -> usize {
    w[..b].iter().filter(|&&v| v >= a).count()
}

pub fn dominant(w: &[usize]) -> Cells {
    let n = w.len();
    let mut out = Cells::new();
    for a in 1..=n {
        for b in 1..=n {
            if rank(w, a, b) == 0 {
                out.insert((a, b));
            }
        }
    }
    out
}

pub fn essential(d: &Cells) -> Cells {
    d.iter()
        .copied()
        .filter(|&(i, j)| !d.contains(&(i.wrapping_sub(1), j)) && !d.contains(&(i, j + 1)))
        .collect()
}

pub fn southwest(ess: &Cells, n: usize) -> Cells {
    let mut out = Cells::new();
    for a in 1..=n {
        for b in 1..=n {
            if ess.iter().any(|&(e, f)| a >= e && b <= f) {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Number of vertices and connected components of the bipartite graph with
/// an edge `r - c̄` per cell, by repeated depth-first search.
pub fn graph_stats(cells: &Cells) -> (usize, usize) {
    let mut adj: BTreeMap<(bool, usize), Vec<(bool, usize)>> = BTreeMap::new();
    for &(r, c) in cells {
        adj.entry((false, r)).or_default().push((true, c));
        adj.entry((true, c)).or_default().push((false, r));
    }
    let mut seen = BTreeSet::new();
    let mut comps = 0;
    for &v in adj.keys() {
        if !seen.insert(v) {
            continue;
        }
        comps += 1;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &y in &adj[&x] {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
    }
    (adj.len(), comps)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub rothe: Cells,
    pub essential: Cells,
    pub dominant: Cells,
    pub southwest: Cells,
    pub l: Cells,
    pub l_prime: Cells,
    pub vertices: usize,
    pub components: usize,
    pub complexity: usize,
}

pub fn oracle(w: &[usize]) -> Oracle {
    let n = w.len();
    let d = rothe(w);
    let ess = essential(&d);
    let dom = dominant(w);
    let sw = southwest(&ess, n);
    let l: Cells = sw.difference(&dom).copied().collect();
    let l_prime: Cells = sw.difference(&d).copied().collect();
    let (vertices, components) = graph_stats(&l);
    let complexity = l_prime.len() - (vertices - components);
    Oracle { rothe: d, essential: ess, dominant: dom, southwest: sw, l, l_prime, vertices, components, complexity }
}

/// Rank over the rationals by plain fraction elimination on `i128`
/// numerator/denominator pairs. Only meant for the small 0/±1 matrices
/// arising from weight generators.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<(i128, i128)>> =
        rows.iter().map(|r| r.iter().map(|&x| (x as i128, 1i128)).collect()).collect();
    fn reduce((p, q): (i128, i128)) -> (i128, i128) {
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 { a.abs() } else { gcd(b, a % b) }
        }
        let g = gcd(p, q).max(1);
        let s = if q < 0 { -1 } else { 1 };
        (s * p / g, s * q / g)
    }
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][c].0 != 0) else { continue };
        m.swap(rank, pivot);
        let (pp, pq) = m[rank][c];
        for r in 0..m.len() {
            if r == rank || m[r][c].0 == 0 {
                continue;
            }
            let (fp, fq) = reduce((m[r][c].0 * pq, m[r][c].1 * pp));
            for k in 0..cols {
                let (ap, aq) = m[r][k];
                let (bp, bq) = m[rank][k];
                let (tp, tq) = (fp * bp, fq * bq);
                m[r][k] = reduce((ap * tq - tp * aq, aq * tq));
            }
        }
        rank += 1;
    }
    rank
}

/// Per-complexity counts over all of `S_n` via Heap's algorithm.
pub fn spectrum_counts(n: usize) -> BTreeMap<usize, u64> {
    let mut counts = BTreeMap::new();
    let mut w: Vec<usize> = (1..=n).collect();
    let mut c = vec![0usize; n];
    *counts.entry(oracle(&w).complexity).or_insert(0) += 1;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                w.swap(0, i);
            } else {
                w.swap(c[i], i);
            }
            *counts.entry(oracle(&w).complexity).or_insert(0) += 1;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    counts
}

pub fn to_cells(set: &msv_complexity::CellSet) -> Cells {
    set.pairs().into_iter().collect()
}

/// A uniformly random permutation from a small xorshift stream.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, k: usize) -> usize {
        (self.next() % k as u64) as usize
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut w: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = self.below(i + 1);
            w.swap(i, j);
        }
        w
    }
}
