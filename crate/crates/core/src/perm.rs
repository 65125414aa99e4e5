//! Permutations of `[n]` in one-line notation.
//!
//! A [`Permutation`] stores the word `w(1) w(2) ... w(n)`. Positions and values
//! are 1-based throughout, matching the matrix coordinates used by the diagram
//! code: the dot of column `j` sits in row `w(j)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cells::{Cell, CellSet};
use crate::error::{Error, Result};

/// Largest supported `n`. Cell sets store one `u64` per row.
pub const MAX_N: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Validates a one-line word. Values must form a bijection on `1..=len`.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_N {
            return Err(Error::TooLarge { n, max: MAX_N });
        }
        let mut seen = [false; MAX_N + 1];
        for &value in word {
            if value == 0 || value > n {
                return Err(Error::ValueOutOfRange { value, n });
            }
            if seen[value] {
                return Err(Error::RepeatedValue(value));
            }
            seen[value] = true;
        }
        Ok(Permutation { word: word.iter().map(|&v| v as u8).collect() })
    }

    /// Caller guarantees `word` is a valid one-line word of length <= MAX_N.
    pub(crate) fn from_word_unchecked(word: &[u8]) -> Self {
        debug_assert!(is_bijection(word));
        Permutation { word: word.to_vec() }
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Permutation { word: (1..=n as u8).collect() })
    }

    /// `w0 = [n, n-1, ..., 1]`.
    pub fn longest_element(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Permutation { word: (1..=n as u8).rev().collect() })
    }

    /// The transposition `s_i` swapping `i` and `i + 1`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Result<Self> {
        check_n(n)?;
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n, expected: format!("1..={}", n - 1) });
        }
        let mut p = Self::identity(n)?;
        p.word.swap(i - 1, i);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// `w(i)` for 1-based `i`.
    ///
    /// # Panics
    /// If `i` is not in `1..=n`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.word.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Composition `(self * other)(i) = self(other(i))`.
    pub fn multiply(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        let word = other.word.iter().map(|&v| self.word[v as usize - 1]).collect();
        Ok(Permutation { word })
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0u8; self.n()];
        for (j, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = (j + 1) as u8;
        }
        Permutation { word }
    }

    /// Pairs `(i, j)` with `i < j` and `w(i) < w(j)`, in lexicographic order.
    pub fn noninversions(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.at(i) < self.at(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn noninversion_count(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v > w[i]).count())
            .sum()
    }

    /// Number of inversions.
    pub fn coxeter_length(&self) -> usize {
        let n = self.n();
        n * (n - 1) / 2 - self.noninversion_count()
    }

    /// Rank of the lower-left submatrix on rows `a..=n`, columns `1..=b`:
    /// the number of `j <= b` with `w(j) >= a`.
    pub fn rank_fn(&self, a: usize, b: usize) -> Result<usize> {
        let n = self.n();
        for index in [a, b] {
            if index == 0 || index > n {
                return Err(Error::IndexOutOfRange { index, n, expected: format!("1..={n}") });
            }
        }
        Ok(self.rank_unchecked(a, b))
    }

    pub(crate) fn rank_unchecked(&self, a: usize, b: usize) -> usize {
        self.word[..b].iter().filter(|&&v| v as usize >= a).count()
    }

    /// The cells `(w(j), j)`.
    pub fn dots(&self) -> CellSet {
        let mut set = CellSet::empty(self.n());
        for (j, &v) in self.word.iter().enumerate() {
            set.insert(Cell::new(v as usize, j + 1));
        }
        set
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Empty)
    } else if n > MAX_N {
        Err(Error::TooLarge { n, max: MAX_N })
    } else {
        Ok(())
    }
}

fn is_bijection(word: &[u8]) -> bool {
    let mut seen = [false; 256];
    word.iter().all(|&v| {
        let ok = v as usize >= 1 && v as usize <= word.len() && !seen[v as usize];
        seen[v as usize] = true;
        ok
    })
}

impl fmt::Display for Permutation {
    /// Compact word (`3412`) for `n < 10`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() < 10 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.word.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `3,4,1,2`, `[3, 4, 1, 2]` and, when fewer than ten digits are
    /// given without separators, the compact word `3412`.
    fn from_str(text: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse { text: text.to_string(), reason: reason.to_string() };
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() {
            return Err(parse_err("empty input"));
        }
        let values: Vec<usize> = if inner.contains(',') {
            inner
                .split(',')
                .map(|tok| tok.trim().parse::<usize>().map_err(|_| parse_err("expected a positive integer")))
                .collect::<Result<_>>()?
        } else if inner.chars().all(|c| c.is_ascii_digit()) {
            if inner.len() >= 10 {
                return Err(parse_err("compact words are only accepted for n < 10; use commas"));
            }
            inner.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
        } else {
            return Err(parse_err("expected digits or a comma-separated list"));
        };
        Permutation::from_one_line(&values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
