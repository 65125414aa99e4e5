//! Permutations with prescribed complexity.
//!
//! The building blocks are `w0 s_i`, whose opposite Rothe diagram is the
//! single box `(n + 1 - i, i)`, and the antidiagonal composition that places
//! a smaller permutation `β` in the south-west corner. Composition lowers the
//! complexity by exactly `|D°(β)|`, which fills every gap in the spectrum
//! except `d = 4` (handled by a shifted `54132`) and `d = 1` (never achieved).

use crate::complexity::{analyze, max_complexity};
use crate::diagrams::opposite_rothe;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `w0 s_i` in `S_n` with its known complexity `i(i - 2)` (0 when `i = 1`).
pub fn w0_si(n: usize, i: usize) -> Result<(Permutation, usize)> {
    if n < 2 {
        return Err(Error::TheoremRange { what: "w0 s_i", n, min: 2 });
    }
    let w = Permutation::longest_element(n)?.multiply(&Permutation::adjacent_transposition(n, i)?)?;
    let predicted = if i >= 2 { i * (i - 2) } else { 0 };
    Ok((w, predicted))
}

/// Validated input to [`compose_antidiagonal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionInput {
    alpha: Permutation,
    beta: Permutation,
    k: usize,
}

impl CompositionInput {
    /// Requires `alpha ∈ S_n`, `beta ∈ S_m` with `m = n - k >= 1`, and
    /// `D°(alpha)` nonempty inside rows `1..=k`, columns `n-k+1..=n`.
    pub fn new(alpha: Permutation, beta: Permutation, k: usize) -> Result<Self> {
        let n = alpha.n();
        if k == 0 || k >= n {
            return Err(Error::InvalidComposition(format!("k = {k} must lie in 1..{n}")));
        }
        if beta.n() != n - k {
            return Err(Error::SizeMismatch { left: beta.n(), right: n - k });
        }
        let d = opposite_rothe(&alpha);
        if d.is_empty() {
            return Err(Error::InvalidComposition(format!("D°({alpha}) is empty")));
        }
        if let Some(cell) = d.iter().find(|c| c.row > k || c.col <= n - k) {
            return Err(Error::InvalidComposition(format!(
                "D°({alpha}) has {cell} outside the north-east {k}x{k} block"
            )));
        }
        Ok(CompositionInput { alpha, beta, k })
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn beta(&self) -> &Permutation {
        &self.beta
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `[β_1 + k, ..., β_m + k, α_{m+1}, ..., α_n]`.
    pub fn compose(&self) -> Permutation {
        let m = self.beta.n();
        let word: Vec<usize> = self
            .beta
            .to_vec()
            .into_iter()
            .map(|b| b + self.k)
            .chain(self.alpha.to_vec().into_iter().skip(m))
            .collect();
        Permutation::from_one_line(&word).expect("confined D°(alpha) forces alpha_i = n + 1 - i for i <= m")
    }
}

pub fn compose_antidiagonal(alpha: &Permutation, beta: &Permutation, k: usize) -> Result<Permutation> {
    Ok(CompositionInput::new(alpha.clone(), beta.clone(), k)?.compose())
}

/// Some `β ∈ S_m` with exactly `t` noninversions: starting from `w0`, swap
/// the leftmost adjacent descent `t` times.
pub fn permutation_with_noninversions(m: usize, t: usize) -> Result<Permutation> {
    let max = m * m.saturating_sub(1) / 2;
    if t > max {
        return Err(Error::IndexOutOfRange { index: t, n: m, expected: format!("0..={max}") });
    }
    let mut word: Vec<usize> = Permutation::longest_element(m)?.to_vec();
    for _ in 0..t {
        let p = (0..m - 1).find(|&p| word[p] > word[p + 1]).expect("not yet the identity");
        word.swap(p, p + 1);
    }
    Permutation::from_one_line(&word)
}

/// A permutation in `S_n` whose `Y_w` has complexity exactly `d`, checked by
/// a full re-analysis before it is returned.
pub fn witness(n: usize, d: usize) -> Result<Permutation> {
    if n < 4 {
        return Err(Error::TheoremRange { what: "witness", n, min: 4 });
    }
    if d == 1 {
        return Err(Error::ComplexityOne);
    }
    let max = max_complexity(n);
    if d > max {
        return Err(Error::ComplexityOutOfRange { d, n, max });
    }
    let w = if d == 0 {
        Permutation::identity(n)?
    } else if d == 4 {
        // Shifted 54132 followed by a decreasing tail.
        let s = n - 5;
        let word: Vec<usize> = [s + 5, s + 4, s + 1, s + 3, s + 2].into_iter().chain((1..=s).rev()).collect();
        Permutation::from_one_line(&word)?
    } else {
        let i = (3..n)
            .find(|&i| (i + 1) * (i - 2) / 2 <= d && d <= i * (i - 2))
            .expect("the intervals cover every d except 1 and 4");
        let (alpha, top) = w0_si(n, i)?;
        let beta = permutation_with_noninversions(i - 1, top - d)?;
        compose_antidiagonal(&alpha, &beta, n + 1 - i)?
    };
    let got = analyze(&w).complexity;
    if got != d {
        return Err(Error::WitnessCheck { word: w.to_string(), got, expected: d });
    }
    Ok(w)
}
