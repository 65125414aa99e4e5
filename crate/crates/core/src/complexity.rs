//! Complexity of `Y_w` under the two-sided diagonal torus action.
//!
//! `d_w = |L'(w)| - dim σ_w`, where the cone dimension is `|V(G)| - |comp(G)|`.
//! The expanded form `|L| + |dom| - |D°| - |V| + |comp|` is evaluated from
//! separately computed diagrams and stored alongside for cross-checking.

use serde::{Deserialize, Serialize};

use crate::cells::CellSet;
use crate::diagrams::{dominant_of, essential_of, opposite_rothe, opposite_rothe_of_word, southwest_of};
use crate::graph::{cone_dim_by_rank, vertices_and_components, weight_generators};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Also compute the cone dimension by exact rank of the generators.
    pub verify_rank: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub w: Permutation,
    pub n: usize,
    pub card_opposite_rothe: usize,
    pub card_essential: usize,
    pub card_dominant: usize,
    pub card_southwest: usize,
    pub card_l: usize,
    pub card_l_prime: usize,
    pub vertex_count: usize,
    pub component_count: usize,
    /// `|V| - |comp|`.
    pub cone_dim: usize,
    /// Rank of the weight generators, when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone_dim_rank: Option<usize>,
    pub dim_msv: usize,
    pub dim_y: usize,
    pub length: usize,
    /// `|L'| - cone_dim`.
    pub complexity: usize,
    /// `|L| + |dom| - |D°| - |V| + |comp|`.
    pub complexity_expanded: i64,
}

/// Diagram cardinalities, shared by [`analyze`] and the enumeration fast path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Measures {
    pub n: usize,
    pub opposite_rothe: usize,
    pub essential: usize,
    pub dominant: usize,
    pub southwest: usize,
    pub l: usize,
    pub l_prime: usize,
    pub vertices: usize,
    pub components: usize,
}

impl Measures {
    pub fn of_word(word: &[u8]) -> (Measures, CellSet) {
        let d = opposite_rothe_of_word(word);
        let ess = essential_of(&d);
        let dom = dominant_of(&d);
        let sw = southwest_of(&ess);
        let l = sw.difference(&dom);
        let l_prime_len = sw.difference(&d).len();
        let (vertices, components) = vertices_and_components(&l);
        let m = Measures {
            n: word.len(),
            opposite_rothe: d.len(),
            essential: ess.len(),
            dominant: dom.len(),
            southwest: sw.len(),
            l: l.len(),
            l_prime: l_prime_len,
            vertices,
            components,
        };
        (m, l)
    }

    pub fn complexity(&self) -> usize {
        let cone_dim = self.vertices - self.components;
        self.l_prime.checked_sub(cone_dim).expect("cone dimension exceeds dim Y_w")
    }

    fn complexity_expanded(&self) -> i64 {
        self.l as i64 + self.dominant as i64 - self.opposite_rothe as i64 - self.vertices as i64
            + self.components as i64
    }
}

pub fn analyze(w: &Permutation) -> ComplexityReport {
    analyze_with(w, AnalyzeOptions::default())
}

pub fn analyze_with(w: &Permutation, options: AnalyzeOptions) -> ComplexityReport {
    let (m, l) = Measures::of_word(w.word());
    let n = m.n;
    let cone_dim_rank = options.verify_rank.then(|| cone_dim_by_rank(&weight_generators(&l, n)));
    ComplexityReport {
        w: w.clone(),
        n,
        card_opposite_rothe: m.opposite_rothe,
        card_essential: m.essential,
        card_dominant: m.dominant,
        card_southwest: m.southwest,
        card_l: m.l,
        card_l_prime: m.l_prime,
        vertex_count: m.vertices,
        component_count: m.components,
        cone_dim: m.vertices - m.components,
        cone_dim_rank,
        dim_msv: n * n - m.opposite_rothe,
        dim_y: m.l_prime,
        length: n * (n - 1) / 2 - m.opposite_rothe,
        complexity: m.complexity(),
        complexity_expanded: m.complexity_expanded(),
    }
}

/// `n^2 - |D°(w)|`.
pub fn dim_msv(w: &Permutation) -> usize {
    w.n() * w.n() - opposite_rothe(w).len()
}

/// `|L'(w)|`.
pub fn dim_y(w: &Permutation) -> usize {
    let d = opposite_rothe(w);
    southwest_of(&essential_of(&d)).difference(&d).len()
}

/// Upper bound `(n - 1)(n - 3)` for `n >= 4`; 0 below.
pub fn max_complexity(n: usize) -> usize {
    if n >= 4 {
        (n - 1) * (n - 3)
    } else {
        0
    }
}

impl ComplexityReport {
    pub const CSV_HEADER: &'static str = "w,n,card_opposite_rothe,card_essential,card_dominant,card_southwest,\
card_l,card_l_prime,vertex_count,component_count,cone_dim,dim_msv,dim_y,length,complexity";

    /// Both complexity formulas agree, and so do both cone dimensions when
    /// the rank route was run.
    pub fn is_consistent(&self) -> bool {
        self.complexity as i64 == self.complexity_expanded
            && self.cone_dim_rank.is_none_or(|r| r == self.cone_dim)
            && self.dim_y == self.card_l_prime
            && self.card_l_prime + self.card_opposite_rothe == self.card_l + self.card_dominant
    }

    /// One CSV record matching [`Self::CSV_HEADER`]; the word is quoted.
    pub fn to_csv_row(&self) -> String {
        format!(
            "\"{}\",{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.w,
            self.n,
            self.card_opposite_rothe,
            self.card_essential,
            self.card_dominant,
            self.card_southwest,
            self.card_l,
            self.card_l_prime,
            self.vertex_count,
            self.component_count,
            self.cone_dim,
            self.dim_msv,
            self.dim_y,
            self.length,
            self.complexity
        )
    }
}
