//! Exhaustive and sampled surveys over `S_n`.
//!
//! Exhaustive scans split `S_n` into lexicographic blocks sharing a two-letter
//! prefix. Each block folds into a [`SpectrumAccumulator`]; accumulators merge
//! associatively and commutatively, keeping the lexicographically smallest
//! witness per complexity, so serial and parallel scans agree exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complexity::{analyze, max_complexity, ComplexityReport, Measures};
use crate::constructions::w0_si;
use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_N};

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 11;
pub const CACHE_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Serial,
    Parallel,
}

fn check_exhaustive(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > limit || n > MAX_N {
        return Err(Error::ExhaustiveLimit { n, limit });
    }
    Ok(())
}

/// Rearranges `word` into the next permutation in lexicographic order,
/// returning false (and leaving it sorted ascending) after the last one.
pub fn next_permutation(word: &mut [u8]) -> bool {
    let len = word.len();
    if len < 2 {
        return false;
    }
    let Some(i) = (0..len - 1).rev().find(|&i| word[i] < word[i + 1]) else {
        word.reverse();
        return false;
    };
    let j = (i + 1..len).rev().find(|&j| word[j] > word[i]).unwrap();
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

/// All of `S_n` in lexicographic order of one-line words.
pub struct LexPermutations {
    word: Vec<u8>,
    started: bool,
    done: bool,
}

impl LexPermutations {
    pub fn new(n: usize) -> Self {
        LexPermutations { word: (1..=n as u8).collect(), started: false, done: n == 0 }
    }
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.started && !next_permutation(&mut self.word) {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(Permutation::from_word_unchecked(&self.word))
    }
}

/// One report per permutation of `[n]`, in lexicographic order.
pub fn enumerate_reports(n: usize, limit: usize) -> Result<impl Iterator<Item = ComplexityReport>> {
    check_exhaustive(n, limit)?;
    Ok(LexPermutations::new(n).map(|w| analyze(&w)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumResult {
    pub n: usize,
    pub achieved: Vec<usize>,
    /// Lexicographically smallest permutation per achieved complexity.
    pub witnesses: BTreeMap<usize, Permutation>,
    pub max_complexity: usize,
    pub maximizers: Vec<Permutation>,
    pub total_enumerated: u64,
    /// Number of permutations per complexity.
    pub counts: BTreeMap<usize, u64>,
}

/// Partial spectrum over some subset of `S_n`.
#[derive(Clone, Debug)]
pub struct SpectrumAccumulator {
    n: usize,
    witnesses: BTreeMap<usize, Permutation>,
    counts: BTreeMap<usize, u64>,
    max: Option<usize>,
    maximizers: Vec<Permutation>,
    total: u64,
}

impl SpectrumAccumulator {
    pub fn new(n: usize) -> Self {
        SpectrumAccumulator {
            n,
            witnesses: BTreeMap::new(),
            counts: BTreeMap::new(),
            max: None,
            maximizers: Vec::new(),
            total: 0,
        }
    }

    fn observe_word(&mut self, word: &[u8], d: usize) {
        self.total += 1;
        *self.counts.entry(d).or_insert(0) += 1;
        match self.witnesses.get(&d) {
            Some(current) if current.word() <= word => {}
            _ => {
                self.witnesses.insert(d, Permutation::from_word_unchecked(word));
            }
        }
        match self.max {
            Some(max) if d < max => {}
            Some(max) if d == max => self.maximizers.push(Permutation::from_word_unchecked(word)),
            _ => {
                self.max = Some(d);
                self.maximizers = vec![Permutation::from_word_unchecked(word)];
            }
        }
    }

    pub fn observe(&mut self, report: &ComplexityReport) {
        self.observe_word(report.w.word(), report.complexity);
    }

    pub fn merge(mut self, other: SpectrumAccumulator) -> SpectrumAccumulator {
        assert_eq!(self.n, other.n, "merging spectra of different n");
        self.total += other.total;
        for (d, c) in other.counts {
            *self.counts.entry(d).or_insert(0) += c;
        }
        for (d, w) in other.witnesses {
            match self.witnesses.get(&d) {
                Some(current) if *current <= w => {}
                _ => {
                    self.witnesses.insert(d, w);
                }
            }
        }
        match (self.max, other.max) {
            (_, None) => {}
            (Some(a), Some(b)) if a > b => {}
            (Some(a), Some(b)) if a == b => self.maximizers.extend(other.maximizers),
            _ => {
                self.max = other.max;
                self.maximizers = other.maximizers;
            }
        }
        self
    }

    pub fn finish(self) -> SpectrumResult {
        let mut maximizers = self.maximizers;
        maximizers.sort();
        maximizers.dedup();
        SpectrumResult {
            n: self.n,
            achieved: self.witnesses.keys().copied().collect(),
            max_complexity: self.max.unwrap_or(0),
            witnesses: self.witnesses,
            maximizers,
            total_enumerated: self.total,
            counts: self.counts,
        }
    }
}

fn scan_block(n: usize, prefix: &[u8]) -> SpectrumAccumulator {
    let mut acc = SpectrumAccumulator::new(n);
    let mut word: Vec<u8> = prefix.to_vec();
    word.extend((1..=n as u8).filter(|v| !prefix.contains(v)));
    let p = prefix.len();
    loop {
        let (m, _) = Measures::of_word(&word);
        acc.observe_word(&word, m.complexity());
        if !next_permutation(&mut word[p..]) {
            break;
        }
    }
    acc
}

/// Complexity spectrum of `S_n` by exhaustive enumeration.
pub fn spectrum(n: usize, limit: usize, execution: Execution) -> Result<SpectrumResult> {
    check_exhaustive(n, limit)?;
    let prefixes: Vec<Vec<u8>> = match n {
        1 | 2 => vec![Vec::new()],
        _ => (1..=n as u8)
            .flat_map(|a| (1..=n as u8).filter(move |&b| b != a).map(move |b| vec![a, b]))
            .collect(),
    };
    let acc = match execution {
        Execution::Serial => prefixes
            .iter()
            .map(|pre| scan_block(n, pre))
            .fold(SpectrumAccumulator::new(n), SpectrumAccumulator::merge),
        Execution::Parallel => prefixes
            .par_iter()
            .map(|pre| scan_block(n, pre))
            .reduce(|| SpectrumAccumulator::new(n), SpectrumAccumulator::merge),
    };
    Ok(acc.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    MaxValue,
    UniqueMaximizer,
    FullSpectrum,
    NoComplexityOne,
}

impl TheoremId {
    pub const ALL: [TheoremId; 4] =
        [TheoremId::MaxValue, TheoremId::UniqueMaximizer, TheoremId::FullSpectrum, TheoremId::NoComplexityOne];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::MaxValue => "max_value",
            TheoremId::UniqueMaximizer => "unique_maximizer",
            TheoremId::FullSpectrum => "full_spectrum",
            TheoremId::NoComplexityOne => "no_complexity_one",
        }
    }

    fn min_n(self) -> usize {
        match self {
            TheoremId::NoComplexityOne => 1,
            _ => 4,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "max" | "max_value" => Ok(TheoremId::MaxValue),
            "unique" | "unique_maximizer" => Ok(TheoremId::UniqueMaximizer),
            "spectrum" | "full_spectrum" => Ok(TheoremId::FullSpectrum),
            "no_one" | "no_complexity_one" => Ok(TheoremId::NoComplexityOne),
            other => Err(format!(
                "unknown theorem {other:?}; expected one of max, unique, spectrum, no-one"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationOutcome {
    pub theorem: TheoremId,
    pub n: usize,
    pub passed: bool,
    /// What was observed, e.g. `d_max=8`.
    pub summary: String,
    /// Counterexample, present whenever `passed` is false.
    pub detail: Option<String>,
}

impl fmt::Display for VerificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} n={} {}", self.theorem, self.n, self.summary)?;
        if let Some(detail) = &self.detail {
            write!(f, " counterexample: {detail}")?;
        }
        Ok(())
    }
}

/// The expected spectrum `{0} ∪ {2, ..., (n-1)(n-3)}` (just `{0}` for `n < 4`).
pub fn expected_spectrum(n: usize) -> Vec<usize> {
    std::iter::once(0).chain(2..=max_complexity(n)).collect()
}

/// Checks a theorem against an already computed spectrum.
pub fn verify_spectrum(theorem: TheoremId, result: &SpectrumResult) -> Result<VerificationOutcome> {
    let n = result.n;
    if n < theorem.min_n() {
        return Err(Error::TheoremRange { what: theorem.name(), n, min: theorem.min_n() });
    }
    let outcome = |passed: bool, summary: String, detail: Option<String>| VerificationOutcome {
        theorem,
        n,
        passed,
        summary,
        detail: if passed { None } else { detail },
    };
    Ok(match theorem {
        TheoremId::MaxValue => {
            let expected = max_complexity(n);
            outcome(
                result.max_complexity == expected,
                format!("d_max={} expected={expected}", result.max_complexity),
                result.maximizers.first().map(|w| format!("{w} has complexity {}", result.max_complexity)),
            )
        }
        TheoremId::UniqueMaximizer => {
            let (expected, _) = w0_si(n, n - 1)?;
            let listed = result.maximizers.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
            outcome(
                result.maximizers == [expected.clone()] && result.max_complexity == max_complexity(n),
                format!("maximizers=[{listed}]"),
                Some(format!("expected only {expected} at d={}, found [{listed}]", max_complexity(n))),
            )
        }
        TheoremId::FullSpectrum => {
            let expected = expected_spectrum(n);
            let missing: Vec<_> = expected.iter().filter(|d| !result.witnesses.contains_key(d)).collect();
            let extra: Vec<_> = result.witnesses.iter().filter(|(d, _)| !expected.contains(d)).collect();
            let detail = if let Some((d, w)) = extra.first() {
                format!("{w} has unexpected complexity {d}")
            } else {
                format!("no permutation reaches {missing:?}")
            };
            outcome(
                missing.is_empty() && extra.is_empty(),
                format!("achieved={}", compact_ranges(&result.achieved)),
                Some(detail),
            )
        }
        TheoremId::NoComplexityOne => {
            let hit = result.witnesses.get(&1);
            outcome(
                hit.is_none(),
                format!("count(d=1)={}", result.counts.get(&1).copied().unwrap_or(0)),
                hit.map(|w| format!("{w} has complexity 1")),
            )
        }
    })
}

/// Exhaustively checks `theorem` for `S_n`.
pub fn verify(theorem: TheoremId, n: usize, limit: usize, execution: Execution) -> Result<VerificationOutcome> {
    if n < theorem.min_n() {
        return Err(Error::TheoremRange { what: theorem.name(), n, min: theorem.min_n() });
    }
    verify_spectrum(theorem, &spectrum(n, limit, execution)?)
}

/// `[0, 2, 3, 4, 7]` -> `0,2-4,7`.
pub fn compact_ranges(values: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let start = values[i];
        let mut end = start;
        while i + 1 < values.len() && values[i + 1] == end + 1 {
            i += 1;
            end += 1;
        }
        parts.push(if end == start { start.to_string() } else { format!("{start}-{end}") });
        i += 1;
    }
    parts.join(",")
}

/// Uniform permutations of `[n]` by Fisher-Yates from a seeded ChaCha8 stream.
pub fn sample_permutations(n: usize, count: usize, seed: u64) -> Result<impl Iterator<Item = Permutation>> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > MAX_N {
        return Err(Error::TooLarge { n, max: MAX_N });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word: Vec<u8> = (1..=n as u8).collect();
    Ok((0..count).map(move |_| {
        word.sort_unstable();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            word.swap(i, j);
        }
        Permutation::from_word_unchecked(&word)
    }))
}

pub fn sample_reports(n: usize, count: usize, seed: u64) -> Result<impl Iterator<Item = ComplexityReport>> {
    Ok(sample_permutations(n, count, seed)?.map(|w| analyze(&w)))
}

/// Spectrum restricted to sampled permutations; witnesses are the smallest
/// seen, and `total_enumerated` counts samples (with repetition).
pub fn sampled_spectrum(n: usize, count: usize, seed: u64) -> Result<SpectrumResult> {
    let mut acc = SpectrumAccumulator::new(n);
    for report in sample_reports(n, count, seed)? {
        acc.observe(&report);
    }
    Ok(acc.finish())
}

pub fn write_reports_csv<W: Write>(
    mut out: W,
    reports: impl IntoIterator<Item = ComplexityReport>,
) -> Result<u64> {
    writeln!(out, "{}", ComplexityReport::CSV_HEADER)?;
    let mut rows = 0;
    for r in reports {
        writeln!(out, "{}", r.to_csv_row())?;
        rows += 1;
    }
    Ok(rows)
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: u32,
    n: usize,
    achieved: Vec<usize>,
    witnesses: BTreeMap<usize, Permutation>,
    max_complexity: usize,
    maximizers: Vec<Permutation>,
    total_enumerated: u64,
    counts: BTreeMap<usize, u64>,
}

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("spectrum-n{n}.json"))
}

/// Writes `dir/spectrum-n{n}.json`, creating `dir` if needed.
pub fn save_cache(result: &SpectrumResult, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let file = CacheFile {
        schema: CACHE_SCHEMA,
        n: result.n,
        achieved: result.achieved.clone(),
        witnesses: result.witnesses.clone(),
        max_complexity: result.max_complexity,
        maximizers: result.maximizers.clone(),
        total_enumerated: result.total_enumerated,
        counts: result.counts.clone(),
    };
    let path = cache_path(dir, result.n);
    fs::write(&path, serde_json::to_string_pretty(&file)? + "\n")?;
    Ok(path)
}

/// Loads and re-verifies a cached spectrum: every witness and maximizer is
/// analyzed again and must reproduce its recorded complexity.
pub fn load_cache(n: usize, dir: &Path) -> Result<SpectrumResult> {
    let path = cache_path(dir, n);
    if !path.exists() {
        return Err(Error::CacheNotFound(path));
    }
    let value: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path)?)?;
    match value.get("schema").and_then(|s| s.as_u64()) {
        Some(s) if s == CACHE_SCHEMA as u64 => {}
        other => return Err(Error::CacheSchema(format!("expected schema {CACHE_SCHEMA}, found {other:?}"))),
    }
    let file: CacheFile = serde_json::from_value(value).map_err(|e| Error::CacheSchema(e.to_string()))?;
    if file.n != n {
        return Err(Error::CacheSchema(format!("file is for n = {}, requested n = {n}", file.n)));
    }
    let keys: Vec<usize> = file.witnesses.keys().copied().collect();
    if keys != file.achieved || keys.last().copied().unwrap_or(0) != file.max_complexity {
        return Err(Error::CacheVerification("achieved set, witnesses and maximum disagree".into()));
    }
    for (&d, w) in &file.witnesses {
        check_recorded(w, d, n)?;
    }
    for w in &file.maximizers {
        check_recorded(w, file.max_complexity, n)?;
    }
    Ok(SpectrumResult {
        n,
        achieved: file.achieved,
        witnesses: file.witnesses,
        max_complexity: file.max_complexity,
        maximizers: file.maximizers,
        total_enumerated: file.total_enumerated,
        counts: file.counts,
    })
}

fn check_recorded(w: &Permutation, d: usize, n: usize) -> Result<()> {
    if w.n() != n {
        return Err(Error::CacheVerification(format!("{w} is not in S_{n}")));
    }
    let got = analyze(w).complexity;
    if got != d {
        return Err(Error::CacheVerification(format!("{w} recorded at d={d} but has complexity {got}")));
    }
    Ok(())
}
