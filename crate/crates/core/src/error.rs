use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty permutation")]
    Empty,
    #[error("value {0} appears more than once")]
    RepeatedValue(usize),
    #[error("value {value} is outside 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("n = {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("cannot parse permutation {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("index {index} out of range for n = {n} (expected {expected})")]
    IndexOutOfRange { index: usize, n: usize, expected: String },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid composition input: {0}")]
    InvalidComposition(String),
    #[error("no permutation has complexity 1")]
    ComplexityOne,
    #[error("complexity {d} is outside the achievable range 0..={max} for n = {n}")]
    ComplexityOutOfRange { d: usize, n: usize, max: usize },
    #[error("witness self-check failed: {word} has complexity {got}, expected {expected}")]
    WitnessCheck { word: String, got: usize, expected: usize },
    #[error("{count} minor descriptors exceed the cap of {cap}")]
    TooManyMinors { count: u128, cap: u128 },
    #[error("n = {n} exceeds the exhaustive limit {limit}; use sampling instead")]
    ExhaustiveLimit { n: usize, limit: usize },
    #[error("{what} requires n >= {min}, got n = {n}")]
    TheoremRange { what: &'static str, n: usize, min: usize },
    #[error("no render layers selected")]
    NoLayers,
    #[error("unknown render layer {0:?}")]
    UnknownLayer(String),
    #[error("cache file not found: {0}")]
    CacheNotFound(PathBuf),
    #[error("cache schema mismatch: {0}")]
    CacheSchema(String),
    #[error("cache verification failed: {0}")]
    CacheVerification(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
