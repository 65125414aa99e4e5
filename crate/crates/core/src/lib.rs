//! Torus-action complexity of the affine varieties `Y_w` attached to matrix
//! Schubert varieties, for permutations `w ∈ S_n`.
//!
//! The pipeline runs permutation → opposite Rothe diagram → essential set,
//! dominant piece and south-west diagram → L and L' diagrams → bipartite
//! graph → weight-cone dimension → complexity. See [`complexity::analyze`].

pub mod cells;
pub mod complexity;
pub mod constructions;
pub mod diagrams;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod perm;
pub mod rank;
pub mod render;
pub mod survey;
mod union_find;

pub use cells::{Cell, CellSet};
pub use complexity::{analyze, analyze_with, AnalyzeOptions, ComplexityReport};
pub use diagrams::DiagramBundle;
pub use error::{Error, Result};
pub use graph::BipartiteGraph;
pub use perm::Permutation;
pub use survey::{SpectrumResult, TheoremId, VerificationOutcome};
