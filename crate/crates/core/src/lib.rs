//! Interval (modular) decomposition primitives for digraphs, critical-vertex
//! analysis, the indecomposability graph, generators for the (−1)-critical
//! families, and a classifier that places every (−1)-critical digraph of order
//! at least 7 in one of those families.

pub mod classifier;
pub mod criticality;
pub mod digraph;
pub mod error;
pub mod families;
pub mod harness;
pub mod iso;
pub mod modular;
pub mod set;

pub use classifier::{classify, Classification, Classifier, FamilyMatch, Verdict};
pub use criticality::{critical_vertices, indecomposability_graph, CriticalityReport, ShapeKind, SymGraph};
pub use digraph::{Digraph, PairType, Permutation};
pub use error::{Error, Result};
pub use iso::{canonical_code, find_isomorphism};
pub use modular::{is_indecomposable, is_interval, PXPartition};
pub use set::VertexSet;
