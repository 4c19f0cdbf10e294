//! Partition graphs `G_n` and their growth across levels.
//!
//! Vertices of `G_n` are the integer partitions of `n`; two partitions are
//! adjacent when one unit moves between parts (a part may be created or
//! emptied). The crate builds these graphs, certifies Ferrers-translation
//! overlays `G_n -> G_{n+k}` as induced embeddings, searches rooted induced
//! motifs, computes exact local clique numbers and first-appearance
//! thresholds, and assembles a deterministic per-level atlas.

pub mod atlas;
mod caps;
mod clique;
mod error;
pub mod graph;
pub mod invariants;
pub mod motifs;
pub mod overlay;
pub mod partition;
pub mod thresholds;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{build_graph, GraphCache, LevelGraph, VertexId};
pub use invariants::{ExtremalKind, ExtremalRecord, LocalComplexity};
pub use motifs::{Motif, Occurrence, Registry, RootedTemplate};
pub use overlay::{OverlayMap, OverlayReport};
pub use partition::Partition;
pub use thresholds::ThresholdResult;
