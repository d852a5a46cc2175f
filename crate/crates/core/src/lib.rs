//! Combinatorial embeddings of small graphs on surfaces.
//!
//! The crate provides:
//!
//! - [`graph`]: simple graphs, named families, graph6/edge-list ingestion,
//!   and canonical labeling for small-order deduplication;
//! - [`embedding`]: rotation-system embeddings with signatures, face
//!   tracing, Euler genus, orientability, and edge flips;
//! - [`search`]: exhaustive, symmetry-reduced genus search and embedding
//!   enumeration with explicit budgets;
//! - [`maximality`]: edge-maximality, Euler impurity and impurity
//!   predicates, plus small censuses;
//! - [`constructions`]: cylindrical joins, ladders, plates, and the
//!   high-genus edge-maximal families they generate;
//! - [`certify`]: serializable embedding certificates, re-verifiable from
//!   the raw rotation data alone.

pub mod certify;
pub mod constructions;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod maximality;
pub mod search;

pub use embedding::{FaceStep, FaceWalk, RotationEmbedding, SurfaceSpec};
pub use error::{CertificateError, EmbeddingError, GraphError, SearchError};
pub use graph::{canonical_form, complete_graph, parse_graph, quad_plate, CanonicalForm, Graph};
pub use search::{SearchBudget, SearchOutcome};
