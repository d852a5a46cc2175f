//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {v}: graphs here are simple")]
    Loop { v: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge {{{u}, {v}}} not present")]
    MissingEdge { u: usize, v: usize },
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("witness does not induce the pattern {pattern}")]
    PatternMismatch { pattern: String },
    #[error("canonical labeling limited to {max} vertices, got {n}")]
    CanonicalBoundExceeded { n: usize, max: usize },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("rotation at vertex {v} is not a permutation of its incident edges")]
    RotationNotPermutation { v: usize },
    #[error("signature must be defined on exactly the edge set")]
    SignatureMismatch,
    #[error("graph must be connected for this operation")]
    Disconnected,
    #[error("odd Euler genus {eg} cannot be orientable")]
    OddOrientableGenus { eg: usize },
    #[error("edge {{{u}, {v}}} not present in the graph")]
    NoSuchEdge { u: usize, v: usize },
    #[error("face index {face} out of range ({count} faces)")]
    NoSuchFace { face: usize, count: usize },
    #[error("corner index {index} does not reference vertex {expected} on the face walk")]
    BadCorner { index: usize, expected: usize },
    #[error("target face is incident to the flipped edge")]
    FaceIncidentToEdge,
    #[error("both sides of the edge lie on one face; the flip would change the surface")]
    EdgeOnSingleFace,
    #[error("no face of size at least 4: embedding is a triangulation")]
    AlreadyTriangulation,
    #[error("degenerate face structure: no four consecutive distinct vertices admit a flip")]
    DegenerateWalk,
    #[error("nonorientable genus must be at least 1")]
    BadSurface,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search requires a connected graph")]
    Disconnected,
    #[error("graph too large for exhaustive search: {reason}")]
    TooLarge { reason: String },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("unsupported schema {found}, expected {expected}")]
    SchemaMismatch { expected: String, found: String },
    #[error("certificate i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("certificate parse: {0}")]
    Json(#[from] serde_json::Error),
    #[error("certificate structure: {0}")]
    Graph(#[from] GraphError),
    #[error("certificate structure: {0}")]
    Embedding(#[from] EmbeddingError),
}
