//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by graph construction, parsing, and the invariant pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// An edge endpoint lies outside the declared vertex ranges.
    #[error("edge ({u}, {l}) out of range for {p} upper / {q} lower vertices")]
    EdgeOutOfRange { u: usize, l: usize, p: usize, q: usize },

    /// The same edge appears twice in a graph description.
    #[error("duplicate edge ({u}, {l})")]
    DuplicateEdge { u: usize, l: usize },

    /// A split move names a vertex that does not exist or has no teeth.
    #[error("no {side} vertex {vertex} with at least two teeth")]
    InvalidSplitVertex { side: &'static str, vertex: usize },

    /// A split position must leave at least one tooth on each child.
    #[error("split position {position} invalid for a fork with {teeth} teeth")]
    InvalidSplitPosition { position: usize, teeth: usize },

    /// A constructor was asked for a graph with no vertices on one line.
    #[error("vertex counts must be positive, got {p} upper / {q} lower")]
    ZeroVertexCount { p: usize, q: usize },

    /// The density bound is undefined at braid index zero.
    #[error("braid index must be positive")]
    ZeroBraidIndex,

    /// An operation that requires edges was called on an empty graph.
    #[error("operation requires a nonempty graph")]
    EmptyGraph,

    /// An operation that requires a reduced graph received an unreduced one.
    #[error("operation requires a reduced graph (isolated or retractable vertices present)")]
    NotReduced,

    /// An operation defined per component received a disconnected graph.
    #[error("graph has {components} components; split it first")]
    DisconnectedGraph { components: usize },

    /// A partition must be weakly decreasing and positive.
    #[error("partition parts must be positive and weakly decreasing")]
    InvalidPartition,

    /// Band generator indices must satisfy 1 <= i < j <= strands.
    #[error("band generator ({i}, {j}) invalid on {strands} strands")]
    InvalidBand { i: usize, j: usize, strands: usize },

    /// A braid word whose closure is disconnected has no single Seifert matrix.
    #[error("closed-braid diagram is disconnected (strand gap after position {gap})")]
    DisconnectedDiagram { gap: usize },

    /// A knot-only query was applied to a link with several components.
    #[error("operation requires a knot, got {components} components")]
    NotAKnot { components: usize },

    /// Target Euler characteristic below the source: no splitting sequence exists.
    #[error("target Euler characteristic {target_chi} below source {source_chi}: unreachable")]
    ChiImpossible { source_chi: i64, target_chi: i64 },

    /// Nested torus-link deformation parameters must satisfy c <= a.
    #[error("deformation parameters require c <= a, got a = {a}, c = {c}")]
    DeformationParameters { a: usize, c: usize },

    /// The closed-form torus formula needs coprime parameters.
    #[error("torus parameters ({p}, {q}) are not coprime")]
    NotCoprime { p: usize, q: usize },

    /// A catalog file was produced by a different pipeline version.
    #[error("catalog built by pipeline version {found}, expected {expected}; regenerate it")]
    CatalogVersion { found: String, expected: String },

    /// Malformed JSON or text input.
    #[error("parse error: {0}")]
    Parse(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// Underlying JSON serialization failure.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
