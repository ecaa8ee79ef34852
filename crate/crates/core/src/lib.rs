//! Link invariants of embedded bipartite graphs.
//!
//! An embedded bipartite graph — vertices on two parallel lines, edges drawn
//! straight between them — thickens to a ribbon surface whose boundary is a
//! strongly quasipositive link. This crate translates such graphs to braid
//! words, computes exact link invariants (signature, nullity, determinant,
//! Alexander polynomial) through Seifert matrices, and explores how the
//! presented links change under fork splittings and ribbon cuts.
//!
//! Start with [`graph::BipartiteGraph`].

pub mod adjacency;
pub mod braid;
pub mod catalog;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod partition;
pub mod poly;
pub mod seifert;

pub use error::{Error, Result};
pub use graph::BipartiteGraph;
pub use invariants::{fingerprint, Fingerprint};
