//! Fingerprint catalog for the complete-graph (torus link) family.
//!
//! A catalog is a line-delimited JSON document: one header line carrying the
//! pipeline version, then one entry per key `(p, q)` with `2 ≤ p ≤ q` in
//! ascending order. Keys stop at `p ≤ q` because transposing the graph
//! mirrors the link — `(q, p)` would duplicate every fingerprint.
//!
//! The bytes are deterministic: rebuilding with the same bounds must
//! reproduce the file exactly, so regeneration can be verified by hashing.
//! Any fingerprint computed by a different pipeline version is suspect,
//! which is why the header is checked on read and a mismatch refuses the
//! whole file rather than risking stale identifications.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::invariants::{fingerprint, Fingerprint};

/// Version stamp written into catalog headers; entries are only comparable
/// within one version of the invariant pipeline.
pub const PIPELINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize, Deserialize)]
struct CatalogHeader {
    pipeline_version: String,
}

/// One catalog line: the complete-graph key and its boundary fingerprint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub p: usize,
    pub q: usize,
    pub fingerprint: Fingerprint,
}

/// Builds the catalog text for all keys `2 ≤ p ≤ q` with `p ≤ max_p` and
/// `q ≤ max_q`.
///
/// # Errors
///
/// Both bounds must be at least 2 — smaller frames have no catalog keys.
pub fn build_catalog(max_p: usize, max_q: usize) -> Result<String> {
    if max_p < 2 || max_q < 2 {
        return Err(Error::Parse(format!(
            "catalog bounds must be at least 2, got ({max_p}, {max_q})"
        )));
    }
    let header = CatalogHeader { pipeline_version: PIPELINE_VERSION.to_owned() };
    let mut out = serde_json::to_string(&header)?;
    out.push('\n');
    for p in 2..=max_p {
        for q in p..=max_q {
            let graph = BipartiteGraph::complete(p, q)?;
            let entry = CatalogEntry { p, q, fingerprint: fingerprint(&graph) };
            out.push_str(&serde_json::to_string(&entry)?);
            out.push('\n');
        }
    }
    Ok(out)
}

/// Parses catalog text, validating the header version and every entry line.
///
/// # Errors
///
/// Missing or malformed header, version mismatch, or an unparsable entry.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut lines = text.lines().filter(|line| !line.trim().is_empty());
    let header_line = lines
        .next()
        .ok_or_else(|| Error::Parse("catalog is empty: missing header line".to_owned()))?;
    let header: CatalogHeader = serde_json::from_str(header_line)
        .map_err(|e| Error::Parse(format!("bad catalog header: {e}")))?;
    if header.pipeline_version != PIPELINE_VERSION {
        return Err(Error::CatalogVersion {
            found: header.pipeline_version,
            expected: PIPELINE_VERSION.to_owned(),
        });
    }
    let mut entries = Vec::new();
    for (i, line) in lines.enumerate() {
        let entry: CatalogEntry = serde_json::from_str(line)
            .map_err(|e| Error::Parse(format!("bad catalog entry on line {}: {e}", i + 2)))?;
        entries.push(entry);
    }
    Ok(entries)
}

/// All catalog keys whose fingerprint matches, in catalog order.
///
/// More than one key means the invariants do not separate those links —
/// callers should report every candidate rather than pick one.
pub fn catalog_lookup(entries: &[CatalogEntry], fp: &Fingerprint) -> Vec<(usize, usize)> {
    entries
        .iter()
        .filter(|e| e.fingerprint == *fp)
        .map(|e| (e.p, e.q))
        .collect()
}
