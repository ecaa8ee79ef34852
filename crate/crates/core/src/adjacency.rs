//! Splitting-move search: which links arise from which by fork splittings?
//!
//! A fork splitting replaces one vertex by two adjacent ones, dividing its
//! teeth; on the braid side it smooths one crossing, raising the Euler
//! characteristic of the spanned surface by exactly one. This module asks,
//! by exhaustive breadth-first search over canonical codes, whether the
//! complete graph on `(p, q)` can be carried to a graph presenting a given
//! target link — with every identification made at the level of invariant
//! [`Fingerprint`]s, and said so on every certificate.
//!
//! Because each move raises χ by one, the search depth is forced: it equals
//! the χ gap between target and source. A target below the source χ is
//! definitively unreachable; everything else is searched to exactly that
//! depth, and failure within budget is inconclusive rather than a disproof.
//!
//! Ribbon *cuts* (edge deletions) are a different move with the same χ
//! bookkeeping; [`subgraph_search`] enumerates their results, and
//! [`density_estimate`] uses it to bound the edge density over all frames.

use std::collections::HashSet;
use std::time::Instant;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{for_each_combination, BipartiteGraph, ChildOrder, Side, SplitMove};
use crate::invariants::{fingerprint, Fingerprint};

/// Limits on a search run.
///
/// `max_states` counts distinct canonical states inserted into the visited
/// set, the source included, and is the deterministic budget; `max_seconds`
/// is a wall-clock safety net.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Distinct states allowed, source included.
    pub max_states: usize,
    /// Wall-clock limit in seconds.
    pub max_seconds: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_states: 100_000, max_seconds: 60 }
    }
}

/// A replayable witness that the target fingerprint is reachable from the
/// complete graph on `source` by fork splittings.
///
/// Identification is by fingerprint equality only — a collision between
/// distinct links would produce a spurious certificate — so every
/// certificate says so in its `identification` field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdjacencyCertificate {
    /// Complete-graph source `(p, q)`.
    pub source: (usize, usize),
    /// Splitting moves, in application order.
    pub moves: Vec<SplitMove>,
    /// The graph reached by replaying the moves.
    pub result: BipartiteGraph,
    /// Fingerprint of `result`, equal to the search target's.
    #[serde(rename = "fingerprint")]
    pub matched: Fingerprint,
    /// Always `"fingerprint-only"`: the caveat that no isotopy is certified.
    pub identification: String,
}

impl AdjacencyCertificate {
    /// Re-applies the moves to the source graph.
    ///
    /// # Errors
    ///
    /// Fails only on a corrupted certificate (invalid source or moves).
    pub fn replay(&self) -> Result<BipartiteGraph> {
        let mut g = BipartiteGraph::complete(self.source.0, self.source.1)?;
        for &mv in &self.moves {
            g = g.split_fork(mv)?;
        }
        Ok(g)
    }
}

/// Outcome of an adjacency search.
#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    /// A state with the target fingerprint was reached at the forced depth.
    Found(Box<AdjacencyCertificate>),
    /// The target χ lies below the source χ: definitively unreachable, since
    /// every splitting raises χ.
    Impossible {
        /// χ of the source link.
        source_chi: i64,
        /// χ of the target link.
        target_chi: i64,
    },
    /// No state matched.
    NotFound {
        /// True when the full forced-depth layer was enumerated (no state
        /// with the target fingerprint exists at that depth); false when a
        /// budget cut the search short. Neither case disproves adjacency
        /// through other move sequences or deeper theory.
        complete: bool,
        /// Distinct canonical states inserted, source included.
        states: usize,
    },
}

/// All valid splitting moves on `g`, in the fixed deterministic order:
/// lower forks before upper forks, vertices ascending, split positions
/// ascending, first-child-before before first-child-after.
///
/// A fork with `k ≥ 2` teeth admits `2(k − 1)` moves; single-tooth forks
/// admit none.
pub fn splitting_moves(g: &BipartiteGraph) -> Vec<SplitMove> {
    let mut moves = Vec::new();
    for side in [Side::Lower, Side::Upper] {
        for fork in g.forks_of(side) {
            for position in 1..fork.teeth.len() {
                for order in [ChildOrder::Before, ChildOrder::After] {
                    moves.push(SplitMove { side, vertex: fork.vertex, position, order });
                }
            }
        }
    }
    moves
}

/// Searches for a splitting sequence from the complete graph on `(p, q)` to
/// any graph with the fingerprint of `target`.
///
/// Breadth-first over canonical codes at the forced depth
/// `χ(target) − χ(source)`; within a layer the frontier is kept sorted by
/// canonical code and moves are enumerated in [`splitting_moves`] order, so
/// results are deterministic for a fixed state budget. States in the final
/// layer are fingerprinted as they are generated and the first match ends
/// the search. When the target link is not split, disconnected intermediate
/// states are pruned — splits only ever disconnect further, so no match is
/// lost.
///
/// # Errors
///
/// Invalid source parameters (zero vertex counts).
pub fn adjacency_search(
    p: usize,
    q: usize,
    target: &BipartiteGraph,
    budget: &SearchBudget,
) -> Result<SearchOutcome> {
    search_impl(p, q, target, budget, true)
}

pub(crate) fn search_impl(
    p: usize,
    q: usize,
    target: &BipartiteGraph,
    budget: &SearchBudget,
    dedup: bool,
) -> Result<SearchOutcome> {
    let source = BipartiteGraph::complete(p, q)?;
    let source_chi = source.euler_characteristic()?;
    let target_fp = fingerprint(target);
    let target_chi = target_fp.chi_max;
    if target_chi < source_chi {
        return Ok(SearchOutcome::Impossible { source_chi, target_chi });
    }
    let depth = (target_chi - source_chi) as usize;
    // Splitting a component never reconnects it, so when the target is not
    // split (nonzero Alexander polynomial) disconnected states are dead ends.
    let prune_disconnected = !target_fp.alexander.is_zero();
    let start = Instant::now();
    let mut visited: HashSet<Vec<u8>> = HashSet::new();
    visited.insert(source.canonical_code());
    let mut states = 1usize;
    if depth == 0 {
        return Ok(if fingerprint(&source) == target_fp {
            SearchOutcome::Found(Box::new(certificate(p, q, Vec::new(), source, target_fp)))
        } else {
            SearchOutcome::NotFound { complete: true, states }
        });
    }
    let mut frontier: Vec<(Vec<u8>, BipartiteGraph, Vec<SplitMove>)> =
        vec![(source.canonical_code(), source, Vec::new())];
    for layer in 1..=depth {
        let last_layer = layer == depth;
        let mut next: Vec<(Vec<u8>, BipartiteGraph, Vec<SplitMove>)> = Vec::new();
        for (_, graph, path) in &frontier {
            if start.elapsed().as_secs() >= budget.max_seconds {
                return Ok(SearchOutcome::NotFound { complete: false, states });
            }
            for mv in splitting_moves(graph) {
                let child = graph.split_fork(mv).expect("enumerated moves are valid");
                if prune_disconnected && !child.is_connected() {
                    continue;
                }
                let code = child.canonical_code();
                if dedup && visited.contains(&code) {
                    continue;
                }
                if states >= budget.max_states {
                    return Ok(SearchOutcome::NotFound { complete: false, states });
                }
                visited.insert(code.clone());
                states += 1;
                let mut child_path = path.clone();
                child_path.push(mv);
                if last_layer {
                    if fingerprint(&child) == target_fp {
                        return Ok(SearchOutcome::Found(Box::new(certificate(
                            p, q, child_path, child, target_fp,
                        ))));
                    }
                } else {
                    next.push((code, child, child_path));
                }
            }
        }
        if last_layer {
            break;
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(SearchOutcome::NotFound { complete: true, states })
}

fn certificate(
    p: usize,
    q: usize,
    moves: Vec<SplitMove>,
    result: BipartiteGraph,
    matched: Fingerprint,
) -> AdjacencyCertificate {
    AdjacencyCertificate {
        source: (p, q),
        moves,
        result,
        matched,
        identification: "fingerprint-only".to_owned(),
    }
}

/// Searches for the nested-torus deformation witness: the torus link
/// `T(ab, c)` reached from `T(a, bc)` by `(b−1)(a−c)` splittings.
///
/// The depth identity
/// `χ(θ_{ab,c}) − χ(θ_{a,bc}) = (b−1)(a−c)` is asserted before searching —
/// it is an algebraic identity, so a violation is a bug, not an input error.
///
/// # Errors
///
/// Requires `c ≤ a` (the deformation shrinks the second parameter) and
/// positive parameters.
pub fn feller_witness(
    a: usize,
    b: usize,
    c: usize,
    budget: &SearchBudget,
) -> Result<SearchOutcome> {
    if c > a {
        return Err(Error::DeformationParameters { a, c });
    }
    // Reject zero parameters through the graph constructor before the
    // unsigned depth arithmetic below can underflow.
    BipartiteGraph::complete(a, b * c)?;
    let chi = |x: usize, y: usize| (x + y) as i64 - (x * y) as i64;
    let expected_depth = ((b - 1) * (a - c)) as i64;
    assert_eq!(
        chi(a * b, c) - chi(a, b * c),
        expected_depth,
        "splitting-depth identity must hold for a={a}, b={b}, c={c}"
    );
    let target = BipartiteGraph::complete(a * b, c)?;
    adjacency_search(a, b * c, &target, budget)
}

/// Enumerates the `edge_count`-edge subgraphs of the complete graph on
/// `(p, q)` up to canonical code, returning those whose boundary link
/// matches the given fingerprint.
///
/// This is the ribbon-cut model: deleting `pq − edge_count` edges severs
/// that many ribbons. Returned graphs keep the full `(p, q)` frame (vertex
/// positions matter); the list is ordered by first appearance in
/// lexicographic subset order, so it is deterministic.
///
/// # Errors
///
/// `edge_count` must not exceed `pq`, and the frame must be nonempty.
pub fn subgraph_search(
    p: usize,
    q: usize,
    edge_count: usize,
    matches: &Fingerprint,
) -> Result<Vec<BipartiteGraph>> {
    let full = BipartiteGraph::complete(p, q)?;
    if edge_count > full.edge_count() {
        return Err(Error::Parse(format!(
            "edge count {edge_count} exceeds the {} edges of the complete graph",
            full.edge_count()
        )));
    }
    let edges: Vec<(usize, usize)> = full.edges().collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut witnesses = Vec::new();
    for_each_combination(edges.len(), edge_count, &mut |combo| {
        let subset: Vec<(usize, usize)> = combo.iter().map(|&i| edges[i]).collect();
        let sub = BipartiteGraph::new(p, q, &subset).expect("subsets of valid edges");
        if seen.insert(sub.canonical_code()) && fingerprint(&sub) == *matches {
            witnesses.push(sub);
        }
        true
    });
    Ok(witnesses)
}

/// Best edge density of a presentation of the fingerprinted link over all
/// frames with both sides at most `cap`, and whether that bound is provably
/// the maximum over *all* frames.
///
/// Inside each frame `(p, q)` only full-support subgraphs are counted (a
/// subgraph with an idle vertex lives in a smaller frame, where it is also
/// enumerated). The number of edges is forced by `e = p + q − χ`. The
/// estimate is exhaustive when every frame beyond the cap is arithmetically
/// barred from beating the found density: any match in a frame with a side
/// `≥ cap + 1` has density at most the reported cutoff bound.
///
/// Enumeration cost grows as `C(pq, e)`; practical for caps up to about 4.
///
/// # Errors
///
/// The cap must be at least 2.
pub fn density_estimate(matches: &Fingerprint, cap: usize) -> Result<(Rational64, bool)> {
    if cap < 2 {
        return Err(Error::Parse("density cap must be at least 2".to_owned()));
    }
    let chi = matches.chi_max;
    let mut best: Option<Rational64> = None;
    for p in 1..=cap {
        for q in p..=cap {
            let e = p as i64 + q as i64 - chi;
            if e < 1 || e > (p * q) as i64 {
                continue;
            }
            let e = e as usize;
            let full = BipartiteGraph::complete(p, q).expect("positive frame");
            let edges: Vec<(usize, usize)> = full.edges().collect();
            let mut seen: HashSet<Vec<u8>> = HashSet::new();
            for_each_combination(edges.len(), e, &mut |combo| {
                let subset: Vec<(usize, usize)> = combo.iter().map(|&i| edges[i]).collect();
                let sub = BipartiteGraph::new(p, q, &subset).expect("subsets of valid edges");
                let full_support = {
                    let us: HashSet<usize> = subset.iter().map(|&(u, _)| u).collect();
                    let ls: HashSet<usize> = subset.iter().map(|&(_, l)| l).collect();
                    us.len() == p && ls.len() == q
                };
                if full_support && seen.insert(sub.canonical_code()) && fingerprint(&sub) == *matches
                {
                    let d = Rational64::new(e as i64, (p * q) as i64);
                    best = Some(best.map_or(d, |b| b.max(d)));
                }
                true
            });
        }
    }
    let best = best.unwrap_or_else(|| Rational64::new(0, 1));
    Ok((best, best >= beyond_cap_density_bound(chi, cap)))
}

/// Largest possible density of a full-support frame presentation with a side
/// beyond the cap, for links of the given maximal Euler characteristic.
///
/// With `e = p + q − χ` forced, the density `1/p + 1/q − χ/(pq)` decreases
/// in both frame sides, so the supremum over frames with a side `≥ cap + 1`
/// is attained at the smallest feasible frame; feasibility stabilizes after
/// finitely many side lengths, so a short scan suffices.
fn beyond_cap_density_bound(chi: i64, cap: usize) -> Rational64 {
    let mut bound = Rational64::new(0, 1);
    let lo = (cap + 1) as i64;
    for q in lo..=lo + chi.unsigned_abs() as i64 + 2 {
        let p_min = if chi == 1 {
            1
        } else {
            // Smallest p ≥ 2 with pq ≥ p + q − χ.
            (2i64).max((q - chi + (q - 1) - 1).div_euclid(q - 1))
        };
        if p_min * q < p_min + q - chi {
            continue;
        }
        bound = bound.max(Rational64::new(p_min + q - chi, p_min * q));
    }
    bound
}
