//! Embedded bipartite graphs on two horizontal lines.
//!
//! A [`BipartiteGraph`] places `p` *upper* vertices on one horizontal line and
//! `q` *lower* vertices on a parallel line below it, with every edge drawn as
//! a straight segment between the lines. Thickening the picture yields a
//! ribbon surface whose boundary is a strongly quasipositive link; most of
//! this crate computes invariants of that link.
//!
//! The line orders are part of the data: two graphs with the same abstract
//! edge relation but different vertex orders present different links. The
//! symmetries that do preserve the boundary link — reversing both lines,
//! swapping the two lines, and their composition — are quotiented out by
//! [`BipartiteGraph::canonical_code`].

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which of the two vertex lines a move acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// The upper line (braid strands).
    Upper,
    /// The lower line (band-word letters).
    Lower,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Upper => write!(f, "upper"),
            Side::Lower => write!(f, "lower"),
        }
    }
}

/// Placement of the two children created by a fork split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChildOrder {
    /// The child carrying the first teeth takes the parent's slot; the other
    /// child is inserted immediately after it.
    Before,
    /// The child carrying the remaining teeth takes the parent's slot; the
    /// child with the first teeth is inserted immediately after it.
    After,
}

/// A fork split: one vertex is replaced by two adjacent vertices on its line,
/// the first `position` teeth (in line order of the opposite side) going to
/// one child and the rest to the other.
///
/// On the braid side this is the smoothing of a single crossing, so a split
/// raises the Euler characteristic of the spanned surface by exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitMove {
    /// Line carrying the vertex being split.
    pub side: Side,
    /// Index of the vertex on that line.
    pub vertex: usize,
    /// Number of teeth handed to the first child; `1 <= position < degree`.
    pub position: usize,
    /// Which child keeps the parent's slot.
    pub order: ChildOrder,
}

/// One vertex together with its neighbours on the opposite line.
///
/// Drawn in the plane, a vertex and its edges look like a fork whose teeth
/// reach across to the other line; splitting moves act on forks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fork {
    /// Index of the apex vertex on its own line.
    pub vertex: usize,
    /// Neighbour indices on the opposite line, in line order.
    pub teeth: Vec<usize>,
}

/// Serialized form of a graph: vertex counts plus an edge list.
///
/// Edges are pairs `[u, l]` (upper index, lower index) and are kept sorted
/// lower-major in the JSON form.
#[derive(Debug, Serialize, Deserialize)]
struct GraphRepr {
    p: usize,
    q: usize,
    edges: Vec<(usize, usize)>,
}

/// Bipartite graph embedded on two ordered horizontal lines.
///
/// Vertices are indexed `0..p` on the upper line and `0..q` on the lower
/// line; edges are unordered pairs of an upper and a lower vertex. The
/// structure is immutable: every operation returns a new graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    p: usize,
    q: usize,
    /// Edge set as (upper, lower) pairs; `BTreeSet` keeps iteration stable.
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    /// Builds a graph from vertex counts and an edge list.
    ///
    /// # Errors
    ///
    /// Rejects endpoints outside `0..p` × `0..q` and duplicate edges.
    pub fn new(p: usize, q: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for &(u, l) in edge_list {
            if u >= p || l >= q {
                return Err(Error::EdgeOutOfRange { u, l, p, q });
            }
            if !edges.insert((u, l)) {
                return Err(Error::DuplicateEdge { u, l });
            }
        }
        Ok(Self { p, q, edges })
    }

    /// The complete bipartite graph on `p` upper and `q` lower vertices.
    ///
    /// Its boundary link is the torus link `T(p, q)`.
    ///
    /// # Errors
    ///
    /// Both counts must be positive.
    pub fn complete(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::ZeroVertexCount { p, q });
        }
        let edges = (0..p)
            .flat_map(|u| (0..q).map(move |l| (u, l)))
            .collect();
        Ok(Self { p, q, edges })
    }

    /// The empty graph.
    pub fn empty() -> Self {
        Self { p: 0, q: 0, edges: BTreeSet::new() }
    }

    /// Number of upper vertices (isolated ones included).
    pub fn upper_count(&self) -> usize {
        self.p
    }

    /// Number of lower vertices (isolated ones included).
    pub fn lower_count(&self) -> usize {
        self.q
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge iterator in (upper, lower) lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Whether the edge (u, l) is present.
    pub fn has_edge(&self, u: usize, l: usize) -> bool {
        self.edges.contains(&(u, l))
    }

    /// Teeth of lower vertex `l`: its upper neighbours in line order.
    pub fn lower_teeth(&self, l: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(_, ll)| ll == l)
            .map(|&(u, _)| u)
            .collect()
    }

    /// Teeth of upper vertex `u`: its lower neighbours in line order.
    pub fn upper_teeth(&self, u: usize) -> Vec<usize> {
        // BTreeSet iterates (u, l) lexicographically, so these come sorted.
        self.edges
            .iter()
            .filter(|&&(uu, _)| uu == u)
            .map(|&(_, l)| l)
            .collect()
    }

    /// The forks on one side: one per nonzero-degree vertex, in line order.
    pub fn forks_of(&self, side: Side) -> Vec<Fork> {
        let count = match side {
            Side::Upper => self.p,
            Side::Lower => self.q,
        };
        (0..count)
            .filter_map(|v| {
                let teeth = match side {
                    Side::Upper => self.upper_teeth(v),
                    Side::Lower => self.lower_teeth(v),
                };
                (!teeth.is_empty()).then_some(Fork { vertex: v, teeth })
            })
            .collect()
    }

    /// Mirror image: swaps the two lines (transposes the bipartite relation).
    ///
    /// The boundary link is unchanged; in particular the complete graph on
    /// `(p, q)` and on `(q, p)` present the same torus link.
    pub fn transpose(&self) -> Self {
        Self {
            p: self.q,
            q: self.p,
            edges: self.edges.iter().map(|&(u, l)| (l, u)).collect(),
        }
    }

    /// Euler characteristic `v − e` of the spanned surface, counting only
    /// nonisolated vertices.
    ///
    /// # Errors
    ///
    /// The empty graph spans no surface and is rejected.
    pub fn euler_characteristic(&self) -> Result<i64> {
        if self.edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let us: BTreeSet<usize> = self.edges.iter().map(|&(u, _)| u).collect();
        let ls: BTreeSet<usize> = self.edges.iter().map(|&(_, l)| l).collect();
        Ok((us.len() + ls.len()) as i64 - self.edges.len() as i64)
    }

    /// Edge density `e/(pq)` over the nonisolated vertex counts.
    ///
    /// The density of a link is the largest density over all reduced graphs
    /// presenting it; the complete graph has density one.
    ///
    /// # Errors
    ///
    /// The empty graph has no density.
    pub fn density(&self) -> Result<Rational64> {
        if self.edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let us: BTreeSet<usize> = self.edges.iter().map(|&(u, _)| u).collect();
        let ls: BTreeSet<usize> = self.edges.iter().map(|&(_, l)| l).collect();
        Ok(Rational64::new(
            self.edges.len() as i64,
            (us.len() * ls.len()) as i64,
        ))
    }

    /// Whether every lower fork's teeth occupy consecutive positions.
    ///
    /// For a reduced graph this characterizes the boundary links of
    /// positive braid closures among strongly quasipositive links.
    pub fn is_positive_complete(&self) -> bool {
        self.forks_of(Side::Lower).iter().all(|f| {
            f.teeth
                .iter()
                .enumerate()
                .all(|(i, &t)| t == f.teeth[0] + i)
        })
    }

    /// Searches for `a` upper and `b` lower vertices that are pairwise fully
    /// joined, returning the lexicographically first witness pair of vertex
    /// sets. The chosen vertices inherit the line order but need not be
    /// consecutive.
    pub fn contains_complete_subgraph(&self, a: usize, b: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        if a > self.p || b > self.q {
            return None;
        }
        let all_lower: Vec<usize> = (0..self.q).collect();
        let teeth: Vec<Vec<usize>> = (0..self.p).map(|u| self.upper_teeth(u)).collect();
        let mut found = None;
        for_each_combination(self.p, a, &mut |uppers| {
            let mut common = all_lower.clone();
            for &u in uppers {
                common.retain(|l| teeth[u].binary_search(l).is_ok());
                if common.len() < b {
                    return true;
                }
            }
            found = Some((uppers.to_vec(), common[..b].to_vec()));
            false
        });
        found
    }

    /// Drops isolated vertices and renumbers both lines order-preserving.
    pub fn compact(&self) -> Self {
        let us: Vec<usize> = {
            let s: BTreeSet<usize> = self.edges.iter().map(|&(u, _)| u).collect();
            s.into_iter().collect()
        };
        let ls: Vec<usize> = {
            let s: BTreeSet<usize> = self.edges.iter().map(|&(_, l)| l).collect();
            s.into_iter().collect()
        };
        let upos = |u: usize| us.binary_search(&u).expect("endpoint present");
        let lpos = |l: usize| ls.binary_search(&l).expect("endpoint present");
        Self {
            p: us.len(),
            q: ls.len(),
            edges: self.edges.iter().map(|&(u, l)| (upos(u), lpos(l))).collect(),
        }
    }

    /// Connected components, ordered by their first upper vertex (components
    /// with no upper vertex cannot occur: every edge has one). Each component
    /// is compacted to its own vertex ranges.
    pub fn components(&self) -> Vec<BipartiteGraph> {
        if self.edges.is_empty() {
            return Vec::new();
        }
        let g = self.compact();
        // Union-find over upper vertices 0..p and lower vertices p..p+q.
        let mut parent: Vec<usize> = (0..g.p + g.q).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, l) in &g.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, g.p + l));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let upper_root: Vec<usize> = (0..g.p).map(|u| find(&mut parent, u)).collect();
        let mut roots: Vec<usize> = Vec::new();
        for &r in &upper_root {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        roots
            .into_iter()
            .map(|r| {
                let edges: Vec<(usize, usize)> = g
                    .edges
                    .iter()
                    .copied()
                    .filter(|&(u, _)| upper_root[u] == r)
                    .collect();
                BipartiteGraph { p: g.p, q: g.q, edges: edges.into_iter().collect() }.compact()
            })
            .collect()
    }

    /// Whether the graph is connected (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the graph is reduced: no isolated vertices and no retractable
    /// leaf (a degree-one vertex whose unique neighbour has degree at least
    /// two).
    pub fn is_reduced(&self) -> bool {
        let c = self.compact();
        if c.p != self.p || c.q != self.q {
            return false;
        }
        self.find_leaf().is_none()
    }

    /// Finds a retractable leaf edge, if any.
    fn find_leaf(&self) -> Option<(usize, usize)> {
        let mut du = vec![0usize; self.p];
        let mut dl = vec![0usize; self.q];
        for &(u, l) in &self.edges {
            du[u] += 1;
            dl[l] += 1;
        }
        for &(u, l) in &self.edges {
            if du[u] == 1 && dl[l] >= 2 {
                return Some((u, l));
            }
        }
        for &(u, l) in &self.edges {
            if dl[l] == 1 && du[u] >= 2 {
                return Some((u, l));
            }
        }
        None
    }

    /// Reduces the graph without changing its boundary link.
    ///
    /// Retractable leaves are removed one at a time; a component that
    /// collapses to a single edge (every tree does) or to a single vertex is
    /// removed entirely while recording one unknot component of the boundary
    /// (an edge spans an annulus-free band between two discs, a lone vertex a
    /// disc — either way the boundary piece is unknotted). Returns the reduced
    /// graph together with the unknot count.
    pub fn reduce(&self) -> (BipartiteGraph, usize) {
        // Isolated vertices are single-vertex components.
        let nonisolated_u: BTreeSet<usize> = self.edges.iter().map(|&(u, _)| u).collect();
        let nonisolated_l: BTreeSet<usize> = self.edges.iter().map(|&(_, l)| l).collect();
        let mut unknots = (self.p - nonisolated_u.len()) + (self.q - nonisolated_l.len());
        let mut kept: Vec<BipartiteGraph> = Vec::new();
        for mut c in self.components() {
            loop {
                if c.edge_count() == 1 {
                    unknots += 1;
                    break;
                }
                match c.find_leaf() {
                    Some(e) => {
                        let edges: Vec<(usize, usize)> =
                            c.edges.iter().copied().filter(|&x| x != e).collect();
                        c = BipartiteGraph { p: c.p, q: c.q, edges: edges.into_iter().collect() }
                            .compact();
                    }
                    None => {
                        kept.push(c);
                        break;
                    }
                }
            }
        }
        (Self::disjoint_union(&kept), unknots)
    }

    /// Places graphs side by side on shared lines, in the given order.
    pub fn disjoint_union(parts: &[BipartiteGraph]) -> BipartiteGraph {
        let mut p = 0;
        let mut q = 0;
        let mut edges = BTreeSet::new();
        for g in parts {
            for &(u, l) in &g.edges {
                edges.insert((u + p, l + q));
            }
            p += g.p;
            q += g.q;
        }
        BipartiteGraph { p, q, edges }
    }

    /// Removes one edge and reduces the result.
    ///
    /// This severs one ribbon of the spanned surface, raising its Euler
    /// characteristic by one.
    ///
    /// # Errors
    ///
    /// The edge must exist.
    pub fn delete_edge(&self, u: usize, l: usize) -> Result<(BipartiteGraph, usize)> {
        if !self.edges.contains(&(u, l)) {
            return Err(Error::EdgeOutOfRange { u, l, p: self.p, q: self.q });
        }
        let edges: Vec<(usize, usize)> =
            self.edges.iter().copied().filter(|&x| x != (u, l)).collect();
        Ok(BipartiteGraph { p: self.p, q: self.q, edges: edges.into_iter().collect() }.reduce())
    }

    /// Applies a fork split. Total edge count is preserved and the Euler
    /// characteristic of the (unreduced) result is one higher.
    ///
    /// # Errors
    ///
    /// The named vertex must have at least two teeth and the position must
    /// leave at least one tooth on each child.
    pub fn split_fork(&self, mv: SplitMove) -> Result<BipartiteGraph> {
        match mv.side {
            Side::Lower => self.split_lower(mv.vertex, mv.position, mv.order),
            Side::Upper => Ok(self
                .transpose()
                .split_lower(mv.vertex, mv.position, mv.order)?
                .transpose()),
        }
    }

    fn split_lower(&self, v: usize, m: usize, order: ChildOrder) -> Result<BipartiteGraph> {
        if v >= self.q {
            return Err(Error::InvalidSplitVertex { side: "lower", vertex: v });
        }
        let teeth = self.lower_teeth(v);
        if teeth.len() < 2 {
            return Err(Error::InvalidSplitVertex { side: "lower", vertex: v });
        }
        if m == 0 || m >= teeth.len() {
            return Err(Error::InvalidSplitPosition { position: m, teeth: teeth.len() });
        }
        let (first, rest) = teeth.split_at(m);
        let (slot, inserted) = match order {
            ChildOrder::Before => (first, rest),
            ChildOrder::After => (rest, first),
        };
        let mut edges = BTreeSet::new();
        for &(u, l) in &self.edges {
            if l < v {
                edges.insert((u, l));
            } else if l > v {
                edges.insert((u, l + 1));
            }
        }
        for &u in slot {
            edges.insert((u, v));
        }
        for &u in inserted {
            edges.insert((u, v + 1));
        }
        Ok(BipartiteGraph { p: self.p, q: self.q + 1, edges })
    }

    /// Canonical byte string identifying the graph up to the boundary-link
    /// symmetries: identity, reversal of both lines, transposition, and
    /// reversed transposition. Equal codes mean isotopic ribbon pictures.
    pub fn canonical_code(&self) -> Vec<u8> {
        let (p, q) = (self.p, self.q);
        type Image = (usize, usize, Vec<(usize, usize)>);
        let images: [Image; 4] = [
            (p, q, self.edges.iter().copied().collect()),
            (
                p,
                q,
                self.edges.iter().map(|&(u, l)| (p - 1 - u, q - 1 - l)).collect(),
            ),
            (q, p, self.edges.iter().map(|&(u, l)| (l, u)).collect()),
            (
                q,
                p,
                self.edges.iter().map(|&(u, l)| (q - 1 - l, p - 1 - u)).collect(),
            ),
        ];
        images
            .into_iter()
            .map(|(pp, qq, mut es)| {
                es.sort_by_key(|&(u, l)| (l, u));
                let mut code = format!("{pp},{qq}");
                for (u, l) in es {
                    code.push_str(&format!(";{u},{l}"));
                }
                code.into_bytes()
            })
            .min()
            .expect("four candidate images")
    }

    /// Parses the JSON form `{"p": .., "q": .., "edges": [[u, l], ..]}`.
    ///
    /// # Errors
    ///
    /// Malformed JSON, out-of-range endpoints, and duplicate edges are
    /// rejected.
    pub fn from_json(text: &str) -> Result<Self> {
        let repr: GraphRepr =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(repr.p, repr.q, &repr.edges)
    }

    /// Serializes to JSON with the edge list sorted lower-major.
    pub fn to_json(&self) -> String {
        let mut edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        edges.sort_by_key(|&(u, l)| (l, u));
        serde_json::to_string(&GraphRepr { p: self.p, q: self.q, edges })
            .expect("graph serialization cannot fail")
    }
}

impl fmt::Display for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

impl Serialize for BipartiteGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        edges.sort_by_key(|&(u, l)| (l, u));
        GraphRepr { p: self.p, q: self.q, edges }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BipartiteGraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Self::new(repr.p, repr.q, &repr.edges).map_err(serde::de::Error::custom)
    }
}

/// Upper bound `2/b − chi/b²` on the density of any link with braid index
/// `b` and maximal Euler characteristic `chi`.
///
/// # Errors
///
/// The braid index must be positive.
pub fn density_upper_bound(b: usize, chi: i64) -> Result<Rational64> {
    if b == 0 {
        return Err(Error::ZeroBraidIndex);
    }
    let b = b as i64;
    Ok(Rational64::new(2, b) - Rational64::new(chi, b * b))
}

/// Calls `f` on every `k`-element subset of `0..n` in lexicographic order
/// until `f` returns `false`.
pub(crate) fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        if !f(&combo) {
            return;
        }
        // Bump the rightmost index that can still move, then pack the rest
        // tightly after it.
        let Some(i) = (0..k).rev().find(|&i| combo[i] != i + n - k) else {
            return;
        };
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(p: usize, q: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(p, q, edges).unwrap()
    }

    fn k(p: usize, q: usize) -> BipartiteGraph {
        BipartiteGraph::complete(p, q).unwrap()
    }

    #[test]
    fn complete_graph_counts() {
        let k = k(3, 4);
        assert_eq!(k.edge_count(), 12);
        assert_eq!(k.euler_characteristic().unwrap(), -5);
        assert_eq!(k.lower_teeth(2), vec![0, 1, 2]);
        assert_eq!(k.upper_teeth(0), vec![0, 1, 2, 3]);
        assert!(BipartiteGraph::complete(0, 3).is_err());
        assert!(BipartiteGraph::complete(3, 0).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(BipartiteGraph::new(2, 2, &[(2, 0)]).is_err());
        assert!(BipartiteGraph::new(2, 2, &[(0, 0), (0, 0)]).is_err());
    }

    #[test]
    fn euler_characteristic_ignores_isolated_vertices() {
        let sparse = g(5, 5, &[(0, 0), (1, 0)]);
        // Two upper endpoints, one lower endpoint, two edges.
        assert_eq!(sparse.euler_characteristic().unwrap(), 1);
        assert!(BipartiteGraph::empty().euler_characteristic().is_err());
    }

    #[test]
    fn transpose_is_involutive() {
        let k = k(2, 5);
        assert_eq!(k.transpose().transpose(), k);
        assert_eq!(k.transpose().upper_count(), 5);
    }

    #[test]
    fn components_split_and_order() {
        let two = g(4, 6, &[
            (0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2),
            (2, 3), (3, 3), (2, 4), (3, 4), (2, 5), (3, 5),
        ]);
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], k(2, 3));
        assert_eq!(comps[1], k(2, 3));
        assert!(BipartiteGraph::empty().components().is_empty());
        assert_eq!(k(3, 4).components().len(), 1);
    }

    #[test]
    fn reduce_retracts_trees_to_unknots() {
        // A path (tree) collapses entirely, leaving one unknot.
        let path = g(2, 1, &[(0, 0), (1, 0)]);
        let (red, unknots) = path.reduce();
        assert_eq!(red.edge_count(), 0);
        assert_eq!(unknots, 1);
        // The complete graph on (1, 4) is a star, also a tree.
        let (red, unknots) = k(1, 4).reduce();
        assert_eq!(red.edge_count(), 0);
        assert_eq!(unknots, 1);
    }

    #[test]
    fn reduce_keeps_cycles() {
        let (red, unknots) = k(2, 2).reduce();
        assert_eq!(red, k(2, 2));
        assert_eq!(unknots, 0);
        // A triangle with a pendant edge: the pendant retracts.
        let pend = g(3, 2, &[(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)]);
        let (red, unknots) = pend.reduce();
        assert_eq!(red, k(2, 2));
        assert_eq!(unknots, 0);
    }

    #[test]
    fn reduce_preserves_euler_characteristic_with_unknot_bookkeeping() {
        let k = k(1, 4); // chi = 1
        let (red, unknots) = k.reduce();
        assert_eq!(red.edge_count(), 0);
        assert_eq!(unknots as i64, k.euler_characteristic().unwrap());
    }

    #[test]
    fn reduce_counts_isolated_vertices_as_unknots() {
        // A lone vertex spans a disc, whose boundary is an unknot.
        let sparse = g(3, 2, &[(0, 0)]);
        let (red, unknots) = sparse.reduce();
        assert_eq!(red, BipartiteGraph::empty());
        // One from the single-edge component, three from isolated vertices.
        assert_eq!(unknots, 4);
        // Two disjoint single edges: two unknots, nothing isolated.
        let pair = g(2, 2, &[(0, 0), (1, 1)]);
        assert_eq!(pair.reduce(), (BipartiteGraph::empty(), 2));
    }

    #[test]
    fn delete_edge_raises_chi() {
        let k = k(3, 4);
        let (after, unknots) = k.delete_edge(0, 0).unwrap();
        let chi_after = after.euler_characteristic().unwrap() + unknots as i64;
        assert_eq!(chi_after, k.euler_characteristic().unwrap() + 1);
        // Deleting the single edge cuts the band between two discs: the
        // boundary falls apart into two unknots.
        let one = g(1, 1, &[(0, 0)]);
        let (after, unknots) = one.delete_edge(0, 0).unwrap();
        assert_eq!(after.edge_count(), 0);
        assert_eq!(unknots, 2);
        assert!(one.delete_edge(0, 1).is_err());
    }

    #[test]
    fn split_lower_distributes_teeth() {
        let k = k(2, 2);
        let s = k
            .split_fork(SplitMove {
                side: Side::Lower,
                vertex: 0,
                position: 1,
                order: ChildOrder::Before,
            })
            .unwrap();
        assert_eq!(s.lower_count(), 3);
        assert_eq!(s.edge_count(), 4);
        assert_eq!(s.lower_teeth(0), vec![0]);
        assert_eq!(s.lower_teeth(1), vec![1]);
        assert_eq!(s.lower_teeth(2), vec![0, 1]);
        assert_eq!(
            s.euler_characteristic().unwrap(),
            k.euler_characteristic().unwrap() + 1
        );
    }

    #[test]
    fn split_child_order_swaps_children() {
        let k = k(2, 2);
        let before = k
            .split_fork(SplitMove {
                side: Side::Lower,
                vertex: 0,
                position: 1,
                order: ChildOrder::Before,
            })
            .unwrap();
        let after = k
            .split_fork(SplitMove {
                side: Side::Lower,
                vertex: 0,
                position: 1,
                order: ChildOrder::After,
            })
            .unwrap();
        assert_eq!(before.lower_teeth(0), vec![0]);
        assert_eq!(after.lower_teeth(0), vec![1]);
        assert_ne!(before, after);
    }

    #[test]
    fn upper_split_via_transpose() {
        let k = k(3, 4);
        let s = k
            .split_fork(SplitMove {
                side: Side::Upper,
                vertex: 0,
                position: 2,
                order: ChildOrder::Before,
            })
            .unwrap();
        assert_eq!(s.upper_count(), 4);
        assert_eq!(s.edge_count(), 12);
        assert_eq!(s.upper_teeth(0), vec![0, 1]);
        assert_eq!(s.upper_teeth(1), vec![2, 3]);
    }

    #[test]
    fn split_rejects_bad_moves() {
        let k = k(2, 2);
        for (vertex, position) in [(5, 1), (0, 0), (0, 2)] {
            assert!(k
                .split_fork(SplitMove {
                    side: Side::Lower,
                    vertex,
                    position,
                    order: ChildOrder::Before,
                })
                .is_err());
        }
    }

    #[test]
    fn canonical_code_identifies_symmetric_images() {
        let k = k(2, 3);
        assert_eq!(k.canonical_code(), k.transpose().canonical_code());
        let asym = g(2, 3, &[(0, 0), (0, 1), (1, 1), (1, 2)]);
        let reversed = g(2, 3, &[(1, 2), (1, 1), (0, 1), (0, 0)]);
        assert_eq!(asym.canonical_code(), reversed.canonical_code());
        let other = g(2, 3, &[(0, 0), (0, 1), (1, 1), (0, 2)]);
        assert_ne!(asym.canonical_code(), other.canonical_code());
    }

    #[test]
    fn forks_listed_in_line_order() {
        let forks = k(3, 4).forks_of(Side::Lower);
        assert_eq!(forks.len(), 4);
        assert!(forks.iter().all(|f| f.teeth == vec![0, 1, 2]));
        assert_eq!(forks[2].vertex, 2);
        // Isolated vertices carry no fork.
        let sparse = g(3, 2, &[(0, 0), (2, 0)]);
        let upper = sparse.forks_of(Side::Upper);
        assert_eq!(upper.len(), 2);
        assert_eq!(upper[1], Fork { vertex: 2, teeth: vec![0] });
        let single = g(1, 1, &[(0, 0)]);
        assert_eq!(single.forks_of(Side::Lower), vec![Fork { vertex: 0, teeth: vec![0] }]);
    }

    #[test]
    fn density_of_complete_graph_is_one() {
        assert_eq!(k(3, 4).density().unwrap(), Rational64::from_integer(1));
        let eight = g(3, 4, &[
            (0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (2, 2), (1, 3), (2, 3),
        ]);
        assert_eq!(eight.density().unwrap(), Rational64::new(2, 3));
        assert!(BipartiteGraph::empty().density().is_err());
    }

    #[test]
    fn density_bound_evaluates_exactly() {
        assert_eq!(density_upper_bound(2, -1).unwrap(), Rational64::new(5, 4));
        assert_eq!(density_upper_bound(3, -1).unwrap(), Rational64::new(7, 9));
        assert_eq!(density_upper_bound(1, 1).unwrap(), Rational64::from_integer(1));
        assert!(density_upper_bound(0, 0).is_err());
    }

    #[test]
    fn positive_complete_means_consecutive_teeth() {
        assert!(k(3, 4).is_positive_complete());
        // Teeth (0, 2) skip a vertex.
        let gap = g(3, 1, &[(0, 0), (2, 0)]);
        assert!(!gap.is_positive_complete());
        let ok = g(3, 2, &[(0, 0), (1, 0), (1, 1), (2, 1)]);
        assert!(ok.is_positive_complete());
    }

    #[test]
    fn complete_subgraph_witnesses() {
        let (us, ls) = k(3, 6).contains_complete_subgraph(3, 6).unwrap();
        assert_eq!(us, vec![0, 1, 2]);
        assert_eq!(ls, vec![0, 1, 2, 3, 4, 5]);
        assert!(k(3, 4).contains_complete_subgraph(3, 6).is_none());
        // Removing one edge kills the full biclique but leaves a 3-by-5 one.
        let (missing, _) = k(3, 6).delete_edge(0, 0).unwrap();
        assert!(missing.contains_complete_subgraph(3, 6).is_none());
        let (us, ls) = missing.contains_complete_subgraph(3, 5).unwrap();
        assert_eq!(us.len(), 3);
        assert_eq!(ls.len(), 5);
        assert!(!ls.contains(&0));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let k = k(2, 2);
        let text = k.to_json();
        assert_eq!(BipartiteGraph::from_json(&text).unwrap(), k);
        assert!(BipartiteGraph::from_json("{\"p\":1,\"q\":1,\"edges\":[[0,5]]}").is_err());
        assert!(
            BipartiteGraph::from_json("{\"p\":1,\"q\":1,\"edges\":[[0,0],[0,0]]}").is_err()
        );
        // Edge list serializes lower-major.
        let h = g(2, 2, &[(1, 0), (0, 0), (0, 1)]);
        assert_eq!(h.to_json(), "{\"p\":2,\"q\":2,\"edges\":[[0,0],[1,0],[0,1]]}");
    }
}
