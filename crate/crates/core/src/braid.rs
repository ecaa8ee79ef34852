//! Band words and Artin braid words.
//!
//! The ribbon surface of an embedded bipartite graph deformation-retracts to
//! a braided surface: one disc per upper vertex (braid strand), one
//! positively twisted band per edge. Reading the bands bottom to top yields a
//! word in the *band generators*
//!
//! ```text
//! σ_{i,j} = (σ_i σ_{i+1} … σ_{j−2}) σ_{j−1} (σ_i σ_{i+1} … σ_{j−2})⁻¹,
//! ```
//!
//! one positive band between strands `i` and `j` passing in front of the
//! strands between them. Links presented this way are the strongly
//! quasipositive links. Expanding each band generator gives an ordinary
//! Artin word whose closure is the boundary link; all invariants downstream
//! are computed from that expanded word.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side};

/// A single positive band `σ_{i,j}` between strands `i < j` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BandGenerator {
    /// Lower strand, `1 ≤ i`.
    pub i: usize,
    /// Upper strand, `i < j ≤ strands`.
    pub j: usize,
}

impl fmt::Display for BandGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s[{},{}]", self.i, self.j)
    }
}

/// A word in band generators on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandWord {
    strands: usize,
    letters: Vec<BandGenerator>,
}

impl BandWord {
    /// Builds a band word, checking every letter against the strand count.
    ///
    /// # Errors
    ///
    /// Letters must satisfy `1 ≤ i < j ≤ strands`.
    pub fn new(strands: usize, letters: Vec<BandGenerator>) -> Result<Self> {
        for &BandGenerator { i, j } in &letters {
            if i == 0 || i >= j || j > strands {
                return Err(Error::InvalidBand { i, j, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The letters in order.
    pub fn letters(&self) -> &[BandGenerator] {
        &self.letters
    }

    /// Replaces every band generator by its Artin expansion
    /// `σ_{i,j} = (σ_i…σ_{j−2}) σ_{j−1} (σ_i…σ_{j−2})⁻¹`,
    /// a palindrome of `2(j−i)−1` crossings with a single positive core.
    pub fn expand(&self) -> BraidWord {
        let mut letters = Vec::new();
        for &BandGenerator { i, j } in &self.letters {
            let ascent: Vec<i32> = (i..j - 1).map(|k| k as i32).collect();
            letters.extend(&ascent);
            letters.push((j - 1) as i32);
            letters.extend(ascent.iter().rev().map(|&k| -k));
        }
        BraidWord { strands: self.strands, letters }
    }
}

impl fmt::Display for BandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{letter}")?;
            first = false;
        }
        Ok(())
    }
}

/// An Artin braid word: signed crossing indices, `+k` for `σ_k` and `-k` for
/// `σ_k⁻¹`, with `1 ≤ k < strands`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a braid word, checking every letter against the strand count.
    ///
    /// # Errors
    ///
    /// Letters must be nonzero with `|letter| < strands`.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        for &x in &letters {
            let k = x.unsigned_abs() as usize;
            if k == 0 || k >= strands {
                return Err(Error::InvalidBand { i: k, j: k + 1, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The signed letters in order.
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Number of crossings.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether the word has no crossings.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cancels adjacent inverse pairs `σ_k σ_k⁻¹` until none remain. Only
    /// free cancellation — no braid relations — so the closure link and every
    /// invariant computed from the diagram are unchanged.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &x in &self.letters {
            if stack.last() == Some(&-x) {
                stack.pop();
            } else {
                stack.push(x);
            }
        }
        BraidWord { strands: self.strands, letters: stack }
    }

    /// The permutation induced on strand positions: entry `i` is the start
    /// position of the strand ending at top position `i` (0-based).
    pub fn strand_permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &x in &self.letters {
            let k = x.unsigned_abs() as usize; // crossing between k-1 and k
            perm.swap(k - 1, k);
        }
        perm
    }

    /// Number of components of the closure link: cycles of the strand
    /// permutation.
    pub fn closure_components(&self) -> usize {
        let perm = self.strand_permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = perm[at];
            }
        }
        cycles
    }

    /// Sum of crossing signs (the exponent sum, an invariant of conjugation
    /// and free reduction).
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&x| x.signum() as i64).sum()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "strands={};", self.strands)?;
        for &x in &self.letters {
            write!(f, " {x:+}")?;
        }
        Ok(())
    }
}

/// Reads the band word of a reduced connected graph: strands are the upper
/// vertices; each lower fork with teeth `t₁ < … < tₖ` contributes the chain
/// `σ_{t₁+1,t₂+1} σ_{t₂+1,t₃+1} … σ_{t_{k−1}+1,tₖ+1}`, forks in line order.
///
/// The letter count is therefore `e − q` and the Euler characteristic of the
/// braided surface, strands − letters, equals that of the graph.
///
/// # Errors
///
/// Disconnected graphs present split links and must be decomposed first; the
/// empty graph has no strands.
pub fn band_word_from_graph(g: &BipartiteGraph) -> Result<BandWord> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let parts = g.components().len();
    if parts > 1 {
        return Err(Error::DisconnectedGraph { components: parts });
    }
    let mut letters = Vec::new();
    for fork in g.forks_of(Side::Lower) {
        for pair in fork.teeth.windows(2) {
            letters.push(BandGenerator { i: pair[0] + 1, j: pair[1] + 1 });
        }
    }
    BandWord::new(g.upper_count(), letters)
}

/// The band word of the complete graph on `(p, q)`: `q` copies of the full
/// ascending chain, expanding to the positive torus word `(σ₁…σ_{p−1})^q`.
pub fn torus_band_word(p: usize, q: usize) -> Result<BandWord> {
    band_word_from_graph(&BipartiteGraph::complete(p, q)?)
}
