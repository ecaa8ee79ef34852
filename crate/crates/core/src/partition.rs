//! Partitions and the twisted-torus graphs they parameterize.
//!
//! A weakly decreasing sequence `a₁ ≥ a₂ ≥ … ≥ aₙ ≥ 1` determines an embedded
//! bipartite graph `Γ(a₁, …, aₙ)` with `a₁` upper vertices and one lower fork
//! per part, the `k`-th fork grabbing the first `aₖ` upper vertices. The
//! boundary links of these graphs are the twisted torus links; the complete
//! graph is the special case of a constant partition.
//!
//! Conjugating the Young diagram of the partition transposes the picture, so
//! dual partitions present the same link — the source of nontrivial
//! coincidences such as `Γ(4,4,3,2,2)` and `Γ(5,5,3,2)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that the parts are positive and weakly decreasing, with at
    /// least one part.
    ///
    /// # Errors
    ///
    /// Empty input, a zero part, or an increase between consecutive parts.
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.is_empty()
            || parts.contains(&0)
            || parts.windows(2).any(|w| w[0] < w[1])
        {
            return Err(Error::InvalidPartition);
        }
        Ok(Self(parts.to_vec()))
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts (a partition is never empty).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Total number of cells of the Young diagram (sum of the parts).
    pub fn cell_count(&self) -> usize {
        self.0.iter().sum()
    }

    /// The conjugate partition: `bⱼ = #{k : aₖ ≥ j}` for `1 ≤ j ≤ a₁`.
    ///
    /// Reflects the Young diagram along its diagonal; applying it twice gives
    /// back the original partition.
    pub fn dual(&self) -> Partition {
        let a1 = self.0[0];
        Partition(
            (1..=a1)
                .map(|j| self.0.iter().filter(|&&a| a >= j).count())
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated form `"4,4,3,2,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(&parts)
    }
}

/// The embedded bipartite graph `Γ(a₁, …, aₙ)`: `a₁` upper vertices, one
/// lower vertex per part, the `k`-th lower fork joined to upper vertices
/// `0..aₖ`.
///
/// Its boundary is the twisted torus link of the partition; the constant
/// partition `(p, …, p)` with `q` parts gives the complete graph on `(p, q)`.
pub fn twisted_torus_graph(a: &Partition) -> BipartiteGraph {
    let p = a.parts()[0];
    let q = a.len();
    let edges: Vec<(usize, usize)> = a
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(k, &ak)| (0..ak).map(move |u| (u, k)))
        .collect();
    BipartiteGraph::new(p, q, &edges).expect("parts bounded by the first part")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn rejects_invalid_partitions() {
        assert!(Partition::new(&[]).is_err());
        assert!(Partition::new(&[3, 0]).is_err());
        assert!(Partition::new(&[2, 3]).is_err());
        assert!(Partition::new(&[3, 3, 1]).is_ok());
    }

    #[test]
    fn dual_of_figure_partition() {
        assert_eq!(p(&[4, 4, 3, 2, 2]).dual(), p(&[5, 5, 3, 2]));
        assert_eq!(p(&[6]).dual(), p(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn dual_is_an_involution() {
        for parts in [&[5, 3, 3, 1][..], &[4, 4, 3, 2, 2], &[2, 1], &[1]] {
            let a = p(parts);
            assert_eq!(a.dual().dual(), a);
        }
    }

    #[test]
    fn graph_shape_follows_the_parts() {
        let g = twisted_torus_graph(&p(&[4, 4, 3, 2, 2]));
        assert_eq!(g.upper_count(), 4);
        assert_eq!(g.lower_count(), 5);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.lower_teeth(2), vec![0, 1, 2]);
        assert!(g.is_positive_complete());
    }

    #[test]
    fn constant_partition_gives_complete_graph() {
        let g = twisted_torus_graph(&p(&[3, 3, 3, 3]));
        assert_eq!(g, BipartiteGraph::complete(3, 4).unwrap());
    }

    #[test]
    fn single_part_graph_is_a_star() {
        let g = twisted_torus_graph(&p(&[3]));
        assert_eq!((g.upper_count(), g.lower_count(), g.edge_count()), (3, 1, 3));
        assert_eq!(g.euler_characteristic().unwrap(), 1);
        let (reduced, unknots) = g.reduce();
        assert_eq!(reduced, BipartiteGraph::empty());
        assert_eq!(unknots, 1);
    }

    #[test]
    fn transpose_realizes_the_dual_partition() {
        for parts in [&[4, 4, 3, 2, 2][..], &[5, 3, 3, 1], &[3, 1], &[2, 2]] {
            let a = p(parts);
            assert_eq!(
                twisted_torus_graph(&a).transpose(),
                twisted_torus_graph(&a.dual())
            );
        }
    }

    #[test]
    fn parses_and_prints_comma_form() {
        let a: Partition = "4,4,3,2,2".parse().unwrap();
        assert_eq!(a, p(&[4, 4, 3, 2, 2]));
        assert_eq!(a.to_string(), "4,4,3,2,2");
        assert_eq!(a.cell_count(), 15);
        assert!("4,x".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }
}
