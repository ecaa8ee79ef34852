//! Seifert matrices of closed-braid diagrams.
//!
//! The canonical Seifert surface of a braid closure is built from one disc
//! per strand and one twisted band per crossing. A basis of its first
//! homology has one loop per *consecutive pair of crossings in the same
//! column* (a column being the gap between adjacent strands); the Seifert
//! linking numbers of these loops depend only on the crossing signs and on
//! how loops in neighbouring columns interleave.
//!
//! For a connected diagram with `c` crossings on `n` strands this yields a
//! square matrix of size `c − n + 1`, the first Betti number of the surface.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Integer matrix of Seifert linking numbers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl SeifertMatrix {
    /// Builds from a row-major entry list of length `size²`.
    pub(crate) fn from_rows(size: usize, entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.len(), size * size);
        Self { size, entries }
    }

    /// Matrix dimension.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at (row, column), zero-based.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.size + col]
    }

    /// The symmetrization `V + Vᵀ`, whose congruence invariants give the
    /// signature, nullity, and determinant of the closure link.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j) + self.get(j, i)).collect())
            .collect()
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            for j in 0..self.size {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:2}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// One homology loop: two consecutive crossings in a column.
struct Loop {
    /// Column index (crossing letter value minus one, 0-based).
    column: usize,
    /// Word positions of the two crossings, `first < second`.
    first: usize,
    second: usize,
    /// Crossing signs at those positions.
    first_sign: i64,
    second_sign: i64,
}

/// Computes the Seifert matrix of the canonical surface of the closure of
/// `word`.
///
/// # Errors
///
/// Every column must contain at least one crossing; a column gap means the
/// closure diagram is a split union and has no single canonical surface
/// (decompose first, or compute per component).
pub fn seifert_matrix(word: &BraidWord) -> Result<SeifertMatrix> {
    let n = word.strands();
    // Crossings per column, in word order.
    let mut columns: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n.saturating_sub(1)];
    for (pos, &x) in word.letters().iter().enumerate() {
        let k = x.unsigned_abs() as usize - 1;
        columns[k].push((pos, x.signum() as i64));
    }
    let mut loops: Vec<Loop> = Vec::new();
    for (k, column) in columns.iter().enumerate() {
        if column.is_empty() {
            return Err(Error::DisconnectedDiagram { gap: k + 1 });
        }
        for pair in column.windows(2) {
            let ((a, sa), (b, sb)) = (pair[0], pair[1]);
            loops.push(Loop {
                column: k,
                first: a,
                second: b,
                first_sign: sa,
                second_sign: sb,
            });
        }
    }
    let m = loops.len();
    let mut v = vec![0i64; m * m];
    let set = |v: &mut Vec<i64>, i: usize, j: usize, value: i64| v[i * m + j] = value;
    for (x, lx) in loops.iter().enumerate() {
        // Self-linking: −1 per positive full twist, averaged over the two
        // crossings the loop runs through.
        set(&mut v, x, x, -(lx.first_sign + lx.second_sign) / 2);
        for (y, ly) in loops.iter().enumerate().skip(x + 1) {
            if ly.column == lx.column && ly.first == lx.second {
                // Consecutive loops in one column share the middle crossing.
                match lx.second_sign {
                    1 => set(&mut v, x, y, 1),
                    _ => set(&mut v, y, x, -1),
                }
            } else if ly.column == lx.column + 1 {
                // Neighbouring columns link only when the loops interleave.
                if lx.first < ly.first && ly.first < lx.second && lx.second < ly.second {
                    set(&mut v, x, y, 1);
                } else if ly.first < lx.first && lx.first < ly.second && ly.second < lx.second {
                    set(&mut v, x, y, -1);
                }
            }
        }
    }
    Ok(SeifertMatrix::from_rows(m, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn word(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    #[test]
    fn trefoil_matrix_matches_hand_computation() {
        let v = seifert_matrix(&word(2, &[1, 1, 1])).unwrap();
        assert_eq!(v.size(), 2);
        assert_eq!(
            (v.get(0, 0), v.get(0, 1), v.get(1, 0), v.get(1, 1)),
            (-1, 1, 0, -1)
        );
    }

    #[test]
    fn hopf_link_matrix() {
        let v = seifert_matrix(&word(2, &[1, 1])).unwrap();
        assert_eq!(v.size(), 1);
        assert_eq!(v.get(0, 0), -1);
    }

    #[test]
    fn unknot_matrix_is_empty() {
        let v = seifert_matrix(&word(1, &[])).unwrap();
        assert_eq!(v.size(), 0);
    }

    #[test]
    fn size_is_crossings_minus_strands_plus_one() {
        for (n, letters) in [
            (2usize, vec![1, 1, 1]),
            (3, vec![1, 2, 1, 2, 1, 2, 1, 2]),
            (4, vec![1, 2, 3, 1, 2, 3, 1, 2, 3]),
        ] {
            let w = word(n, &letters);
            let v = seifert_matrix(&w).unwrap();
            assert_eq!(v.size(), letters.len() - n + 1);
        }
    }

    #[test]
    fn detects_split_diagrams() {
        // No crossing between strands 2 and 3.
        let split = word(4, &[1, 1, 3, 3]);
        assert!(matches!(
            seifert_matrix(&split),
            Err(Error::DisconnectedDiagram { gap: 2 })
        ));
    }

    #[test]
    fn mixed_signs_zero_the_diagonal() {
        // Loop through crossings of opposite sign has no net self-twist.
        let v = seifert_matrix(&word(2, &[1, -1, 1])).unwrap();
        assert_eq!(v.size(), 2);
        assert_eq!(v.get(0, 0), 0);
        assert_eq!(v.get(1, 1), 0);
        // The shared middle crossing is negative, so the lower off-diagonal
        // entry carries the linking.
        assert_eq!((v.get(0, 1), v.get(1, 0)), (0, -1));
    }

    #[test]
    fn adjacent_column_interleaving() {
        // Word (σ₁σ₂)² on 3 strands: columns at positions {0,2} and {1,3};
        // the two loops interleave in increasing-column order.
        let v = seifert_matrix(&word(3, &[1, 2, 1, 2])).unwrap();
        assert_eq!(v.size(), 2);
        assert_eq!((v.get(0, 1), v.get(1, 0)), (1, 0));
        // Reversed roles: columns {1,3} and {0,2}.
        let w = seifert_matrix(&word(3, &[2, 1, 2, 1])).unwrap();
        assert_eq!((w.get(0, 1), w.get(1, 0)), (-1, 0));
    }
}
