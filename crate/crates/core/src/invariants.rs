//! Exact link invariants from Seifert matrices, and the graph fingerprint.
//!
//! Everything here is computed in exact arbitrary-precision arithmetic:
//! signature and nullity by rational congruence diagonalization of the
//! symmetrized Seifert matrix, the Alexander polynomial by evaluating the
//! determinant of the matrix pencil `tV − Vᵀ` at integer points and
//! interpolating, the determinant as `|det(V + Vᵀ)|`.
//!
//! The [`Fingerprint`] bundles these invariants together with the graph-level
//! Euler characteristic. Two graphs with equal fingerprints present links
//! that agree in every invariant this crate computes — the crate's working
//! proxy for link equality, always labelled as such where it matters.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::{band_word_from_graph, BraidWord};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::poly::LaurentPolynomial;
use crate::seifert::{seifert_matrix, SeifertMatrix};

/// Global sign convention for reported signatures.
///
/// The congruence invariants of `V + Vᵀ` determine the signature only up to
/// this fixed global sign, which is calibrated once so that positive links
/// report positive signatures: the right-handed trefoil `T(2,3)` has
/// signature `+2`.
pub const SIGNATURE_SIGN: i64 = -1;

/// Signature and nullity of the closure link of the diagram behind `v`.
///
/// Exact congruence diagonalization of `V + Vᵀ`; the reported signature
/// carries the [`SIGNATURE_SIGN`] calibration.
pub fn signature_and_nullity(v: &SeifertMatrix) -> (i64, usize) {
    let (raw, nullity, _) = congruence_invariants(&v.symmetrized());
    (SIGNATURE_SIGN * raw, nullity)
}

/// The link determinant `|det(V + Vᵀ)|`, a non-negative integer; zero iff
/// the symmetrized form is singular (positive nullity).
pub fn determinant(v: &SeifertMatrix) -> BigInt {
    let (_, _, det) = congruence_invariants(&v.symmetrized());
    det
}

/// The Alexander polynomial `det(t^{1/2}V − t^{−1/2}Vᵀ)` in normal form:
/// support centered, leading coefficient positive. The zero polynomial
/// signals a split link.
pub fn alexander(v: &SeifertMatrix) -> LaurentPolynomial {
    let n = v.size();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    // Evaluate P(t) = det(tV − Vᵀ) at n+1 integer points, then interpolate.
    let xs: Vec<BigInt> = evaluation_points(n + 1);
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x| {
            let xr = BigRational::from_integer(x.clone());
            let m: Vec<Vec<BigRational>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            xr.clone() * BigRational::from_integer(BigInt::from(v.get(i, j)))
                                - BigRational::from_integer(BigInt::from(v.get(j, i)))
                        })
                        .collect()
                })
                .collect();
            determinant_rational(m)
        })
        .collect();
    let coeffs = interpolate(&xs, &ys);
    LaurentPolynomial::from_doubled(coeffs.into_iter().enumerate().map(|(e, c)| {
        assert!(c.is_integer(), "pencil determinant has integer coefficients");
        (2 * e as i64, c.to_integer())
    }))
    .normalized()
}

/// Independent oracle for torus links with coprime parameters: the classical
/// closed form `(t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1))`, normalized like
/// [`alexander`] output.
///
/// # Errors
///
/// The closed form requires `gcd(p, q) = 1` (and positive parameters).
pub fn torus_alexander_oracle(p: usize, q: usize) -> Result<LaurentPolynomial> {
    if p == 0 || q == 0 {
        return Err(Error::ZeroVertexCount { p, q });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    // Dense coefficient vectors over BigInt, index = exponent.
    let minus_one_plus = |d: usize| {
        let mut v = vec![BigInt::zero(); d + 1];
        v[0] = BigInt::from(-1);
        v[d] = BigInt::one();
        v
    };
    let numerator = dense_mul(&minus_one_plus(p * q), &minus_one_plus(1));
    let quotient = dense_div_exact(&numerator, &minus_one_plus(p));
    let quotient = dense_div_exact(&quotient, &minus_one_plus(q));
    Ok(LaurentPolynomial::from_doubled(
        quotient
            .into_iter()
            .enumerate()
            .map(|(e, c)| (2 * e as i64, c)),
    )
    .normalized())
}

/// The bundle of invariants used to compare boundary links.
///
/// Equality compares the six invariant fields — components, `chi_max`,
/// signature, nullity, determinant, Alexander polynomial — and ignores the
/// presentational `split`/`per_component` fields, which repackage the same
/// information for split links.
#[derive(Debug, Clone, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    /// Number of link components.
    pub components: usize,
    /// Maximal Euler characteristic of a Seifert surface, from the graph
    /// formula `p + q − e` (Bennequin-sharp for these surfaces).
    pub chi_max: i64,
    /// Link signature under the [`SIGNATURE_SIGN`] calibration.
    pub signature: i64,
    /// Nullity of the symmetrized Seifert form.
    pub nullity: usize,
    /// `|Δ(−1)|` as a non-negative integer; zero for split links.
    pub determinant: u64,
    /// Normalized Alexander polynomial; the zero polynomial for split links
    /// (their one-variable Alexander polynomial vanishes identically).
    pub alexander: LaurentPolynomial,
    /// Whether the link is a split union (more than one piece).
    pub split: bool,
    /// Fingerprints of the split pieces, in presentation order with unknot
    /// pieces last; empty unless `split`.
    pub per_component: Vec<Fingerprint>,
}

impl PartialEq for Fingerprint {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
            && self.chi_max == other.chi_max
            && self.signature == other.signature
            && self.nullity == other.nullity
            && self.determinant == other.determinant
            && self.alexander == other.alexander
    }
}

impl Fingerprint {
    /// The fingerprint of the empty link (empty graph): no components,
    /// `Δ = 1` by the empty-determinant convention.
    pub fn empty() -> Self {
        Fingerprint {
            components: 0,
            chi_max: 0,
            signature: 0,
            nullity: 0,
            determinant: 1,
            alexander: LaurentPolynomial::one(),
            split: false,
            per_component: Vec::new(),
        }
    }

    /// The unknot fingerprint.
    pub fn unknot() -> Self {
        Fingerprint {
            components: 1,
            chi_max: 1,
            signature: 0,
            nullity: 0,
            determinant: 1,
            alexander: LaurentPolynomial::one(),
            split: false,
            per_component: Vec::new(),
        }
    }

    /// Whether this fingerprint could belong to a knot.
    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    /// Parses the JSON object form.
    ///
    /// # Errors
    ///
    /// Malformed JSON.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Serializes to the JSON object form.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("fingerprint serialization cannot fail")
    }
}

/// Whether a knot's signature attains the genus bound `σ = 2g = 1 − χ`.
///
/// # Errors
///
/// Only defined for knots (one component).
pub fn signature_is_maximal(f: &Fingerprint) -> Result<bool> {
    if f.components != 1 {
        return Err(Error::NotAKnot { components: f.components });
    }
    Ok(f.signature == 1 - f.chi_max)
}

/// Computes the full invariant bundle of the boundary link of `g`.
///
/// The graph is reduced first; each remaining connected component is
/// translated to a band word and measured through its Seifert matrix, and
/// retraction unknots are appended as trivial pieces. For a split union the
/// combined Alexander polynomial is zero and the determinant vanishes, so
/// the per-piece fingerprints are reported alongside.
pub fn fingerprint(g: &BipartiteGraph) -> Fingerprint {
    let (reduced, unknots) = g.reduce();
    let mut pieces: Vec<Fingerprint> = reduced
        .components()
        .iter()
        .map(component_fingerprint)
        .collect();
    pieces.extend(std::iter::repeat_with(Fingerprint::unknot).take(unknots));
    combine(pieces)
}

/// Invariants of one connected, reduced, nonempty graph component.
fn component_fingerprint(component: &BipartiteGraph) -> Fingerprint {
    let chi_max = component
        .euler_characteristic()
        .expect("components are nonempty");
    let band = band_word_from_graph(component).expect("components are connected");
    let expanded = band.expand();
    let word = expanded.free_reduce();
    // Free reduction preserves the closure link, but in degenerate cases it
    // can empty a column; the unreduced diagram of a connected graph never
    // has that problem, and both diagrams present the same link.
    let v = seifert_matrix(&word)
        .or_else(|_| seifert_matrix(&expanded))
        .expect("connected graphs give column-complete diagrams");
    let (signature, nullity) = signature_and_nullity(&v);
    let determinant = determinant(&v)
        .to_u64()
        .expect("determinant fits in 64 bits at this scale");
    Fingerprint {
        components: expanded.closure_components(),
        chi_max,
        signature,
        nullity,
        determinant,
        alexander: alexander(&v),
        split: false,
        per_component: Vec::new(),
    }
}

/// Combines piece fingerprints into the fingerprint of their split union.
fn combine(mut pieces: Vec<Fingerprint>) -> Fingerprint {
    match pieces.len() {
        0 => Fingerprint::empty(),
        1 => pieces.pop().expect("length checked"),
        m => {
            let mut total = Fingerprint {
                components: 0,
                chi_max: 0,
                signature: 0,
                // Splitting spheres each contribute one to the nullity.
                nullity: m - 1,
                determinant: 0,
                alexander: LaurentPolynomial::zero(),
                split: true,
                per_component: Vec::new(),
            };
            for piece in &pieces {
                total.components += piece.components;
                total.chi_max += piece.chi_max;
                total.signature += piece.signature;
                total.nullity += piece.nullity;
            }
            total.per_component = pieces;
            total
        }
    }
}

/// Fingerprint of a braid word's closure, for use when no graph is in play.
///
/// The `chi_max` field is filled with the Euler characteristic of the
/// *given* diagram's canonical surface, `strands − crossings`. For words
/// expanded from band presentations without cancellation this matches the
/// maximal value; for an arbitrary word it is only a lower bound, and free
/// reduction can change it while every other field stays invariant.
///
/// # Errors
///
/// Disconnected closure diagrams.
pub fn braid_fingerprint(word: &BraidWord) -> Result<Fingerprint> {
    let reduced = word.free_reduce();
    let v = seifert_matrix(&reduced).or_else(|_| seifert_matrix(word))?;
    let (signature, nullity) = signature_and_nullity(&v);
    let determinant = determinant(&v)
        .to_u64()
        .expect("determinant fits in 64 bits at this scale");
    Ok(Fingerprint {
        components: word.closure_components(),
        chi_max: word.strands() as i64 - word.len() as i64,
        signature,
        nullity,
        determinant,
        alexander: alexander(&v),
        split: false,
        per_component: Vec::new(),
    })
}

/// Exact symmetric congruence invariants of an integer symmetric matrix:
/// `(signature, nullity, |determinant|)` before any sign calibration.
fn congruence_invariants(sym: &[Vec<i64>]) -> (i64, usize, BigInt) {
    let n = sym.len();
    let mut s: Vec<Vec<BigRational>> = sym
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut signature = 0i64;
    let mut nullity = 0usize;
    let mut pivot_product = BigRational::one();
    for i in 0..n {
        if s[i][i].is_zero() {
            if let Some(r) = (i + 1..n).find(|&r| !s[r][r].is_zero()) {
                // Bring a nonzero diagonal entry to the front: swap rows and
                // columns i ↔ r (a congruence, determinant unchanged).
                s.swap(i, r);
                for row in s.iter_mut() {
                    row.swap(i, r);
                }
            } else if let Some(r) = (i + 1..n).find(|&r| !s[i][r].is_zero()) {
                // All trailing diagonals vanish: adding row and column r to
                // row and column i makes s[i][i] = 2·s[i][r] ≠ 0.
                let row_r = s[r].clone();
                for (dst, t) in s[i].iter_mut().zip(row_r) {
                    *dst += t;
                }
                for row in s.iter_mut() {
                    let t = row[r].clone();
                    row[i] += t;
                }
            } else {
                // Row i is identically zero on the unprocessed block: one
                // dimension of radical.
                nullity += 1;
                continue;
            }
        }
        let pivot = s[i][i].clone();
        signature += if pivot.is_positive() { 1 } else { -1 };
        pivot_product *= pivot.clone();
        for r in i + 1..n {
            if s[r][i].is_zero() {
                continue;
            }
            let f = s[r][i].clone() / pivot.clone();
            let row_i = s[i].clone();
            for (dst, t) in s[r].iter_mut().zip(row_i) {
                *dst -= f.clone() * t;
            }
            for row in s.iter_mut() {
                let t = f.clone() * row[i].clone();
                row[r] -= t;
            }
        }
    }
    let determinant = if nullity > 0 {
        BigInt::zero()
    } else {
        debug_assert!(pivot_product.is_integer(), "congruence preserves an integer determinant");
        pivot_product.to_integer().abs()
    };
    (signature, nullity, determinant)
}

/// Exact determinant by rational Gaussian elimination.
fn determinant_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for i in 0..n {
        let Some(pivot_row) = (i..n).find(|&r| !m[r][i].is_zero()) else {
            return BigRational::zero();
        };
        if pivot_row != i {
            m.swap(i, pivot_row);
            det = -det;
        }
        let pivot = m[i][i].clone();
        det *= pivot.clone();
        for r in i + 1..n {
            if m[r][i].is_zero() {
                continue;
            }
            let f = m[r][i].clone() / pivot.clone();
            let row_i = m[i].clone();
            for (dst, t) in m[r].iter_mut().zip(row_i).skip(i) {
                *dst -= f.clone() * t;
            }
        }
    }
    det
}

/// `count` distinct small integers: 0, 1, −1, 2, −2, …
fn evaluation_points(count: usize) -> Vec<BigInt> {
    let mut xs = Vec::with_capacity(count);
    let mut k = 0i64;
    while xs.len() < count {
        if k == 0 {
            xs.push(BigInt::zero());
        } else {
            xs.push(BigInt::from(k));
            if xs.len() < count {
                xs.push(BigInt::from(-k));
            }
        }
        k += 1;
    }
    xs
}

/// Lagrange interpolation through `(xs[i], ys[i])`, returning dense
/// coefficients (constant term first).
fn interpolate(xs: &[BigInt], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut result = vec![BigRational::zero(); n];
    for i in 0..n {
        if ys[i].is_zero() {
            continue;
        }
        // basisᵢ(X) = Π_{j≠i} (X − xⱼ), scaled by yᵢ / Π_{j≠i} (xᵢ − xⱼ).
        let mut basis = vec![BigRational::one()];
        let mut denominator = BigRational::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            basis = multiply_by_linear(&basis, &xs[j]);
            denominator *= BigRational::from_integer(xs[i].clone() - xs[j].clone());
        }
        let scale = ys[i].clone() / denominator;
        for (k, b) in basis.iter().enumerate() {
            result[k] += b * scale.clone();
        }
    }
    result
}

/// Multiplies a dense polynomial by `(X − root)`.
fn multiply_by_linear(poly: &[BigRational], root: &BigInt) -> Vec<BigRational> {
    let r = BigRational::from_integer(root.clone());
    let mut out = vec![BigRational::zero(); poly.len() + 1];
    for (k, c) in poly.iter().enumerate() {
        out[k + 1] += c.clone();
        out[k] -= r.clone() * c.clone();
    }
    out
}

/// Dense polynomial product over the integers.
fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = x * y;
            out[i + j] += t;
        }
    }
    out
}

/// Dense exact polynomial division; panics on a nonzero remainder (callers
/// divide factors they know divide evenly).
fn dense_div_exact(numerator: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = numerator.to_vec();
    let dlead = divisor.len() - 1;
    assert!(divisor[dlead].is_one(), "monic divisors only");
    assert!(rem.len() > dlead, "degree too small to divide");
    let qlen = rem.len() - dlead;
    let mut quotient = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dlead].clone();
        if c.is_zero() {
            continue;
        }
        quotient[k] = c.clone();
        for (j, d) in divisor.iter().enumerate() {
            let t = &c * d;
            rem[k + j] -= t;
        }
    }
    assert!(rem.iter().all(BigInt::is_zero), "division must be exact");
    quotient
}
