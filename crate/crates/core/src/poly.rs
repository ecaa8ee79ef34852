//! Symmetric Laurent polynomials with integer coefficients.
//!
//! Alexander polynomials are naturally defined up to multiplication by
//! `±t^k`. This module pins a normal form: the support is centered so that
//! `Δ(t)` and `Δ(t⁻¹)` have the same support, and the leading coefficient is
//! positive. Centering a polynomial of odd degree span lands on half-integer
//! exponents (as for the Hopf link, `t^{1/2} − t^{−1/2}`), so exponents are
//! stored *doubled* internally; the JSON form exposes integers where
//! possible and exact halves otherwise.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finitely supported integer Laurent polynomial on the half-integer
/// exponent grid.
///
/// Zero coefficients are never stored; the zero polynomial has an empty
/// support. Equality is coefficient-wise.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    /// Coefficients keyed by doubled exponent: key `d` carries `t^(d/2)`.
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::from_doubled([(0, BigInt::from(1))])
    }

    /// Builds from (doubled exponent, coefficient) pairs, dropping zeros and
    /// summing repeats.
    pub fn from_doubled<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (d, c) in pairs {
            let entry = coeffs.entry(d).or_insert_with(BigInt::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in ascending exponent order, exponents doubled.
    pub fn doubled_terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    /// Coefficient of the highest exponent, if any.
    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last_key_value().map(|(_, c)| c)
    }

    /// Exponent span `deg − ord` in ordinary (non-doubled) units; zero for
    /// the zero polynomial and constants.
    pub fn degree_span(&self) -> i64 {
        match (self.coeffs.first_key_value(), self.coeffs.last_key_value()) {
            (Some((&lo, _)), Some((&hi, _))) => (hi - lo) / 2,
            _ => 0,
        }
    }

    /// Recenters the support symmetrically around zero and makes the leading
    /// coefficient positive. This is the normal form used for comparing
    /// Alexander polynomials.
    pub fn normalized(&self) -> Self {
        let (Some((&lo, _)), Some((&hi, _))) =
            (self.coeffs.first_key_value(), self.coeffs.last_key_value())
        else {
            return Self::zero();
        };
        // Centering shifts every doubled exponent by −(lo + hi)/2, which is
        // integral whenever the support parity is constant (always the case
        // for determinant output, whose exponents are integers).
        assert!((lo + hi) % 2 == 0, "support cannot be centered on the half-integer grid");
        let shift = (lo + hi) / 2;
        let flip = self
            .coeffs
            .last_key_value()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, c)| (d - shift, if flip { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Whether the coefficient sequence is palindromic up to a global sign:
    /// `c(−d) = ±c(d)` with one sign for all `d`.
    pub fn is_reciprocal(&self) -> bool {
        let same = self
            .coeffs
            .iter()
            .all(|(&d, c)| self.coeffs.get(&-d) == Some(c));
        let negated = self
            .coeffs
            .iter()
            .all(|(&d, c)| self.coeffs.get(&-d).map(|o| -o) == Some(c.clone()));
        same || negated
    }

    /// Evaluates at `t = −1` when all exponents are integral (knots and
    /// odd-component links); `None` if a half-integer exponent is present.
    pub fn evaluate_at_minus_one(&self) -> Option<BigInt> {
        let mut total = BigInt::zero();
        for (&d, c) in &self.coeffs {
            if d.rem_euclid(2) != 0 {
                return None;
            }
            if (d / 2).rem_euclid(2) == 0 {
                total += c;
            } else {
                total -= c;
            }
        }
        Some(total)
    }

    /// Evaluates at `t = 1` (exponent parity is irrelevant there).
    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, c) in &self.coeffs {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = mag != BigInt::from(1) || d == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if d != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if d == 2 {
                    write!(f, "t")?;
                } else if d % 2 == 0 {
                    write!(f, "t^{}", d / 2)?;
                } else {
                    write!(f, "t^({d}/2)")?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPolynomial {
    /// `[[exp, coeff], …]` ascending; exponents are JSON integers when
    /// integral and exact `.5` halves otherwise.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Exp(i64);
        impl Serialize for Exp {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                if self.0 % 2 == 0 {
                    s.serialize_i64(self.0 / 2)
                } else {
                    s.serialize_f64(self.0 as f64 / 2.0)
                }
            }
        }
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (&d, c) in &self.coeffs {
            let coeff = c
                .to_i64()
                .ok_or_else(|| serde::ser::Error::custom("coefficient exceeds i64"))?;
            seq.serialize_element(&(Exp(d), coeff))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(serde_json::Number, i64)> = Vec::deserialize(deserializer)?;
        let mut pairs = Vec::with_capacity(raw.len());
        for (exp, coeff) in raw {
            let doubled = if let Some(e) = exp.as_i64() {
                2 * e
            } else {
                let x = exp
                    .as_f64()
                    .ok_or_else(|| D::Error::custom("unreadable exponent"))?;
                let doubled = (2.0 * x).round() as i64;
                if (doubled as f64 - 2.0 * x).abs() > 0.0 {
                    return Err(D::Error::custom(format!("exponent {x} is not a half-integer")));
                }
                doubled
            };
            pairs.push((doubled, BigInt::from(coeff)));
        }
        Ok(Self::from_doubled(pairs))
    }
}
