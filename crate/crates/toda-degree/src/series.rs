//! Exact arithmetic on integer-coefficient formal power series truncated at
//! a fixed degree N.
//!
//! A `TruncatedSeries` stores the coefficients of x^0 .. x^N as
//! arbitrary-precision integers and represents its value modulo x^{N+1}.
//! Every binary operation requires both operands to share the same
//! truncation degree; the N-truncation of a product depends only on the
//! N-truncations of the factors, so this ring is closed under `+`, `-`, `*`.
//!
//! Invariants:
//! - `coeffs.len() == truncation_degree + 1`, always.
//! - Series are immutable values; all operations return fresh values.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Dense formal power series over the integers, truncated at degree N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series 0 + 0x + ... + 0x^N.
    pub fn zero(truncation_degree: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); truncation_degree + 1],
        }
    }

    /// The constant series 1.
    pub fn one(truncation_degree: usize) -> Self {
        Self::monomial(1, 0, truncation_degree)
    }

    /// The single term c * x^exponent. Terms beyond the truncation degree
    /// are dropped, so `monomial(c, N + 1, N)` is the zero series.
    pub fn monomial(coeff: i64, exponent: usize, truncation_degree: usize) -> Self {
        let mut s = Self::zero(truncation_degree);
        if exponent <= truncation_degree {
            s.coeffs[exponent] = BigInt::from(coeff);
        }
        s
    }

    /// Build a series from low-degree coefficients, zero-padded up to the
    /// requested truncation degree.
    ///
    /// Panics if more than `truncation_degree + 1` coefficients are given.
    pub fn from_ints(coeffs: &[i64], truncation_degree: usize) -> Self {
        assert!(
            coeffs.len() <= truncation_degree + 1,
            "{} coefficients do not fit below degree {}",
            coeffs.len(),
            truncation_degree
        );
        let mut s = Self::zero(truncation_degree);
        for (k, &c) in coeffs.iter().enumerate() {
            s.coeffs[k] = BigInt::from(c);
        }
        s
    }

    /// Build a series owning the given coefficient vector.
    /// The truncation degree is `coeffs.len() - 1`; the vector must be nonempty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the constant term");
        Self { coeffs }
    }

    pub fn truncation_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^k. Panics if k exceeds the truncation degree.
    pub fn coeff(&self, k: usize) -> &BigInt {
        assert!(
            k <= self.truncation_degree(),
            "coefficient {} requested from a series truncated at degree {}",
            k,
            self.truncation_degree()
        );
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Drop all terms above degree `n`. Panics if `n` exceeds the current
    /// truncation degree (lowering precision is the only direction that
    /// preserves exactness).
    pub fn truncate(&self, n: usize) -> Self {
        assert!(
            n <= self.truncation_degree(),
            "cannot extend a series truncated at degree {} to degree {}",
            self.truncation_degree(),
            n
        );
        Self {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    /// Multiply every coefficient by the integer `c`.
    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        Self {
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Largest k with a nonzero coefficient of x^k, if any.
    pub fn top_nonzero_index(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    fn assert_same_degree(&self, other: &Self, op: &str) {
        assert_eq!(
            self.truncation_degree(),
            other.truncation_degree(),
            "cannot {} series with truncation degrees {} and {}",
            op,
            self.truncation_degree(),
            other.truncation_degree()
        );
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_degree(rhs, "add");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_degree(rhs, "subtract");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product truncated at N.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_degree(rhs, "multiply");
        let n = self.truncation_degree();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{}", term(c, k, false))?;
                first = false;
            } else {
                write!(f, " {}", term(c, k, true))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.truncation_degree() + 1)
    }
}

fn term(c: &BigInt, k: usize, signed: bool) -> String {
    let mag = c.abs();
    let sign = if c.is_negative() {
        "-"
    } else if signed {
        "+"
    } else {
        ""
    };
    let sep = if signed { " " } else { "" };
    match (k, mag.is_one()) {
        (0, _) => format!("{sign}{sep}{mag}"),
        (1, true) => format!("{sign}{sep}x"),
        (1, false) => format!("{sign}{sep}{mag}*x"),
        (_, true) => format!("{sign}{sep}x^{k}"),
        (_, false) => format!("{sign}{sep}{mag}*x^{k}"),
    }
}

/// Series sent over the wire as a JSON array of decimal strings, lowest
/// degree first, so coefficients survive consumers without big integers.
impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        if raw.is_empty() {
            return Err(D::Error::custom("series needs at least one coefficient"));
        }
        let coeffs = raw
            .iter()
            .map(|s| BigInt::from_str(s).map_err(|e| D::Error::custom(format!("{s:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { coeffs })
    }
}

/// Expansion of (1 - x)^exponent truncated at degree N, for any integer
/// exponent.
///
/// For m >= 0 this is the binomial expansion; for m < 0 the coefficient of
/// x^k is C(k + |m| - 1, |m| - 1), the number of weak compositions of k
/// into |m| parts.
pub fn one_minus_x_pow(exponent: i64, truncation_degree: usize) -> TruncatedSeries {
    let n = truncation_degree;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::one();
    if exponent >= 0 {
        // c_k = -c_{k-1} * (m - k + 1) / k, exact at every step
        let top = (exponent as usize).min(n);
        for k in 1..=top {
            let num = &coeffs[k - 1] * BigInt::from(exponent - k as i64 + 1);
            coeffs[k] = -num / BigInt::from(k);
        }
    } else {
        // c_k = c_{k-1} * (k + |m| - 1) / k, exact at every step
        let m = -exponent;
        for k in 1..=n {
            let num = &coeffs[k - 1] * BigInt::from(k as i64 + m - 1);
            coeffs[k] = num / BigInt::from(k);
        }
    }
    TruncatedSeries { coeffs }
}

/// The block polynomial 1 + x + ... + x^top_degree, truncated at N.
pub fn interval_poly(top_degree: i64, truncation_degree: usize) -> Result<TruncatedSeries, Error> {
    if top_degree < 0 {
        return Err(Error::NegativeTopDegree(top_degree));
    }
    Ok(block(top_degree as usize, truncation_degree))
}

/// Infallible 1 + x + ... + x^d for callers that can prove d >= 0.
pub(crate) fn block(top_degree: usize, truncation_degree: usize) -> TruncatedSeries {
    let n = truncation_degree;
    let coeffs = (0..=n)
        .map(|k| {
            if k <= top_degree {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    TruncatedSeries { coeffs }
}
