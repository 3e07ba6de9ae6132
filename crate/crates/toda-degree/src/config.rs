//! Problem-instance data model: Cartan matrices, singular sets, Euler
//! characteristic, rho parameters, and the critical parameter set.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Default truncation degree for every generating function.
pub const DEFAULT_TRUNCATION: usize = 32;

/// Largest weight covered by the first-interval degree formulas; bigger
/// weights still evaluate but are flagged with a validity warning.
pub const MAX_PROVEN_WEIGHT: u32 = 2;

/// The three rank-2 Cartan types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CartanKind {
    A2,
    B2,
    G2,
}

impl CartanKind {
    pub const ALL: [CartanKind; 3] = [CartanKind::A2, CartanKind::B2, CartanKind::G2];
}

impl fmt::Display for CartanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CartanKind::A2 => "A2",
            CartanKind::B2 => "B2",
            CartanKind::G2 => "G2",
        })
    }
}

/// A rank-2 Cartan matrix K together with its exact rational inverse.
///
/// The diagonal is always (2, 2); the kinds differ only in the
/// off-diagonal coupling entries:
/// A2 -> ((2,-1),(-1,2)), B2 -> ((2,-1),(-2,2)), G2 -> ((2,-1),(-3,2)).
/// All three satisfy 4 - K12*K21 > 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    kind: CartanKind,
    k12: i64,
    k21: i64,
}

impl CartanMatrix {
    pub fn new(kind: CartanKind) -> Self {
        let k21 = match kind {
            CartanKind::A2 => -1,
            CartanKind::B2 => -2,
            CartanKind::G2 => -3,
        };
        CartanMatrix { kind, k12: -1, k21 }
    }

    pub fn kind(&self) -> CartanKind {
        self.kind
    }

    pub fn k11(&self) -> i64 {
        2
    }

    pub fn k12(&self) -> i64 {
        self.k12
    }

    pub fn k21(&self) -> i64 {
        self.k21
    }

    pub fn k22(&self) -> i64 {
        2
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        [[2, self.k12], [self.k21, 2]]
    }

    pub fn determinant(&self) -> i64 {
        4 - self.k12 * self.k21
    }

    /// K^{-1} as exact rationals: (1/det) * ((2, -K12), (-K21, 2)).
    pub fn inverse(&self) -> [[Rational64; 2]; 2] {
        let det = self.determinant();
        [
            [Rational64::new(2, det), Rational64::new(-self.k12, det)],
            [Rational64::new(-self.k21, det), Rational64::new(2, det)],
        ]
    }
}

/// A stored singular point with its weight in each component.
/// A weight of 0 means the point does not belong to that singular set,
/// so `alpha1 + alpha2 >= 1` for every stored point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub label: String,
    pub alpha1: u32,
    pub alpha2: u32,
}

impl SingularPoint {
    pub fn new(label: impl Into<String>, alpha1: u32, alpha2: u32) -> Self {
        SingularPoint {
            label: label.into(),
            alpha1,
            alpha2,
        }
    }

    pub fn in_s1(&self) -> bool {
        self.alpha1 > 0
    }

    pub fn in_s2(&self) -> bool {
        self.alpha2 > 0
    }
}

/// One problem instance: surface topology, singular data, Cartan type, and
/// the truncation degree used for every series computed from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemConfig {
    pub chi: i64,
    pub points: Vec<SingularPoint>,
    pub cartan: CartanMatrix,
    pub truncation: usize,
}

#[derive(Deserialize)]
struct RawConfig {
    #[serde(default = "default_chi")]
    chi: i64,
    cartan: CartanKind,
    #[serde(default = "default_truncation")]
    truncation: usize,
    #[serde(default)]
    points: Vec<SingularPoint>,
}

fn default_chi() -> i64 {
    2
}

fn default_truncation() -> usize {
    DEFAULT_TRUNCATION
}

impl ProblemConfig {
    pub fn new(
        chi: i64,
        kind: CartanKind,
        points: Vec<SingularPoint>,
        truncation: usize,
    ) -> Result<Self, Error> {
        let cfg = ProblemConfig {
            chi,
            points,
            cartan: CartanMatrix::new(kind),
            truncation,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Parse and validate the JSON schema
    /// `{"chi": int, "cartan": "A2"|"B2"|"G2", "truncation": int,
    ///   "points": [{"label": str, "alpha1": int, "alpha2": int}, ...]}`.
    /// `chi` defaults to 2, `truncation` to 32, `points` to the empty list.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let raw: RawConfig =
            serde_json::from_str(text).map_err(|e| Error::InvalidConfig(e.to_string()))?;
        Self::new(raw.chi, raw.cartan, raw.points, raw.truncation)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !(-64..=2).contains(&self.chi) {
            return Err(Error::ChiOutOfRange(self.chi));
        }
        let mut labels = BTreeSet::new();
        for p in &self.points {
            if !labels.insert(p.label.as_str()) {
                return Err(Error::DuplicateLabel(p.label.clone()));
            }
            if p.alpha1 == 0 && p.alpha2 == 0 {
                return Err(Error::ZeroWeightPoint(p.label.clone()));
            }
        }
        Ok(())
    }

    pub fn with_truncation(mut self, truncation: usize) -> Self {
        self.truncation = truncation;
        self
    }

    /// Points of S1 = {p : alpha1 > 0}.
    pub fn s1(&self) -> impl Iterator<Item = &SingularPoint> {
        self.points.iter().filter(|p| p.in_s1())
    }

    /// Points of S2 = {p : alpha2 > 0}.
    pub fn s2(&self) -> impl Iterator<Item = &SingularPoint> {
        self.points.iter().filter(|p| p.in_s2())
    }

    pub fn s1_weights(&self) -> Vec<u32> {
        self.s1().map(|p| p.alpha1).collect()
    }

    pub fn s2_weights(&self) -> Vec<u32> {
        self.s2().map(|p| p.alpha2).collect()
    }

    /// |S1 ∪ S2|, which equals the number of stored points.
    pub fn union_size(&self) -> usize {
        self.points.len()
    }

    /// One warning per weight outside the proven first-interval hypothesis.
    pub fn hypothesis_warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        for p in &self.points {
            for (name, alpha) in [("alpha1", p.alpha1), ("alpha2", p.alpha2)] {
                if alpha > MAX_PROVEN_WEIGHT {
                    out.push(format!(
                        "point {:?}: {} = {} lies outside the proven hypothesis alpha in {{1, 2}}; \
                         the formula is evaluated as a polynomial identity only",
                        p.label, name, alpha
                    ));
                }
            }
        }
        out
    }
}

/// (rho1, rho2) in units of 4*pi, kept as exact rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RhoPair {
    pub rho1_over_4pi: Rational64,
    pub rho2_over_4pi: Rational64,
}

/// rho_i / 4pi = 1 + K^{i1} N1 + K^{i2} N2 for ramification totals N1, N2.
pub fn rho_from_ramification(cartan: &CartanMatrix, n1: i64, n2: i64) -> Result<RhoPair, Error> {
    if n1 < 0 || n2 < 0 {
        return Err(Error::NegativeRamification(n1, n2));
    }
    let inv = cartan.inverse();
    let one = Rational64::from_integer(1);
    Ok(RhoPair {
        rho1_over_4pi: one + inv[0][0] * n1 + inv[0][1] * n2,
        rho2_over_4pi: one + inv[1][0] * n1 + inv[1][1] * n2,
    })
}

/// Where rho/4pi sits relative to the integer lattice: strictly inside the
/// interval (j, j+1), or exactly on a lattice point (where the degree is
/// undefined).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoInterval {
    Index(u64),
    Critical,
}

impl fmt::Display for RhoInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RhoInterval::Index(j) => write!(f, "j={j}"),
            RhoInterval::Critical => f.write_str("CRITICAL"),
        }
    }
}

/// Classify rho/4pi into its interval index j (j < rho/4pi < j+1), or
/// `Critical` when it is an integer.
pub fn rho_interval_index(rho_over_4pi: Rational64) -> Result<RhoInterval, Error> {
    if !rho_over_4pi.is_positive() {
        return Err(Error::NonPositiveRho(rho_over_4pi));
    }
    if rho_over_4pi.is_integer() {
        Ok(RhoInterval::Critical)
    } else {
        Ok(RhoInterval::Index(rho_over_4pi.floor().to_integer() as u64))
    }
}

/// Component selector for per-component operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    First,
    Second,
}

/// The multiples a_k with critical set {8*pi*a_k}, computed from the
/// definition {N + sum_{p in A} (1 + alpha_p) : N >= 0, A subset of S}\{0}
/// and cut off at `bound`. For positive integer weights this always comes
/// out as {1, ..., bound}, but it is derived, not assumed.
pub fn critical_multiples(weights: &[u32], bound: u64) -> Result<Vec<u64>, Error> {
    if bound == 0 {
        return Err(Error::ZeroBound);
    }
    for &w in weights {
        if w == 0 {
            return Err(Error::NonPositiveWeight(w as i64));
        }
    }
    // Subset sums of (1 + alpha_p), capped at bound.
    let mut subset_sums: BTreeSet<u64> = BTreeSet::from([0]);
    for &w in weights {
        let step = 1 + w as u64;
        let grown: Vec<u64> = subset_sums
            .iter()
            .map(|s| s + step)
            .filter(|&s| s <= bound)
            .collect();
        subset_sums.extend(grown);
    }
    let mut out = BTreeSet::new();
    for s in subset_sums {
        for v in s..=bound {
            if v >= 1 {
                out.insert(v);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Critical multiples for one component of a problem instance.
pub fn critical_set(
    config: &ProblemConfig,
    component: Component,
    bound: u64,
) -> Result<Vec<u64>, Error> {
    let weights = match component {
        Component::First => config.s1_weights(),
        Component::Second => config.s2_weights(),
    };
    critical_multiples(&weights, bound)
}
