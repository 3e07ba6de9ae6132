//! Blow-up local-mass algebra: Pohozaev residuals, exhaustive enumeration
//! of admissible even mass pairs, concentration checks, the collapsing-
//! singularity mass dichotomy, and the blow-up scenario classifier.
//!
//! Everything here is integer arithmetic; a residual is zero exactly or it
//! is not, no tolerances.

use num_integer::Roots;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::CartanMatrix;
use crate::error::Error;

/// A pair of local masses (sigma1, sigma2). Blow-up masses are nonnegative
/// even integers, and (0, 0) marks a point that does not blow up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LocalMassPair {
    pub sigma1: u64,
    pub sigma2: u64,
}

impl LocalMassPair {
    pub fn new(sigma1: u64, sigma2: u64) -> Self {
        LocalMassPair { sigma1, sigma2 }
    }

    pub fn swapped(&self) -> Self {
        LocalMassPair {
            sigma1: self.sigma2,
            sigma2: self.sigma1,
        }
    }
}

/// Effective singular weights (gamma1, gamma2) at a point: the alpha weight
/// when the point lies in the corresponding singular set, 0 otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SingularWeights {
    pub gamma1: u64,
    pub gamma2: u64,
}

impl SingularWeights {
    pub fn new(gamma1: u64, gamma2: u64) -> Self {
        SingularWeights { gamma1, gamma2 }
    }

    /// Weights at a point away from both singular sets.
    pub fn regular() -> Self {
        SingularWeights::new(0, 0)
    }

    pub fn is_regular(&self) -> bool {
        self.gamma1 == 0 && self.gamma2 == 0
    }

    pub fn swapped(&self) -> Self {
        SingularWeights {
            gamma1: self.gamma2,
            gamma2: self.gamma1,
        }
    }
}

/// Left minus right side of the Pohozaev identity
/// K21 s1^2 + K12 K21 s1 s2 + K12 s2^2
///   = 2 K21 (1 + g1) s1 + 2 K12 (1 + g2) s2.
/// Zero exactly when the identity holds.
pub fn pohozaev_residual(cartan: &CartanMatrix, w: &SingularWeights, m: &LocalMassPair) -> i128 {
    residual_for_coupling(cartan.k12(), cartan.k21(), w, m)
}

/// Residual for arbitrary coupling entries; used directly by the transpose
/// symmetry checks, where swapping K12 and K21 leaves the three named kinds.
pub fn residual_for_coupling(
    k12: i64,
    k21: i64,
    w: &SingularWeights,
    m: &LocalMassPair,
) -> i128 {
    let (k12, k21) = (k12 as i128, k21 as i128);
    let (s1, s2) = (m.sigma1 as i128, m.sigma2 as i128);
    let (g1, g2) = (w.gamma1 as i128, w.gamma2 as i128);
    k21 * s1 * s1 + k12 * k21 * s1 * s2 + k12 * s2 * s2
        - 2 * k21 * (1 + g1) * s1
        - 2 * k12 * (1 + g2) * s2
}

/// All pairs of nonnegative even integers other than (0, 0) with vanishing
/// Pohozaev residual, sorted lexicographically.
///
/// For gamma = (0, 0) these are precisely the admissible blow-up masses;
/// for nonzero gamma the identity is a necessary condition only.
pub fn enumerate_local_masses(cartan: &CartanMatrix, w: &SingularWeights) -> Vec<LocalMassPair> {
    enumerate_for_coupling(cartan.k12(), cartan.k21(), w)
        .expect("the rank-2 Cartan couplings are negative with 4 - K12*K21 > 0")
}

/// Enumeration over explicit coupling entries. Requires K12, K21 < 0 and
/// 4 - K12*K21 > 0, which makes the search box provably finite:
///
/// viewed as a quadratic in sigma2 with a = K12, b = K12(K21 s1 - 2(1+g2)),
/// c = K21 s1 (s1 - 2(1+g1)), the residual vanishes only where the
/// discriminant D(s1) = b^2 - 4ac is nonnegative. D is itself a quadratic
/// in s1 with leading coefficient K12 K21 (K12 K21 - 4) < 0 and
/// D(0) = 4 K12^2 (1+g2)^2 > 0, so {s1 >= 0 : D >= 0} is a bounded initial
/// segment; and for each admissible s1, any root satisfies
/// |sigma2| <= (|b| + sqrt(D)) / (2 |K12|).
pub fn enumerate_for_coupling(
    k12: i64,
    k21: i64,
    w: &SingularWeights,
) -> Result<Vec<LocalMassPair>, Error> {
    if k12 >= 0 || k21 >= 0 || 4 - k12 * k21 <= 0 {
        return Err(Error::InvalidCoupling(k12, k21));
    }
    let (k12, k21) = (k12 as i128, k21 as i128);
    let (g1, g2) = (w.gamma1 as i128, w.gamma2 as i128);

    let mut out = Vec::new();
    let mut s1: i128 = 0;
    loop {
        let b = k12 * (k21 * s1 - 2 * (1 + g2));
        let c = k21 * s1 * (s1 - 2 * (1 + g1));
        let disc = b * b - 4 * k12 * c;
        if disc < 0 {
            break; // D is concave in s1 and positive at 0: no roots beyond this point
        }
        let s2_cap = (b.abs() + disc.sqrt()) / (2 * k12.abs()) + 1;
        let mut s2: i128 = 0;
        while s2 <= s2_cap {
            if (s1, s2) != (0, 0) {
                let m = LocalMassPair::new(s1 as u64, s2 as u64);
                if residual_for_coupling(k12 as i64, k21 as i64, w, &m) == 0 {
                    out.push(m);
                }
            }
            s2 += 2;
        }
        s1 += 2;
    }
    out.sort();
    Ok(out)
}

/// Which of the two concentration inequalities
/// 2 s1 - 2 g1 + K12 s2 >= 2  and  2 s2 - 2 g2 + K21 s1 >= 2
/// hold at a mass pair. At any blow-up point at least one must hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Concentration {
    First,
    Second,
    Both,
    Neither,
}

impl Concentration {
    pub fn any_holds(&self) -> bool {
        !matches!(self, Concentration::Neither)
    }
}

pub fn concentration_filter(
    cartan: &CartanMatrix,
    w: &SingularWeights,
    m: &LocalMassPair,
) -> Concentration {
    concentration_for_coupling(cartan.k12(), cartan.k21(), w, m)
}

pub fn concentration_for_coupling(
    k12: i64,
    k21: i64,
    w: &SingularWeights,
    m: &LocalMassPair,
) -> Concentration {
    let (s1, s2) = (m.sigma1 as i128, m.sigma2 as i128);
    let (g1, g2) = (w.gamma1 as i128, w.gamma2 as i128);
    let first = 2 * s1 - 2 * g1 + (k12 as i128) * s2 >= 2;
    let second = 2 * s2 - 2 * g2 + (k21 as i128) * s1 >= 2;
    match (first, second) {
        (true, true) => Concentration::Both,
        (true, false) => Concentration::First,
        (false, true) => Concentration::Second,
        (false, false) => Concentration::Neither,
    }
}

/// Candidate values of the outer local mass sigma_0 under the collapsing-
/// singularity dichotomy sigma_0 = m0 or sigma_0 = 2 + 2*beta_sum - m0,
/// filtered to positive values (sigma_0 > 0 at a blow-up point).
///
/// `m0` must be even; both branches are then even as well.
pub fn mass_dichotomy(beta_sum: u64, m0: u64) -> Vec<u64> {
    assert!(m0.is_multiple_of(2), "inner mass m0 must be even, got {m0}");
    let mut out = Vec::new();
    if m0 > 0 {
        out.push(m0);
    }
    let other = 2 + 2 * beta_sum as i128 - m0 as i128;
    if other > 0 && other != m0 as i128 {
        out.push(other as u64);
    }
    out.sort();
    out
}

/// Total masses admissible for an entire solution with singular weight sum
/// `alpha_total`: the even integers m with m > alpha_total + 1
/// (m = sum alpha_i + alpha/2 with alpha > 2 forces exactly this), up to
/// `bound`.
pub fn entire_mass_candidates(alpha_total: u64, bound: u64) -> Vec<u64> {
    (1..=bound / 2)
        .map(|k| 2 * k)
        .filter(|&m| m > alpha_total + 1)
        .collect()
}

/// Exact value of K21 * sum_{q in B_v} e / (q - e) at the blow-up
/// configuration of a cluster of size n in {1, 2}:
/// -n(n-1) + (alpha - K21) n, i.e. alpha - K21 for n = 1 and
/// 2(alpha - K21 - 1) for n = 2.
pub fn blowup_location_sum(cluster_size: u64, alpha: u64, k21: i64) -> Result<i64, Error> {
    if !(1..=2).contains(&cluster_size) {
        return Err(Error::InvalidClusterSize(cluster_size));
    }
    check_coupling_hypothesis(k21)?;
    let n = cluster_size as i64;
    Ok(-n * (n - 1) + (alpha as i64 - k21) * n)
}

fn check_coupling_hypothesis(k21: i64) -> Result<(), Error> {
    if !(-3..=-1).contains(&k21) {
        return Err(Error::OutsideHypothesis(format!(
            "K21 must be -1, -2, or -3, got {k21}"
        )));
    }
    Ok(())
}

/// Outcome of the blow-up location case analysis at a singular point Q0
/// with weight alpha in the second component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    /// Even masses sigma(Q0) compatible with the strict bound
    /// alpha - K21 + 1 > sigma over the admissible weights alpha in {1, 2}.
    pub admissible_sigma: Vec<u64>,
    /// Whether the rescaled solutions may blow up at the collapsing
    /// singularity itself (requires sigma >= 2 + 2*alpha and the strict
    /// bound at the given alpha).
    pub blow_up_at_origin_allowed: bool,
    /// Whether blow-up at the unit direction e is possible (requires
    /// sigma >= 2 - 2*K21; never reached by the admissible masses).
    pub blow_up_at_e_allowed: bool,
    /// Cluster sizes |B_v| = sigma / 2 realised by the admissible masses.
    pub admissible_cluster_sizes: Vec<u64>,
}

/// Case analysis for the location of blow-up points of the rescaled
/// sequence: which even masses sigma(Q0) are admissible, the cluster sizes
/// they force, and whether the cluster may touch the origin or e.
///
/// Restricted to the proven hypothesis K21 in {-1, -2, -3} and
/// alpha_{Q0,2} in {1, 2}; the rules are proof-derived, not a formula, so
/// no extrapolation is attempted.
pub fn classify_blowup_scenarios(k21: i64, alpha_q0: u64) -> Result<ScenarioReport, Error> {
    check_coupling_hypothesis(k21)?;
    if !(1..=2).contains(&alpha_q0) {
        return Err(Error::OutsideHypothesis(format!(
            "alpha_{{Q0,2}} must be 1 or 2, got {alpha_q0}"
        )));
    }
    // strict bound max_{alpha in {1,2}} (alpha - K21 + 1) = 3 - K21
    let bound = 3 - k21;
    let admissible_sigma: Vec<u64> = (1..).map(|k| 2 * k).take_while(|&s| (s as i64) < bound).collect();
    let alpha = alpha_q0 as i64;
    let blow_up_at_e_allowed = admissible_sigma
        .iter()
        .any(|&s| s as i64 >= 2 - 2 * k21);
    let blow_up_at_origin_allowed = admissible_sigma
        .iter()
        .any(|&s| s as i64 >= 2 + 2 * alpha && alpha - k21 + 1 > s as i64);
    let admissible_cluster_sizes = admissible_sigma.iter().map(|&s| s / 2).collect();
    Ok(ScenarioReport {
        admissible_sigma,
        blow_up_at_origin_allowed,
        blow_up_at_e_allowed,
        admissible_cluster_sizes,
    })
}

/// Mass sets on the wire: `[{"sigma1": int, "sigma2": int}]`, sorted.
pub fn masses_to_json(masses: &[LocalMassPair]) -> Value {
    json!(masses)
}
