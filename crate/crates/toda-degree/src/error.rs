//! Error type shared by every module of the crate.

use num_rational::Rational64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("top degree must be nonnegative, got {0}")]
    NegativeTopDegree(i64),

    #[error("singular weight must be a positive integer, got {0}")]
    NonPositiveWeight(i64),

    #[error("ramification totals must be nonnegative, got ({0}, {1})")]
    NegativeRamification(i64, i64),

    #[error("rho/4pi must be positive, got {0}")]
    NonPositiveRho(Rational64),

    #[error("critical-set bound must be at least 1")]
    ZeroBound,

    #[error("Euler characteristic must lie in [-64, 2], got {0}")]
    ChiOutOfRange(i64),

    #[error("duplicate point label {0:?}")]
    DuplicateLabel(String),

    #[error("point {0:?} has alpha1 = alpha2 = 0; drop points outside S1 and S2")]
    ZeroWeightPoint(String),

    #[error("coupling entries must be negative with 4 - K12*K21 > 0, got K12={0}, K21={1}")]
    InvalidCoupling(i64, i64),

    #[error("cluster size must be 1 or 2, got {0}")]
    InvalidClusterSize(u64),

    #[error("outside proven hypothesis: {0}")]
    OutsideHypothesis(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),
}
