//! Exact-arithmetic degree counting for rank-2 Toda systems, their shadow
//! systems, and singular mean field equations.
//!
//! The library computes topological-degree generating functions as
//! integer-coefficient power series truncated at a configurable degree,
//! classifies rho parameters against the critical lattice, and enumerates
//! the blow-up local masses admitted by the Pohozaev identity for the
//! A2, B2, and G2 Cartan couplings. All arithmetic is exact: big integers
//! for series coefficients, rationals for rho values, plain integers for
//! the mass algebra.

pub mod cli;
pub mod config;
pub mod degrees;
pub mod error;
pub mod pohozaev;
pub mod series;

pub use config::{
    critical_multiples, critical_set, rho_from_ramification, rho_interval_index, CartanKind,
    CartanMatrix, Component, ProblemConfig, RhoInterval, RhoPair, SingularPoint,
};
pub use degrees::{
    gap_check, mean_field_gf, shadow_gf, toda_gf_no_singularity, toda_gf_rho1_first_interval,
    toda_gf_rho2_first_interval, DegreeTable, GapReport, IntervalUnit,
};
pub use error::Error;
pub use pohozaev::{
    blowup_location_sum, classify_blowup_scenarios, concentration_filter, enumerate_local_masses,
    entire_mass_candidates, mass_dichotomy, pohozaev_residual, Concentration, LocalMassPair,
    ScenarioReport, SingularWeights,
};
pub use series::{interval_poly, one_minus_x_pow, TruncatedSeries};
