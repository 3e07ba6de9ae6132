//! Degreetables: the generating functions whose j-th coefficient is the
//! Leray-Schauder degree on the j-th parameter interval.
//!
//! Four families are computed here:
//! - `mean_field_gf`: the scalar mean field equation,
//!   (1-x)^{chi-|S0|-1} * prod_p (1 - x^{1+alpha_p}), on 8*pi intervals;
//! - `shadow_gf`: the shadow system on 4*pi intervals (rho2);
//! - `toda_gf_rho1_first_interval` / `toda_gf_rho2_first_interval`: the
//!   rank-2 system with the other parameter in its second interval;
//! - `toda_gf_no_singularity`: the singularity-free closed form, kept as an
//!   independent route and cross-checked against the general formula.
//!
//! `gap_check` verifies the gap identity
//! d_{1,j} - d_{0,j} = -d_j^S coefficientwise.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::config::{CartanMatrix, Component, ProblemConfig};
use crate::error::Error;
use crate::series::{block, one_minus_x_pow, TruncatedSeries};

/// Whether index j of a table means rho in (4j*pi, 4(j+1)*pi) or
/// rho in (8*a_j*pi, 8*a_{j+1}*pi). For positive integer weights the
/// critical multiples a_j are simply 0, 1, 2, ..., so both conventions are
/// uniform lattices differing by the factor 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalUnit {
    FourPi,
    EightPi,
}

impl IntervalUnit {
    pub fn as_str(&self) -> &'static str {
        match self {
            IntervalUnit::FourPi => "4pi",
            IntervalUnit::EightPi => "8pi",
        }
    }

    fn pi_multiple(&self) -> usize {
        match self {
            IntervalUnit::FourPi => 4,
            IntervalUnit::EightPi => 8,
        }
    }
}

/// A degree generating function plus its interval bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTable {
    pub series: TruncatedSeries,
    pub interval_unit: IntervalUnit,
    pub warnings: Vec<String>,
}

impl DegreeTable {
    /// The degree on the j-th interval.
    pub fn degree_at(&self, j: usize) -> &BigInt {
        self.series.coeff(j)
    }

    pub fn top_nonzero_index(&self) -> Option<usize> {
        self.series.top_nonzero_index()
    }

    /// `{"interval_unit": "4pi"|"8pi", "coefficients": [ints], "warnings": [str]}`.
    /// Coefficients are emitted as JSON integers of arbitrary size.
    pub fn to_json_value(&self) -> Value {
        json!({
            "interval_unit": self.interval_unit.as_str(),
            "coefficients": bigints_to_json(self.series.coeffs()),
            "warnings": self.warnings,
        })
    }

    pub fn from_json_value(value: &Value) -> Result<Self, Error> {
        let bad = |msg: &str| Error::InvalidConfig(format!("degree table: {msg}"));
        let unit = match value.get("interval_unit").and_then(Value::as_str) {
            Some("4pi") => IntervalUnit::FourPi,
            Some("8pi") => IntervalUnit::EightPi,
            _ => return Err(bad("interval_unit must be \"4pi\" or \"8pi\"")),
        };
        let coeffs = value
            .get("coefficients")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("coefficients must be an array"))?;
        if coeffs.is_empty() {
            return Err(bad("coefficients must be nonempty"));
        }
        let coeffs = coeffs
            .iter()
            .map(|c| match c {
                Value::Number(n) => n
                    .to_string()
                    .parse::<BigInt>()
                    .map_err(|_| bad("coefficients must be integers")),
                _ => Err(bad("coefficients must be integers")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let warnings = match value.get("warnings") {
            None => Vec::new(),
            Some(w) => w
                .as_array()
                .ok_or_else(|| bad("warnings must be an array"))?
                .iter()
                .map(|s| {
                    s.as_str()
                        .map(str::to_owned)
                        .ok_or_else(|| bad("warnings must be strings"))
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        Ok(DegreeTable {
            series: TruncatedSeries::from_coeffs(coeffs),
            interval_unit: unit,
            warnings,
        })
    }

    /// Plain-text rendering, one row per interval: `j | interval | degree`.
    pub fn render_text(&self) -> String {
        let mult = self.interval_unit.pi_multiple();
        let mut out = format!("# interval unit: {}\n", self.interval_unit.as_str());
        out.push_str("j | interval | degree\n");
        for (j, c) in self.series.coeffs().iter().enumerate() {
            out.push_str(&format!(
                "{j} | ({}pi, {}pi) | {c}\n",
                mult * j,
                mult * (j + 1)
            ));
        }
        out
    }
}

fn bigints_to_json(coeffs: &[BigInt]) -> Vec<Value> {
    coeffs
        .iter()
        .map(|c| {
            let n: serde_json::Number = c
                .to_string()
                .parse()
                .expect("a decimal integer is a valid JSON number");
            Value::Number(n)
        })
        .collect()
}

/// Mean field generating function
/// (1-x)^{chi - |S0| - 1} * prod_p (1 - x^{1 + alpha_p}) truncated at N.
///
/// Index j refers to rho in (8*a_j*pi, 8*a_{j+1}*pi); all weights must be
/// positive integers.
pub fn mean_field_gf(chi: i64, weights: &[u32], truncation: usize) -> DegreeTable {
    assert!(
        weights.iter().all(|&w| w >= 1),
        "mean field weights must be positive integers"
    );
    let n = truncation;
    let mut series = one_minus_x_pow(chi - weights.len() as i64 - 1, n);
    for &alpha in weights {
        let factor =
            &TruncatedSeries::one(n) - &TruncatedSeries::monomial(1, alpha as usize + 1, n);
        series = &series * &factor;
    }
    DegreeTable {
        series,
        interval_unit: IntervalUnit::EightPi,
        warnings: Vec::new(),
    }
}

/// The weights of one component paired with whether the point lies in that
/// component only (the sum in the shadow formula ranges over S2 \ S1).
fn component_view(config: &ProblemConfig, component: Component) -> (Vec<(u32, bool)>, i64) {
    match component {
        Component::Second => (
            config
                .s2()
                .map(|p| (p.alpha2, !p.in_s1()))
                .collect(),
            config.cartan.k21(),
        ),
        Component::First => (
            config
                .s1()
                .map(|p| (p.alpha1, !p.in_s2()))
                .collect(),
            config.cartan.k12(),
        ),
    }
}

/// The bracket of the shadow formula for one component:
/// (chi - |S1 u S2|) * (1+...+x^{-K}) * prod_p (1+...+x^{alpha_p})
///   + sum_{p exclusive} (1+...+x^{alpha_p - K}) * prod_{q != p} (1+...+x^{alpha_q}).
fn shadow_bracket(chi: i64, union_size: usize, view: &[(u32, bool)], coupling: i64, n: usize) -> TruncatedSeries {
    let product: TruncatedSeries = view
        .iter()
        .fold(TruncatedSeries::one(n), |acc, &(alpha, _)| {
            &acc * &block(alpha as usize, n)
        });
    let mut bracket = (&block((-coupling) as usize, n) * &product).scale(chi - union_size as i64);
    for (i, &(alpha, exclusive)) in view.iter().enumerate() {
        if !exclusive {
            continue;
        }
        let mut term = block((alpha as i64 - coupling) as usize, n);
        for (j, &(other, _)) in view.iter().enumerate() {
            if j != i {
                term = &term * &block(other as usize, n);
            }
        }
        bracket = &bracket + &term;
    }
    bracket
}

/// Shadow-system generating function g_s(x); coefficient j is the degree
/// d_j^S for rho2 in (4j*pi, 4(j+1)*pi).
pub fn shadow_gf(config: &ProblemConfig) -> DegreeTable {
    let n = config.truncation;
    let (view, coupling) = component_view(config, Component::Second);
    let bracket = shadow_bracket(config.chi, config.union_size(), &view, coupling, n);
    DegreeTable {
        series: &one_minus_x_pow(config.chi - 1, n) * &bracket,
        interval_unit: IntervalUnit::FourPi,
        warnings: config.hypothesis_warnings(),
    }
}

fn first_interval_series(config: &ProblemConfig, component: Component) -> TruncatedSeries {
    let n = config.truncation;
    let (view, coupling) = component_view(config, component);
    let product: TruncatedSeries = view
        .iter()
        .fold(TruncatedSeries::one(n), |acc, &(alpha, _)| {
            &acc * &block(alpha as usize, n)
        });
    let lead = one_minus_x_pow(config.chi - 1, n);
    let bracket = shadow_bracket(config.chi, config.union_size(), &view, coupling, n);
    &(&lead * &product) - &(&lead * &bracket)
}

/// Generating function of d_{1,j}: rho1 in (4pi, 8pi), rho2 in
/// (4j*pi, 4(j+1)*pi). Computed as
/// (1-x)^{chi-1} * prod_{p in S2} (1+...+x^{alpha_{p,2}}) - g_s(x).
pub fn toda_gf_rho1_first_interval(config: &ProblemConfig) -> DegreeTable {
    DegreeTable {
        series: first_interval_series(config, Component::Second),
        interval_unit: IntervalUnit::FourPi,
        warnings: config.hypothesis_warnings(),
    }
}

/// Role-swapped table of d_{j,1}: rho2 in (4pi, 8pi), rho1 in
/// (4j*pi, 4(j+1)*pi). Same shape as `toda_gf_rho1_first_interval` with the
/// two components exchanged (S1 weights, coupling K12).
pub fn toda_gf_rho2_first_interval(config: &ProblemConfig) -> DegreeTable {
    DegreeTable {
        series: first_interval_series(config, Component::First),
        interval_unit: IntervalUnit::FourPi,
        warnings: config.hypothesis_warnings(),
    }
}

/// Closed form for S1 = S2 = empty:
/// (1-x)^{chi-1} * (1 - chi * (1+x+...+x^{-K21})).
///
/// Deliberately computed directly, not via the subtraction in
/// `toda_gf_rho1_first_interval`, so the two routes check each other.
pub fn toda_gf_no_singularity(chi: i64, cartan: &CartanMatrix, truncation: usize) -> DegreeTable {
    let n = truncation;
    let inner = &TruncatedSeries::one(n) - &block((-cartan.k21()) as usize, n).scale(chi);
    DegreeTable {
        series: &one_minus_x_pow(chi - 1, n) * &inner,
        interval_unit: IntervalUnit::FourPi,
        warnings: Vec::new(),
    }
}

/// Coefficientwise residuals of the gap identity
/// d_{1,j} = d_{0,j} - d_j^S, with the mean-field table taken on the
/// rho2-interval convention. All residuals must vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapReport {
    pub residual: TruncatedSeries,
    pub warnings: Vec<String>,
}

impl GapReport {
    pub fn all_zero(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "residuals": bigints_to_json(self.residual.coeffs()),
            "all_zero": self.all_zero(),
            "warnings": self.warnings,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::from("j | residual\n");
        for (j, c) in self.residual.coeffs().iter().enumerate() {
            out.push_str(&format!("{j} | {c}\n"));
        }
        out.push_str(&format!(
            "all residuals zero: {}\n",
            if self.all_zero() { "yes" } else { "no" }
        ));
        out
    }
}

/// Check d_{1,j} - (d_{0,j} - d_j^S) = 0 for all j up to the truncation
/// degree. Both sides are computed through independent code paths: the
/// left via the shadow bracket, the right via the binomial product of the
/// mean field table with S0 = S2.
pub fn gap_check(config: &ProblemConfig) -> GapReport {
    let toda = toda_gf_rho1_first_interval(config);
    let mean_field = mean_field_gf(config.chi, &config.s2_weights(), config.truncation);
    let shadow = shadow_gf(config);
    let expected = &mean_field.series - &shadow.series;
    GapReport {
        residual: &toda.series - &expected,
        warnings: config.hypothesis_warnings(),
    }
}
