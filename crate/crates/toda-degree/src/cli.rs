//! Command-line frontend: reads a problem config as JSON, dispatches to the
//! computation modules, renders tables or machine-readable JSON.
//!
//! Exit codes: 0 on success, 2 on validation failure, 3 when `gap-check`
//! finds a nonzero residual.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::config::{
    critical_set, rho_from_ramification, rho_interval_index, Component, ProblemConfig,
    RhoInterval,
};
use crate::degrees::{
    gap_check, mean_field_gf, shadow_gf, toda_gf_no_singularity, toda_gf_rho1_first_interval,
    toda_gf_rho2_first_interval, DegreeTable,
};
use crate::error::Error;
use crate::pohozaev::{
    classify_blowup_scenarios, enumerate_local_masses, masses_to_json, SingularWeights,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_GAP_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "toda-degree",
    version,
    about = "Exact degree tables for rank-2 Toda systems, shadow systems, \
             and singular mean field equations",
    after_help = "The input config is JSON read from --input or stdin:\n  \
                  {\"chi\": int (default 2), \"cartan\": \"A2\"|\"B2\"|\"G2\",\n   \
                  \"truncation\": int (default 32),\n   \
                  \"points\": [{\"label\": str, \"alpha1\": int, \"alpha2\": int}, ...]}\n\
                  Rationals are printed as exact fractions p/q."
)]
pub struct Cli {
    #[command(subcommand)]
    pub subcommand: Action,

    /// Path of the config JSON (default: standard input)
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Output rendering
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Override the config's truncation degree
    #[arg(long, global = true)]
    pub truncation: Option<usize>,
}

#[derive(Subcommand, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    /// Mean field degree table (1-x)^{chi-|S0|-1} prod (1-x^{1+alpha}),
    /// with S0 the second-component singular set; 8pi intervals
    MeanField,
    /// Shadow-system degree table d_j^S; 4pi intervals in rho2
    Shadow,
    /// Degree table d_{1,j} for rho1 in (4pi, 8pi)
    Toda,
    /// Role-swapped table d_{j,1} for rho2 in (4pi, 8pi)
    TodaTilde,
    /// Closed form for S1 = S2 = empty (points in the config are ignored)
    NoSingularity,
    /// Verify d_{1,j} - d_{0,j} = -d_j^S coefficientwise; exit 3 on failure
    GapCheck,
    /// Admissible blow-up local masses (sigma1, sigma2)
    Masses,
    /// Blow-up scenario report for each point of S2
    Classify,
    /// rho values from the ramification totals N_i = sum of alpha_i
    Rho,
    /// Critical parameter multiples for both components
    CriticalSet,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

/// Everything `run` produces; the binary prints the two streams verbatim
/// and exits with the code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, stderr: String) -> Self {
        Outcome {
            exit_code: EXIT_OK,
            stdout,
            stderr,
        }
    }

    fn invalid(message: String) -> Self {
        Outcome {
            exit_code: EXIT_INVALID,
            stdout: String::new(),
            stderr: message + "\n",
        }
    }
}

/// Read the config (file or stdin) and dispatch.
pub fn run(cli: &Cli) -> Outcome {
    let input = match &cli.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map(|_| buf)
                .map_err(|e| format!("cannot read stdin: {e}"))
        }
    };
    match input {
        Ok(text) => run_on_input(cli.subcommand, cli.format, cli.truncation, &text),
        Err(message) => Outcome::invalid(message),
    }
}

/// Dispatch on an already-read config text. Pure apart from the computation
/// itself, which makes it directly testable.
pub fn run_on_input(
    action: Action,
    format: Format,
    truncation_override: Option<usize>,
    input: &str,
) -> Outcome {
    let config = match ProblemConfig::from_json(input) {
        Ok(cfg) => cfg,
        Err(e) => return Outcome::invalid(e.to_string()),
    };
    let config = match truncation_override {
        Some(n) => config.with_truncation(n),
        None => config,
    };
    match dispatch(action, format, &config) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::invalid(e.to_string()),
    }
}

fn dispatch(action: Action, format: Format, config: &ProblemConfig) -> Result<Outcome, Error> {
    match action {
        Action::MeanField => {
            let table = mean_field_gf(config.chi, &config.s2_weights(), config.truncation);
            Ok(render_degree_table(&table, format))
        }
        Action::Shadow => Ok(render_degree_table(&shadow_gf(config), format)),
        Action::Toda => Ok(render_degree_table(
            &toda_gf_rho1_first_interval(config),
            format,
        )),
        Action::TodaTilde => Ok(render_degree_table(
            &toda_gf_rho2_first_interval(config),
            format,
        )),
        Action::NoSingularity => {
            let mut table = toda_gf_no_singularity(config.chi, &config.cartan, config.truncation);
            if !config.points.is_empty() {
                table.warnings.push(format!(
                    "no-singularity ignores the {} configured point(s)",
                    config.points.len()
                ));
            }
            Ok(render_degree_table(&table, format))
        }
        Action::GapCheck => Ok(render_gap_check(config, format)),
        Action::Masses => Ok(render_masses(config, format)),
        Action::Classify => render_classify(config, format),
        Action::Rho => Ok(render_rho(config, format)?),
        Action::CriticalSet => Ok(render_critical_set(config, format)?),
    }
}

fn render_degree_table(table: &DegreeTable, format: Format) -> Outcome {
    match format {
        Format::Table => {
            let mut out = String::new();
            for w in &table.warnings {
                let _ = writeln!(out, "WARN: {w}");
            }
            out.push_str(&table.render_text());
            Outcome::ok(out, String::new())
        }
        Format::Json => {
            let mut err = String::new();
            for w in &table.warnings {
                let _ = writeln!(err, "WARN: {w}");
            }
            Outcome::ok(to_json_line(&table.to_json_value()), err)
        }
    }
}

fn render_gap_check(config: &ProblemConfig, format: Format) -> Outcome {
    let report = gap_check(config);
    let mut outcome = match format {
        Format::Table => {
            let mut out = String::new();
            for w in &report.warnings {
                let _ = writeln!(out, "WARN: {w}");
            }
            out.push_str(&report.render_text());
            Outcome::ok(out, String::new())
        }
        Format::Json => {
            let mut err = String::new();
            for w in &report.warnings {
                let _ = writeln!(err, "WARN: {w}");
            }
            Outcome::ok(to_json_line(&report.to_json_value()), err)
        }
    };
    if !report.all_zero() {
        outcome.exit_code = EXIT_GAP_FAILED;
    }
    outcome
}

fn render_masses(config: &ProblemConfig, format: Format) -> Outcome {
    let regular = enumerate_local_masses(&config.cartan, &SingularWeights::regular());
    if config.points.is_empty() {
        return match format {
            Format::Table => {
                let mut out = String::from("# masses at a regular point (gamma = (0, 0))\n");
                out.push_str(&masses_table(&regular));
                Outcome::ok(out, String::new())
            }
            Format::Json => Outcome::ok(to_json_line(&masses_to_json(&regular)), String::new()),
        };
    }

    let per_point: Vec<(String, SingularWeights, Vec<_>)> = config
        .points
        .iter()
        .map(|p| {
            let w = SingularWeights::new(p.alpha1 as u64, p.alpha2 as u64);
            let masses = enumerate_local_masses(&config.cartan, &w);
            (p.label.clone(), w, masses)
        })
        .collect();
    match format {
        Format::Table => {
            let mut out = String::from("# masses at a regular point (gamma = (0, 0))\n");
            out.push_str(&masses_table(&regular));
            for (label, w, masses) in &per_point {
                let _ = writeln!(
                    out,
                    "# masses at point {:?} (gamma = ({}, {})) [necessary conditions only]",
                    label, w.gamma1, w.gamma2
                );
                out.push_str(&masses_table(masses));
            }
            Outcome::ok(out, String::new())
        }
        Format::Json => {
            let points: Vec<Value> = per_point
                .iter()
                .map(|(label, w, masses)| {
                    json!({
                        "label": label,
                        "gamma1": w.gamma1,
                        "gamma2": w.gamma2,
                        "necessary_conditions_only": !w.is_regular(),
                        "masses": masses_to_json(masses),
                    })
                })
                .collect();
            let value = json!({
                "regular": masses_to_json(&regular),
                "points": points,
            });
            Outcome::ok(to_json_line(&value), String::new())
        }
    }
}

fn masses_table(masses: &[crate::pohozaev::LocalMassPair]) -> String {
    let mut out = String::from("sigma1 | sigma2\n");
    for m in masses {
        let _ = writeln!(out, "{} | {}", m.sigma1, m.sigma2);
    }
    out
}

fn render_classify(config: &ProblemConfig, format: Format) -> Result<Outcome, Error> {
    let targets: Vec<_> = config.s2().collect();
    if targets.is_empty() {
        return Err(Error::InvalidConfig(
            "classify needs at least one point with alpha2 >= 1".into(),
        ));
    }
    let mut reports = Vec::new();
    for p in targets {
        let report = classify_blowup_scenarios(config.cartan.k21(), p.alpha2 as u64)?;
        reports.push((p.label.clone(), p.alpha2, report));
    }
    match format {
        Format::Table => {
            let mut out = String::new();
            for (label, alpha2, r) in &reports {
                let _ = writeln!(out, "point {label:?} (alpha2 = {alpha2}):");
                let _ = writeln!(out, "  admissible sigma: {}", join(&r.admissible_sigma));
                let _ = writeln!(out, "  cluster sizes: {}", join(&r.admissible_cluster_sizes));
                let _ = writeln!(
                    out,
                    "  blow-up at origin allowed: {}",
                    yes_no(r.blow_up_at_origin_allowed)
                );
                let _ = writeln!(
                    out,
                    "  blow-up at e allowed: {}",
                    yes_no(r.blow_up_at_e_allowed)
                );
            }
            Ok(Outcome::ok(out, String::new()))
        }
        Format::Json => {
            let value: Vec<Value> = reports
                .iter()
                .map(|(label, alpha2, r)| {
                    let mut obj = serde_json::to_value(r).expect("report serializes");
                    obj["label"] = json!(label);
                    obj["alpha2"] = json!(alpha2);
                    obj
                })
                .collect();
            Ok(Outcome::ok(to_json_line(&Value::Array(value)), String::new()))
        }
    }
}

fn render_rho(config: &ProblemConfig, format: Format) -> Result<Outcome, Error> {
    let n1: i64 = config.points.iter().map(|p| p.alpha1 as i64).sum();
    let n2: i64 = config.points.iter().map(|p| p.alpha2 as i64).sum();
    let pair = rho_from_ramification(&config.cartan, n1, n2)?;
    let class1 = rho_interval_index(pair.rho1_over_4pi)?;
    let class2 = rho_interval_index(pair.rho2_over_4pi)?;
    match format {
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "rho1 = 4pi * {}, interval {}", pair.rho1_over_4pi, class1);
            let _ = writeln!(out, "rho2 = 4pi * {}, interval {}", pair.rho2_over_4pi, class2);
            Ok(Outcome::ok(out, String::new()))
        }
        Format::Json => {
            let value = json!({
                "n1": n1,
                "n2": n2,
                "rho1_over_4pi": pair.rho1_over_4pi.to_string(),
                "rho2_over_4pi": pair.rho2_over_4pi.to_string(),
                "rho1_interval": interval_json(class1),
                "rho2_interval": interval_json(class2),
            });
            Ok(Outcome::ok(to_json_line(&value), String::new()))
        }
    }
}

fn render_critical_set(config: &ProblemConfig, format: Format) -> Result<Outcome, Error> {
    let bound = config.truncation.max(1) as u64;
    let first = critical_set(config, Component::First, bound)?;
    let second = critical_set(config, Component::Second, bound)?;
    match format {
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "component 1: {}", join(&first));
            let _ = writeln!(out, "component 2: {}", join(&second));
            Ok(Outcome::ok(out, String::new()))
        }
        Format::Json => {
            let value = json!({"component1": first, "component2": second});
            Ok(Outcome::ok(to_json_line(&value), String::new()))
        }
    }
}

fn interval_json(class: RhoInterval) -> Value {
    match class {
        RhoInterval::Index(j) => json!(j),
        RhoInterval::Critical => json!("critical"),
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn to_json_line(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("values built here serialize");
    s.push('\n');
    s
}
