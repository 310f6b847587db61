//! Predicted, recursed and numerically estimated vanishing orders over a
//! table of corner configurations.

use clap::Args;
use cornerlab::lines::{gcd, AngleClass, LineCondition};
use cornerlab::vanishing::{check_corner, CheckOptions, CornerCheck, CornerConfig};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::run::{load_config, CliError, Global, Outcome, Output};

/// Largest accepted boundary residual of a constructed eigenfunction.
const RESIDUAL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Args)]
pub struct VanishingArgs {
    /// JSON configuration file.
    #[arg(long)]
    config: Option<std::path::PathBuf>,
    /// Largest angle denominator in the generated table.
    #[arg(long)]
    q_max: Option<u64>,
    /// Eigenvalue used for generated rows.
    #[arg(long)]
    lambda: Option<f64>,
    /// Recursion depth and truncation of the constructed eigenfunction.
    #[arg(long)]
    depth: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VanishingConfig {
    /// Explicit corner configurations; when absent the table is generated.
    pub cases: Option<Vec<Value>>,
    pub q_max: u64,
    pub lambda: f64,
    /// Irrational angle ratios added for every condition pair.
    pub irrational: Vec<f64>,
    pub depth: usize,
    pub r_max: f64,
    pub r_min: f64,
    pub n_radii: usize,
}

impl Default for VanishingConfig {
    fn default() -> Self {
        let o = CheckOptions::default();
        Self {
            cases: None,
            q_max: 8,
            lambda: 5.0,
            irrational: vec![
                0.5f64.sqrt(),
                std::f64::consts::E / 5.0,
                (5f64.sqrt() - 1.0) / 4.0,
                1.0 / std::f64::consts::PI,
                2f64.sqrt() - 1.0,
                3f64.sqrt() / 2.0,
                2f64.ln(),
                (3f64.sqrt() - 1.0) / 2.0,
                std::f64::consts::PI / 5.0,
                1.0 / 7f64.sqrt(),
            ],
            depth: o.depth,
            r_max: o.r_max,
            r_min: o.r_min,
            n_radii: o.n_radii,
        }
    }
}

fn pairs() -> Vec<(LineCondition, LineCondition)> {
    let i1 = LineCondition::impedance(C64::new(1.3, 0.0));
    let i2 = LineCondition::impedance(C64::new(-0.7, 0.4));
    vec![
        (LineCondition::Nodal, LineCondition::Nodal),
        (LineCondition::Singular, LineCondition::Singular),
        (i1, i2),
        (LineCondition::Nodal, LineCondition::Singular),
        (LineCondition::Singular, LineCondition::Nodal),
        (LineCondition::Nodal, i1),
        (i2, LineCondition::Nodal),
        (LineCondition::Singular, i1),
    ]
}

/// The generated table: every pair at every reduced `p/q` with `q ≤ q_max`,
/// the irrational ratios, a nonzero-corner-value row and right-angle
/// impedance rows where only a lower bound is available.
pub fn generated_cases(cfg: &VanishingConfig) -> Result<Vec<CornerConfig>, CliError> {
    let zero = C64::new(0.0, 0.0);
    let mut out = Vec::new();
    for (cm, cp) in pairs() {
        for q in 2..=cfg.q_max {
            for p in (1..q).filter(|&p| gcd(p, q) == 1) {
                out.push(CornerConfig::rational(cm, cp, p, q, cfg.lambda, zero).map_err(CliError::model)?);
            }
        }
        for &alpha in &cfg.irrational {
            out.push(CornerConfig::new(cm, cp, alpha, cfg.lambda, zero).map_err(CliError::model)?);
        }
    }
    let one = C64::new(1.0, 0.0);
    out.push(CornerConfig::new(LineCondition::Singular, LineCondition::Singular, 0.5f64.sqrt(), cfg.lambda, one * 2.0).map_err(CliError::model)?);
    let (e1, e2) = (LineCondition::impedance(C64::new(1.0, 0.0)), LineCondition::impedance(C64::new(2.0, 0.0)));
    out.push(CornerConfig::rational(e1, e2, 1, 2, cfg.lambda, one).map_err(CliError::model)?);
    out.push(CornerConfig::rational(e1, e2, 1, 2, cfg.lambda, zero).map_err(CliError::model)?);
    Ok(out)
}

#[derive(Debug, Serialize)]
struct Row {
    config: Value,
    check: CornerCheck,
    status: Outcome,
}

#[derive(Debug, Serialize)]
struct Summary {
    rows: usize,
    agree: usize,
    disagree: usize,
    inconclusive: usize,
    table: String,
    cases: Vec<Row>,
}

fn row_status(c: &CornerCheck, tol_scale: f64) -> Outcome {
    if c.agree && c.boundary_residual <= RESIDUAL_TOLERANCE * tol_scale {
        Outcome::Pass
    } else if c.numeric_order.is_none() && c.boundary_residual <= RESIDUAL_TOLERANCE * tol_scale {
        Outcome::Inconclusive
    } else {
        Outcome::Disagreement
    }
}

fn class_label(c: &AngleClass) -> String {
    match c {
        AngleClass::Rational { p, q } => format!("{p}/{q}"),
        AngleClass::Irrational => "irrational".into(),
    }
}

fn eta_label(c: &LineCondition) -> String {
    match c {
        LineCondition::Impedance(e) => format!("impedance({}{:+}i)", e.re, e.im),
        other => other.name().into(),
    }
}

fn table_csv(rows: &[(CornerConfig, &Row)]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Model(e.to_string());
    w.write_record([
        "cond_minus", "cond_plus", "alpha", "class", "lambda", "u0_re", "u0_im", "predicted", "rationale", "recursion",
        "numeric", "boundary_residual", "status",
    ])
    .map_err(csv_err)?;
    for (cfg, row) in rows {
        let c = &row.check;
        let status = match row.status {
            Outcome::Pass => "agree",
            Outcome::Inconclusive => "inconclusive",
            Outcome::Disagreement => "DISAGREE",
        };
        w.write_record([
            eta_label(&cfg.cond_minus),
            eta_label(&cfg.cond_plus),
            format!("{}", cfg.alpha),
            class_label(&cfg.angle_class),
            format!("{}", cfg.lambda),
            format!("{}", cfg.u_at_origin.re),
            format!("{}", cfg.u_at_origin.im),
            c.verdict.order.to_string(),
            c.verdict.rationale.describe().to_string(),
            c.recursion_order.to_string(),
            c.numeric_order.map_or_else(|| c.numeric_error.clone().unwrap_or_default(), |o| o.to_string()),
            format!("{:e}", c.boundary_residual),
            status.to_string(),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Model(e.to_string()))?;
    String::from_utf8(bytes).map_err(CliError::model)
}

pub fn run(args: VanishingArgs, global: &Global) -> Result<Outcome, CliError> {
    let mut cfg: VanishingConfig = load_config(args.config.as_deref())?;
    cfg.q_max = args.q_max.unwrap_or(cfg.q_max);
    cfg.lambda = args.lambda.unwrap_or(cfg.lambda);
    cfg.depth = args.depth.unwrap_or(cfg.depth);
    if cfg.n_radii < 3 || !(cfg.r_min > 0.0 && cfg.r_max > cfg.r_min) {
        return Err(CliError::Config("need n_radii >= 3 and 0 < r_min < r_max".into()));
    }
    let configs = match &cfg.cases {
        Some(list) => list
            .iter()
            .map(|v| CornerConfig::from_json(v).map_err(|e| CliError::Config(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?,
        None => generated_cases(&cfg)?,
    };
    let opts = CheckOptions { depth: cfg.depth, r_max: cfg.r_max, r_min: cfg.r_min, n_radii: cfg.n_radii, ..CheckOptions::default() };
    let mut rows = Vec::with_capacity(configs.len());
    for c in &configs {
        let check = check_corner(c, &opts).map_err(CliError::model)?;
        let status = row_status(&check, global.tol_scale);
        rows.push(Row { config: c.to_json(), check, status });
    }
    let outcome = Outcome::worst(rows.iter().map(|r| r.status));
    let out = Output::create(&global.out)?;
    let paired: Vec<(CornerConfig, &Row)> = configs.iter().copied().zip(&rows).collect();
    out.write_text("vanishing.csv", &table_csv(&paired)?)?;
    let count = |o: Outcome| rows.iter().filter(|r| r.status == o).count();
    let summary = Summary {
        rows: rows.len(),
        agree: count(Outcome::Pass),
        disagree: count(Outcome::Disagreement),
        inconclusive: count(Outcome::Inconclusive),
        table: "vanishing.csv".into(),
        cases: rows,
    };
    eprintln!("vanishing: {} rows, {} agree, {} disagree, {} inconclusive", summary.rows, summary.agree, summary.disagree, summary.inconclusive);
    out.write_report("vanishing.json", "vanishing", outcome, &summary)?;
    Ok(outcome)
}
