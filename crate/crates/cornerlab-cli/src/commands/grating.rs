//! Rayleigh mode tables, flat-grating roundtrips and energy checks, and the
//! distinctness and independence predicates for two incident angles.

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::Args;
use cornerlab::grating::{
    exponential_independence, extract_rayleigh, grating_mode_distinctness, rayleigh_modes, DistinctnessReport,
    FlatGratingConfig, LineSamples, RayleighMode,
};
use cornerlab::lines::LineCondition;
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::run::{load_config, CliError, Global, Outcome, Output};

const ROUNDTRIP_TOLERANCE: f64 = 1e-10;
const ENERGY_TOLERANCE: f64 = 1e-12;
const IDENTITY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Args)]
pub struct GratingArgs {
    /// JSON configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Wavenumber.
    #[arg(long)]
    k: Option<f64>,
    /// First incident angle in radians.
    #[arg(long, allow_hyphen_values = true)]
    theta1: Option<f64>,
    /// Second incident angle in radians.
    #[arg(long, allow_hyphen_values = true)]
    theta2: Option<f64>,
    /// Modes `-n_max..=n_max` are tabulated and extracted.
    #[arg(long)]
    n_max: Option<i64>,
    /// Measurement height.
    #[arg(long)]
    b: Option<f64>,
    /// Samples per period on the measurement line.
    #[arg(long)]
    samples: Option<usize>,
    /// `nodal`, `singular` or `impedance:RE,IM`.
    #[arg(long, value_parser = parse_condition)]
    condition: Option<LineCondition>,
}

fn parse_condition(s: &str) -> Result<LineCondition, String> {
    match s {
        "nodal" => Ok(LineCondition::Nodal),
        "singular" => Ok(LineCondition::Singular),
        _ => {
            let rest = s.strip_prefix("impedance:").ok_or_else(|| format!("unknown condition {s:?}"))?;
            let (re, im) = rest.split_once(',').ok_or_else(|| "expected impedance:RE,IM".to_string())?;
            let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
            Ok(LineCondition::impedance(C64::new(num(re)?, num(im)?)))
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GratingConfig {
    pub k: f64,
    pub theta1: f64,
    pub theta2: f64,
    pub n_max: i64,
    pub b: f64,
    pub samples: usize,
    pub condition: LineCondition,
    /// Random `(k, θ₁, θ₂)` draws for the distinctness predicate.
    pub draws: usize,
    pub draw_n_max: i64,
}

impl Default for GratingConfig {
    fn default() -> Self {
        Self {
            k: 1.0,
            theta1: 0.0,
            theta2: 0.3,
            n_max: 5,
            b: 1.0,
            samples: 64,
            condition: LineCondition::Nodal,
            draws: 50,
            draw_n_max: 20,
        }
    }
}

#[derive(Debug, Serialize)]
struct Roundtrip {
    theta: f64,
    reflection: C64,
    reflection_modulus: f64,
    max_coefficient_error: f64,
    unrecoverable: Vec<i64>,
    boundary_residual: f64,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct Draw {
    k: f64,
    theta1: f64,
    theta2: f64,
    report: DistinctnessReport,
}

#[derive(Debug, Serialize)]
struct Report {
    config: GratingConfig,
    modes: Vec<RayleighMode>,
    mode_identity_error: f64,
    roundtrips: Vec<Roundtrip>,
    energy_pass: bool,
    distinctness: DistinctnessReport,
    independence_vectors: Vec<[f64; 2]>,
    independence_min_singular_value: f64,
    random_draws_distinct: usize,
    random_draw_failures: Vec<Draw>,
    gamma_b_file: String,
}

fn roundtrip(cfg: &GratingConfig, theta: f64, tol: f64) -> Result<(Roundtrip, LineSamples), CliError> {
    let flat = FlatGratingConfig::new(cfg.k, theta, cfg.condition, cfg.b).map_err(|e| CliError::Config(e.to_string()))?;
    let values = flat.measurement(cfg.samples);
    let coeffs = extract_rayleigh(&values, cfg.k, theta, cfg.b, -cfg.n_max..=cfg.n_max).map_err(|e| CliError::Config(e.to_string()))?;
    let r = flat.reflection();
    let mut max_err: f64 = 0.0;
    let mut unrecoverable = Vec::new();
    for c in &coeffs {
        match c.value {
            Some(v) => max_err = max_err.max((v - if c.mode.n == 0 { r } else { C64::new(0.0, 0.0) }).norm()),
            None => unrecoverable.push(c.mode.n),
        }
    }
    let boundary_residual = flat.boundary_residual(cfg.samples);
    let scale = 1.0 + cfg.condition.eta().map_or(0.0, |e| e.norm());
    let rt = Roundtrip {
        theta,
        reflection: r,
        reflection_modulus: r.norm(),
        max_coefficient_error: max_err,
        unrecoverable,
        boundary_residual,
        pass: max_err <= ROUNDTRIP_TOLERANCE * tol && boundary_residual <= ENERGY_TOLERANCE * scale * tol,
    };
    let x1 = (0..cfg.samples).map(|j| 2.0 * PI * j as f64 / cfg.samples as f64).collect();
    Ok((rt, LineSamples { k: cfg.k, theta, b: cfg.b, x1, values }))
}

pub fn run(args: GratingArgs, global: &Global) -> Result<Outcome, CliError> {
    let mut cfg: GratingConfig = load_config(args.config.as_deref())?;
    cfg.k = args.k.unwrap_or(cfg.k);
    cfg.theta1 = args.theta1.unwrap_or(cfg.theta1);
    cfg.theta2 = args.theta2.unwrap_or(cfg.theta2);
    cfg.n_max = args.n_max.unwrap_or(cfg.n_max);
    cfg.b = args.b.unwrap_or(cfg.b);
    cfg.samples = args.samples.unwrap_or(cfg.samples);
    cfg.condition = args.condition.unwrap_or(cfg.condition);
    if cfg.n_max < 0 || cfg.draw_n_max < 0 {
        return Err(CliError::Config("mode ranges must be nonnegative".into()));
    }
    let tol = global.tol_scale;
    let config_err = |e: cornerlab::grating::GratingError| CliError::Config(e.to_string());

    let modes = rayleigh_modes(cfg.k, cfg.theta1, -cfg.n_max..=cfg.n_max).map_err(config_err)?;
    let mode_identity_error = modes
        .iter()
        .map(|m| (m.beta * m.beta + m.alpha * m.alpha - cfg.k * cfg.k).norm())
        .fold(0.0, f64::max);

    let (rt1, samples) = roundtrip(&cfg, cfg.theta1, tol)?;
    let (rt2, _) = roundtrip(&cfg, cfg.theta2, tol)?;
    let roundtrips = vec![rt1, rt2];
    let energy_pass = roundtrips.iter().all(|r| match cfg.condition.eta() {
        Some(e) if e.im > 0.0 => r.reflection_modulus < 1.0,
        _ => (r.reflection_modulus - 1.0).abs() <= ENERGY_TOLERANCE * tol,
    });

    let distinctness = grating_mode_distinctness(cfg.k, cfg.theta1, cfg.theta2, -cfg.n_max..=cfg.n_max).map_err(config_err)?;
    let mut independence_vectors = Vec::new();
    for theta in [cfg.theta1, cfg.theta2] {
        let m0 = RayleighMode::new(cfg.k, theta, 0);
        independence_vectors.push([m0.alpha, -m0.beta.re]);
        for m in rayleigh_modes(cfg.k, theta, -cfg.n_max..=cfg.n_max).map_err(config_err)? {
            if m.propagating {
                independence_vectors.push([m.alpha, m.beta.re]);
            }
        }
    }
    let independence_min_singular_value =
        exponential_independence(&independence_vectors, [[0.0, 2.0 * PI], [0.0, 2.0 * PI]]).map_err(config_err)?;

    let mut rng = ChaCha8Rng::seed_from_u64(global.seed);
    let mut random_draws_distinct = 0;
    let mut random_draw_failures = Vec::new();
    for _ in 0..cfg.draws {
        let k = rng.gen_range(0.5..10.0);
        let (t1, t2) = (rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
        let report = grating_mode_distinctness(k, t1, t2, -cfg.draw_n_max..=cfg.draw_n_max).map_err(config_err)?;
        if report.distinct {
            random_draws_distinct += 1;
        } else {
            random_draw_failures.push(Draw { k, theta1: t1, theta2: t2, report });
        }
    }

    let pass = mode_identity_error <= IDENTITY_TOLERANCE * tol
        && roundtrips.iter().all(|r| r.pass)
        && energy_pass
        && distinctness.distinct
        && independence_min_singular_value > 0.0
        && random_draw_failures.is_empty();
    let outcome = if pass { Outcome::Pass } else { Outcome::Disagreement };
    let out = Output::create(&global.out)?;
    out.write_text("gamma_b.csv", &samples.to_csv().map_err(CliError::model)?)?;
    eprintln!(
        "grating: R = {:.6}, roundtrip error {:.2e}, {}/{} random draws distinct: {:?}",
        roundtrips[0].reflection, roundtrips[0].max_coefficient_error, random_draws_distinct, cfg.draws, outcome
    );
    let report = Report {
        config: cfg,
        modes,
        mode_identity_error,
        roundtrips,
        energy_pass,
        distinctness,
        independence_vectors,
        independence_min_singular_value,
        random_draws_distinct,
        random_draw_failures,
        gamma_b_file: "gamma_b.csv".into(),
    };
    out.write_report("grating.json", "grating", outcome, &report)?;
    Ok(outcome)
}
