//! Two-direction far-field discrimination between two polygonal obstacles.

use std::path::PathBuf;

use clap::Args;
use cornerlab::inverse::{discrimination_experiment, DiscriminationReport, Prediction};
use cornerlab::scatter::{MeshConfig, PolygonalObstacle};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::run::{load_config, read_json, CliError, Global, Outcome, Output};

#[derive(Debug, Args)]
pub struct InverseArgs {
    /// JSON configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// First obstacle JSON file.
    #[arg(long)]
    obstacle1: Option<PathBuf>,
    /// Second obstacle JSON file.
    #[arg(long)]
    obstacle2: Option<PathBuf>,
    /// Wavenumber.
    #[arg(long)]
    k: Option<f64>,
    /// First incident direction angle in radians.
    #[arg(long)]
    d1: Option<f64>,
    /// Second incident direction angle in radians.
    #[arg(long)]
    d2: Option<f64>,
    /// Number of far-field samples.
    #[arg(long)]
    samples: Option<usize>,
    /// Panels per edge of the base mesh.
    #[arg(long)]
    panels: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct InverseConfig {
    pub obstacle1: Option<Value>,
    pub obstacle2: Option<Value>,
    pub k: f64,
    pub d1: f64,
    pub d2: f64,
    pub samples: usize,
    pub mesh: MeshConfig,
}

impl Default for InverseConfig {
    fn default() -> Self {
        Self { obstacle1: None, obstacle2: None, k: 2.0, d1: 0.3, d2: 1.9, samples: 128, mesh: MeshConfig::default() }
    }
}

/// Whether the observation matches the prediction.
pub fn judge(report: &DiscriminationReport) -> Outcome {
    match report.prediction {
        Prediction::NoPrediction => Outcome::Inconclusive,
        Prediction::Identical if report.observed_distinct => Outcome::Disagreement,
        Prediction::Identical => Outcome::Pass,
        Prediction::DistinctByCorner | Prediction::DistinctByImpedance if report.observed_distinct => Outcome::Pass,
        Prediction::DistinctByCorner | Prediction::DistinctByImpedance => Outcome::Disagreement,
    }
}

fn obstacle(v: &Option<Value>, name: &str) -> Result<PolygonalObstacle, CliError> {
    let v = v.as_ref().ok_or_else(|| CliError::Config(format!("missing `{name}`")))?;
    PolygonalObstacle::from_json(v).map_err(|e| CliError::Config(format!("{name}: {e}")))
}

pub fn run(args: InverseArgs, global: &Global) -> Result<Outcome, CliError> {
    let mut cfg: InverseConfig = load_config(args.config.as_deref())?;
    if let Some(p) = &args.obstacle1 {
        cfg.obstacle1 = Some(read_json(p)?);
    }
    if let Some(p) = &args.obstacle2 {
        cfg.obstacle2 = Some(read_json(p)?);
    }
    cfg.k = args.k.unwrap_or(cfg.k);
    cfg.d1 = args.d1.unwrap_or(cfg.d1);
    cfg.d2 = args.d2.unwrap_or(cfg.d2);
    cfg.samples = args.samples.unwrap_or(cfg.samples);
    cfg.mesh.panels_per_edge = args.panels.unwrap_or(cfg.mesh.panels_per_edge);
    let (o1, o2) = (obstacle(&cfg.obstacle1, "obstacle1")?, obstacle(&cfg.obstacle2, "obstacle2")?);

    let report = discrimination_experiment(&o1, &o2, cfg.k, cfg.d1, cfg.d2, cfg.samples, &cfg.mesh).map_err(CliError::model)?;
    let outcome = judge(&report);
    eprintln!(
        "inverse: discrepancies {:.3e}, {:.3e}; noise floor {:.3e}; {}: {:?}",
        report.discrepancies[0],
        report.discrepancies[1],
        report.noise_floor,
        report.verdict,
        outcome
    );
    let mut body = serde_json::to_value(&report).map_err(CliError::model)?;
    if let Value::Object(m) = &mut body {
        m.insert("obstacles".into(), json!([o1.to_json(), o2.to_json()]));
        m.insert("mesh".into(), serde_json::to_value(MeshConfig { workers: 0, ..cfg.mesh }).map_err(CliError::model)?);
    }
    Output::create(&global.out)?.write_report("inverse.json", "inverse", outcome, body)?;
    Ok(outcome)
}
