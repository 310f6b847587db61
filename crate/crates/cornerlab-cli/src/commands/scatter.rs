//! Forward scattering by one obstacle: far-field CSV plus solver diagnostics,
//! mesh self-convergence and, for disks, the separation-of-variables error.

use std::path::PathBuf;

use clap::Args;
use cornerlab::lines::LineCondition;
use cornerlab::scatter::{
    far_field, Boundary, FarFieldPattern, ForwardSolver, Formulation, Incident, MeshConfig, MieDisk, PolygonalObstacle,
    ResidualReport,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::run::{load_config, read_json, CliError, Global, Outcome, Output};

const MIE_TOLERANCE: f64 = 1e-4;
const CONVERGENCE_TOLERANCE: f64 = 1e-5;

#[derive(Debug, Args)]
pub struct ScatterArgs {
    /// JSON configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Obstacle JSON file, replacing the configuration's `obstacle`.
    #[arg(long)]
    obstacle: Option<PathBuf>,
    /// Wavenumber.
    #[arg(long)]
    k: Option<f64>,
    /// Incident direction angle in radians.
    #[arg(long)]
    angle: Option<f64>,
    /// Number of far-field samples.
    #[arg(long)]
    samples: Option<usize>,
    /// Panels per edge.
    #[arg(long)]
    panels: Option<usize>,
    /// Skip the refined-mesh solve.
    #[arg(long)]
    no_convergence: bool,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiskSpec {
    pub center: [f64; 2],
    pub radius: f64,
    pub condition: LineCondition,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScatterConfig {
    pub obstacle: Option<Value>,
    pub disk: Option<DiskSpec>,
    pub k: f64,
    pub angle: f64,
    pub samples: usize,
    pub mesh: MeshConfig,
    pub convergence: bool,
}

impl Default for ScatterConfig {
    fn default() -> Self {
        Self { obstacle: None, disk: None, k: 2.0, angle: 0.0, samples: 128, mesh: MeshConfig::default(), convergence: true }
    }
}

#[derive(Debug, Serialize)]
struct Convergence {
    refined_unknowns: usize,
    l2_change: f64,
    relative_change: f64,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct MieComparison {
    relative_l2_error: f64,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct Report {
    k: f64,
    angle: f64,
    samples: usize,
    mesh: MeshConfig,
    formulation: Formulation,
    unknowns: usize,
    condition_estimate: f64,
    boundary_residual: ResidualReport,
    far_field_norm: f64,
    far_field_file: String,
    self_convergence: Option<Convergence>,
    mie: Option<MieComparison>,
}

fn mie_error(ff: &FarFieldPattern, disk: &DiskSpec, k: f64, angle: f64) -> f64 {
    let mie = MieDisk::new(k, disk.radius, angle, disk.condition);
    let (mut num, mut den) = (0.0, 0.0);
    for &(a, v) in &ff.samples {
        // Translating the disk by c multiplies the far field by e^{ik(d − x̂)·c}.
        let phase = k * ((angle.cos() - a.cos()) * disk.center[0] + (angle.sin() - a.sin()) * disk.center[1]);
        let want = mie.far_field(a) * num_complex::Complex64::from_polar(1.0, phase);
        num += (v - want).norm_sqr();
        den += want.norm_sqr();
    }
    (num / den).sqrt()
}

pub fn run(args: ScatterArgs, global: &Global) -> Result<Outcome, CliError> {
    let mut cfg: ScatterConfig = load_config(args.config.as_deref())?;
    if let Some(path) = &args.obstacle {
        cfg.obstacle = Some(read_json(path)?);
        cfg.disk = None;
    }
    cfg.k = args.k.unwrap_or(cfg.k);
    cfg.angle = args.angle.unwrap_or(cfg.angle);
    cfg.samples = args.samples.unwrap_or(cfg.samples);
    cfg.mesh.panels_per_edge = args.panels.unwrap_or(cfg.mesh.panels_per_edge);
    cfg.convergence &= !args.no_convergence;

    let incident = Incident::plane_wave(cfg.k, cfg.angle);
    let boundary = match (&cfg.obstacle, &cfg.disk) {
        (Some(v), None) => {
            let obstacle = PolygonalObstacle::from_json(v).map_err(|e| CliError::Config(e.to_string()))?;
            incident.validate(Some(&obstacle)).map_err(|e| CliError::Config(e.to_string()))?;
            Boundary::from_obstacle(&obstacle)
        }
        (None, Some(d)) => {
            if !(d.radius > 0.0) {
                return Err(CliError::Config(format!("disk radius must be positive, got {}", d.radius)));
            }
            incident.validate(None).map_err(|e| CliError::Config(e.to_string()))?;
            Boundary::disk(d.center, d.radius, d.condition, 1)
        }
        _ => return Err(CliError::Config("give exactly one of `obstacle` and `disk`".into())),
    };

    let solver = ForwardSolver::new(&boundary, cfg.k, &cfg.mesh).map_err(CliError::model)?;
    let sol = solver.solve(&incident).map_err(CliError::model)?;
    let ff = far_field(&sol, cfg.samples).map_err(CliError::model)?;
    let tol = global.tol_scale;

    let self_convergence = if cfg.convergence {
        let fine = ForwardSolver::new(&boundary, cfg.k, &cfg.mesh.refined()).map_err(CliError::model)?;
        let fine_sol = fine.solve(&incident).map_err(CliError::model)?;
        let fine_ff = far_field(&fine_sol, cfg.samples).map_err(CliError::model)?;
        let l2_change = ff.l2_distance(&fine_ff).map_err(CliError::model)?;
        let relative_change = l2_change / fine_ff.l2_norm();
        Some(Convergence { refined_unknowns: fine.unknowns(), l2_change, relative_change, pass: relative_change <= CONVERGENCE_TOLERANCE * tol })
    } else {
        None
    };
    let mie = cfg.disk.map(|d| {
        let relative_l2_error = mie_error(&ff, &d, cfg.k, cfg.angle);
        MieComparison { relative_l2_error, pass: relative_l2_error <= MIE_TOLERANCE * tol }
    });

    let outcome = Outcome::worst([
        match &mie {
            Some(m) if !m.pass => Outcome::Disagreement,
            _ => Outcome::Pass,
        },
        match &self_convergence {
            Some(c) if !c.pass => Outcome::Inconclusive,
            _ => Outcome::Pass,
        },
    ]);
    let out = Output::create(&global.out)?;
    out.write_text("far_field.csv", &ff.to_csv().map_err(CliError::model)?)?;
    let report = Report {
        k: cfg.k,
        angle: cfg.angle,
        samples: cfg.samples,
        mesh: MeshConfig { workers: 0, ..cfg.mesh },
        formulation: sol.formulation(),
        unknowns: sol.unknowns(),
        condition_estimate: sol.condition_estimate(),
        boundary_residual: sol.boundary_residual(),
        far_field_norm: ff.l2_norm(),
        far_field_file: "far_field.csv".into(),
        self_convergence,
        mie,
    };
    eprintln!("scatter: {} unknowns, |u_inf| = {:.6e}: {:?}", report.unknowns, report.far_field_norm, outcome);
    out.write_report("scatter.json", "scatter", outcome, &report)?;
    Ok(outcome)
}
