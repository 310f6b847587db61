//! Closed-form exactness of the CGO line and sector integrals, and remainder
//! slope fits of the corner expansions.

use std::f64::consts::PI;

use clap::Args;
use cornerlab::cgo::{
    line_integral_exact, line_integral_quadrature, sector_integral_exact, sector_quadrature, verify_corner_expansions,
    zeta, CornerExpansionReport, SectorW, SlopeStatus, ELL_MAX,
};
use cornerlab::expansion::Expansion;
use cornerlab::lines::LineCondition;
use cornerlab::vanishing::{constructed_expansion, CornerConfig};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::run::{load_config, CliError, Global, Outcome, Output};

const LINE_TOLERANCE: f64 = 1e-8;
const SCALING_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Args)]
pub struct CgoArgs {
    /// JSON configuration file.
    #[arg(long)]
    config: Option<std::path::PathBuf>,
    /// Truncation radius of the sector.
    #[arg(long)]
    h: Option<f64>,
    /// Comma-separated scales for the slope fits.
    #[arg(long, value_delimiter = ',')]
    s_grid: Option<Vec<f64>>,
}

/// One expansion to test.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CgoCase {
    /// `J_n(√λ r) sin nθ` on the sector `[θ_m, θ_M]`.
    Mode { mode: usize, lambda: f64, sector: [f64; 2] },
    /// The eigenfunction constructed at a corner, on the sector `[0, απ]`.
    Corner {
        corner: Value,
        #[serde(default)]
        impedance_form: bool,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CgoConfig {
    pub h: f64,
    pub s_grid: Vec<f64>,
    pub exactness_s: Vec<f64>,
    pub depth: usize,
    pub cases: Vec<CgoCase>,
}

impl Default for CgoConfig {
    fn default() -> Self {
        let alpha = (5f64.sqrt() - 1.0) / 4.0;
        let imp = CornerConfig::new(
            LineCondition::impedance(C64::new(0.5, 0.0)),
            LineCondition::impedance(C64::new(0.4, 0.2)),
            alpha,
            1.0,
            C64::new(1.0, 0.0),
        )
        .expect("default corner is valid");
        let ss = CornerConfig::rational(LineCondition::Singular, LineCondition::Singular, 2, 5, 2.0, C64::new(0.7, 0.2))
            .expect("default corner is valid");
        Self {
            h: 4.0,
            s_grid: vec![100.0, 200.0, 400.0, 800.0, 1600.0],
            exactness_s: vec![1e2, 1e3, 1e4],
            depth: 24,
            cases: vec![
                CgoCase::Mode { mode: 2, lambda: 1.0, sector: [0.0, PI / 3.0] },
                CgoCase::Corner { corner: imp.to_json(), impedance_form: true },
                CgoCase::Corner { corner: ss.to_json(), impedance_form: false },
            ],
        }
    }
}

#[derive(Debug, Serialize)]
struct LineRow {
    ell: usize,
    s: f64,
    theta: f64,
    weighted: bool,
    exact: C64,
    quadrature: C64,
    relative_error: f64,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct SectorRow {
    s: f64,
    exact: C64,
    quadrature: C64,
    relative_error: f64,
    scaled: C64,
    scaling_deviation: f64,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct CaseReport {
    case: CgoCase,
    report: CornerExpansionReport,
    outcome: Outcome,
}

#[derive(Debug, Serialize)]
struct Report {
    line_integrals: Vec<LineRow>,
    sector_integrals: Vec<SectorRow>,
    expansions: Vec<CaseReport>,
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

fn case_expansion(case: &CgoCase, depth: usize) -> Result<(Expansion, SectorW, Option<(C64, C64)>), CliError> {
    match case {
        CgoCase::Mode { mode, lambda, sector } => {
            let u = Expansion::sine_mode(*mode, *lambda).map_err(|e| CliError::Config(e.to_string()))?;
            let w = SectorW::new(sector[0], sector[1]).map_err(|e| CliError::Config(e.to_string()))?;
            Ok((u, w, None))
        }
        CgoCase::Corner { corner, impedance_form } => {
            let cfg = CornerConfig::from_json(corner).map_err(|e| CliError::Config(e.to_string()))?;
            let (u, _) = constructed_expansion(&cfg, depth).map_err(CliError::model)?;
            let w = SectorW::new(0.0, cfg.theta0()).map_err(|e| CliError::Config(e.to_string()))?;
            let etas = match (impedance_form, cfg.cond_minus.eta(), cfg.cond_plus.eta()) {
                (true, Some(a), Some(b)) => Some((a, b)),
                (true, _, _) => return Err(CliError::Config("impedance_form needs two non-nodal lines".into())),
                (false, _, _) => None,
            };
            Ok((u, w, etas))
        }
    }
}

fn expansion_outcome(r: &CornerExpansionReport) -> Outcome {
    let checks = [&r.i11_plus, &r.i11_minus, &r.i12_plus, &r.i12_minus, &r.i2];
    if r.all_pass() {
        Outcome::Pass
    } else if !r.green_pass || checks.iter().any(|c| c.status == SlopeStatus::Fail) {
        Outcome::Disagreement
    } else {
        Outcome::Inconclusive
    }
}

pub fn run(args: CgoArgs, global: &Global) -> Result<Outcome, CliError> {
    let mut cfg: CgoConfig = load_config(args.config.as_deref())?;
    cfg.h = args.h.unwrap_or(cfg.h);
    if let Some(g) = args.s_grid {
        cfg.s_grid = g;
    }
    let tol = global.tol_scale;

    let mut line_integrals = Vec::new();
    for &s in &cfg.exactness_s {
        for theta in [0.0, 1.0, -2.0] {
            let z = zeta(theta);
            for ell in 0..=ELL_MAX {
                for weighted in [false, true] {
                    let exact = line_integral_exact(ell, s, cfg.h, z, weighted).map_err(CliError::model)?;
                    let quadrature = line_integral_quadrature(ell, s, cfg.h, z, weighted, 1e-14 * exact.norm())
                        .map_err(CliError::model)?;
                    let relative_error = rel(quadrature, exact);
                    let pass = relative_error <= LINE_TOLERANCE * tol;
                    line_integrals.push(LineRow { ell, s, theta, weighted, exact, quadrature, relative_error, pass });
                }
            }
        }
    }

    let w = SectorW::new(0.0, PI / 3.0).map_err(CliError::model)?;
    let mut sector_integrals = Vec::new();
    let reference = cfg
        .exactness_s
        .first()
        .map(|&s| sector_integral_exact(&w, s).map(|v| v * s * s))
        .transpose()
        .map_err(CliError::model)?;
    for &s in &cfg.exactness_s {
        let exact = sector_integral_exact(&w, s).map_err(CliError::model)?;
        let h = (45.0 / w.delta()).powi(2) / s;
        let quadrature = sector_quadrature(&w, s, h, |_, _| C64::new(1.0, 0.0));
        let relative_error = rel(quadrature, exact);
        let scaled = exact * s * s;
        let scaling_deviation = reference.map_or(0.0, |r| rel(scaled, r));
        let pass = relative_error <= LINE_TOLERANCE * tol && scaling_deviation <= SCALING_TOLERANCE * tol;
        sector_integrals.push(SectorRow { s, exact, quadrature, relative_error, scaled, scaling_deviation, pass });
    }

    let mut expansions = Vec::new();
    for case in &cfg.cases {
        let (u, w, etas) = case_expansion(case, cfg.depth)?;
        let report = verify_corner_expansions(&u, &w, etas, &cfg.s_grid, cfg.h).map_err(|e| CliError::Config(e.to_string()))?;
        let outcome = expansion_outcome(&report);
        expansions.push(CaseReport { case: case.clone(), report, outcome });
    }

    let exact_ok = line_integrals.iter().all(|r| r.pass) && sector_integrals.iter().all(|r| r.pass);
    let outcome = Outcome::worst(
        std::iter::once(if exact_ok { Outcome::Pass } else { Outcome::Disagreement }).chain(expansions.iter().map(|e| e.outcome)),
    );
    eprintln!(
        "cgo: {} line rows, {} sector rows, {} expansions: {:?}",
        line_integrals.len(),
        sector_integrals.len(),
        expansions.len(),
        outcome
    );
    let out = Output::create(&global.out)?;
    let report = Report { line_integrals, sector_integrals, expansions };
    out.write_report("cgo.json", "cgo", outcome, json!(report))?;
    Ok(outcome)
}
