//! Nyström solution of the boundary integral equations and the layer
//! potentials that evaluate near and far fields from the densities.
//!
//! Both formulations are written as `u^s = D μ + S σ` with the single layer
//! `S` and double layer `D` of `Φ(x, y) = (i/4) H_0^{(1)}(k|x − y|)`. The
//! combined-field ansatz takes `μ = φ`, `σ = −ikφ`; the direct one takes
//! `μ = u` and `σ = −∂_ν u` on the boundary.

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;

use super::geometry::{Mesh, Target};
use super::{
    dot, norm, sub, Boundary, FarFieldPattern, Formulation, Incident, MeshConfig, PolygonalObstacle, ScatterError,
    MIN_FAR_FIELD_SAMPLES,
};
use crate::lines::LineCondition;
use crate::specfun::hankel01;

const I: C64 = C64 { re: 0.0, im: 1.0 };
/// Condition estimates above this are reported as solver failure.
pub const CONDITION_LIMIT: f64 = 1e13;

/// `[S, D]` kernels: `Φ(x, y)` and `∂_{ν(y)} Φ(x, y)` from `d = x − y` and `nd = ν(y)·d`.
fn sd_kernel(k: f64, d: [f64; 2], nd: f64) -> [C64; 2] {
    let r = norm(d);
    let (h0, h1) = hankel01(k * r);
    [0.25 * I * h0, 0.25 * I * k * h1 * (nd / r)]
}

fn sd_at(k: f64, x: [f64; 2], y: [f64; 2], nu: [f64; 2]) -> [C64; 2] {
    let d = sub(x, y);
    sd_kernel(k, d, dot(nu, d))
}

/// `[∂_1 S, ∂_2 S, ∂_1 D, ∂_2 D]` with derivatives in `x`.
fn sd_grad_kernel(k: f64, d: [f64; 2], nd: f64, nu: [f64; 2]) -> [C64; 4] {
    let r = norm(d);
    let (h0, h1) = hankel01(k * r);
    let gs = -0.25 * I * k * h1 / r;
    let a = 0.25 * I * k * (k * h0 * nd / (r * r) - 2.0 * h1 * nd / (r * r * r));
    let b = 0.25 * I * k * h1 / r;
    [gs * d[0], gs * d[1], a * d[0] + b * nu[0], a * d[1] + b * nu[1]]
}

#[derive(Debug)]
struct Core {
    mesh: Mesh,
    k: f64,
    formulation: Formulation,
    /// Per node, `μ = a·x` and `σ = b·x` for the unknown `x`.
    coeff: Vec<(C64, C64)>,
}

impl Core {
    fn jump_sign(&self) -> f64 {
        match self.formulation {
            Formulation::CombinedField => 1.0,
            _ => -1.0,
        }
    }

    /// `Σ_j [D(x, y_j) μ_j + S(x, y_j) σ_j]` with local quadrature on near panels
    /// and the principal value on `on_panel`.
    fn potential(&self, x: [f64; 2], mu: &[C64], sigma: &[C64], on_panel: Option<(usize, f64)>) -> C64 {
        let k = self.k;
        let m = &self.mesh;
        let mut total = C64::new(0.0, 0.0);
        for (ip, panel) in m.panels.iter().enumerate() {
            let range = panel.start..panel.start + m.p;
            let target = match on_panel {
                Some((q, s)) if q == ip => Some(Target::On(s)),
                _ if m.is_near(x, panel) => Some(Target::Off),
                _ => None,
            };
            match target {
                Some(t) => {
                    let mom = m.moments(x, panel, t, &|d, nd, _| sd_kernel(k, d, nd));
                    for (j, w) in range.zip(&mom) {
                        total += w[1] * mu[j] + w[0] * sigma[j];
                    }
                }
                None => {
                    for j in range {
                        let [s, d] = sd_at(k, x, m.x[j], m.nu[j]);
                        total += (d * mu[j] + s * sigma[j]) * m.w[j];
                    }
                }
            }
        }
        total
    }

    fn potential_gradient(&self, x: [f64; 2], mu: &[C64], sigma: &[C64]) -> [C64; 2] {
        let k = self.k;
        let m = &self.mesh;
        let mut g = [C64::new(0.0, 0.0); 2];
        for panel in &m.panels {
            let range = panel.start..panel.start + m.p;
            if m.is_near(x, panel) {
                let mom = m.moments(x, panel, Target::Off, &|d, nd, nu| sd_grad_kernel(k, d, nd, nu));
                for (j, w) in range.zip(&mom) {
                    g[0] += w[2] * mu[j] + w[0] * sigma[j];
                    g[1] += w[3] * mu[j] + w[1] * sigma[j];
                }
            } else {
                for j in range {
                    let d = sub(x, m.x[j]);
                    let w = sd_grad_kernel(k, d, dot(d, m.nu[j]), m.nu[j]);
                    g[0] += (w[2] * mu[j] + w[0] * sigma[j]) * m.w[j];
                    g[1] += (w[3] * mu[j] + w[1] * sigma[j]) * m.w[j];
                }
            }
        }
        g
    }

    /// Row `i` of the Nyström matrix, acting on `√w_j x_j` with the row scaled by `√w_i`.
    fn row(&self, i: usize, out: &mut [C64]) {
        let k = self.k;
        let m = &self.mesh;
        let x = m.x[i];
        let own = i / m.p;
        for (ip, panel) in m.panels.iter().enumerate() {
            let range = panel.start..panel.start + m.p;
            if ip == own || m.is_near(x, panel) {
                let t = if ip == own { Target::On(m.s[i - panel.start]) } else { Target::Off };
                let mom = m.moments(x, panel, t, &|d, nd, _| sd_kernel(k, d, nd));
                for (j, w) in range.zip(&mom) {
                    let (a, b) = self.coeff[j];
                    out[j] = w[1] * a + w[0] * b;
                }
            } else {
                for j in range {
                    let [s, d] = sd_at(k, x, m.x[j], m.nu[j]);
                    let (a, b) = self.coeff[j];
                    out[j] = (d * a + s * b) * m.w[j];
                }
            }
        }
        let root = m.w[i].sqrt();
        for (o, w) in out.iter_mut().zip(&m.w) {
            *o *= root / w.sqrt();
        }
        out[i] += 0.5 * self.jump_sign() * self.coeff[i].0;
    }
}

/// A factored boundary integral operator for one boundary and wavenumber,
/// reusable across incident fields.
pub struct ForwardSolver {
    core: Arc<Core>,
    lu: nalgebra::LU<C64, nalgebra::Dyn, nalgebra::Dyn>,
    norm1: f64,
}

impl ForwardSolver {
    /// Assembles and factors the Nyström matrix.
    pub fn new(boundary: &Boundary, k: f64, cfg: &MeshConfig) -> Result<Self, ScatterError> {
        cfg.validate()?;
        if !(k.is_finite() && k > 0.0) {
            return Err(ScatterError::BadIncident(format!("wavenumber must be positive, got {k}")));
        }
        let formulation = match (cfg.formulation, boundary.all_sound_soft()) {
            (Formulation::Auto, true) => Formulation::CombinedField,
            (Formulation::Auto, false) => Formulation::Direct,
            (Formulation::CombinedField, false) => {
                return Err(ScatterError::BadMesh("the combined-field formulation needs a sound-soft boundary".into()))
            }
            (f, _) => f,
        };
        let mesh = Mesh::new(boundary, cfg)?;
        let coeff = mesh
            .condition
            .iter()
            .map(|c| match (formulation, c) {
                (Formulation::CombinedField, _) => (C64::new(1.0, 0.0), -I * k),
                (_, LineCondition::Nodal) => (C64::new(0.0, 0.0), C64::new(-1.0, 0.0)),
                (_, LineCondition::Singular) => (C64::new(1.0, 0.0), C64::new(0.0, 0.0)),
                (_, LineCondition::Impedance(eta)) => (C64::new(1.0, 0.0), *eta),
            })
            .collect();
        let core = Core { mesh, k, formulation, coeff };
        let n = core.mesh.len();
        let mut flat = vec![C64::new(0.0, 0.0); n * n];
        let assemble = |flat: &mut Vec<C64>| {
            flat.par_chunks_mut(n).enumerate().for_each(|(i, row)| core.row(i, row));
        };
        if cfg.workers == 0 {
            assemble(&mut flat);
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.workers)
                .build()
                .map_err(|e| ScatterError::BadMesh(e.to_string()))?;
            pool.install(|| assemble(&mut flat));
        }
        let a = DMatrix::from_row_slice(n, n, &flat);
        let norm1 = (0..n).map(|j| a.column(j).iter().map(|v| v.norm()).sum::<f64>()).fold(0.0, f64::max);
        let lu = a.lu();
        Ok(Self { core: Arc::new(core), lu, norm1 })
    }

    pub fn k(&self) -> f64 {
        self.core.k
    }

    pub fn formulation(&self) -> Formulation {
        self.core.formulation
    }

    pub fn unknowns(&self) -> usize {
        self.core.mesh.len()
    }

    /// `‖A‖₁ · max ‖A⁻¹b‖₁ / ‖b‖₁` over the right-hand side and two fixed probe
    /// vectors; a lower bound on the 1-norm condition number.
    fn condition_estimate(&self, rhs: &DVector<C64>) -> f64 {
        let n = rhs.len();
        let probes = [
            rhs.clone(),
            DVector::from_fn(n, |i, _| C64::from_polar(1.0, 2.399_963 * i as f64)),
            DVector::from_fn(n, |i, _| C64::new(if i % 2 == 0 { 1.0 } else { -1.0 }, 0.0)),
        ];
        let mut inv = 0.0f64;
        for b in &probes {
            let bn: f64 = b.iter().map(|v| v.norm()).sum();
            if bn == 0.0 {
                continue;
            }
            match self.lu.solve(b) {
                Some(x) => inv = inv.max(x.iter().map(|v| v.norm()).sum::<f64>() / bn),
                None => return f64::INFINITY,
            }
        }
        self.norm1 * inv
    }

    /// Solves for one incident field.
    pub fn solve(&self, incident: &Incident) -> Result<ScatterSolution, ScatterError> {
        incident.validate(None)?;
        if (incident.k() - self.core.k).abs() > 1e-14 * self.core.k {
            return Err(ScatterError::WavenumberMismatch { solver: self.core.k, incident: incident.k() });
        }
        let m = &self.core.mesh;
        let rhs = DVector::from_iterator(m.len(), m.x.iter().zip(&m.w).map(|(x, w)| -incident.value(*x) * w.sqrt()));
        let condition = self.condition_estimate(&rhs);
        let sol = self.lu.solve(&rhs).ok_or(ScatterError::Solve { condition })?;
        if !(condition < CONDITION_LIMIT) || sol.iter().any(|v| !v.is_finite()) {
            return Err(ScatterError::Solve { condition });
        }
        let (mu, sigma) =
            sol.iter().zip(&self.core.coeff).zip(&m.w).map(|((z, (a, b)), w)| (a * z / w.sqrt(), b * z / w.sqrt())).unzip();
        Ok(ScatterSolution { core: self.core.clone(), incident: *incident, mu, sigma, condition })
    }
}

/// Validates the obstacle and incident field, then solves once.
pub fn solve_forward(
    obstacle: &PolygonalObstacle,
    incident: &Incident,
    mesh: &MeshConfig,
) -> Result<ScatterSolution, ScatterError> {
    incident.validate(Some(obstacle))?;
    ForwardSolver::new(&Boundary::from_obstacle(obstacle), incident.k(), mesh)?.solve(incident)
}

/// Boundary-equation residual sampled between Nyström nodes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    /// Largest residual on each boundary piece, relative to the largest incident value.
    pub per_piece: Vec<f64>,
    pub max: f64,
}

/// Densities of a solved scattering problem with near- and far-field evaluators.
#[derive(Debug, Clone)]
pub struct ScatterSolution {
    core: Arc<Core>,
    incident: Incident,
    mu: Vec<C64>,
    sigma: Vec<C64>,
    condition: f64,
}

impl ScatterSolution {
    pub fn k(&self) -> f64 {
        self.core.k
    }

    pub fn incident(&self) -> &Incident {
        &self.incident
    }

    pub fn formulation(&self) -> Formulation {
        self.core.formulation
    }

    /// Estimated 1-norm condition number of the Nyström matrix.
    pub fn condition_estimate(&self) -> f64 {
        self.condition
    }

    pub fn unknowns(&self) -> usize {
        self.core.mesh.len()
    }

    /// Whether `x` lies outside the obstacle.
    pub fn is_exterior(&self, x: [f64; 2]) -> bool {
        !self.core.mesh.boundary.contains(x)
    }

    /// Scattered field at an exterior point.
    pub fn scattered(&self, x: [f64; 2]) -> C64 {
        self.core.potential(x, &self.mu, &self.sigma, None)
    }

    /// Total field at an exterior point.
    pub fn total(&self, x: [f64; 2]) -> C64 {
        self.incident.value(x) + self.scattered(x)
    }

    /// Gradient of the total field at an exterior point, from the
    /// differentiated layer-potential kernels.
    pub fn total_gradient(&self, x: [f64; 2]) -> [C64; 2] {
        let gs = self.core.potential_gradient(x, &self.mu, &self.sigma);
        let gi = self.incident.gradient(x);
        [gi[0] + gs[0], gi[1] + gs[1]]
    }

    /// `u_∞(x̂)` for `x̂ = (cos φ, sin φ)`.
    pub fn far_field_at(&self, angle: f64) -> C64 {
        let m = &self.core.mesh;
        let k = self.core.k;
        let xh = [angle.cos(), angle.sin()];
        let gamma = C64::from_polar(1.0, 0.25 * PI) / (8.0 * PI * k).sqrt();
        let s: C64 = (0..m.len())
            .map(|j| {
                let e = C64::from_polar(1.0, -k * dot(xh, m.x[j]));
                e * (-I * k * dot(xh, m.nu[j]) * self.mu[j] + self.sigma[j]) * m.w[j]
            })
            .sum();
        gamma * s
    }

    /// Boundary values `(x, u, ∂_ν u)` at the Nyström nodes; available for the
    /// direct formulation only.
    pub fn boundary_values(&self) -> Option<Vec<([f64; 2], C64, C64)>> {
        if self.core.formulation != Formulation::Direct {
            return None;
        }
        let m = &self.core.mesh;
        Some((0..m.len()).map(|j| (m.x[j], self.mu[j], -self.sigma[j])).collect())
    }

    /// Residual of the boundary condition at two points between Nyström
    /// nodes on every panel lying at least one ungraded cell (piece length
    /// over panels per edge) away from a corner: the exterior trace of the
    /// total field from the layer potentials against the boundary value the
    /// densities encode (zero for the combined-field ansatz).
    pub fn boundary_residual(&self) -> ResidualReport {
        let m = &self.core.mesh;
        let mut per_piece = vec![0.0f64; m.boundary.pieces.len()];
        let mut scale = 0.0f64;
        let mid = m.p / 2;
        let samples = [0.5 * (m.s[0] + m.s[1]), 0.5 * (m.s[mid - 1] + m.s[mid])];
        let results: Vec<(usize, f64, f64)> = m
            .panels
            .par_iter()
            .enumerate()
            .filter(|(_, p)| !p.near_corner)
            .flat_map_iter(|(ip, panel)| {
                samples.iter().map(move |&s| {
                    let (x, _, _) = m.panel_point(panel, s);
                    let mu_s = m.interpolate(panel, &self.mu, s);
                    let ui = self.incident.value(x);
                    let trace = ui + 0.5 * mu_s + self.core.potential(x, &self.mu, &self.sigma, Some((ip, s)));
                    let expected = match self.core.formulation {
                        Formulation::CombinedField => C64::new(0.0, 0.0),
                        _ => mu_s,
                    };
                    (panel.piece, (trace - expected).norm(), ui.norm())
                })
            })
            .collect();
        for (piece, r, u) in results {
            per_piece[piece] = per_piece[piece].max(r);
            scale = scale.max(u);
        }
        let scale = scale.max(1e-300);
        per_piece.iter_mut().for_each(|v| *v /= scale);
        let max = per_piece.iter().copied().fold(0.0, f64::max);
        ResidualReport { per_piece, max }
    }
}

/// `M` far-field samples on the uniform grid `2πj/M`.
pub fn far_field(sol: &ScatterSolution, m: usize) -> Result<FarFieldPattern, ScatterError> {
    if m < MIN_FAR_FIELD_SAMPLES {
        return Err(ScatterError::TooFewSamples(m));
    }
    let samples = (0..m)
        .into_par_iter()
        .map(|j| {
            let a = 2.0 * PI * j as f64 / m as f64;
            (a, sol.far_field_at(a))
        })
        .collect();
    Ok(FarFieldPattern { k: sol.k(), incident: Some(*sol.incident()), samples })
}
