//! Two-far-field discrimination of polygonal obstacles: local corner
//! averages `ℒ(f)(x_c)`, the corner condition
//! `ℒ(u₂∇u₁ − u₁∇u₂)(x_c) ≠ 0`, the combined field vanishing at a corner,
//! vanishing-order probes and the full discrimination experiment.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::expansion::{estimate_vanishing_order_numeric, EstimatorConfig, Expansion, VanishingOrder};
use crate::lines::{classify_angle, AngleClass, LineCondition, EPS_RAT, Q_MAX};
use crate::quad::gauss_legendre;
use crate::scatter::{
    classify_obstacle, far_field, Boundary, FarFieldPattern, ForwardSolver, Incident, MeshConfig, ObstacleClass,
    PolygonalObstacle, ScatterError, ScatterSolution,
};
use crate::vanishing::{compatible, predict, CornerConfig, Verdict};

/// Number of radii used for local averages.
pub const PROBE_RADII: usize = 5;
/// Ratio between consecutive probe radii.
pub const PROBE_RATIO: f64 = 0.5;
/// Successive differences of the averages must shrink at least by this factor.
pub const CONTRACTION_LIMIT: f64 = 0.9;
/// Radial Gauss points per sector.
const RADIAL_POINTS: usize = 16;
/// Gauss points per angular panel of width at most `π/2`.
const ANGULAR_POINTS: usize = 16;
/// A field value below this magnitude at a corner counts as vanishing.
pub const VANISHING_VALUE: f64 = 1e-8;

/// Errors raised by the inverse-problem routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum InverseError {
    #[error("invalid corner probe: {0}")]
    BadProbe(String),
    #[error("local average does not converge (successive differences contract by {contraction:.3})")]
    Divergent { contraction: f64 },
    #[error("incident directions must differ")]
    SameDirections,
    #[error(transparent)]
    Scatter(#[from] ScatterError),
}

/// A field with a gradient, evaluable on an exterior region.
pub trait Field: Sync {
    fn value(&self, x: [f64; 2]) -> C64;
    fn gradient(&self, x: [f64; 2]) -> [C64; 2];
}

impl Field for ScatterSolution {
    fn value(&self, x: [f64; 2]) -> C64 {
        self.total(x)
    }

    fn gradient(&self, x: [f64; 2]) -> [C64; 2] {
        self.total_gradient(x)
    }
}

impl Field for Incident {
    fn value(&self, x: [f64; 2]) -> C64 {
        Incident::value(self, x)
    }

    fn gradient(&self, x: [f64; 2]) -> [C64; 2] {
        Incident::gradient(self, x)
    }
}

impl Field for Expansion {
    fn value(&self, x: [f64; 2]) -> C64 {
        self.eval_xy(x)
    }

    fn gradient(&self, x: [f64; 2]) -> [C64; 2] {
        self.gradient_xy(x)
    }
}

/// The region `Ω_r(x_c)`: the sector `{x_c + ρ(cos θ, sin θ) : ρ < r,
/// start ≤ θ ≤ start + width}` at a decreasing sequence of radii.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CornerProbe {
    pub corner: [f64; 2],
    pub start: f64,
    pub width: f64,
    pub radii: Vec<f64>,
}

impl CornerProbe {
    pub fn new(corner: [f64; 2], start: f64, width: f64, radii: Vec<f64>) -> Result<Self, InverseError> {
        if !(corner.iter().all(|c| c.is_finite()) && start.is_finite()) {
            return Err(InverseError::BadProbe("corner and start angle must be finite".into()));
        }
        if !(width > 0.0 && width <= 2.0 * PI) {
            return Err(InverseError::BadProbe(format!("sector width must lie in (0, 2π], got {width}")));
        }
        if radii.len() < 2 {
            return Err(InverseError::BadProbe("need at least two radii".into()));
        }
        if radii.iter().any(|r| !(r.is_finite() && *r > 0.0)) || radii.windows(2).any(|w| !(w[1] < w[0])) {
            return Err(InverseError::BadProbe("radii must be positive and strictly decreasing".into()));
        }
        Ok(Self { corner, start, width, radii })
    }

    /// [`PROBE_RADII`] radii `r0, r0/2, …` on the given sector.
    pub fn geometric(corner: [f64; 2], start: f64, width: f64, r0: f64) -> Result<Self, InverseError> {
        let radii = (0..PROBE_RADII).map(|i| r0 * PROBE_RATIO.powi(i as i32)).collect();
        Self::new(corner, start, width, radii)
    }

    /// Full disks around a point with no boundary nearby.
    pub fn disk(center: [f64; 2], r0: f64) -> Result<Self, InverseError> {
        Self::geometric(center, 0.0, 2.0 * PI, r0)
    }

    /// The exterior sector at vertex `vertex` of component `component`, with
    /// radii starting at a tenth of the shortest edge.
    pub fn at_vertex(obstacle: &PolygonalObstacle, component: usize, vertex: usize) -> Result<Self, InverseError> {
        let corner = vertex_corner(obstacle, component, vertex)?;
        Self::geometric(corner.point, corner.exterior_start, corner.exterior_width, obstacle.min_edge_length() / 10.0)
    }

    /// Whether every sector lies at distance greater than zero from the obstacle.
    pub fn avoids(&self, obstacle: &PolygonalObstacle) -> bool {
        let dist = obstacle
            .components()
            .iter()
            .map(|c| c.boundary_distance(self.corner))
            .fold(f64::INFINITY, f64::min);
        !obstacle.contains_closed(self.corner, 0.0) && self.radii[0] < dist
    }

    /// Sector quadrature nodes of radius `r`, with weights summing to the sector area.
    fn nodes(&self, r: f64) -> Vec<([f64; 2], f64)> {
        let (rx, rw) = gauss_legendre(RADIAL_POINTS);
        let (ax, aw) = gauss_legendre(ANGULAR_POINTS);
        let panels = (self.width / (0.5 * PI)).ceil().max(1.0) as usize;
        let dth = self.width / panels as f64;
        let mut out = Vec::with_capacity(panels * ANGULAR_POINTS * RADIAL_POINTS);
        for p in 0..panels {
            for (xa, wa) in ax.iter().zip(&aw) {
                let th = self.start + dth * (p as f64 + 0.5 * (xa + 1.0));
                let (s, c) = th.sin_cos();
                for (xr, wr) in rx.iter().zip(&rw) {
                    let rho = 0.5 * r * (xr + 1.0);
                    out.push(([self.corner[0] + rho * c, self.corner[1] + rho * s], 0.25 * r * dth * wa * wr * rho));
                }
            }
        }
        out
    }
}

/// Geometry of one polygon vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
struct VertexCorner {
    point: [f64; 2],
    /// Interior angle in units of `π`.
    angle: f64,
    exterior_start: f64,
    exterior_width: f64,
    /// Conditions on the incoming and outgoing edges.
    conditions: (LineCondition, LineCondition),
}

fn vertex_corner(obstacle: &PolygonalObstacle, component: usize, vertex: usize) -> Result<VertexCorner, InverseError> {
    let comp = obstacle
        .components()
        .get(component)
        .ok_or_else(|| InverseError::BadProbe(format!("no component {component}")))?;
    let n = comp.vertices.len();
    if vertex >= n {
        return Err(InverseError::BadProbe(format!("no vertex {vertex} in component {component}")));
    }
    let v = comp.vertices[vertex];
    let prev = comp.vertices[(vertex + n - 1) % n];
    let angle = comp.interior_angles()[vertex];
    let to_prev = (prev[1] - v[1]).atan2(prev[0] - v[0]);
    Ok(VertexCorner {
        point: v,
        angle,
        exterior_start: to_prev,
        exterior_width: (2.0 - angle) * PI,
        conditions: (comp.edge_conditions[(vertex + n - 1) % n], comp.edge_conditions[vertex]),
    })
}

/// Sector averages of a vector field over a [`CornerProbe`] and their limit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalAverage {
    pub radii: Vec<f64>,
    /// Average of each component at each radius.
    pub averages: Vec<Vec<C64>>,
    /// Extrapolated value at `r = 0`; absent when the averages diverge.
    pub limit: Option<Vec<C64>>,
    /// Difference between the last two extrapolants.
    pub error_estimate: f64,
    /// Geometric-mean ratio of successive differences of the averages.
    pub contraction: f64,
}

/// `(1/|Ω_r|) ∫_{Ω_r} f` at every probe radius, extrapolated to `r → 0`.
///
/// The extrapolation is Richardson's in powers `r, r², …` (Neville's table
/// evaluated at zero). The averages count as divergent unless their
/// successive differences contract by at least [`CONTRACTION_LIMIT`].
pub fn local_average<F, const N: usize>(f: F, probe: &CornerProbe) -> LocalAverage
where
    F: Fn([f64; 2]) -> [C64; N] + Sync,
{
    let averages: Vec<Vec<C64>> = probe
        .radii
        .iter()
        .map(|&r| {
            let nodes = probe.nodes(r);
            let area: f64 = nodes.iter().map(|n| n.1).sum();
            let sum = nodes
                .par_iter()
                .map(|(x, w)| f(*x).map(|v| v * *w))
                .reduce(|| [C64::new(0.0, 0.0); N], |a, b| std::array::from_fn(|c| a[c] + b[c]));
            sum.iter().map(|v| v / area).collect()
        })
        .collect();
    let gap = |a: &[C64], b: &[C64]| a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    let scale = averages.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max);
    let diffs: Vec<f64> = averages.windows(2).map(|w| gap(&w[0], &w[1])).collect();
    let finite = averages.iter().flatten().all(|v| v.is_finite());
    let settled = diffs.iter().all(|d| *d <= 1e-13 * scale);
    let contraction = if settled {
        0.0
    } else {
        let (first, last) = (diffs[0].max(1e-300), diffs[diffs.len() - 1]);
        (last / first).powf(1.0 / (diffs.len() - 1).max(1) as f64)
    };
    let converged = finite && (settled || contraction <= CONTRACTION_LIMIT);
    let (limit, error_estimate) = if converged {
        let (top, previous) = richardson(&probe.radii, &averages);
        let err = gap(&top, &previous);
        (Some(top), err)
    } else {
        (None, f64::INFINITY)
    };
    LocalAverage { radii: probe.radii.clone(), averages, limit, error_estimate, contraction }
}

/// Values at zero of the interpolating polynomials in `r` through all
/// points and through all but the first.
fn richardson(radii: &[f64], values: &[Vec<C64>]) -> (Vec<C64>, Vec<C64>) {
    let m = radii.len();
    let comps = values[0].len();
    let mut top = vec![C64::new(0.0, 0.0); comps];
    let mut previous = vec![C64::new(0.0, 0.0); comps];
    for c in 0..comps {
        let mut t: Vec<C64> = values.iter().map(|v| v[c]).collect();
        let mut diag = vec![t[m - 1]];
        for j in 1..m {
            for i in (j..m).rev() {
                let ratio = radii[i - j] / radii[i];
                t[i] = t[i] + (t[i] - t[i - 1]) / (ratio - 1.0);
            }
            diag.push(t[m - 1]);
        }
        top[c] = diag[m - 1];
        previous[c] = diag[m - 2];
    }
    (top, previous)
}

/// The corner functional `ℒ(u₂∇u₁ − u₁∇u₂)(x_c)` and its nonvanishing verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cc1Report {
    pub value: [C64; 2],
    pub norm: f64,
    pub nonzero: bool,
    pub average: LocalAverage,
}

/// Evaluates `ℒ(u₂∇u₁ − u₁∇u₂)(x_c)` with analytic gradients; `nonzero` is
/// `‖value‖ > tol`.
pub fn check_cc1(u1: &dyn Field, u2: &dyn Field, probe: &CornerProbe, tol: f64) -> Result<Cc1Report, InverseError> {
    let average = local_average(
        |x| {
            let (a, b) = (u1.value(x), u2.value(x));
            let (ga, gb) = (u1.gradient(x), u2.gradient(x));
            [b * ga[0] - a * gb[0], b * ga[1] - a * gb[1]]
        },
        probe,
    );
    let limit = average.limit.clone().ok_or(InverseError::Divergent { contraction: average.contraction })?;
    let value = [limit[0], limit[1]];
    let norm = (value[0].norm_sqr() + value[1].norm_sqr()).sqrt();
    Ok(Cc1Report { value, norm, nonzero: norm > tol, average })
}

/// `v = α₁u₁ + α₂u₂` with `α₁ = u₂(x_c)`, `α₂ = −u₁(x_c)`, so that `v(x_c) = 0`.
pub struct CombinedField<'a> {
    pub alpha1: C64,
    pub alpha2: C64,
    /// Both fields vanish at the corner; `v` is then `u₁`.
    pub degenerate: bool,
    u1: &'a dyn Field,
    u2: &'a dyn Field,
}

impl Field for CombinedField<'_> {
    fn value(&self, x: [f64; 2]) -> C64 {
        self.alpha1 * self.u1.value(x) + self.alpha2 * self.u2.value(x)
    }

    fn gradient(&self, x: [f64; 2]) -> [C64; 2] {
        let (a, b) = (self.u1.gradient(x), self.u2.gradient(x));
        [self.alpha1 * a[0] + self.alpha2 * b[0], self.alpha1 * a[1] + self.alpha2 * b[1]]
    }
}

/// Builds the combination of `u1` and `u2` that vanishes at `x_c`.
pub fn combined_field<'a>(u1: &'a dyn Field, u2: &'a dyn Field, x_c: [f64; 2]) -> CombinedField<'a> {
    let (a, b) = (u1.value(x_c), u2.value(x_c));
    if a == C64::new(0.0, 0.0) && b == C64::new(0.0, 0.0) {
        return CombinedField { alpha1: C64::new(1.0, 0.0), alpha2: C64::new(0.0, 0.0), degenerate: true, u1, u2 };
    }
    CombinedField { alpha1: b, alpha2: -a, degenerate: false, u1, u2 }
}

/// Smallest singular value of the column-normalized sample matrix
/// `[u₁(x_i), u₂(x_i)]` on a `grid × grid` square of half-width `radius`;
/// positive exactly when only `α₁ = α₂ = 0` makes `α₁u₁ + α₂u₂` vanish on the samples.
pub fn independence_witness(u1: &dyn Field, u2: &dyn Field, center: [f64; 2], radius: f64, grid: usize) -> f64 {
    let grid = grid.max(2);
    let pts: Vec<[f64; 2]> = (0..grid * grid)
        .map(|i| {
            let (a, b) = ((i % grid) as f64, (i / grid) as f64);
            let h = 2.0 * radius / (grid - 1) as f64;
            [center[0] - radius + a * h, center[1] - radius + b * h]
        })
        .collect();
    let mut m = DMatrix::from_fn(pts.len(), 2, |i, j| if j == 0 { u1.value(pts[i]) } else { u2.value(pts[i]) });
    for mut col in m.column_iter_mut() {
        let n = col.norm();
        if n > 0.0 {
            col /= C64::new(n, 0.0);
        }
    }
    m.singular_values().iter().copied().fold(f64::INFINITY, f64::min)
}

/// Outcome of a vanishing-order estimate.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Estimate {
    Order { order: VanishingOrder },
    Inconclusive { reason: String },
}

/// Estimated vanishing order of a field at a corner against the order the
/// corner's boundary conditions would force.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CornerVanishingReport {
    pub corner: [f64; 2],
    pub estimated: Estimate,
    /// Order forced by the corner's conditions; `None` when they cannot hold
    /// (a nodal line with `v(x_c) ≠ 0`).
    pub predicted: Option<Verdict>,
    /// Whether the estimate is compatible with the prediction; `None` when
    /// either is missing.
    pub consistent: Option<bool>,
}

/// Conditions and angle at a corner used for the predicted order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerSetting {
    /// Angle between the two lines in units of `π`, in `(0, 2)`.
    pub angle: f64,
    pub class: AngleClass,
    pub conditions: (LineCondition, LineCondition),
    /// Eigenvalue `λ = k²`.
    pub lambda: f64,
}

/// Radii for the vanishing-order estimate: eight radii over two decades below `r0`.
fn estimate_radii(r0: f64) -> Vec<f64> {
    (0..8).map(|i| r0 * 10f64.powf(-2.0 * i as f64 / 7.0)).collect()
}

/// Estimates the vanishing order of `v` at the probe corner over the probe
/// sector and compares it with the order predicted for a field satisfying
/// the corner's boundary conditions.
pub fn corner_vanishing_probe(v: &dyn Field, probe: &CornerProbe, setting: &CornerSetting) -> CornerVanishingReport {
    let cap = 12;
    let cfg = EstimatorConfig {
        radial_points: 24,
        angular_points: 48,
        cap,
        sector: (probe.width < 2.0 * PI).then_some((probe.start, probe.width)),
        ..EstimatorConfig::default()
    };
    let u0 = v.value(probe.corner);
    let scale = probe
        .nodes(probe.radii[0])
        .iter()
        .map(|(x, _)| v.value(*x).norm())
        .fold(0.0, f64::max);
    let u0 = if u0.norm() <= 1e-10 * scale.max(1e-300) { C64::new(0.0, 0.0) } else { u0 };
    let (a, b) = setting.conditions;
    let config = match setting.class {
        AngleClass::Rational { p, q } => CornerConfig::rational(a, b, p, q, setting.lambda, u0),
        AngleClass::Irrational => CornerConfig::new(a, b, setting.angle, setting.lambda, u0).map(|mut c| {
            c.angle_class = AngleClass::Irrational;
            c
        }),
    };
    let predicted = config.ok().map(|c| predict(&c));
    let estimated = match estimate_vanishing_order_numeric(&|x| v.value(x), probe.corner, &estimate_radii(probe.radii[0]), &cfg)
    {
        Ok(order) => Estimate::Order { order },
        Err(e) => Estimate::Inconclusive { reason: e.to_string() },
    };
    let consistent = match (&estimated, predicted) {
        (Estimate::Order { order }, Some(p)) => Some(compatible(p.order, *order, cap)),
        _ => None,
    };
    CornerVanishingReport { corner: probe.corner, estimated, predicted, consistent }
}

/// Counterclockwise convex hull without collinear points.
pub fn convex_hull(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut p = points.to_vec();
    p.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let cross = |o: [f64; 2], a: [f64; 2], b: [f64; 2]| (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    let mut hull: Vec<[f64; 2]> = Vec::with_capacity(2 * p.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &[f64; 2]>> = if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
        for &q in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0.0 {
                hull.pop();
            }
            hull.push(q);
        }
        hull.pop();
    }
    hull
}

/// Whether `p` lies strictly outside the convex polygon `hull` (CCW) by more than `tol`.
fn outside_hull(hull: &[[f64; 2]], p: [f64; 2], tol: f64) -> bool {
    let n = hull.len();
    (0..n).any(|i| {
        let (a, b) = (hull[i], hull[(i + 1) % n]);
        let e = [b[0] - a[0], b[1] - a[1]];
        let len = e[0].hypot(e[1]);
        (e[0] * (p[1] - a[1]) - e[1] * (p[0] - a[0])) / len < -tol
    })
}

/// Which alternative of the corner argument applies at a corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerCase {
    /// One of the two total fields vanishes at the corner and is probed directly.
    FieldVanishes { direction: usize },
    /// The combination `α₁u₁ + α₂u₂` vanishing at the corner is probed.
    Combined,
}

/// Analysis at one hull corner of one obstacle lying outside the other's hull.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CornerAnalysis {
    /// Index (0 or 1) of the obstacle owning the corner.
    pub owner: usize,
    pub vertex: [f64; 2],
    /// Interior angle in units of `π`.
    pub angle: f64,
    pub angle_class: AngleClass,
    pub conditions: [LineCondition; 2],
    /// Total fields of the other obstacle at the corner, one per direction.
    pub field_values: [C64; 2],
    pub case: CornerCase,
    pub alphas: [C64; 2],
    pub vanishing: CornerVanishingReport,
    /// The corner condition for the other obstacle's fields; `None` if the averages diverged.
    pub cc1: Option<Cc1Report>,
    /// Whether the uniqueness results predict distinct far fields from this corner.
    pub predicts_distinct: bool,
}

/// A hull edge shared by both obstacles carrying different conditions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HullEdgeDifference {
    pub from: [f64; 2],
    pub to: [f64; 2],
    pub conditions: [LineCondition; 2],
}

/// What the uniqueness results predict for the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Prediction {
    /// The obstacles are the same.
    Identical,
    /// A hull corner of one lies outside the other's hull and satisfies the
    /// angle condition (irrational, or rational of degree at least 3 with the
    /// corner condition verified).
    DistinctByCorner,
    /// The hulls coincide and a shared hull edge carries different conditions.
    DistinctByImpedance,
    /// No result applies.
    NoPrediction,
}

impl Prediction {
    pub fn describe(&self) -> &'static str {
        match self {
            Prediction::Identical => "identical obstacles: far fields coincide",
            Prediction::DistinctByCorner => {
                "a hull corner of one obstacle lies outside the other's hull: far fields must differ"
            }
            Prediction::DistinctByImpedance => {
                "equal hulls with different conditions on a shared hull edge: far fields must differ"
            }
            Prediction::NoPrediction => "no uniqueness result applies to this pair",
        }
    }
}

/// Result of a two-direction discrimination experiment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscriminationReport {
    pub k: f64,
    pub directions: [[f64; 2]; 2],
    pub samples: usize,
    /// `‖u_∞ − ũ_∞‖_{L²(S¹)}` for each direction.
    pub discrepancies: [f64; 2],
    /// Discrepancies relative to `‖u_∞‖_{L²(S¹)}` of the first obstacle.
    pub relative_discrepancies: [f64; 2],
    /// Largest far-field change between the base and the refined mesh over
    /// both obstacles and directions.
    pub noise_floor: f64,
    pub hulls: [Vec<[f64; 2]>; 2],
    pub classes: [ObstacleClass; 2],
    pub corners: Vec<CornerAnalysis>,
    pub hull_edge_differences: Vec<HullEdgeDifference>,
    pub prediction: Prediction,
    pub verdict: String,
    /// Whether both discrepancies exceed the noise floor.
    pub observed_distinct: bool,
    /// Largest condition estimate over all solves.
    pub condition_estimate: f64,
}

/// Solutions for one obstacle on the base and refined meshes, both directions.
struct Solved {
    base: [ScatterSolution; 2],
    fine: [ScatterSolution; 2],
}

fn solve_pair(obstacle: &PolygonalObstacle, incidents: &[Incident; 2], mesh: &MeshConfig) -> Result<Solved, ScatterError> {
    let boundary = Boundary::from_obstacle(obstacle);
    let k = incidents[0].k();
    let (base, fine) = rayon::join(
        || ForwardSolver::new(&boundary, k, mesh),
        || ForwardSolver::new(&boundary, k, &mesh.refined()),
    );
    let (base, fine) = (base?, fine?);
    Ok(Solved {
        base: [base.solve(&incidents[0])?, base.solve(&incidents[1])?],
        fine: [fine.solve(&incidents[0])?, fine.solve(&incidents[1])?],
    })
}

/// Solves the four forward problems (two obstacles, two plane-wave
/// directions) on a base and a refined mesh, compares far fields, and
/// analyses every hull corner of one obstacle lying outside the other's hull.
pub fn discrimination_experiment(
    omega1: &PolygonalObstacle,
    omega2: &PolygonalObstacle,
    k: f64,
    d1: f64,
    d2: f64,
    samples: usize,
    mesh: &MeshConfig,
) -> Result<DiscriminationReport, InverseError> {
    let incidents = [Incident::plane_wave(k, d1), Incident::plane_wave(k, d2)];
    let dirs = incidents.map(|i| match i {
        Incident::PlaneWave { d, .. } => d,
        Incident::PointSource { .. } => unreachable!(),
    });
    if (dirs[0][0] - dirs[1][0]).hypot(dirs[0][1] - dirs[1][1]) < 1e-12 {
        return Err(InverseError::SameDirections);
    }
    for inc in &incidents {
        inc.validate(Some(omega1))?;
        inc.validate(Some(omega2))?;
    }
    let obstacles = [omega1, omega2];
    let (s1, s2) = rayon::join(|| solve_pair(omega1, &incidents, mesh), || solve_pair(omega2, &incidents, mesh));
    let solved = [s1?, s2?];
    let mut patterns: Vec<[FarFieldPattern; 2]> = Vec::new();
    let mut noise_floor = 0.0f64;
    let mut condition = 0.0f64;
    for s in &solved {
        let fine = [far_field(&s.fine[0], samples)?, far_field(&s.fine[1], samples)?];
        for j in 0..2 {
            let coarse = far_field(&s.base[j], samples)?;
            noise_floor = noise_floor.max(coarse.l2_distance(&fine[j])?);
            condition = condition.max(s.base[j].condition_estimate()).max(s.fine[j].condition_estimate());
        }
        patterns.push(fine);
    }
    let mut discrepancies = [0.0; 2];
    let mut relative = [0.0; 2];
    for j in 0..2 {
        discrepancies[j] = patterns[0][j].l2_distance(&patterns[1][j])?;
        relative[j] = discrepancies[j] / patterns[0][j].l2_norm().max(1e-300);
    }
    let hulls = obstacles.map(|o| convex_hull(&o.vertices().collect::<Vec<_>>()));
    let mut corners = Vec::new();
    for owner in 0..2 {
        let other = 1 - owner;
        let fields: [&dyn Field; 2] = [&solved[other].fine[0], &solved[other].fine[1]];
        for (ci, comp) in obstacles[owner].components().iter().enumerate() {
            for vi in 0..comp.vertices.len() {
                let v = comp.vertices[vi];
                let on_hull = hulls[owner].iter().any(|h| h == &v);
                let tol = 1e-9 * obstacles[other].diameter();
                if !on_hull || !outside_hull(&hulls[other], v, tol) {
                    continue;
                }
                corners.push(analyse_corner(obstacles, owner, ci, vi, fields, k)?);
            }
        }
    }
    let hull_edge_differences = shared_hull_edges(obstacles, &hulls);
    let prediction = if omega1 == omega2 {
        Prediction::Identical
    } else if corners.iter().any(|c| c.predicts_distinct) {
        Prediction::DistinctByCorner
    } else if hulls_coincide(&hulls) && !hull_edge_differences.is_empty() {
        Prediction::DistinctByImpedance
    } else {
        Prediction::NoPrediction
    };
    let observed_distinct = discrepancies.iter().all(|d| *d > noise_floor);
    Ok(DiscriminationReport {
        k,
        directions: dirs,
        samples,
        discrepancies,
        relative_discrepancies: relative,
        noise_floor,
        hulls,
        classes: [classify_obstacle(omega1), classify_obstacle(omega2)],
        corners,
        hull_edge_differences,
        prediction,
        verdict: prediction.describe().to_string(),
        observed_distinct,
        condition_estimate: condition,
    })
}

fn analyse_corner(
    obstacles: [&PolygonalObstacle; 2],
    owner: usize,
    component: usize,
    vertex: usize,
    fields: [&dyn Field; 2],
    k: f64,
) -> Result<CornerAnalysis, InverseError> {
    let other = obstacles[1 - owner];
    let corner = vertex_corner(obstacles[owner], component, vertex)?;
    let dist = other
        .components()
        .iter()
        .map(|c| c.boundary_distance(corner.point))
        .fold(f64::INFINITY, f64::min);
    let r0 = (obstacles[owner].min_edge_length() / 10.0).min(0.5 * dist);
    let probe = CornerProbe::geometric(corner.point, corner.exterior_start, corner.exterior_width, r0)?;
    let class = classify_angle(corner.angle, Q_MAX, EPS_RAT).unwrap_or(AngleClass::Irrational);
    let values = [fields[0].value(corner.point), fields[1].value(corner.point)];
    let setting = CornerSetting { angle: corner.angle, class, conditions: corner.conditions, lambda: k * k };
    let vanishing_dir = (0..2).find(|&j| values[j].norm() <= VANISHING_VALUE);
    let (case, alphas, vanishing) = match vanishing_dir {
        Some(j) => {
            let mut alphas = [C64::new(0.0, 0.0); 2];
            alphas[j] = C64::new(1.0, 0.0);
            (CornerCase::FieldVanishes { direction: j }, alphas, corner_vanishing_probe(fields[j], &probe, &setting))
        }
        None => {
            let v = combined_field(fields[0], fields[1], corner.point);
            let report = corner_vanishing_probe(&v, &probe, &setting);
            (CornerCase::Combined, [v.alpha1, v.alpha2], report)
        }
    };
    let scale = values.iter().map(|v| v.norm()).fold(1.0, f64::max);
    let cc1 = check_cc1(fields[0], fields[1], &probe, 1e-6 * k * scale * scale).ok();
    let predicts_distinct = match class {
        AngleClass::Irrational => true,
        AngleClass::Rational { q, .. } => q >= 3 && cc1.as_ref().is_some_and(|c| c.nonzero),
    };
    Ok(CornerAnalysis {
        owner,
        vertex: corner.point,
        angle: corner.angle,
        angle_class: class,
        conditions: [corner.conditions.0, corner.conditions.1],
        field_values: values,
        case,
        alphas,
        vanishing,
        cc1,
        predicts_distinct,
    })
}

fn hulls_coincide(hulls: &[Vec<[f64; 2]>; 2]) -> bool {
    let close = |a: [f64; 2], b: [f64; 2]| (a[0] - b[0]).hypot(a[1] - b[1]) <= 1e-12 * (1.0 + a[0].hypot(a[1]));
    hulls[0].len() == hulls[1].len() && hulls[0].iter().all(|a| hulls[1].iter().any(|b| close(*a, *b)))
}

/// Polygon edges lying on both hulls whose conditions differ between the obstacles.
fn shared_hull_edges(obstacles: [&PolygonalObstacle; 2], hulls: &[Vec<[f64; 2]>; 2]) -> Vec<HullEdgeDifference> {
    let close = |a: [f64; 2], b: [f64; 2]| (a[0] - b[0]).hypot(a[1] - b[1]) <= 1e-12 * (1.0 + a[0].hypot(a[1]));
    let edge_condition = |o: &PolygonalObstacle, a: [f64; 2], b: [f64; 2]| {
        o.components().iter().find_map(|c| {
            let n = c.vertices.len();
            (0..n)
                .find(|&i| close(c.vertices[i], a) && close(c.vertices[(i + 1) % n], b))
                .map(|i| c.edge_conditions[i])
        })
    };
    let h = &hulls[0];
    let mut out = Vec::new();
    for i in 0..h.len() {
        let (a, b) = (h[i], h[(i + 1) % h.len()]);
        if let (Some(c0), Some(c1)) = (edge_condition(obstacles[0], a, b), edge_condition(obstacles[1], a, b)) {
            if c0 != c1 {
                out.push(HullEdgeDifference { from: a, to: b, conditions: [c0, c1] });
            }
        }
    }
    out
}

/// Discrepancies between measured far fields (for instance read with
/// [`FarFieldPattern::from_csv`]) and computed ones, direction by direction.
pub fn far_field_discrepancies(
    computed: &[FarFieldPattern; 2],
    measured: &[FarFieldPattern; 2],
) -> Result<[f64; 2], InverseError> {
    Ok([computed[0].l2_distance(&measured[0])?, computed[1].l2_distance(&measured[1])?])
}
