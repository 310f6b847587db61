//! Time-harmonic acoustic scattering by polygonal obstacles with mixed
//! sound-soft, sound-hard and impedance edges.
//!
//! The exterior problem `Δu + k²u = 0`, `∂_ν u + η u = 0` on each edge
//! (`η = ∞` meaning `u = 0`) with the Sommerfeld radiation condition is solved
//! by a Nyström discretization of a boundary integral equation on a
//! corner-graded panel mesh. Far-field patterns are normalized by
//! `u^s(x) = e^{ikr} r^{-1/2} u_∞(x̂) + O(r^{-3/2})`.

mod geometry;
mod mie;
mod solver;

pub use geometry::{Boundary, BoundaryPiece, Curve};
pub use mie::MieDisk;
pub use solver::{far_field, solve_forward, ForwardSolver, ResidualReport, ScatterSolution};

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::lines::{classify_angle, AngleClass, LineCondition, LinesError, EPS_RAT, Q_MAX};
use crate::specfun::hankel01;

/// Smallest number of far-field samples accepted by [`far_field`].
pub const MIN_FAR_FIELD_SAMPLES: usize = 64;

/// Errors raised by the scattering routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScatterError {
    #[error("degenerate obstacle: {0}")]
    Degenerate(String),
    #[error("impedance {0} needs Re η >= 0 and Im η >= 0")]
    BadImpedance(C64),
    #[error("invalid incident field: {0}")]
    BadIncident(String),
    #[error("invalid mesh configuration: {0}")]
    BadMesh(String),
    #[error("linear solve failed; condition estimate {condition:.3e}")]
    Solve { condition: f64 },
    #[error("far field needs at least {MIN_FAR_FIELD_SAMPLES} samples, got {0}")]
    TooFewSamples(usize),
    #[error("wavenumber mismatch: solver has k = {solver}, incident has k = {incident}")]
    WavenumberMismatch { solver: f64, incident: f64 },
    #[error("malformed obstacle JSON: {0}")]
    Json(String),
    #[error("far-field CSV: {0}")]
    Csv(String),
    #[error(transparent)]
    Lines(#[from] LinesError),
}

/// One simple polygon with a boundary condition on each edge; edge `i` joins
/// vertex `i` to vertex `i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonComponent {
    pub vertices: Vec<[f64; 2]>,
    pub edge_conditions: Vec<LineCondition>,
}

impl PolygonComponent {
    /// Interior angles in units of `π`, vertex by vertex.
    pub fn interior_angles(&self) -> Vec<f64> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let prev = self.vertices[(i + n - 1) % n];
                let cur = self.vertices[i];
                let next = self.vertices[(i + 1) % n];
                let e_in = sub(cur, prev);
                let e_out = sub(next, cur);
                let turn = cross(e_in, e_out).atan2(dot(e_in, e_out));
                (PI - turn) / PI
            })
            .collect()
    }

    fn signed_area(&self) -> f64 {
        let n = self.vertices.len();
        0.5 * (0..n).map(|i| cross(self.vertices[i], self.vertices[(i + 1) % n])).sum::<f64>()
    }

    fn edge(&self, i: usize) -> ([f64; 2], [f64; 2]) {
        (self.vertices[i], self.vertices[(i + 1) % self.vertices.len()])
    }

    /// Whether `p` lies strictly inside the polygon (crossing-number test).
    pub fn contains(&self, p: [f64; 2]) -> bool {
        let n = self.vertices.len();
        let mut inside = false;
        for i in 0..n {
            let (a, b) = self.edge(i);
            if (a[1] > p[1]) != (b[1] > p[1]) {
                let x = a[0] + (p[1] - a[1]) / (b[1] - a[1]) * (b[0] - a[0]);
                if p[0] < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Distance from `p` to the polygon boundary.
    pub fn boundary_distance(&self, p: [f64; 2]) -> f64 {
        (0..self.vertices.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                point_segment_distance(p, a, b)
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// An admissible polygonal obstacle: one or more disjoint simple polygons,
/// each listed counterclockwise, with a condition per edge.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalObstacle {
    components: Vec<PolygonComponent>,
}

/// Rationality class of an obstacle: irrational when every corner angle is
/// irrational, otherwise rational of the smallest degree among its rational
/// corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ObstacleClass {
    Irrational,
    Rational { degree: u64 },
}

impl PolygonalObstacle {
    /// Validates simplicity, orientation, impedance signs and disjointness.
    pub fn new(components: Vec<PolygonComponent>) -> Result<Self, ScatterError> {
        if components.is_empty() {
            return Err(ScatterError::Degenerate("no components".into()));
        }
        for (c, comp) in components.iter().enumerate() {
            validate_component(c, comp)?;
        }
        for a in 0..components.len() {
            for b in a + 1..components.len() {
                validate_disjoint(a, &components[a], b, &components[b])?;
            }
        }
        Ok(Self { components })
    }

    /// A single polygon with one condition per edge.
    pub fn polygon(vertices: Vec<[f64; 2]>, edge_conditions: Vec<LineCondition>) -> Result<Self, ScatterError> {
        Self::new(vec![PolygonComponent { vertices, edge_conditions }])
    }

    /// A single polygon with the same condition on every edge.
    pub fn uniform(vertices: Vec<[f64; 2]>, condition: LineCondition) -> Result<Self, ScatterError> {
        let n = vertices.len();
        Self::polygon(vertices, vec![condition; n])
    }

    pub fn components(&self) -> &[PolygonComponent] {
        &self.components
    }

    /// All vertices of all components.
    pub fn vertices(&self) -> impl Iterator<Item = [f64; 2]> + '_ {
        self.components.iter().flat_map(|c| c.vertices.iter().copied())
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> f64 {
        let v: Vec<_> = self.vertices().collect();
        let mut d: f64 = 0.0;
        for a in &v {
            for b in &v {
                d = d.max(norm(sub(*a, *b)));
            }
        }
        d
    }

    /// Shortest edge length.
    pub fn min_edge_length(&self) -> f64 {
        self.components
            .iter()
            .flat_map(|c| (0..c.vertices.len()).map(move |i| c.edge(i)))
            .map(|(a, b)| norm(sub(b, a)))
            .fold(f64::INFINITY, f64::min)
    }

    /// The obstacle mapped by `x ↦ center + scale (x − center)`.
    pub fn scaled(&self, center: [f64; 2], scale: f64) -> Result<Self, ScatterError> {
        let components = self
            .components
            .iter()
            .map(|c| PolygonComponent {
                vertices: c
                    .vertices
                    .iter()
                    .map(|v| [center[0] + scale * (v[0] - center[0]), center[1] + scale * (v[1] - center[1])])
                    .collect(),
                edge_conditions: c.edge_conditions.clone(),
            })
            .collect();
        Self::new(components)
    }

    /// The obstacle with the condition on edge `edge` of component `component` replaced.
    pub fn with_edge_condition(
        &self,
        component: usize,
        edge: usize,
        condition: LineCondition,
    ) -> Result<Self, ScatterError> {
        let mut components = self.components.clone();
        let comp = components
            .get_mut(component)
            .ok_or_else(|| ScatterError::Degenerate(format!("no component {component}")))?;
        let slot = comp
            .edge_conditions
            .get_mut(edge)
            .ok_or_else(|| ScatterError::Degenerate(format!("no edge {edge} in component {component}")))?;
        *slot = condition;
        Self::new(components)
    }

    /// Whether `p` lies in the closure of the obstacle, up to `tol`.
    pub fn contains_closed(&self, p: [f64; 2], tol: f64) -> bool {
        self.components.iter().any(|c| c.contains(p) || c.boundary_distance(p) <= tol)
    }

    /// Whether every edge is sound-soft.
    pub fn is_sound_soft(&self) -> bool {
        self.components.iter().all(|c| c.edge_conditions.iter().all(|e| *e == LineCondition::Nodal))
    }

    /// Whether no edge absorbs energy (`η` real, `0` or `∞`).
    pub fn is_non_absorbing(&self) -> bool {
        self.components.iter().all(|c| {
            c.edge_conditions.iter().all(|e| match e {
                LineCondition::Impedance(eta) => eta.im == 0.0,
                _ => true,
            })
        })
    }

    /// Classification of every corner angle with the default tolerances.
    pub fn corner_classes(&self) -> Vec<Vec<AngleClass>> {
        self.components
            .iter()
            .map(|c| {
                c.interior_angles()
                    .into_iter()
                    .map(|a| classify_angle(a, Q_MAX, EPS_RAT).unwrap_or(AngleClass::Irrational))
                    .collect()
            })
            .collect()
    }

    /// Parses `{"components":[{"vertices":[[x,y],...],"edges":[{"kind":...,"eta":[re,im]?},...]}]}`.
    pub fn from_json(v: &Value) -> Result<Self, ScatterError> {
        let parsed: ObstacleJson =
            serde_json::from_value(v.clone()).map_err(|e| ScatterError::Json(e.to_string()))?;
        let mut components = Vec::with_capacity(parsed.components.len());
        for comp in parsed.components {
            let edge_conditions = comp
                .edges
                .iter()
                .map(|e| match (e.kind.as_str(), e.eta) {
                    ("dirichlet", None) => Ok(LineCondition::Nodal),
                    ("neumann", None) => Ok(LineCondition::Singular),
                    ("impedance", Some([re, im])) => Ok(LineCondition::impedance(C64::new(re, im))),
                    ("impedance", None) => Err(ScatterError::Json("impedance edge needs \"eta\"".into())),
                    (kind, _) => Err(ScatterError::Json(format!("unknown or malformed edge kind {kind:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            components.push(PolygonComponent { vertices: comp.vertices, edge_conditions });
        }
        Self::new(components)
    }

    /// Inverse of [`PolygonalObstacle::from_json`].
    pub fn to_json(&self) -> Value {
        let components: Vec<Value> = self
            .components
            .iter()
            .map(|c| {
                let edges: Vec<Value> = c
                    .edge_conditions
                    .iter()
                    .map(|e| match e {
                        LineCondition::Nodal => json!({"kind": "dirichlet"}),
                        LineCondition::Singular => json!({"kind": "neumann"}),
                        LineCondition::Impedance(eta) => json!({"kind": "impedance", "eta": [eta.re, eta.im]}),
                    })
                    .collect();
                json!({"vertices": c.vertices, "edges": edges})
            })
            .collect();
        json!({ "components": components })
    }
}

#[derive(Deserialize)]
struct ObstacleJson {
    components: Vec<ComponentJson>,
}

#[derive(Deserialize)]
struct ComponentJson {
    vertices: Vec<[f64; 2]>,
    edges: Vec<EdgeJson>,
}

#[derive(Deserialize)]
struct EdgeJson {
    kind: String,
    #[serde(default)]
    eta: Option<[f64; 2]>,
}

fn validate_component(c: usize, comp: &PolygonComponent) -> Result<(), ScatterError> {
    let n = comp.vertices.len();
    let bad = |msg: String| Err(ScatterError::Degenerate(format!("component {c}: {msg}")));
    if n < 3 {
        return bad(format!("needs at least 3 vertices, got {n}"));
    }
    if comp.edge_conditions.len() != n {
        return bad(format!("{n} vertices but {} edge conditions", comp.edge_conditions.len()));
    }
    if comp.vertices.iter().any(|v| !(v[0].is_finite() && v[1].is_finite())) {
        return bad("non-finite vertex".into());
    }
    for cond in &comp.edge_conditions {
        if let LineCondition::Impedance(eta) = cond {
            if !(eta.re >= 0.0 && eta.im >= 0.0 && eta.re.is_finite() && eta.im.is_finite()) {
                return Err(ScatterError::BadImpedance(*eta));
            }
        }
    }
    let scale = comp.vertices.iter().flat_map(|v| [v[0].abs(), v[1].abs()]).fold(1e-300, f64::max);
    for i in 0..n {
        let (a, b) = comp.edge(i);
        if norm(sub(b, a)) <= 1e-12 * scale {
            return bad(format!("edge {i} has zero length"));
        }
    }
    let area = comp.signed_area();
    if area.abs() <= 1e-12 * scale * scale {
        return bad("zero area".into());
    }
    if area < 0.0 {
        return bad("vertices must be listed counterclockwise".into());
    }
    for (i, alpha) in comp.interior_angles().into_iter().enumerate() {
        if !(alpha > 1e-12 && alpha < 2.0 - 1e-12) {
            return bad(format!("vertex {i} has a degenerate angle"));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                continue;
            }
            let (a, b) = comp.edge(i);
            let (p, q) = comp.edge(j);
            if segments_intersect(a, b, p, q) {
                return bad(format!("edges {i} and {j} intersect"));
            }
        }
    }
    Ok(())
}

fn validate_disjoint(ia: usize, a: &PolygonComponent, ib: usize, b: &PolygonComponent) -> Result<(), ScatterError> {
    let msg = || Err(ScatterError::Degenerate(format!("components {ia} and {ib} have intersecting closures")));
    for i in 0..a.vertices.len() {
        let (p, q) = a.edge(i);
        for j in 0..b.vertices.len() {
            let (r, s) = b.edge(j);
            if segments_intersect(p, q, r, s) {
                return msg();
            }
        }
    }
    if a.vertices.iter().any(|v| b.contains(*v)) || b.vertices.iter().any(|v| a.contains(*v)) {
        return msg();
    }
    Ok(())
}

/// Classifies every corner angle and aggregates: rational of the smallest
/// degree if any corner is rational, otherwise irrational.
pub fn classify_obstacle(obstacle: &PolygonalObstacle) -> ObstacleClass {
    obstacle
        .corner_classes()
        .iter()
        .flatten()
        .filter_map(|c| c.degree())
        .min()
        .map_or(ObstacleClass::Irrational, |degree| ObstacleClass::Rational { degree })
}

/// An incident field of wavenumber `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Incident {
    /// `e^{ik x·d}` with `|d| = 1`.
    PlaneWave { k: f64, d: [f64; 2] },
    /// `H_0^{(1)}(k |x − z₀|)`.
    PointSource { k: f64, z0: [f64; 2] },
}

impl Incident {
    /// Plane wave travelling in direction `(cos φ, sin φ)`.
    pub fn plane_wave(k: f64, angle: f64) -> Self {
        Incident::PlaneWave { k, d: [angle.cos(), angle.sin()] }
    }

    pub fn k(&self) -> f64 {
        match *self {
            Incident::PlaneWave { k, .. } | Incident::PointSource { k, .. } => k,
        }
    }

    /// Checks `k > 0`, `|d| = 1` and that a point source lies outside the obstacle.
    pub fn validate(&self, obstacle: Option<&PolygonalObstacle>) -> Result<(), ScatterError> {
        let k = self.k();
        if !(k.is_finite() && k > 0.0) {
            return Err(ScatterError::BadIncident(format!("wavenumber must be positive, got {k}")));
        }
        match *self {
            Incident::PlaneWave { d, .. } => {
                if (norm(d) - 1.0).abs() > 1e-12 {
                    return Err(ScatterError::BadIncident(format!("direction {d:?} is not a unit vector")));
                }
            }
            Incident::PointSource { z0, .. } => {
                if let Some(o) = obstacle {
                    if o.contains_closed(z0, 1e-12) {
                        return Err(ScatterError::BadIncident(format!("source {z0:?} lies in the obstacle")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Field value at `x`.
    pub fn value(&self, x: [f64; 2]) -> C64 {
        match *self {
            Incident::PlaneWave { k, d } => C64::from_polar(1.0, k * dot(x, d)),
            Incident::PointSource { k, z0 } => hankel01(k * norm(sub(x, z0))).0,
        }
    }

    /// Field gradient at `x`.
    pub fn gradient(&self, x: [f64; 2]) -> [C64; 2] {
        match *self {
            Incident::PlaneWave { k, d } => {
                let f = C64::new(0.0, k) * self.value(x);
                [f * d[0], f * d[1]]
            }
            Incident::PointSource { k, z0 } => {
                let v = sub(x, z0);
                let r = norm(v);
                let h1 = hankel01(k * r).1;
                let f = -k * h1 / r;
                [f * v[0], f * v[1]]
            }
        }
    }
}

/// Boundary discretization parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeshConfig {
    /// Panels on each edge (on each smooth piece of a curved boundary).
    pub panels_per_edge: usize,
    /// Gauss–Legendre nodes per panel.
    pub nodes_per_panel: usize,
    /// Algebraic grading exponent toward corners.
    pub grading_exponent: f64,
    /// Power of the node-clustering map on panels touching a corner; `1` keeps them linear.
    pub corner_panel_power: u32,
    /// Integral formulation.
    pub formulation: Formulation,
    /// Worker threads for matrix assembly; `0` uses the global pool.
    pub workers: usize,
}

impl Default for MeshConfig {
    fn default() -> Self {
        Self { panels_per_edge: 16, nodes_per_panel: 8, grading_exponent: 3.0, corner_panel_power: 4, formulation: Formulation::Auto, workers: 0 }
    }
}

impl MeshConfig {
    /// The configuration with twice as many panels per edge.
    pub fn refined(&self) -> Self {
        Self { panels_per_edge: 2 * self.panels_per_edge, ..*self }
    }

    fn validate(&self) -> Result<(), ScatterError> {
        if self.panels_per_edge < 2 {
            return Err(ScatterError::BadMesh(format!("panels_per_edge must be >= 2, got {}", self.panels_per_edge)));
        }
        if !(2..=32).contains(&self.nodes_per_panel) {
            return Err(ScatterError::BadMesh(format!("nodes_per_panel must be in 2..=32, got {}", self.nodes_per_panel)));
        }
        if !(self.grading_exponent >= 1.0 && self.grading_exponent.is_finite()) {
            return Err(ScatterError::BadMesh(format!("grading exponent must be >= 1, got {}", self.grading_exponent)));
        }
        if !(1..=12).contains(&self.corner_panel_power) {
            return Err(ScatterError::BadMesh(format!(
                "corner_panel_power must be in 1..=12, got {}",
                self.corner_panel_power
            )));
        }
        Ok(())
    }
}

/// Boundary integral formulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Formulation {
    /// Combined-field for all-sound-soft boundaries, direct otherwise.
    Auto,
    /// Indirect combined-field `u^s = (D − ikS)φ`; sound-soft boundaries only.
    CombinedField,
    /// Green's representation in terms of the boundary values of `u` and `∂_ν u`.
    Direct,
}

/// Far-field samples on a uniform angular grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FarFieldPattern {
    pub k: f64,
    pub incident: Option<Incident>,
    /// `(angle, u_∞)` with angles `2πj/M`.
    pub samples: Vec<(f64, C64)>,
}

impl FarFieldPattern {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// `L²(S¹)` norm by the trapezoidal rule.
    pub fn l2_norm(&self) -> f64 {
        let m = self.samples.len() as f64;
        (self.samples.iter().map(|(_, v)| v.norm_sqr()).sum::<f64>() * 2.0 * PI / m).sqrt()
    }

    /// `L²(S¹)` distance to a pattern on the same grid.
    pub fn l2_distance(&self, other: &FarFieldPattern) -> Result<f64, ScatterError> {
        if self.samples.len() != other.samples.len() {
            return Err(ScatterError::Csv(format!(
                "grids differ: {} vs {} samples",
                self.samples.len(),
                other.samples.len()
            )));
        }
        let m = self.samples.len() as f64;
        let s: f64 = self.samples.iter().zip(&other.samples).map(|(a, b)| (a.1 - b.1).norm_sqr()).sum();
        Ok((s * 2.0 * PI / m).sqrt())
    }

    /// Writes `angle_rad,re,im` rows.
    pub fn to_csv(&self) -> Result<String, ScatterError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["angle_rad", "re", "im"]).map_err(|e| ScatterError::Csv(e.to_string()))?;
        for (a, v) in &self.samples {
            w.write_record([format!("{a:.17e}"), format!("{:.17e}", v.re), format!("{:.17e}", v.im)])
                .map_err(|e| ScatterError::Csv(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| ScatterError::Csv(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| ScatterError::Csv(e.to_string()))
    }

    /// Reads `angle_rad,re,im` rows and checks that the grid is uniform on `[0, 2π)`.
    pub fn from_csv(text: &str, k: f64) -> Result<Self, ScatterError> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let headers = r.headers().map_err(|e| ScatterError::Csv(e.to_string()))?.clone();
        if headers.iter().collect::<Vec<_>>() != ["angle_rad", "re", "im"] {
            return Err(ScatterError::Csv(format!("expected header angle_rad,re,im, got {headers:?}")));
        }
        let mut samples = Vec::new();
        for rec in r.records() {
            let rec = rec.map_err(|e| ScatterError::Csv(e.to_string()))?;
            let field = |i: usize| -> Result<f64, ScatterError> {
                rec.get(i)
                    .ok_or_else(|| ScatterError::Csv("short row".into()))?
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| ScatterError::Csv(e.to_string()))
            };
            samples.push((field(0)?, C64::new(field(1)?, field(2)?)));
        }
        let m = samples.len();
        if m < MIN_FAR_FIELD_SAMPLES {
            return Err(ScatterError::TooFewSamples(m));
        }
        for (j, (a, _)) in samples.iter().enumerate() {
            if (a - 2.0 * PI * j as f64 / m as f64).abs() > 1e-9 {
                return Err(ScatterError::Csv(format!("row {j}: angle {a} is off the uniform grid")));
            }
        }
        Ok(Self { k, incident: None, samples })
    }
}

pub(crate) fn sub(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

pub(crate) fn dot(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

pub(crate) fn cross(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

pub(crate) fn norm(a: [f64; 2]) -> f64 {
    a[0].hypot(a[1])
}

pub(crate) fn point_segment_distance(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let ab = sub(b, a);
    let len2 = dot(ab, ab);
    let t = if len2 > 0.0 { (dot(sub(p, a), ab) / len2).clamp(0.0, 1.0) } else { 0.0 };
    norm(sub(p, [a[0] + t * ab[0], a[1] + t * ab[1]]))
}

fn segments_intersect(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> bool {
    let scale = [a, b, c, d].iter().flat_map(|v| [v[0].abs(), v[1].abs()]).fold(1e-300, f64::max);
    let tol = 1e-12 * scale;
    point_segment_distance(a, c, d) <= tol
        || point_segment_distance(b, c, d) <= tol
        || point_segment_distance(c, a, b) <= tol
        || point_segment_distance(d, a, b) <= tol
        || {
            let o1 = cross(sub(b, a), sub(c, a));
            let o2 = cross(sub(b, a), sub(d, a));
            let o3 = cross(sub(d, c), sub(a, c));
            let o4 = cross(sub(d, c), sub(b, c));
            o1 * o2 < 0.0 && o3 * o4 < 0.0
        }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Vec<[f64; 2]> {
        vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]
    }

    #[test]
    fn classification_examples() {
        let sq = PolygonalObstacle::uniform(square(), LineCondition::Nodal).unwrap();
        assert_eq!(classify_obstacle(&sq), ObstacleClass::Rational { degree: 2 });
        let h = 3f64.sqrt() / 2.0;
        let tri = PolygonalObstacle::uniform(vec![[0.0, 0.0], [1.0, 0.0], [0.5, h]], LineCondition::Nodal).unwrap();
        assert_eq!(classify_obstacle(&tri), ObstacleClass::Rational { degree: 3 });
        let a = PI / 5f64.sqrt();
        let b = PI * (2f64.sqrt() - 1.0);
        let side = b.sin() / (PI - a - b).sin();
        let third = [side * a.cos(), side * a.sin()];
        let irr = PolygonalObstacle::uniform(vec![[0.0, 0.0], [1.0, 0.0], third], LineCondition::Nodal).unwrap();
        let angles = irr.components()[0].interior_angles();
        assert!((angles.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert_eq!(classify_obstacle(&irr), ObstacleClass::Irrational, "angles {angles:?}");
    }

    #[test]
    fn validation_rejects_bad_input() {
        let mut cw = square();
        cw.reverse();
        assert!(PolygonalObstacle::uniform(cw, LineCondition::Nodal).is_err());
        let bowtie = vec![[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]];
        assert!(PolygonalObstacle::uniform(bowtie, LineCondition::Nodal).is_err());
        let bad_eta = LineCondition::impedance(C64::new(-1.0, 0.0));
        assert!(matches!(PolygonalObstacle::uniform(square(), bad_eta), Err(ScatterError::BadImpedance(_))));
        let a = PolygonComponent { vertices: square(), edge_conditions: vec![LineCondition::Nodal; 4] };
        let shifted: Vec<_> = square().iter().map(|v| [v[0] + 0.5, v[1] + 0.5]).collect();
        let b = PolygonComponent { vertices: shifted, edge_conditions: vec![LineCondition::Nodal; 4] };
        assert!(PolygonalObstacle::new(vec![a.clone(), b]).is_err());
        let far: Vec<_> = square().iter().map(|v| [v[0] + 3.0, v[1]]).collect();
        let c = PolygonComponent { vertices: far, edge_conditions: vec![LineCondition::Singular; 4] };
        assert!(PolygonalObstacle::new(vec![a, c]).is_ok());
    }

    #[test]
    fn json_roundtrip() {
        let conds = vec![
            LineCondition::Nodal,
            LineCondition::Singular,
            LineCondition::Impedance(C64::new(0.5, 0.25)),
            LineCondition::Nodal,
        ];
        let o = PolygonalObstacle::polygon(square(), conds).unwrap();
        let back = PolygonalObstacle::from_json(&o.to_json()).unwrap();
        assert_eq!(o, back);
        let bad = json!({"components":[{"vertices":[[0,0],[1,0],[0,1]],"edges":[{"kind":"soft"},{"kind":"neumann"},{"kind":"neumann"}]}]});
        assert!(matches!(PolygonalObstacle::from_json(&bad), Err(ScatterError::Json(_))));
    }

    #[test]
    fn far_field_csv_roundtrip() {
        let m = 64;
        let samples = (0..m)
            .map(|j| {
                let a = 2.0 * PI * j as f64 / m as f64;
                (a, C64::new(a.cos(), a.sin() * 0.3))
            })
            .collect();
        let ff = FarFieldPattern { k: 2.0, incident: None, samples };
        let back = FarFieldPattern::from_csv(&ff.to_csv().unwrap(), 2.0).unwrap();
        assert!(ff.l2_distance(&back).unwrap() < 1e-15);
        assert!(FarFieldPattern::from_csv("angle_rad,re,im\n0,1,0\n", 1.0).is_err());
    }

    #[test]
    fn incident_gradients_match_differences() {
        let x = [0.3, -0.7];
        for inc in [Incident::plane_wave(2.0, 0.4), Incident::PointSource { k: 1.5, z0: [2.0, 1.0] }] {
            let g = inc.gradient(x);
            let h = 1e-6;
            for (c, gc) in g.iter().enumerate() {
                let mut xp = x;
                let mut xm = x;
                xp[c] += h;
                xm[c] -= h;
                let fd = (inc.value(xp) - inc.value(xm)) / (2.0 * h);
                assert!((fd - gc).norm() < 1e-7);
            }
        }
    }
}
