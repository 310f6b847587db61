//! Piecewise-smooth boundaries, corner-graded panel meshes and the local
//! quadrature used for singular and near-singular panel integrals.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use serde::Serialize;

use super::{norm, point_segment_distance, sub, MeshConfig, PolygonalObstacle, ScatterError};
use crate::lines::LineCondition;
use crate::quad::gauss_legendre;

/// A smooth boundary piece parametrized over `t ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Curve {
    Segment { a: [f64; 2], b: [f64; 2] },
    /// `center + radius (cos φ, sin φ)` with `φ = start + sweep·t`.
    Arc { center: [f64; 2], radius: f64, start: f64, sweep: f64 },
}

impl Curve {
    pub fn point(&self, t: f64) -> [f64; 2] {
        match *self {
            Curve::Segment { a, b } => [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])],
            Curve::Arc { center, radius, start, sweep } => {
                let phi = start + sweep * t;
                [center[0] + radius * phi.cos(), center[1] + radius * phi.sin()]
            }
        }
    }

    /// `d/dt` of [`Curve::point`].
    pub fn derivative(&self, t: f64) -> [f64; 2] {
        match *self {
            Curve::Segment { a, b } => sub(b, a),
            Curve::Arc { radius, start, sweep, .. } => {
                let phi = start + sweep * t;
                [-radius * sweep * phi.sin(), radius * sweep * phi.cos()]
            }
        }
    }

    /// `(x − y, ν(y)·(x − y))` for `y = point(ty)` and `x = point(ty + dt)`,
    /// free of cancellation when `dt` is small.
    pub fn offset(&self, ty: f64, dt: f64) -> ([f64; 2], f64) {
        match *self {
            Curve::Segment { a, b } => ([dt * (b[0] - a[0]), dt * (b[1] - a[1])], 0.0),
            Curve::Arc { radius, start, sweep, .. } => {
                let half = 0.5 * sweep * dt;
                let mid = start + sweep * (ty + 0.5 * dt);
                let chord = 2.0 * radius * half.sin();
                let nd = -2.0 * radius * half.sin().powi(2) * sweep.signum();
                ([-chord * mid.sin(), chord * mid.cos()], nd)
            }
        }
    }

    /// Largest distance between the curve over `[t0, t1]` and its chord.
    fn sagitta(&self, t0: f64, t1: f64) -> f64 {
        match *self {
            Curve::Segment { .. } => 0.0,
            Curve::Arc { radius, sweep, .. } => radius * (1.0 - (0.5 * sweep * (t1 - t0)).cos()),
        }
    }
}

/// A boundary piece carrying one condition, graded toward the ends that are corners.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryPiece {
    pub curve: Curve,
    pub condition: LineCondition,
    pub corner_at_start: bool,
    pub corner_at_end: bool,
}

/// Closed, counterclockwise boundary loops made of smooth pieces.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Boundary {
    pub pieces: Vec<BoundaryPiece>,
    /// Polygonal outline of each loop for inside tests.
    loops: Vec<Vec<[f64; 2]>>,
}

impl Boundary {
    /// The edges of a polygonal obstacle, every vertex a corner.
    pub fn from_obstacle(obstacle: &PolygonalObstacle) -> Self {
        let mut pieces = Vec::new();
        let mut loops = Vec::new();
        for comp in obstacle.components() {
            let n = comp.vertices.len();
            for i in 0..n {
                pieces.push(BoundaryPiece {
                    curve: Curve::Segment { a: comp.vertices[i], b: comp.vertices[(i + 1) % n] },
                    condition: comp.edge_conditions[i],
                    corner_at_start: true,
                    corner_at_end: true,
                });
            }
            loops.push(comp.vertices.clone());
        }
        Self { pieces, loops }
    }

    /// A disk split into `arcs` equal smooth arcs with one condition.
    pub fn disk(center: [f64; 2], radius: f64, condition: LineCondition, arcs: usize) -> Self {
        let arcs = arcs.max(1);
        let sweep = 2.0 * PI / arcs as f64;
        let pieces = (0..arcs)
            .map(|j| BoundaryPiece {
                curve: Curve::Arc { center, radius, start: j as f64 * sweep, sweep },
                condition,
                corner_at_start: false,
                corner_at_end: false,
            })
            .collect();
        let outline = (0..512)
            .map(|j| {
                let phi = 2.0 * PI * j as f64 / 512.0;
                [center[0] + radius * phi.cos(), center[1] + radius * phi.sin()]
            })
            .collect();
        Self { pieces, loops: vec![outline] }
    }

    /// Whether `p` lies inside one of the loops (polygonal outline).
    pub fn contains(&self, p: [f64; 2]) -> bool {
        self.loops.iter().any(|lp| {
            let n = lp.len();
            let mut inside = false;
            for i in 0..n {
                let (a, b) = (lp[i], lp[(i + 1) % n]);
                if (a[1] > p[1]) != (b[1] > p[1]) {
                    let x = a[0] + (p[1] - a[1]) / (b[1] - a[1]) * (b[0] - a[0]);
                    if p[0] < x {
                        inside = !inside;
                    }
                }
            }
            inside
        })
    }

    pub fn all_sound_soft(&self) -> bool {
        self.pieces.iter().all(|p| p.condition == LineCondition::Nodal)
    }
}

/// One panel: the image of `[t0, t1]` on a piece, carrying `p` Gauss nodes
/// starting at global index `start`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Panel {
    pub piece: usize,
    pub t0: f64,
    pub t1: f64,
    pub start: usize,
    pub length: f64,
    /// Whether the panel lies within one ungraded cell of a corner.
    pub near_corner: bool,
    pub map: PanelMap,
}

/// Map `φ: [-1, 1] → [0, 1]` from the local panel variable to the fraction of
/// `[t0, t1]`; the power maps cluster nodes at the end touching a corner.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum PanelMap {
    Linear,
    Start(i32),
    End(i32),
}

impl PanelMap {
    fn phi(self, s: f64) -> f64 {
        match self {
            PanelMap::Linear => 0.5 * (s + 1.0),
            PanelMap::Start(q) => (0.5 * (s + 1.0)).powi(q),
            PanelMap::End(q) => 1.0 - (0.5 * (1.0 - s)).powi(q),
        }
    }

    fn dphi(self, s: f64) -> f64 {
        match self {
            PanelMap::Linear => 0.5,
            PanelMap::Start(q) => 0.5 * q as f64 * (0.5 * (s + 1.0)).powi(q - 1),
            PanelMap::End(q) => 0.5 * q as f64 * (0.5 * (1.0 - s)).powi(q - 1),
        }
    }

    /// `φ(s0) − φ(s0 + off)` without cancellation.
    fn diff(self, s0: f64, off: f64) -> f64 {
        let s = s0 + off;
        let power_diff = |a: f64, b: f64, q: i32| (0..q).map(|i| a.powi(q - 1 - i) * b.powi(i)).sum::<f64>();
        let factor = match self {
            PanelMap::Linear => 1.0,
            PanelMap::Start(q) => power_diff(0.5 * (s0 + 1.0), 0.5 * (s + 1.0), q),
            PanelMap::End(q) => power_diff(0.5 * (1.0 - s0), 0.5 * (1.0 - s), q),
        };
        -0.5 * off * factor
    }
}

/// Nyström nodes of a boundary mesh.
#[derive(Debug, Clone)]
pub(crate) struct Mesh {
    pub boundary: Boundary,
    pub panels: Vec<Panel>,
    pub x: Vec<[f64; 2]>,
    pub nu: Vec<[f64; 2]>,
    pub w: Vec<f64>,
    /// Arc-length speed `|dy/ds|` at each node.
    pub speed: Vec<f64>,
    pub condition: Vec<LineCondition>,
    pub p: usize,
    /// Gauss nodes of the panel rule on `[-1, 1]`.
    pub s: Vec<f64>,
    bary: Vec<f64>,
    fine_x: Vec<f64>,
    fine_w: Vec<f64>,
}

/// Local parameter of a singular point on the panel being integrated.
pub(crate) enum Target {
    On(f64),
    Off,
}

const GRADE_RATIO: f64 = 0.25;
/// Graded pieces stop at this distance from the singular point, in local parameter units.
const GRADE_CUTOFF: f64 = 1e-18;
/// Panels closer than this many panel lengths get local quadrature.
pub(crate) const NEAR_FACTOR: f64 = 2.0;

impl Mesh {
    pub fn new(boundary: &Boundary, cfg: &MeshConfig) -> Result<Self, ScatterError> {
        let p = cfg.nodes_per_panel;
        let (s, sw) = gauss_legendre(p);
        let (fine_x, fine_w) = gauss_legendre(16);
        let bary = (0..p)
            .map(|j| 1.0 / (0..p).filter(|&m| m != j).map(|m| s[j] - s[m]).product::<f64>())
            .collect();
        let mut mesh = Mesh {
            boundary: boundary.clone(),
            panels: Vec::new(),
            x: Vec::new(),
            nu: Vec::new(),
            w: Vec::new(),
            speed: Vec::new(),
            condition: Vec::new(),
            p,
            s: s.clone(),
            bary,
            fine_x,
            fine_w,
        };
        let n = cfg.panels_per_edge;
        for (ip, piece) in boundary.pieces.iter().enumerate() {
            let breaks: Vec<f64> = (0..=n)
                .map(|j| grade(j as f64 / n as f64, piece.corner_at_start, piece.corner_at_end, cfg.grading_exponent))
                .collect();
            for j in 0..n {
                let (t0, t1) = (breaks[j], breaks[j + 1]);
                let start = mesh.x.len();
                let mut length = 0.0;
                let q = cfg.corner_panel_power as i32;
                let map = if q > 1 && j == 0 && piece.corner_at_start {
                    PanelMap::Start(q)
                } else if q > 1 && j + 1 == n && piece.corner_at_end {
                    PanelMap::End(q)
                } else {
                    PanelMap::Linear
                };
                for (sj, wj) in s.iter().zip(&sw) {
                    let (y, nu, speed) = mesh.geometry(piece, t0, t1, map, *sj);
                    mesh.x.push(y);
                    mesh.nu.push(nu);
                    mesh.w.push(wj * speed);
                    mesh.speed.push(speed);
                    mesh.condition.push(piece.condition);
                    length += wj * speed;
                }
                let cell = 1.0 / n as f64;
                let near_corner = (piece.corner_at_start && t0 < cell * (1.0 - 1e-12))
                    || (piece.corner_at_end && t1 > 1.0 - cell * (1.0 - 1e-12));
                mesh.panels.push(Panel { piece: ip, t0, t1, start, length, near_corner, map });
            }
        }
        if mesh.w.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(ScatterError::Degenerate("boundary mesh has a zero-length panel".into()));
        }
        Ok(mesh)
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    fn geometry(&self, piece: &BoundaryPiece, t0: f64, t1: f64, map: PanelMap, s: f64) -> ([f64; 2], [f64; 2], f64) {
        let t = t0 + map.phi(s) * (t1 - t0);
        let y = piece.curve.point(t);
        let d = piece.curve.derivative(t);
        let len = norm(d);
        (y, [d[1] / len, -d[0] / len], len * map.dphi(s) * (t1 - t0))
    }

    /// Point, outward normal and arc-length speed at local parameter `s` of `panel`.
    pub fn panel_point(&self, panel: &Panel, s: f64) -> ([f64; 2], [f64; 2], f64) {
        self.geometry(&self.boundary.pieces[panel.piece], panel.t0, panel.t1, panel.map, s)
    }

    fn param(panel: &Panel, s: f64) -> f64 {
        panel.t0 + panel.map.phi(s) * (panel.t1 - panel.t0)
    }

    /// Lower bound on the distance from `x` to the part of `panel` over `[sa, sb]`,
    /// and the arc length of that part.
    fn distance(&self, x: [f64; 2], panel: &Panel, sa: f64, sb: f64) -> (f64, f64) {
        let piece = &self.boundary.pieces[panel.piece];
        let (ta, tb) = (Self::param(panel, sa), Self::param(panel, sb));
        let (a, b) = (piece.curve.point(ta), piece.curve.point(tb));
        let dist = (point_segment_distance(x, a, b) - piece.curve.sagitta(ta, tb)).max(0.0);
        (dist, norm(piece.curve.derivative(ta)) * (tb - ta))
    }

    /// Whether `x` is close enough to `panel` to need local quadrature.
    pub fn is_near(&self, x: [f64; 2], panel: &Panel) -> bool {
        self.distance(x, panel, -1.0, 1.0).0 < NEAR_FACTOR * panel.length
    }

    /// Lagrange basis values of the panel nodes at `s`.
    fn basis(&self, s: f64, out: &mut [f64]) {
        for (j, sj) in self.s.iter().enumerate() {
            if (s - sj).abs() < 1e-15 {
                out.iter_mut().for_each(|v| *v = 0.0);
                out[j] = 1.0;
                return;
            }
        }
        let mut denom = 0.0;
        for j in 0..self.p {
            out[j] = self.bary[j] / (s - self.s[j]);
            denom += out[j];
        }
        out.iter_mut().for_each(|v| *v /= denom);
    }

    /// Weights `c_j` with `∫_panel K(x − y, ν(y)·(x − y), ν(y)) f(y) ds(y) ≈ Σ_j c_j f(y_j)`
    /// for a vector kernel, interpolating `f·|dy/ds|` in the local variable;
    /// graded Gauss rules resolve an on-panel singular point and adaptive
    /// bisection resolves nearby targets.
    pub fn moments<const M: usize>(
        &self,
        x: [f64; 2],
        panel: &Panel,
        target: Target,
        kernel: &dyn Fn([f64; 2], f64, [f64; 2]) -> [C64; M],
    ) -> Vec<[C64; M]> {
        let mut out = vec![[C64::new(0.0, 0.0); M]; self.p];
        let mut basis = vec![0.0; self.p];
        let curve = self.boundary.pieces[panel.piece].curve;
        let s_on = match target {
            Target::On(s0) => Some(s0),
            Target::Off => None,
        };
        let origin = s_on.unwrap_or(0.0);
        // `a` and `b` are offsets from `origin`, so points graded toward an
        // on-panel target keep their exact distance to it.
        let mut rule = |a: f64, b: f64, out: &mut Vec<[C64; M]>| {
            let (m, h) = (0.5 * (a + b), 0.5 * (b - a));
            for (xi, wi) in self.fine_x.iter().zip(&self.fine_w) {
                let off = m + h * xi;
                let s = origin + off;
                let (y, nu, _) = self.panel_point(panel, s);
                let (d, nd) = match s_on {
                    Some(s0) => curve.offset(Self::param(panel, s), panel.map.diff(s0, off) * (panel.t1 - panel.t0)),
                    None => {
                        let d = sub(x, y);
                        (d, d[0] * nu[0] + d[1] * nu[1])
                    }
                };
                let k = kernel(d, nd, nu);
                self.basis(s, &mut basis);
                let wt = wi * h;
                for (o, l) in out.iter_mut().zip(&basis) {
                    for c in 0..M {
                        o[c] += k[c] * (l * wt);
                    }
                }
            }
        };
        match target {
            Target::On(s0) => {
                for (end, dir) in [(-1.0, -1.0), (1.0, 1.0)] {
                    let span = (end - s0) * dir;
                    if span <= 0.0 {
                        continue;
                    }
                    let mut hi = span;
                    while hi > GRADE_CUTOFF {
                        let lo = hi * GRADE_RATIO;
                        let (a, b) = (dir * lo, dir * hi);
                        rule(a.min(b), a.max(b), &mut out);
                        hi = lo;
                    }
                }
            }
            Target::Off => {
                let mut stack = vec![(-1.0, 1.0, 0usize)];
                while let Some((a, b, depth)) = stack.pop() {
                    let (d, len) = self.distance(x, panel, a, b);
                    if d >= len || depth >= 48 {
                        rule(a, b, &mut out);
                    } else {
                        let m = 0.5 * (a + b);
                        stack.push((a, m, depth + 1));
                        stack.push((m, b, depth + 1));
                    }
                }
            }
        }
        for (o, v) in out.iter_mut().zip(&self.speed[panel.start..panel.start + self.p]) {
            o.iter_mut().for_each(|c| *c *= v);
        }
        out
    }

    /// Interpolates nodal values `f` on `panel` at local parameter `s`,
    /// consistently with [`Mesh::moments`].
    pub fn interpolate(&self, panel: &Panel, f: &[C64], s: f64) -> C64 {
        let mut basis = vec![0.0; self.p];
        self.basis(s, &mut basis);
        let (_, _, speed) = self.panel_point(panel, s);
        let range = panel.start..panel.start + self.p;
        basis.iter().zip(&f[range.clone()]).zip(&self.speed[range]).map(|((l, v), sp)| v * (l * sp)).sum::<C64>() / speed
    }
}

/// Panel breakpoint map `[0, 1] → [0, 1]`, algebraically graded toward corner ends.
fn grade(u: f64, at_start: bool, at_end: bool, q: f64) -> f64 {
    match (at_start, at_end) {
        (false, false) => u,
        (true, false) => u.powf(q),
        (false, true) => 1.0 - (1.0 - u).powf(q),
        (true, true) => {
            if u <= 0.5 {
                0.5 * (2.0 * u).powf(q)
            } else {
                1.0 - 0.5 * (2.0 * (1.0 - u)).powf(q)
            }
        }
    }
}
