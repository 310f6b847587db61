//! Rayleigh-expansion machinery for `2π`-periodic diffraction gratings:
//! propagating and evanescent modes, the analytic field of a flat grating,
//! Rayleigh-coefficient extraction from samples on a measurement line
//! `Γ_b = {x₂ = b}`, and the distinctness and linear-independence checks for
//! the exponentials `e^{iξ·x}` that appear in the uniqueness argument.
//!
//! The incident wave is `e^{ik(sin θ x₁ − cos θ x₂)}`, travelling downward
//! onto the grating, and the scattered field above the grating is
//! `Σ_n u_n e^{i(α_n x₁ + β_n x₂)}`.

use std::f64::consts::PI;
use std::ops::RangeInclusive;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use serde::Serialize;
use thiserror::Error;

use crate::lines::LineCondition;

/// Coefficients amplified by more than this factor are reported as unrecoverable.
pub const AMPLIFICATION_GUARD: f64 = 1e8;
/// Vectors closer than this count as equal.
pub const DISTINCT_TOL: f64 = 1e-12;

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Errors raised by the grating routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GratingError {
    #[error("invalid grating parameters: {0}")]
    BadConfig(String),
    #[error("reflection coefficient is singular: η = {0} equals −ik cos θ")]
    Resonant(C64),
    #[error("point ({0}, {1}) lies below the flat grating")]
    BelowGrating(f64, f64),
    #[error("{samples} samples cannot resolve |n| <= {max_n}; need at least {needed}")]
    TooFewSamples { samples: usize, max_n: i64, needed: usize },
    #[error("vectors {0} and {1} coincide")]
    DuplicateVectors(usize, usize),
    #[error("incident angles must differ")]
    SameAngles,
    #[error("measurement CSV: {0}")]
    Csv(String),
}

fn check_wave(k: f64, theta: f64) -> Result<(), GratingError> {
    if !(k.is_finite() && k > 0.0) {
        return Err(GratingError::BadConfig(format!("wavenumber must be positive, got {k}")));
    }
    if !(theta.abs() < 0.5 * PI) {
        return Err(GratingError::BadConfig(format!("incident angle must lie in (−π/2, π/2), got {theta}")));
    }
    Ok(())
}

/// One Rayleigh mode `e^{i(α_n x₁ + β_n x₂)}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RayleighMode {
    pub n: i64,
    /// `α_n = n + k sin θ`.
    pub alpha: f64,
    /// `√(k² − α_n²)` when propagating, `i√(α_n² − k²)` otherwise.
    pub beta: C64,
    pub propagating: bool,
}

impl RayleighMode {
    pub fn new(k: f64, theta: f64, n: i64) -> Self {
        let alpha = n as f64 + k * theta.sin();
        let propagating = alpha.abs() <= k;
        let gap = (k - alpha) * (k + alpha);
        let beta = if propagating { C64::new(gap.sqrt(), 0.0) } else { C64::new(0.0, (-gap).sqrt()) };
        Self { n, alpha, beta, propagating }
    }

    /// `(α_n, β_n)` as a complex wave vector.
    pub fn xi(&self) -> [C64; 2] {
        [C64::new(self.alpha, 0.0), self.beta]
    }
}

/// Modes for every `n` in `n_range`.
pub fn rayleigh_modes(k: f64, theta: f64, n_range: RangeInclusive<i64>) -> Result<Vec<RayleighMode>, GratingError> {
    check_wave(k, theta)?;
    Ok(n_range.map(|n| RayleighMode::new(k, theta, n)).collect())
}

/// A flat grating `x₂ = 0` with `∂_ν u + η u = 0`, `ν = (0, 1)` pointing
/// from the grating into the upper half-plane, and measurement height `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlatGratingConfig {
    pub k: f64,
    pub theta: f64,
    pub condition: LineCondition,
    pub b: f64,
}

impl FlatGratingConfig {
    pub fn new(k: f64, theta: f64, condition: LineCondition, b: f64) -> Result<Self, GratingError> {
        check_wave(k, theta)?;
        if !(b.is_finite() && b > 0.0) {
            return Err(GratingError::BadConfig(format!("measurement height must be positive, got {b}")));
        }
        if let LineCondition::Impedance(eta) = condition {
            if !(eta.re >= 0.0 && eta.im >= 0.0 && eta.is_finite()) {
                return Err(GratingError::BadConfig(format!("impedance {eta} needs Re η >= 0 and Im η >= 0")));
            }
            let denom = I * k * theta.cos() + eta;
            if denom.norm() <= 1e-14 * (k + eta.norm()) {
                return Err(GratingError::Resonant(eta));
            }
        }
        Ok(Self { k, theta, condition, b })
    }

    /// `α = k sin θ`, the quasi-periodicity parameter.
    pub fn alpha(&self) -> f64 {
        self.k * self.theta.sin()
    }

    /// Reflection coefficient `R = (ik cos θ − η)/(ik cos θ + η)`; `−1` for
    /// a sound-soft grating and `1` for a sound-hard one.
    pub fn reflection(&self) -> C64 {
        let ikc = I * self.k * self.theta.cos();
        match self.condition {
            LineCondition::Nodal => C64::new(-1.0, 0.0),
            LineCondition::Singular => C64::new(1.0, 0.0),
            LineCondition::Impedance(eta) => (ikc - eta) / (ikc + eta),
        }
    }

    pub fn incident(&self, x: [f64; 2]) -> C64 {
        let (s, c) = self.theta.sin_cos();
        C64::new(0.0, self.k * (s * x[0] - c * x[1])).exp()
    }

    /// Scattered field `R e^{ik(sin θ x₁ + cos θ x₂)}`.
    pub fn scattered(&self, x: [f64; 2]) -> C64 {
        let (s, c) = self.theta.sin_cos();
        self.reflection() * C64::new(0.0, self.k * (s * x[0] + c * x[1])).exp()
    }

    /// `∂_{x₂}` of the total field.
    pub fn normal_derivative(&self, x: [f64; 2]) -> C64 {
        let c = self.theta.cos();
        I * self.k * c * (self.scattered(x) - self.incident(x))
    }

    /// Largest `|∂_ν u + η u|` (or `|u|` when sound-soft) at `samples` points of one period of `x₂ = 0`.
    pub fn boundary_residual(&self, samples: usize) -> f64 {
        (0..samples.max(1))
            .map(|j| {
                let x = [2.0 * PI * j as f64 / samples.max(1) as f64, 0.0];
                let u = self.incident(x) + self.scattered(x);
                match self.condition {
                    LineCondition::Nodal => u.norm(),
                    LineCondition::Singular => self.normal_derivative(x).norm(),
                    LineCondition::Impedance(eta) => (self.normal_derivative(x) + eta * u).norm(),
                }
            })
            .fold(0.0, f64::max)
    }

    /// Samples of the scattered field on `Γ_b` at `x₁ = 2πj/m`.
    pub fn measurement(&self, m: usize) -> Vec<C64> {
        (0..m).map(|j| self.scattered([2.0 * PI * j as f64 / m as f64, self.b])).collect()
    }
}

/// Total field `u^i + u^s` of the flat grating at a point with `x₂ ≥ 0`.
pub fn flat_grating_field(cfg: &FlatGratingConfig, x: [f64; 2]) -> Result<C64, GratingError> {
    if !(x[1] >= 0.0) {
        return Err(GratingError::BelowGrating(x[0], x[1]));
    }
    Ok(cfg.incident(x) + cfg.scattered(x))
}

/// A Rayleigh coefficient recovered from measurement-line samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RayleighCoefficient {
    pub mode: RayleighMode,
    /// `|e^{−iβ_n b}|`.
    pub amplification: f64,
    /// `None` when the amplification exceeds [`AMPLIFICATION_GUARD`].
    pub value: Option<C64>,
}

/// Recovers `u_n` from samples of the scattered field on `Γ_b` at
/// `x₁ = 2πj/M`, `j = 0, …, M − 1`:
/// `u_n = e^{−iβ_n b} (1/M) Σ_j u^s(x_j) e^{−iα x_j} e^{−inx_j}`.
pub fn extract_rayleigh(
    samples: &[C64],
    k: f64,
    theta: f64,
    b: f64,
    n_range: RangeInclusive<i64>,
) -> Result<Vec<RayleighCoefficient>, GratingError> {
    check_wave(k, theta)?;
    let max_n = n_range.start().abs().max(n_range.end().abs());
    let needed = (4 * max_n).max(1) as usize;
    if samples.len() < needed {
        return Err(GratingError::TooFewSamples { samples: samples.len(), max_n, needed });
    }
    let m = samples.len();
    let alpha = k * theta.sin();
    let modes = rayleigh_modes(k, theta, n_range)?;
    Ok(modes
        .into_iter()
        .map(|mode| {
            let fourier: C64 = samples
                .iter()
                .enumerate()
                .map(|(j, u)| {
                    let x = 2.0 * PI * j as f64 / m as f64;
                    u * C64::from_polar(1.0, -(alpha + mode.n as f64) * x)
                })
                .sum::<C64>()
                / m as f64;
            let factor = (-I * mode.beta * b).exp();
            let amplification = factor.norm();
            let value = (amplification <= AMPLIFICATION_GUARD).then_some(factor * fourier);
            RayleighCoefficient { mode, amplification, value }
        })
        .collect())
}

/// Samples on `Γ_b` of `Σ_n u_n e^{i(α_n x₁ + β_n b)}` at `x₁ = 2πj/m`.
pub fn synthesize(coeffs: &[(i64, C64)], k: f64, theta: f64, b: f64, m: usize) -> Result<Vec<C64>, GratingError> {
    check_wave(k, theta)?;
    let modes: Vec<(RayleighMode, C64)> = coeffs.iter().map(|&(n, c)| (RayleighMode::new(k, theta, n), c)).collect();
    Ok((0..m)
        .map(|j| {
            let x = 2.0 * PI * j as f64 / m as f64;
            modes.iter().map(|(md, c)| c * (I * (md.alpha * x + md.beta * b)).exp()).sum()
        })
        .collect())
}

/// Field samples on `Γ_b` with their acquisition parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct LineSamples {
    pub k: f64,
    pub theta: f64,
    pub b: f64,
    pub x1: Vec<f64>,
    pub values: Vec<C64>,
}

impl LineSamples {
    /// Writes `# k=…, theta=…, b=…` followed by `x1,re,im` rows.
    pub fn to_csv(&self) -> Result<String, GratingError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["x1", "re", "im"]).map_err(|e| GratingError::Csv(e.to_string()))?;
        for (x, v) in self.x1.iter().zip(&self.values) {
            w.write_record([x.to_string(), v.re.to_string(), v.im.to_string()])
                .map_err(|e| GratingError::Csv(e.to_string()))?;
        }
        let body = String::from_utf8(w.into_inner().map_err(|e| GratingError::Csv(e.to_string()))?)
            .map_err(|e| GratingError::Csv(e.to_string()))?;
        Ok(format!("# k={}, theta={}, b={}\n{body}", self.k, self.theta, self.b))
    }

    pub fn from_csv(text: &str) -> Result<Self, GratingError> {
        let meta = text
            .lines()
            .find_map(|l| l.trim().strip_prefix('#'))
            .ok_or_else(|| GratingError::Csv("missing '# k=…, theta=…, b=…' line".into()))?;
        let mut k = None;
        let mut theta = None;
        let mut b = None;
        for part in meta.split(',') {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| GratingError::Csv(format!("malformed metadata entry '{}'", part.trim())))?;
            let val: f64 = val.trim().parse().map_err(|_| GratingError::Csv(format!("bad number '{}'", val.trim())))?;
            match key.trim() {
                "k" => k = Some(val),
                "theta" => theta = Some(val),
                "b" => b = Some(val),
                other => return Err(GratingError::Csv(format!("unknown metadata key '{other}'"))),
            }
        }
        let missing = |name: &str| GratingError::Csv(format!("metadata lacks '{name}'"));
        let (k, theta, b) = (k.ok_or_else(|| missing("k"))?, theta.ok_or_else(|| missing("theta"))?, b.ok_or_else(|| missing("b"))?);
        let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
        let header = reader.headers().map_err(|e| GratingError::Csv(e.to_string()))?.clone();
        if header.iter().map(str::trim).collect::<Vec<_>>() != ["x1", "re", "im"] {
            return Err(GratingError::Csv(format!("expected header x1,re,im, got {header:?}")));
        }
        let mut x1 = Vec::new();
        let mut values = Vec::new();
        for rec in reader.records() {
            let rec = rec.map_err(|e| GratingError::Csv(e.to_string()))?;
            let num = |i: usize| -> Result<f64, GratingError> {
                rec.get(i)
                    .and_then(|s| s.trim().parse().ok())
                    .ok_or_else(|| GratingError::Csv(format!("bad row {rec:?}")))
            };
            x1.push(num(0)?);
            values.push(C64::new(num(1)?, num(2)?));
        }
        Ok(Self { k, theta, b, x1, values })
    }
}

/// Smallest eigenvalue of the normalized Gram matrix
/// `G_{lm} = |D|⁻¹ ∫_D e^{i(ξ_l − ξ_m)·x} dx` over the rectangle
/// `D = [x0, x1] × [y0, y1]`, integrated in closed form.
pub fn exponential_independence(xis: &[[f64; 2]], domain: [[f64; 2]; 2]) -> Result<f64, GratingError> {
    let [[x0, x1], [y0, y1]] = domain;
    if !(x1 > x0 && y1 > y0) {
        return Err(GratingError::BadConfig("domain must be a nondegenerate rectangle".into()));
    }
    for i in 0..xis.len() {
        for j in 0..i {
            if (xis[i][0] - xis[j][0]).hypot(xis[i][1] - xis[j][1]) <= DISTINCT_TOL {
                return Err(GratingError::DuplicateVectors(j, i));
            }
        }
    }
    // Mean of e^{iax} over [lo, hi].
    let mean = |a: f64, lo: f64, hi: f64| -> C64 {
        let h = hi - lo;
        let t = 0.5 * a * h;
        let sinc = if t.abs() < 1e-8 { 1.0 - t * t / 6.0 } else { t.sin() / t };
        C64::from_polar(sinc, 0.5 * a * (lo + hi))
    };
    let n = xis.len();
    let g = DMatrix::from_fn(n, n, |l, m| {
        mean(xis[l][0] - xis[m][0], x0, x1) * mean(xis[l][1] - xis[m][1], y0, y1)
    });
    Ok(g.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min))
}

/// A labelled wave vector in the distinctness check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WaveLabel {
    /// `k d_ℓ = (α₀(θ_ℓ), −β₀(θ_ℓ))`.
    Incident { direction: usize },
    /// `ξ_n(θ_ℓ) = (α_n(θ_ℓ), β_n(θ_ℓ))`.
    Mode { direction: usize, n: i64 },
}

/// Outcome of [`grating_mode_distinctness`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistinctnessReport {
    pub distinct: bool,
    /// A colliding pair, if any.
    pub witness: Option<(WaveLabel, WaveLabel)>,
    /// Smallest distance between two vectors of the set.
    pub min_separation: f64,
}

/// Checks that `{k d₁, k d₂} ∪ {ξ_n(θ₁)} ∪ {ξ_n(θ₂)}` over `n_range` are
/// pairwise distinct (as complex vectors).
pub fn grating_mode_distinctness(
    k: f64,
    theta1: f64,
    theta2: f64,
    n_range: RangeInclusive<i64>,
) -> Result<DistinctnessReport, GratingError> {
    check_wave(k, theta1)?;
    check_wave(k, theta2)?;
    if theta1 == theta2 {
        return Err(GratingError::SameAngles);
    }
    let mut vecs: Vec<(WaveLabel, [C64; 2])> = Vec::new();
    for (dir, theta) in [theta1, theta2].into_iter().enumerate() {
        let m0 = RayleighMode::new(k, theta, 0);
        vecs.push((WaveLabel::Incident { direction: dir }, [C64::new(m0.alpha, 0.0), -m0.beta]));
        for n in n_range.clone() {
            vecs.push((WaveLabel::Mode { direction: dir, n }, RayleighMode::new(k, theta, n).xi()));
        }
    }
    let mut witness = None;
    let mut min_separation = f64::INFINITY;
    for i in 0..vecs.len() {
        for j in 0..i {
            let d = ((vecs[i].1[0] - vecs[j].1[0]).norm_sqr() + (vecs[i].1[1] - vecs[j].1[1]).norm_sqr()).sqrt();
            min_separation = min_separation.min(d);
            if d <= DISTINCT_TOL && witness.is_none() {
                witness = Some((vecs[j].0, vecs[i].0));
            }
        }
    }
    Ok(DistinctnessReport { distinct: witness.is_none(), witness, min_separation })
}
