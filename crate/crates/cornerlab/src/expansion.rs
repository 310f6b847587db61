//! Spherical wave expansions `u = Σ (a_n e^{inθ} + b_n e^{-inθ}) J_n(√λ r)`
//! of Laplacian eigenfunctions around a center, and vanishing orders.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

use crate::quad::gauss_legendre;
use crate::specfun::{bessel_j_all, derivative_from_table, N_ORDER_MAX};

/// Default truncation index of an expansion.
pub const N_TRUNC: usize = 32;

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Errors raised by expansion operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExpansionError {
    #[error("eigenvalue must be positive and finite, got {0}")]
    BadEigenvalue(f64),
    #[error("expansion has {0} coefficient pairs; at most {max} are supported", max = N_ORDER_MAX + 1)]
    TooManyCoefficients(usize),
    #[error("normal derivative along a ray is undefined at r = 0")]
    ZeroRadius,
    #[error("malformed expansion JSON: {0}")]
    Json(String),
    #[error("vanishing-order estimation failed: {0}")]
    EstimationFailed(String),
}

/// Vanishing order of a function at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n")]
pub enum VanishingOrder {
    /// The lowest nonvanishing homogeneous degree is exactly `N`.
    Finite(usize),
    /// Vanishes to every order.
    Infinite,
    /// Vanishes at least to order `N`; the exact value is not resolved.
    AtLeast(usize),
}

impl VanishingOrder {
    /// Whether an exactly known order is compatible with this value.
    pub fn admits(&self, exact: usize) -> bool {
        match *self {
            VanishingOrder::Finite(n) => n == exact,
            VanishingOrder::AtLeast(n) => exact >= n,
            VanishingOrder::Infinite => false,
        }
    }
}

impl std::fmt::Display for VanishingOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VanishingOrder::Finite(n) => write!(f, "Finite({n})"),
            VanishingOrder::Infinite => write!(f, "Infinite"),
            VanishingOrder::AtLeast(n) => write!(f, "AtLeast({n})"),
        }
    }
}

/// A truncated spherical wave expansion in canonical form (`b_0 = 0`).
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion {
    lambda: f64,
    center: [f64; 2],
    coeffs: Vec<(C64, C64)>,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    lambda: f64,
    #[serde(default)]
    center: Option<[f64; 2]>,
    coeffs: Vec<[f64; 4]>,
}

impl Expansion {
    /// Builds an expansion centered at the origin. `coeffs[n] = (a_n, b_n)`;
    /// `b_0` is folded into `a_0`.
    pub fn new(lambda: f64, coeffs: Vec<(C64, C64)>) -> Result<Self, ExpansionError> {
        Self::with_center(lambda, [0.0, 0.0], coeffs)
    }

    /// Builds an expansion around an arbitrary center.
    pub fn with_center(
        lambda: f64,
        center: [f64; 2],
        mut coeffs: Vec<(C64, C64)>,
    ) -> Result<Self, ExpansionError> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(ExpansionError::BadEigenvalue(lambda));
        }
        if coeffs.len() > N_ORDER_MAX + 1 {
            return Err(ExpansionError::TooManyCoefficients(coeffs.len()));
        }
        if coeffs.is_empty() {
            coeffs.push((C64::new(0.0, 0.0), C64::new(0.0, 0.0)));
        }
        let (a0, b0) = coeffs[0];
        coeffs[0] = (a0 + b0, C64::new(0.0, 0.0));
        Ok(Self { lambda, center, coeffs })
    }

    /// The single mode `J_n(√λ r) sin(nθ)`.
    pub fn sine_mode(n: usize, lambda: f64) -> Result<Self, ExpansionError> {
        let mut coeffs = vec![(C64::new(0.0, 0.0), C64::new(0.0, 0.0)); n + 1];
        let half = C64::new(0.0, -0.5);
        coeffs[n] = (half, -half);
        if n == 0 {
            coeffs[0] = (C64::new(0.0, 0.0), C64::new(0.0, 0.0));
        }
        Self::new(lambda, coeffs)
    }

    /// The single mode `J_n(√λ r) cos(nθ)`.
    pub fn cosine_mode(n: usize, lambda: f64) -> Result<Self, ExpansionError> {
        let mut coeffs = vec![(C64::new(0.0, 0.0), C64::new(0.0, 0.0)); n + 1];
        coeffs[n] = if n == 0 { (C64::new(1.0, 0.0), C64::new(0.0, 0.0)) } else { (C64::new(0.5, 0.0), C64::new(0.5, 0.0)) };
        Self::new(lambda, coeffs)
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn center(&self) -> [f64; 2] {
        self.center
    }

    pub fn coeffs(&self) -> &[(C64, C64)] {
        &self.coeffs
    }

    /// Highest stored index `N_trunc`.
    pub fn n_trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn k(&self) -> f64 {
        self.lambda.sqrt()
    }

    /// `u` at local polar coordinates `(r, θ)` around the center.
    pub fn eval(&self, r: f64, theta: f64) -> C64 {
        let js = bessel_j_all(self.n_trunc(), self.k() * r.abs());
        let mut sum = C64::new(0.0, 0.0);
        for (n, &(a, b)) in self.coeffs.iter().enumerate() {
            if js[n] == 0.0 {
                continue;
            }
            let e = C64::from_polar(1.0, n as f64 * theta);
            sum += (a * e + b * e.conj()) * js[n];
        }
        sum
    }

    /// `u` at a Cartesian point.
    pub fn eval_xy(&self, p: [f64; 2]) -> C64 {
        let (dx, dy) = (p[0] - self.center[0], p[1] - self.center[1]);
        self.eval(dx.hypot(dy), dy.atan2(dx))
    }

    /// Cartesian gradient `(∂₁u, ∂₂u)` at a point.
    pub fn gradient_xy(&self, p: [f64; 2]) -> [C64; 2] {
        let (dx, dy) = (p[0] - self.center[0], p[1] - self.center[1]);
        let r = dx.hypot(dy);
        if r == 0.0 {
            let d = self.derivatives_at_center();
            return [d.grad[0], d.grad[1]];
        }
        let th = dy.atan2(dx);
        let k = self.k();
        let js = bessel_j_all(self.n_trunc() + 1, k * r);
        let mut ur = C64::new(0.0, 0.0);
        let mut ut_over_r = C64::new(0.0, 0.0);
        for (n, &(a, b)) in self.coeffs.iter().enumerate() {
            let e = C64::from_polar(1.0, n as f64 * th);
            let ang = a * e + b * e.conj();
            ur += ang * k * derivative_from_table(&js, n);
            if n > 0 {
                ut_over_r += I * n as f64 * (a * e - b * e.conj()) * js[n] / r;
            }
        }
        let (c, s) = (th.cos(), th.sin());
        [ur * c - ut_over_r * s, ur * s + ut_over_r * c]
    }

    /// Normal derivative along the ray at angle `theta0`, with the normal
    /// rotated by `+π/2` from the ray when `sign = +1` and by `-π/2` when
    /// `sign = -1`: `±(1/r) Σ i n (a_n e^{inθ₀} − b_n e^{−inθ₀}) J_n(√λ r)`.
    pub fn ray_normal_derivative(&self, theta0: f64, r: f64, sign: f64) -> Result<C64, ExpansionError> {
        if r == 0.0 {
            return Err(ExpansionError::ZeroRadius);
        }
        let js = bessel_j_all(self.n_trunc(), self.k() * r);
        let mut sum = C64::new(0.0, 0.0);
        for (n, &(a, b)) in self.coeffs.iter().enumerate().skip(1) {
            let e = C64::from_polar(1.0, n as f64 * theta0);
            sum += I * n as f64 * (a * e - b * e.conj()) * js[n];
        }
        Ok(sum * sign.signum() / r)
    }

    /// Value, gradient and Hessian at the center, read off the coefficients.
    pub fn derivatives_at_center(&self) -> CenterDerivatives {
        let k = self.k();
        let z = C64::new(0.0, 0.0);
        let get = |n: usize| self.coeffs.get(n).copied().unwrap_or((z, z));
        let (a0, b0) = get(0);
        let (a1, b1) = get(1);
        let (a2, b2) = get(2);
        let u0 = a0 + b0;
        let grad = [(a1 + b1) * (k / 2.0), I * (a1 - b1) * (k / 2.0)];
        let lap_part = -u0 * (k * k / 2.0);
        let q = k * k / 4.0;
        let uxx = lap_part + (a2 + b2) * q;
        let uyy = lap_part - (a2 + b2) * q;
        let uxy = I * (a2 - b2) * q;
        CenterDerivatives { value: u0, grad, hessian: [[uxx, uxy], [uxy, uyy]] }
    }

    /// Lowest nonvanishing index of the stored coefficients.
    ///
    /// A coefficient counts as zero when its magnitude is at most
    /// `max(tol · largest magnitude, 1e-14)`.
    pub fn vanishing_order_from_coeffs(&self, tol: f64) -> VanishingOrder {
        let scale = self
            .coeffs
            .iter()
            .map(|(a, b)| a.norm().max(b.norm()))
            .fold(0.0, f64::max);
        let thresh = (tol * scale).max(1e-14);
        let (a0, b0) = self.coeffs[0];
        if (a0 + b0).norm() > thresh {
            return VanishingOrder::Finite(0);
        }
        for (n, &(a, b)) in self.coeffs.iter().enumerate().skip(1) {
            if a.norm() > thresh || b.norm() > thresh {
                return VanishingOrder::Finite(n);
            }
        }
        VanishingOrder::AtLeast(self.n_trunc() + 1)
    }

    /// Serializes to `{"lambda": .., "coeffs": [[re_a, im_a, re_b, im_b], ..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let center = if self.center == [0.0, 0.0] { None } else { Some(self.center) };
        let j = ExpansionJson {
            lambda: self.lambda,
            center,
            coeffs: self.coeffs.iter().map(|(a, b)| [a.re, a.im, b.re, b.im]).collect(),
        };
        serde_json::to_value(j).expect("expansion serializes")
    }

    /// Parses the JSON form produced by [`Expansion::to_json`].
    pub fn from_json(v: &serde_json::Value) -> Result<Self, ExpansionError> {
        let j: ExpansionJson =
            serde_json::from_value(v.clone()).map_err(|e| ExpansionError::Json(e.to_string()))?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| (C64::new(c[0], c[1]), C64::new(c[2], c[3])))
            .collect();
        Self::with_center(j.lambda, j.center.unwrap_or([0.0, 0.0]), coeffs)
    }
}

/// Pointwise data of an expansion at its center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterDerivatives {
    pub value: C64,
    pub grad: [C64; 2],
    /// `[[u_xx, u_xy], [u_xy, u_yy]]`.
    pub hessian: [[C64; 2]; 2],
}

/// Settings of [`estimate_vanishing_order_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimatorConfig {
    /// Radial Gauss points per disk.
    pub radial_points: usize,
    /// Angular trapezoid points per disk.
    pub angular_points: usize,
    /// Disk means below `floor` times the largest disk mean are treated as zero.
    pub floor: f64,
    /// Largest distance of the fitted slope from an integer.
    pub rounding_tolerance: f64,
    /// Order reported as `AtLeast(cap)` for a field that is identically zero.
    pub cap: usize,
    /// Restricts the disk to the angular sector `[start, start + width]`.
    pub sector: Option<(f64, f64)>,
}

impl Default for EstimatorConfig {
    fn default() -> Self {
        Self {
            radial_points: 64,
            angular_points: 128,
            floor: 1e-14,
            rounding_tolerance: 0.35,
            cap: N_TRUNC + 1,
            sector: None,
        }
    }
}

/// Integral of `|u|` over the disk (or sector) of radius `r` around `x0`.
pub fn disk_abs_integral<F>(u: &F, x0: [f64; 2], r: f64, cfg: &EstimatorConfig) -> f64
where
    F: Fn([f64; 2]) -> C64 + ?Sized,
{
    let (nodes, weights) = gauss_legendre(cfg.radial_points);
    let (start, width, periodic) = match cfg.sector {
        Some((s, w)) => (s, w, false),
        None => (0.0, 2.0 * PI, true),
    };
    let m = cfg.angular_points;
    let mut total = 0.0;
    for j in 0..m {
        let (th, wt) = if periodic {
            (start + width * j as f64 / m as f64, width / m as f64)
        } else {
            (start + width * (j as f64 + 0.5) / m as f64, width / m as f64)
        };
        let (c, s) = (th.cos(), th.sin());
        let mut radial = 0.0;
        for (x, w) in nodes.iter().zip(&weights) {
            let rho = 0.5 * r * (x + 1.0);
            radial += w * 0.5 * r * rho * u([x0[0] + rho * c, x0[1] + rho * s]).norm();
        }
        total += wt * radial;
    }
    total
}

/// Estimates the vanishing order of `u` at `x0` from the growth of
/// `I_r = ∫_{B(x0,r)} |u|` over the supplied radii.
pub fn estimate_vanishing_order_numeric<F>(
    u: &F,
    x0: [f64; 2],
    radii: &[f64],
    cfg: &EstimatorConfig,
) -> Result<VanishingOrder, ExpansionError>
where
    F: Fn([f64; 2]) -> C64 + ?Sized,
{
    if radii.len() < 4 {
        return Err(ExpansionError::EstimationFailed(format!("need at least 4 radii, got {}", radii.len())));
    }
    if radii.windows(2).any(|w| !(w[1] < w[0])) || radii.iter().any(|&r| !(r > 0.0)) {
        return Err(ExpansionError::EstimationFailed("radii must be positive and strictly decreasing".into()));
    }
    let span = (radii[0] / radii[radii.len() - 1]).log10();
    if span < 1.5 - 1e-12 {
        return Err(ExpansionError::EstimationFailed(format!("radii span {span:.3} decades, need 1.5")));
    }
    let area_frac = cfg.sector.map_or(1.0, |(_, w)| w / (2.0 * PI));
    let ints: Vec<f64> = radii.iter().map(|&r| disk_abs_integral(u, x0, r, cfg)).collect();
    let means: Vec<f64> = ints
        .iter()
        .zip(radii)
        .map(|(i, r)| i / (PI * r * r * area_frac))
        .collect();
    let scale = means.iter().cloned().fold(0.0, f64::max);
    if scale == 0.0 {
        return Ok(VanishingOrder::AtLeast(cfg.cap));
    }
    for w in ints.windows(2) {
        if w[1] > w[0] * (1.0 + 1e-8) {
            return Err(ExpansionError::EstimationFailed(
                "disk integrals are not monotone in the radius".into(),
            ));
        }
    }
    let kept: Vec<(f64, f64)> = radii
        .iter()
        .zip(&ints)
        .zip(&means)
        .filter(|(_, &m)| m >= cfg.floor * scale)
        .map(|((&r, &i), _)| (r.ln(), i.ln()))
        .collect();
    if kept.len() < 3 {
        let r_max = radii[0];
        let r_below = radii
            .iter()
            .zip(&means)
            .find(|(_, &m)| m < cfg.floor * scale)
            .map(|(&r, _)| r)
            .unwrap_or(radii[radii.len() - 1]);
        let bound = (cfg.floor.ln() / (r_below / r_max).ln()).floor() as usize;
        return Ok(VanishingOrder::AtLeast(bound));
    }
    let n = kept.len() as f64;
    let mx = kept.iter().map(|p| p.0).sum::<f64>() / n;
    let my = kept.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = kept.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = kept.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sigma = sxy / sxx;
    let order = (sigma - 2.0).round();
    if order < 0.0 || (sigma - 2.0 - order).abs() > cfg.rounding_tolerance {
        return Err(ExpansionError::EstimationFailed(format!(
            "fitted slope {sigma:.3} is not within {} of an integer ≥ 2",
            cfg.rounding_tolerance
        )));
    }
    Ok(VanishingOrder::Finite(order as usize))
}

/// Least-squares fit of `Σ_{n=0}^{degree} α_n J_n(√λ t)` to samples on a grid.
///
/// Columns are scaled to unit norm before the solve. Returns the coefficients
/// and the maximum residual on the grid.
pub fn fit_bessel_series(lambda: f64, ts: &[f64], values: &[f64], degree: usize) -> (Vec<f64>, f64) {
    let k = lambda.sqrt();
    let rows = ts.len();
    let mut a = DMatrix::<f64>::zeros(rows, degree + 1);
    for (i, &t) in ts.iter().enumerate() {
        let js = bessel_j_all(degree, k * t);
        for n in 0..=degree {
            a[(i, n)] = js[n];
        }
    }
    let scales: Vec<f64> = (0..=degree).map(|n| a.column(n).norm().max(1e-300)).collect();
    let mut scaled = a.clone();
    for n in 0..=degree {
        let s = scales[n];
        scaled.column_mut(n).iter_mut().for_each(|v| *v /= s);
    }
    let b = DVector::from_column_slice(values);
    let svd = scaled.svd(true, true);
    let y = svd.solve(&b, 1e-300).expect("SVD solve with U and V computed");
    let alphas: Vec<f64> = (0..=degree).map(|n| y[n] / scales[n]).collect();
    let resid = &a * DVector::from_column_slice(&alphas) - b;
    (alphas, resid.amax())
}
