//! The complex-geometrical-optics test function `u₀(x) = exp(−√r e^{iθ/2})`,
//! its exact sector and ray integrals, and a numerical check of the
//! large-`s` expansions of the boundary integrals it produces against a
//! Laplacian eigenfunction near a corner.

use num_complex::Complex64 as C64;
use serde::Serialize;
use thiserror::Error;

use crate::expansion::Expansion;
use crate::quad::{adaptive, gauss_legendre};

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Largest power `ℓ` accepted by [`line_integral_exact`].
pub const ELL_MAX: usize = 6;

/// Errors raised by the CGO routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CgoError {
    #[error("scaling parameter must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("truncation radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("normal derivative is undefined at r = 0")]
    ZeroRadius,
    #[error("sector needs 0 <= theta_m < theta_M < pi, got [{0}, {1}]")]
    BadSector(f64, f64),
    #[error("phase {0} has nonnegative real part; the integrals do not decay")]
    NonDecayingPhase(C64),
    #[error("power {0} exceeds {ELL_MAX}")]
    PowerTooLarge(usize),
    #[error("s grid rejected: {0}")]
    BadGrid(String),
}

/// The open sector `{θ_m < arg x < θ_M}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorW {
    theta_m: f64,
    theta_max: f64,
}

impl SectorW {
    /// Validates `0 ≤ θ_m < θ_M < π`.
    pub fn new(theta_m: f64, theta_max: f64) -> Result<Self, CgoError> {
        if !(0.0 <= theta_m && theta_m < theta_max && theta_max < std::f64::consts::PI) {
            return Err(CgoError::BadSector(theta_m, theta_max));
        }
        Ok(Self { theta_m, theta_max })
    }

    pub fn theta_m(&self) -> f64 {
        self.theta_m
    }

    pub fn theta_max(&self) -> f64 {
        self.theta_max
    }

    /// `δ_W = min cos(θ/2)` over the closed sector.
    pub fn delta(&self) -> f64 {
        (self.theta_max / 2.0).cos()
    }
}

/// `ζ(θ) = −e^{iθ/2}`.
pub fn zeta(theta: f64) -> C64 {
    -C64::from_polar(1.0, theta / 2.0)
}

/// `ζ′(θ) = −i e^{iθ/2}`.
pub fn zeta_prime(theta: f64) -> C64 {
    -I * C64::from_polar(1.0, theta / 2.0)
}

/// `β(θ) = ½ sin(φ − θ) ζ′(θ)` for a ray at angle `θ` with normal angle `φ`.
pub fn beta(theta: f64, phi: f64) -> C64 {
    zeta_prime(theta) * (0.5 * (phi - theta).sin())
}

/// `u₀(s x)` at polar coordinates `(r, θ)`, `θ ∈ (−π, π]`.
pub fn cgo_eval(s: f64, r: f64, theta: f64) -> C64 {
    (-(s * r).sqrt() * C64::from_polar(1.0, theta / 2.0)).exp()
}

/// Derivative of `x ↦ u₀(s x)` in the direction `(cos φ, sin φ)` at
/// `r(cos θ, sin θ)`: `−½ e^{i(φ − θ/2)} √(s/r) u₀(s x)`.
///
/// For `φ = θ ± π/2` this equals `β(θ) e^{√(sr) ζ(θ)} √(s/r)`.
pub fn cgo_normal_derivative(s: f64, r: f64, theta: f64, phi: f64) -> Result<C64, CgoError> {
    if r <= 0.0 {
        return Err(CgoError::ZeroRadius);
    }
    Ok(-0.5 * C64::from_polar(1.0, phi - theta / 2.0) * (s / r).sqrt() * cgo_eval(s, r, theta))
}

/// `∫_W u₀(s x) dx = 6i (e^{−2iθ_M} − e^{−2iθ_m}) s^{−2}`.
pub fn sector_integral_exact(w: &SectorW, s: f64) -> Result<C64, CgoError> {
    if !(s > 0.0) {
        return Err(CgoError::NonPositiveScale(s));
    }
    let e = |t: f64| C64::from_polar(1.0, -2.0 * t);
    Ok(6.0 * I * (e(w.theta_max) - e(w.theta_m)) / (s * s))
}

/// Rigorous bound on `∫_{W∖B_h} |u₀(s x)| dx`:
/// `(θ_M − θ_m) (2/(s² δ⁴)) e^{−x}(x³ + 3x² + 6x + 6)` with `x = δ √(sh)`.
pub fn sector_tail_bound(w: &SectorW, s: f64, h: f64) -> f64 {
    let d = w.delta();
    let x = d * (s * h).sqrt();
    (w.theta_max - w.theta_m) * 2.0 / (s * s * d.powi(4)) * (-x).exp() * (((x + 3.0) * x + 6.0) * x + 6.0)
}

/// Nodes and weights in `t = √r` on `[0, √h]` for integrands carrying
/// `e^{√s t ζ}` with `Re ζ ≤ −δ`: 20 geometric panels (ratio 0.5) of 16 Gauss
/// points, each split so that `√s` times its width is at most 3. Panels on
/// which `e^{−δ√s t}` has dropped below `e^{−45}` are omitted.
fn cgo_radial_rule(s: f64, h: f64, delta: f64) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(16);
    let rs = s.sqrt();
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    let mut hi = h.sqrt();
    for level in 0..20 {
        let lo = if level == 19 { 0.0 } else { hi * 0.5 };
        if lo * rs * delta <= 45.0 {
            let pieces = ((hi - lo) * rs / 3.0).ceil().max(1.0) as usize;
            let width = (hi - lo) / pieces as f64;
            for p in 0..pieces {
                let a = lo + p as f64 * width;
                for (xi, wi) in x.iter().zip(&w) {
                    nodes.push(a + 0.5 * width * (xi + 1.0));
                    weights.push(0.5 * width * wi);
                }
            }
        }
        hi = lo;
    }
    (nodes, weights)
}

/// Polar product rule for `∫_{W ∩ B_h} u₀(s x) g(x) dx` after `r = t²`.
///
/// The radial rule is that of [`cgo_radial_rule`]; the angular rule uses
/// at least 64 Gauss points, in panels of 16, enough to resolve the phase
/// `√s t sin(θ/2)` over the effective radial range.
pub fn sector_quadrature<G>(w: &SectorW, s: f64, h: f64, g: G) -> C64
where
    G: Fn(f64, f64) -> C64,
{
    let delta = w.delta();
    let (tn, tw) = cgo_radial_rule(s, h, delta);
    let width = w.theta_max - w.theta_m;
    let t_eff = h.sqrt().min(45.0 / (s.sqrt() * delta));
    let panels = ((s.sqrt() * t_eff * width / 6.0).ceil() as usize).max(4);
    let (x, aw) = gauss_legendre(16);
    let dth = width / panels as f64;
    let mut total = C64::new(0.0, 0.0);
    for p in 0..panels {
        let a = w.theta_m + p as f64 * dth;
        for (xa, wa) in x.iter().zip(&aw) {
            let th = a + 0.5 * dth * (xa + 1.0);
            let mut radial = C64::new(0.0, 0.0);
            for (t, wt) in tn.iter().zip(&tw) {
                let r = t * t;
                radial += cgo_eval(s, r, th) * g(r, th) * (2.0 * t * t * t * wt);
            }
            total += radial * (0.5 * dth * wa);
        }
    }
    total
}

/// Exact `∫₀ʰ r^ℓ e^{√(sr) ζ} dr`, or with the extra weight `√(s/r)`.
pub fn line_integral_exact(ell: usize, s: f64, h: f64, zeta: C64, with_sqrt_weight: bool) -> Result<C64, CgoError> {
    check_line_args(ell, s, h, zeta)?;
    let a = (s * h).sqrt();
    let decay = (zeta * a).exp();
    let m = if with_sqrt_weight { 2 * ell } else { 2 * ell + 1 };
    let fact = |n: usize| (1..=n).map(|k| k as f64).product::<f64>();
    let mut sum = C64::new(0.0, 0.0);
    for j in 0..=m {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * fact(m) / fact(m - j) * a.powi((m - j) as i32) / zeta.powi(j as i32 + 1);
    }
    let head = fact(m) / zeta.powi(m as i32 + 1);
    let total = if with_sqrt_weight { -head + decay * sum } else { head + decay * sum };
    let power = if with_sqrt_weight { ell } else { ell + 1 };
    Ok(total * 2.0 / s.powi(power as i32))
}

/// Leading large-`s` term of [`line_integral_exact`]:
/// `2(2ℓ+1)!/(s^{ℓ+1} ζ^{2ℓ+2})` or `−2(2ℓ)!/(s^ℓ ζ^{2ℓ+1})`.
pub fn line_integral_leading(ell: usize, s: f64, zeta: C64, with_sqrt_weight: bool) -> C64 {
    let fact = |n: usize| (1..=n).map(|k| k as f64).product::<f64>();
    if with_sqrt_weight {
        -2.0 * fact(2 * ell) / (s.powi(ell as i32) * zeta.powi(2 * ell as i32 + 1))
    } else {
        2.0 * fact(2 * ell + 1) / (s.powi(ell as i32 + 1) * zeta.powi(2 * ell as i32 + 2))
    }
}

/// Adaptive quadrature of the same integrals in the variable `t = √r`.
pub fn line_integral_quadrature(ell: usize, s: f64, h: f64, zeta: C64, with_sqrt_weight: bool, tol: f64) -> Result<C64, CgoError> {
    check_line_args(ell, s, h, zeta)?;
    let rs = s.sqrt();
    let f = |t: f64| {
        let base = t.powi(2 * ell as i32) * (zeta * rs * t).exp() * 2.0;
        if with_sqrt_weight { base * rs } else { base * t }
    };
    let b = h.sqrt();
    let mut total = C64::new(0.0, 0.0);
    let mut hi = b;
    for _ in 0..40 {
        let lo = hi * 0.5;
        total += adaptive(&f, lo, hi, tol);
        hi = lo;
    }
    Ok(total + adaptive(&f, 0.0, hi, tol))
}

fn check_line_args(ell: usize, s: f64, h: f64, zeta: C64) -> Result<(), CgoError> {
    if ell > ELL_MAX {
        return Err(CgoError::PowerTooLarge(ell));
    }
    if !(s > 0.0) {
        return Err(CgoError::NonPositiveScale(s));
    }
    if !(h > 0.0) {
        return Err(CgoError::NonPositiveRadius(h));
    }
    if zeta.re >= 0.0 {
        return Err(CgoError::NonDecayingPhase(zeta));
    }
    Ok(())
}

/// `c₁(θ) = ∇u(0)·(cos θ, sin θ)`.
pub fn c1(u: &Expansion, theta: f64) -> C64 {
    let d = u.derivatives_at_center();
    d.grad[0] * theta.cos() + d.grad[1] * theta.sin()
}

/// `c₂(θ) = ½(u_xx cos²θ + u_xy sin 2θ + u_yy sin²θ)`.
pub fn c2(u: &Expansion, theta: f64) -> C64 {
    let h = u.derivatives_at_center().hessian;
    let (c, s) = (theta.cos(), theta.sin());
    0.5 * (h[0][0] * c * c + h[0][1] * (2.0 * theta).sin() + h[1][1] * s * s)
}

/// `cos φ cos θ u_xx + sin φ sin θ u_yy + sin(φ + θ) u_xy` at the center:
/// the radial derivative of `∂_ν u` along the ray at angle `θ`, which
/// vanishes when the ray is a singular line.
pub fn normal_derivative_slope(u: &Expansion, theta: f64, phi: f64) -> C64 {
    let h = u.derivatives_at_center().hessian;
    h[0][0] * (phi.cos() * theta.cos()) + h[1][1] * (phi.sin() * theta.sin()) + h[0][1] * (phi + theta).sin()
}

/// Outcome of one slope check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SlopeStatus {
    Pass,
    Fail,
    /// Remainders decay faster than the stated power (consistent with the
    /// bound, but the bound is not sharp for this `u`).
    Faster,
    /// Remainders were not monotone in `s`.
    Inconclusive,
    /// Remainders stayed below the round-off floor for every `s`.
    Negligible,
}

/// Fitted decay exponent of one quantity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeCheck {
    pub expected: f64,
    pub slope: Option<f64>,
    pub status: SlopeStatus,
}

/// Integrals at one value of `s`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CgoSample {
    pub s: f64,
    pub i11_plus: C64,
    pub i11_minus: C64,
    pub i12_plus: C64,
    pub i12_minus: C64,
    pub i2: C64,
    pub i3: C64,
    pub rem_i11_plus: C64,
    pub rem_i11_minus: C64,
    pub rem_i12_plus: C64,
    pub rem_i12_minus: C64,
    pub green_lhs: C64,
    pub green_rhs: C64,
    pub green_gap: f64,
}

/// Result of [`verify_corner_expansions`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CornerExpansionReport {
    pub h: f64,
    /// Hölder exponent of `η` used for the `I₁₂` remainder power `−2 − γ`.
    pub gamma: f64,
    /// Whether the `I₁₂` leading terms use the impedance form (`η` supplied)
    /// or the general normal-derivative form.
    pub impedance_form: bool,
    pub samples: Vec<CgoSample>,
    pub i11_plus: SlopeCheck,
    pub i11_minus: SlopeCheck,
    pub i12_plus: SlopeCheck,
    pub i12_minus: SlopeCheck,
    pub i2: SlopeCheck,
    pub green_max_gap: f64,
    pub green_pass: bool,
}

impl CornerExpansionReport {
    /// Every remainder is within the stated power or below it, and Green's
    /// identity closed.
    pub fn all_pass(&self) -> bool {
        let ok = |c: &SlopeCheck| matches!(c.status, SlopeStatus::Pass | SlopeStatus::Faster | SlopeStatus::Negligible);
        self.green_pass
            && [&self.i11_plus, &self.i11_minus, &self.i12_plus, &self.i12_minus, &self.i2].into_iter().all(ok)
    }
}

/// Slope tolerance of the remainder fits.
pub const SLOPE_TOLERANCE: f64 = 0.15;
/// Largest accepted gap in Green's identity.
pub const GREEN_TOLERANCE: f64 = 1e-8;
/// Slope below which `I₂` counts as faster than any tested power.
pub const I2_SLOPE_BOUND: f64 = -6.0;

fn ray_integral<F: Fn(f64) -> C64>(s: f64, h: f64, theta: f64, f: F) -> C64 {
    let (tn, tw) = cgo_radial_rule(s, h, (theta / 2.0).cos());
    tn.iter().zip(&tw).map(|(t, w)| f(t * t) * (2.0 * t * w)).sum()
}

fn fit_slope(s: &[f64], v: &[f64]) -> f64 {
    let n = s.len() as f64;
    let xs: Vec<f64> = s.iter().map(|x| x.ln()).collect();
    let ys: Vec<f64> = v.iter().map(|x| x.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

fn slope_check(s: &[f64], values: &[f64], expected: f64, floor: f64, upper_only: bool) -> SlopeCheck {
    if values.iter().all(|&v| v <= floor) {
        return SlopeCheck { expected, slope: None, status: SlopeStatus::Negligible };
    }
    if values.windows(2).any(|w| !(w[1] < w[0])) || values.iter().any(|&v| v <= 0.0) {
        return SlopeCheck { expected, slope: None, status: SlopeStatus::Inconclusive };
    }
    let slope = fit_slope(s, values);
    let status = if upper_only {
        if slope < expected { SlopeStatus::Pass } else { SlopeStatus::Fail }
    } else if (slope - expected).abs() <= SLOPE_TOLERANCE {
        SlopeStatus::Pass
    } else if slope < expected {
        SlopeStatus::Faster
    } else {
        SlopeStatus::Fail
    };
    SlopeCheck { expected, slope: Some(slope), status }
}

/// Computes `I₁₁±`, `I₁₂±`, `I₂`, `I₃` by quadrature on the truncated sector
/// `S_h = W ∩ B_h` for each `s`, subtracts the leading terms built from the
/// derivatives of `u` at the corner, and fits the decay of the remainders.
///
/// `Γ⁻` is the ray at `θ_m` with normal angle `θ_m − π/2`, `Γ⁺` the ray at
/// `θ_M` with normal angle `θ_M + π/2`. With `etas = Some((η₁, η₂))` the
/// `I₁₂` leading terms are `(2/s) η u(0)/ζ² + (12/s²) η c₁/ζ⁴`; otherwise
/// they are built from `∂_ν u(0)` and its radial slope.
pub fn verify_corner_expansions(
    u: &Expansion,
    w: &SectorW,
    etas: Option<(C64, C64)>,
    s_grid: &[f64],
    h: f64,
) -> Result<CornerExpansionReport, CgoError> {
    if !(h > 0.0) {
        return Err(CgoError::NonPositiveRadius(h));
    }
    if s_grid.len() < 3 || s_grid.windows(2).any(|p| !(p[1] > p[0])) {
        return Err(CgoError::BadGrid("need at least 3 strictly increasing values".into()));
    }
    if s_grid[s_grid.len() - 1] / s_grid[0] < 10.0 - 1e-9 {
        return Err(CgoError::BadGrid("grid must span at least one decade".into()));
    }
    if s_grid[0] * h < 50.0 - 1e-9 {
        return Err(CgoError::BadGrid(format!("s_min * h = {} < 50", s_grid[0] * h)));
    }
    let lambda = u.lambda();
    let d = u.derivatives_at_center();
    let u0 = d.value;
    let rays = [
        (w.theta_m, w.theta_m - std::f64::consts::FRAC_PI_2, etas.map(|e| e.0)),
        (w.theta_max, w.theta_max + std::f64::consts::FRAC_PI_2, etas.map(|e| e.1)),
    ];
    let normal_du = |r: f64, th: f64, phi: f64| {
        let g = u.gradient_xy([r * th.cos(), r * th.sin()]);
        g[0] * phi.cos() + g[1] * phi.sin()
    };
    let mut samples = Vec::with_capacity(s_grid.len());
    for &s in s_grid {
        if !(s > 0.0) {
            return Err(CgoError::NonPositiveScale(s));
        }
        let mut i11 = [C64::new(0.0, 0.0); 2];
        let mut i12 = [C64::new(0.0, 0.0); 2];
        let mut rem11 = [C64::new(0.0, 0.0); 2];
        let mut rem12 = [C64::new(0.0, 0.0); 2];
        for (idx, &(th, phi, eta)) in rays.iter().enumerate() {
            i11[idx] = ray_integral(s, h, th, |r| {
                u.eval(r, th) * cgo_normal_derivative(s, r, th, phi).expect("quadrature nodes have r > 0")
            });
            i12[idx] = -ray_integral(s, h, th, |r| cgo_eval(s, r, th) * normal_du(r, th, phi));
            let (z, b) = (zeta(th), beta(th, phi));
            let line = |ell: usize, weighted: bool| line_integral_leading(ell, s, z, weighted);
            let lead11 = b * (u0 * line(0, true) + c1(u, th) * line(1, true) + c2(u, th) * line(2, true));
            let lead12 = match eta {
                Some(eta) => eta * (u0 * line(0, false) + c1(u, th) * line(1, false)),
                None => {
                    let dnu0 = d.grad[0] * phi.cos() + d.grad[1] * phi.sin();
                    -(dnu0 * line(0, false) + normal_derivative_slope(u, th, phi) * line(1, false))
                }
            };
            rem11[idx] = i11[idx] - lead11;
            rem12[idx] = i12[idx] - lead12;
        }
        let (an, aw) = gauss_legendre(64);
        let (mid, half) = (0.5 * (w.theta_m + w.theta_max), 0.5 * (w.theta_max - w.theta_m));
        let mut i2 = C64::new(0.0, 0.0);
        for (xa, wa) in an.iter().zip(&aw) {
            let th = mid + half * xa;
            let du_r = normal_du(h, th, th);
            let du0_r = cgo_normal_derivative(s, h, th, th).expect("h > 0");
            i2 += (cgo_eval(s, h, th) * du_r - u.eval(h, th) * du0_r) * (h * half * wa);
        }
        let int_u0u = sector_quadrature(w, s, h, |r, th| u.eval(r, th));
        let i3 = sector_quadrature(w, s, h, |r, th| u.eval(r, th) - u0);
        let green_lhs = -lambda * int_u0u;
        let green_rhs = -(i11[0] + i12[0]) - (i11[1] + i12[1]) + i2;
        samples.push(CgoSample {
            s,
            i11_plus: i11[1],
            i11_minus: i11[0],
            i12_plus: i12[1],
            i12_minus: i12[0],
            i2,
            i3,
            rem_i11_plus: rem11[1],
            rem_i11_minus: rem11[0],
            rem_i12_plus: rem12[1],
            rem_i12_minus: rem12[0],
            green_lhs,
            green_rhs,
            green_gap: (green_lhs - green_rhs).norm(),
        });
    }
    let scale = samples
        .iter()
        .flat_map(|p| [p.i11_plus, p.i11_minus, p.i12_plus, p.i12_minus, p.green_lhs])
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        .max(d.value.norm() + d.grad[0].norm() + d.grad[1].norm());
    let floor = 1e-13 * scale.max(1e-300);
    let col = |f: &dyn Fn(&CgoSample) -> C64| samples.iter().map(|p| f(p).norm()).collect::<Vec<f64>>();
    let gamma = 1.0;
    let expected12 = -2.0 - gamma;
    let i11_plus = slope_check(s_grid, &col(&|p| p.rem_i11_plus), -3.0, floor, false);
    let i11_minus = slope_check(s_grid, &col(&|p| p.rem_i11_minus), -3.0, floor, false);
    let i12_plus = slope_check(s_grid, &col(&|p| p.rem_i12_plus), expected12, floor, false);
    let i12_minus = slope_check(s_grid, &col(&|p| p.rem_i12_minus), expected12, floor, false);
    let i2 = slope_check(s_grid, &col(&|p| p.i2), I2_SLOPE_BOUND, 0.0, true);
    let green_max_gap = samples.iter().map(|p| p.green_gap).fold(0.0, f64::max);
    Ok(CornerExpansionReport {
        h,
        gamma,
        impedance_form: etas.is_some(),
        samples,
        i11_plus,
        i11_minus,
        i12_plus,
        i12_minus,
        i2,
        green_max_gap,
        green_pass: green_max_gap <= GREEN_TOLERANCE,
    })
}
