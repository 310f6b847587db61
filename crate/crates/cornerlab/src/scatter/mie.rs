//! Separation-of-variables solution for plane-wave scattering by a disk.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::lines::LineCondition;
use crate::specfun::{bessel_j_all, hankel1_all};

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Plane wave `e^{ik x·d}`, `d = (cos φ_d, sin φ_d)`, scattered by the disk
/// `|x| < a`; the scattered field is `Σ_n i^{|n|} c_{|n|} H_{|n|}(kr) e^{in(θ−φ_d)}`.
#[derive(Debug, Clone)]
pub struct MieDisk {
    k: f64,
    radius: f64,
    incident_angle: f64,
    condition: LineCondition,
    /// `c_n` for `n = 0..=N`.
    coeffs: Vec<C64>,
    /// `H_n(ka)` and `k H_n'(ka) + η H_n(ka)` (`η = ∞` keeps `H_n(ka)`).
    boundary_denominator: Vec<C64>,
}

impl MieDisk {
    pub fn new(k: f64, radius: f64, incident_angle: f64, condition: LineCondition) -> Self {
        let ka = k * radius;
        let nmax = (ka + 30.0 + 4.0 * ka.cbrt()).ceil() as usize;
        let j = bessel_j_all(nmax + 1, ka);
        let h = hankel1_all(nmax + 1, ka);
        let jp = |n: usize| if n == 0 { -j[1] } else { j[n - 1] - n as f64 / ka * j[n] };
        let hp = |n: usize| if n == 0 { -h[1] } else { h[n - 1] - n as f64 / ka * h[n] };
        let mut coeffs = Vec::with_capacity(nmax + 1);
        let mut boundary_denominator = Vec::with_capacity(nmax + 1);
        for n in 0..=nmax {
            match condition {
                LineCondition::Nodal => {
                    coeffs.push(-j[n] / h[n]);
                    boundary_denominator.push(h[n]);
                }
                _ => {
                    let eta = condition.eta().unwrap_or_default();
                    let den = k * hp(n) + eta * h[n];
                    coeffs.push(-(k * jp(n) + eta * j[n]) / den);
                    boundary_denominator.push(den);
                }
            }
        }
        Self { k, radius, incident_angle, condition, coeffs, boundary_denominator }
    }

    fn series(&self, theta: f64, term: impl Fn(usize) -> C64) -> C64 {
        let psi = theta - self.incident_angle;
        let mut s = term(0);
        for n in 1..self.coeffs.len() {
            s += term(n) * 2.0 * (n as f64 * psi).cos();
        }
        s
    }

    /// Far-field pattern `√(2/(πk)) e^{−iπ/4} Σ c_{|n|} e^{in(θ−φ_d)}`.
    pub fn far_field(&self, theta: f64) -> C64 {
        let pre = (2.0 / (PI * self.k)).sqrt() * C64::from_polar(1.0, -0.25 * PI);
        pre * self.series(theta, |n| self.coeffs[n])
    }

    /// Total field on the boundary; zero for a sound-soft disk.
    pub fn boundary_value(&self, theta: f64) -> C64 {
        if self.condition == LineCondition::Nodal {
            return C64::new(0.0, 0.0);
        }
        let w = 2.0 * I / (PI * self.radius);
        self.series(theta, |n| I.powu(n as u32) * w / self.boundary_denominator[n])
    }

    /// Outward normal derivative of the total field on the boundary.
    pub fn boundary_normal_derivative(&self, theta: f64) -> C64 {
        match self.condition {
            LineCondition::Nodal => {
                let w = -2.0 * I / (PI * self.radius);
                self.series(theta, |n| I.powu(n as u32) * w / self.boundary_denominator[n])
            }
            _ => -self.condition.eta().unwrap_or_default() * self.boundary_value(theta),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn optical_theorem_holds_for_mie_series() {
        for cond in [LineCondition::Nodal, LineCondition::Singular, LineCondition::Impedance(C64::new(0.7, 0.0))] {
            let mie = MieDisk::new(2.0, 1.0, 0.3, cond);
            let m = 256;
            let norm2: f64 =
                (0..m).map(|j| mie.far_field(2.0 * PI * j as f64 / m as f64).norm_sqr()).sum::<f64>() * 2.0 * PI
                    / m as f64;
            let forward = mie.far_field(0.3);
            let rhs = -(8.0 * PI / 2.0).sqrt() * (C64::from_polar(1.0, 0.25 * PI) * forward).re;
            assert!((norm2 - rhs).abs() < 1e-12 * norm2, "{cond:?}: {norm2} vs {rhs}");
        }
    }
}
