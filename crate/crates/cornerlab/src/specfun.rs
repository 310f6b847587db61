//! Bessel functions of the first kind of integer order, and Hankel
//! functions of the first kind for positive real arguments.
//!
//! Small arguments (relative to the order) are summed from the power series
//! `J_n(t) = Σ_k (-1)^k (t/2)^{n+2k} / (k! (n+k)!)`. Everywhere else a
//! downward Miller recurrence normalized by `J_0 + 2 Σ J_{2k} = 1` is used.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;
use thiserror::Error;

/// Default cap on the order accepted by [`bessel_j`].
pub const N_ORDER_MAX: usize = 64;

/// Errors raised by the Bessel routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("Bessel order {order} exceeds the configured maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("Bessel argument must be finite and nonnegative, got {0}")]
    BadArgument(f64),
}

/// Evaluation limits for the Bessel routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselConfig {
    pub n_order_max: usize,
}

impl Default for BesselConfig {
    fn default() -> Self {
        Self { n_order_max: N_ORDER_MAX }
    }
}

/// A value of `J_n` together with its derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselEval {
    pub order: usize,
    pub argument: f64,
    pub value: f64,
    pub derivative: f64,
}

impl BesselConfig {
    fn check(&self, n: usize, t: f64) -> Result<(), SpecfunError> {
        if n > self.n_order_max {
            return Err(SpecfunError::OrderTooLarge { order: n, max: self.n_order_max });
        }
        if !(t.is_finite() && t >= 0.0) {
            return Err(SpecfunError::BadArgument(t));
        }
        Ok(())
    }

    /// `J_n(t)` subject to this configuration's order cap.
    pub fn bessel_j(&self, n: usize, t: f64) -> Result<f64, SpecfunError> {
        self.check(n, t)?;
        Ok(jn_unchecked(n, t))
    }

    /// `J_n'(t) = (J_{n-1}(t) - J_{n+1}(t)) / 2` with `J_{-1} = -J_1`.
    pub fn bessel_j_prime(&self, n: usize, t: f64) -> Result<f64, SpecfunError> {
        self.check(n, t)?;
        let all = bessel_j_all(n + 1, t);
        Ok(derivative_from_table(&all, n))
    }

    /// Value and derivative in one call.
    pub fn eval(&self, n: usize, t: f64) -> Result<BesselEval, SpecfunError> {
        self.check(n, t)?;
        let all = bessel_j_all(n + 1, t);
        Ok(BesselEval { order: n, argument: t, value: all[n], derivative: derivative_from_table(&all, n) })
    }
}

/// `J_n(t)` with the default order cap [`N_ORDER_MAX`].
pub fn bessel_j(n: usize, t: f64) -> Result<f64, SpecfunError> {
    BesselConfig::default().bessel_j(n, t)
}

/// `J_n'(t)` with the default order cap [`N_ORDER_MAX`].
pub fn bessel_j_prime(n: usize, t: f64) -> Result<f64, SpecfunError> {
    BesselConfig::default().bessel_j_prime(n, t)
}

/// Derivative of order `n` read from a table holding orders `0..=n+1`.
pub fn derivative_from_table(table: &[f64], n: usize) -> f64 {
    if n == 0 {
        -table[1]
    } else {
        0.5 * (table[n - 1] - table[n + 1])
    }
}

fn use_series(n: usize, t: f64) -> bool {
    t <= 1.0 || 0.25 * t * t <= (n as f64 + 1.0)
}

fn jn_series(n: usize, t: f64) -> f64 {
    if t == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let half = 0.5 * t;
    let mut lead = 1.0;
    for j in 1..=n {
        lead *= half / j as f64;
        if lead == 0.0 {
            return 0.0;
        }
    }
    let x = half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= -x / (k as f64 * (n + k) as f64);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn miller_start(nmax: usize, t: f64) -> usize {
    let base = (nmax as f64).max(t);
    let m = base + 30.0 + 4.0 * base.sqrt();
    let m = m.ceil() as usize;
    m + (m % 2)
}

/// Orders `0..=nmax` of `J_n(t)` computed together.
///
/// Orders whose series regime applies are recomputed from the series so that
/// tiny values keep full relative accuracy.
pub fn bessel_j_all(nmax: usize, t: f64) -> Vec<f64> {
    let mut out = vec![0.0; nmax + 1];
    if t == 0.0 {
        out[0] = 1.0;
        return out;
    }
    if t <= 1.0 {
        for (n, v) in out.iter_mut().enumerate() {
            *v = jn_series(n, t);
        }
        return out;
    }
    let m = miller_start(nmax, t);
    let mut table = vec![0.0; m + 2];
    let mut jp1 = 0.0;
    let mut j = 1e-300;
    table[m] = j;
    let mut norm = 0.0;
    for k in (1..=m).rev() {
        let jm1 = 2.0 * k as f64 / t * j - jp1;
        jp1 = j;
        j = jm1;
        table[k - 1] = j;
        if j.abs() > 1e250 {
            for v in table.iter_mut().skip(k - 1) {
                *v *= 1e-250;
            }
            j *= 1e-250;
            jp1 *= 1e-250;
        }
    }
    for k in (2..=m).step_by(2) {
        norm += table[k];
    }
    norm = table[0] + 2.0 * norm;
    for (n, v) in out.iter_mut().enumerate() {
        *v = if use_series(n, t) { jn_series(n, t) } else { table[n] / norm };
    }
    out
}

pub(crate) fn jn_unchecked(n: usize, t: f64) -> f64 {
    if use_series(n, t) {
        jn_series(n, t)
    } else {
        bessel_j_all(n, t)[n]
    }
}

/// Argument at which the Hankel routines switch from the Neumann series to
/// the large-argument asymptotic expansion.
pub const HANKEL_SWITCH: f64 = 12.0;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `(Y_0(x), Y_1(x))` for `x > 0`.
pub fn bessel_y01(x: f64) -> (f64, f64) {
    let (_, _, y0, y1) = jy01(x);
    (y0, y1)
}

/// `(H_0^{(1)}(x), H_1^{(1)}(x))` for `x > 0`.
pub fn hankel01(x: f64) -> (C64, C64) {
    let (j0, j1, y0, y1) = jy01(x);
    (C64::new(j0, y0), C64::new(j1, y1))
}

/// Orders `0..=nmax` of `H_n^{(1)}(x)` for `x > 0`, with `Y_n` from the
/// upward recurrence.
pub fn hankel1_all(nmax: usize, x: f64) -> Vec<C64> {
    let j = bessel_j_all(nmax, x);
    let (_, _, y0, y1) = jy01(x);
    let mut y = vec![y0; nmax + 1];
    if nmax >= 1 {
        y[1] = y1;
    }
    for n in 1..nmax {
        y[n + 1] = 2.0 * n as f64 / x * y[n] - y[n - 1];
    }
    j.iter().zip(&y).map(|(a, b)| C64::new(*a, *b)).collect()
}

fn jy01(x: f64) -> (f64, f64, f64, f64) {
    if x >= HANKEL_SWITCH {
        let h0 = hankel_asymptotic(0.0, x);
        let h1 = hankel_asymptotic(1.0, x);
        (h0.re, h1.re, h0.im, h1.im)
    } else {
        jy01_neumann(x)
    }
}

/// Miller recurrence accumulating `J_0`, `J_1` and the Neumann series
/// `Y_0 = (2/π)((ln(x/2) + γ) J_0 − 2 Σ (−1)^k J_{2k}/k)` and its derivative.
fn jy01_neumann(x: f64) -> (f64, f64, f64, f64) {
    let m = miller_start(1, x);
    let (mut jp1, mut j) = (0.0, 1e-300);
    let (mut norm, mut s_even, mut s_odd) = (0.0, 0.0, 0.0);
    for order in (0..m).rev() {
        let jm1 = 2.0 * (order + 1) as f64 / x * j - jp1;
        jp1 = j;
        j = jm1;
        if order >= 2 && order % 2 == 0 {
            let k = order / 2;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            norm += j;
            s_even += sign * j / k as f64;
        } else if order >= 3 {
            let k = (order - 1) / 2;
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            s_odd += sign * (1.0 / k as f64 + 1.0 / (k + 1) as f64) * j;
        }
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
            s_even *= 1e-250;
            s_odd *= 1e-250;
        }
    }
    let norm = j + 2.0 * norm;
    let (j0, j1) = (j / norm, jp1 / norm);
    let l = (0.5 * x).ln() + EULER_GAMMA;
    let y0 = 2.0 / PI * (l * j0 - 2.0 * s_even / norm);
    let y1 = 2.0 / PI * (l * j1 - j0 / x - j1 + s_odd / norm);
    (j0, j1, y0, y1)
}

/// `H_ν^{(1)}(x) ≈ sqrt(2/(πx)) e^{i(x − νπ/2 − π/4)} Σ_k i^k a_k(ν) / x^k`,
/// summed until the terms stop decreasing.
fn hankel_asymptotic(nu: f64, x: f64) -> C64 {
    let mu = 4.0 * nu * nu;
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        let next = term * C64::new(0.0, (mu - odd * odd) / (8.0 * k as f64 * x));
        if next.norm() >= term.norm() {
            break;
        }
        term = next;
        sum += term;
        if term.norm() < 1e-17 {
            break;
        }
    }
    let phase = x - 0.5 * nu * PI - 0.25 * PI;
    (2.0 / (PI * x)).sqrt() * C64::from_polar(1.0, phase) * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_values() {
        assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j_prime(0, 0.0).unwrap(), 0.0);
        assert_eq!(bessel_j_prime(1, 0.0).unwrap(), 0.5);
    }

    #[test]
    fn order_cap_is_enforced() {
        assert_eq!(bessel_j(65, 1.0), Err(SpecfunError::OrderTooLarge { order: 65, max: 64 }));
        let cfg = BesselConfig { n_order_max: 100 };
        assert!(cfg.bessel_j(80, 3.0).is_ok());
        assert!(matches!(bessel_j(2, -1.0), Err(SpecfunError::BadArgument(_))));
    }

    #[test]
    fn table_agrees_with_single_order() {
        let t = 7.3;
        let all = bessel_j_all(20, t);
        for (n, v) in all.iter().enumerate() {
            assert!((v - jn_unchecked(n, t)).abs() < 1e-15);
        }
    }
}
