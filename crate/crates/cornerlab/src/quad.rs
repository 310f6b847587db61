//! Gauss–Legendre rules and adaptive quadrature shared by the numerical modules.

use num_complex::Complex64 as C64;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Mutex, OnceLock};

type Rule = (Vec<f64>, Vec<f64>);

fn compute_rule(n: usize) -> Rule {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else if n == 1 { x } else { p1 };
            let pnm1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pnm1) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Nodes (ascending, in `[-1, 1]`) and weights of the `n`-point Gauss–Legendre rule.
pub fn gauss_legendre(n: usize) -> Rule {
    static CACHE: OnceLock<Mutex<HashMap<usize, Rule>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().expect("quadrature cache lock").get(&n) {
        return r.clone();
    }
    let rule = compute_rule(n);
    cache.lock().expect("quadrature cache lock").insert(n, rule.clone());
    rule
}

/// Integral of `f` over `[a, b]` with a fixed `n`-point Gauss rule.
pub fn gauss_fixed<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64, n: usize) -> C64 {
    let (x, w) = gauss_legendre(n);
    let (m, h) = (0.5 * (a + b), 0.5 * (b - a));
    x.iter().zip(&w).map(|(xi, wi)| f(m + h * xi) * *wi).sum::<C64>() * h
}

fn gauss_with_magnitude<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64) -> (C64, f64) {
    let (x, w) = gauss_legendre(20);
    let (m, h) = (0.5 * (a + b), 0.5 * (b - a));
    let (mut sum, mut mag) = (C64::new(0.0, 0.0), 0.0);
    for (xi, wi) in x.iter().zip(&w) {
        let v = f(m + h * xi) * *wi;
        sum += v;
        mag += v.norm();
    }
    (sum * h, mag * h.abs())
}

/// Adaptive bisection with a 20-point Gauss rule compared against its two
/// halves. A panel is accepted once the difference reaches `tol` or the
/// round-off level of `∫|f|` over the panel.
pub fn adaptive<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64, tol: f64) -> C64 {
    fn rec<F: Fn(f64) -> C64>(f: &F, a: f64, b: f64, whole: C64, tol: f64, depth: usize) -> C64 {
        let m = 0.5 * (a + b);
        let (l, lm) = gauss_with_magnitude(f, a, m);
        let (r, rm) = gauss_with_magnitude(f, m, b);
        let floor = 16.0 * f64::EPSILON * (lm + rm);
        if depth == 0 || (l + r - whole).norm() <= tol.max(floor) {
            return l + r;
        }
        rec(f, a, m, l, 0.5 * tol, depth - 1) + rec(f, m, b, r, 0.5 * tol, depth - 1)
    }
    let whole = gauss_fixed(f, a, b, 20);
    rec(f, a, b, whole, tol, 50)
}

/// Composite Gauss rule on `[0, h]` with panels geometrically graded toward 0.
///
/// Returns nodes and weights; `levels` panels with ratio `ratio`, the
/// innermost panel reaching the origin, `n` points per panel.
pub fn graded_rule(h: f64, levels: usize, ratio: f64, n: usize) -> Rule {
    let (x, w) = gauss_legendre(n);
    let mut nodes = Vec::with_capacity(levels * n);
    let mut weights = Vec::with_capacity(levels * n);
    let mut hi = h;
    for level in 0..levels {
        let lo = if level + 1 == levels { 0.0 } else { hi * ratio };
        let (m, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
        for (xi, wi) in x.iter().zip(&w) {
            nodes.push(m + half * xi);
            weights.push(half * wi);
        }
        hi = lo;
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rules_integrate_polynomials() {
        for n in [1, 2, 5, 8, 16, 20, 64] {
            let (x, w) = gauss_legendre(n);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
            let deg = 2 * n - 1;
            let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32 - 1)).sum();
            let exact = if (deg - 1) % 2 == 0 { 2.0 / deg as f64 } else { 0.0 };
            assert!((s - exact).abs() < 1e-13, "n={n}");
        }
    }

    #[test]
    fn adaptive_handles_endpoint_singularity() {
        let v = adaptive(&|x: f64| C64::new(x.sqrt().recip(), 0.0), 0.0, 1.0, 1e-12);
        assert!((v.re - 2.0).abs() < 1e-9);
    }

    #[test]
    fn graded_rule_resolves_sqrt() {
        let (x, w) = graded_rule(1.0, 30, 0.5, 16);
        let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.sqrt()).sum();
        assert!((s - 2.0 / 3.0).abs() < 1e-13);
    }
}
