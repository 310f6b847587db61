#![allow(clippy::excessive_precision, clippy::approx_constant)]

use cornerlab::cgo::*;
use cornerlab::expansion::Expansion;
use cornerlab::lines::LineCondition;
use cornerlab::vanishing::{constructed_expansion, CornerConfig};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

mod data {
    include!("data/cgo.rs");
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn line_integrals_match_oracle() {
    for &(ell, s, h, weighted, zr, zi, (vr, vi)) in data::LINE {
        let z = C64::new(zr, zi);
        let want = C64::new(vr, vi);
        let exact = line_integral_exact(ell, s, h, z, weighted).unwrap();
        let quad = line_integral_quadrature(ell, s, h, z, weighted, 1e-14 * want.norm()).unwrap();
        assert!(rel(exact, want) < 1e-10, "exact ell={ell} s={s} w={weighted}: {}", rel(exact, want));
        assert!(rel(quad, want) < 1e-10, "quad ell={ell} s={s} w={weighted}: {}", rel(quad, want));
    }
}

#[test]
fn sector_integrals_match_oracle() {
    for &(tm, tmax, s, (vr, vi)) in data::SECTOR {
        let w = SectorW::new(tm, tmax).unwrap();
        let want = C64::new(vr, vi);
        assert!(rel(sector_integral_exact(&w, s).unwrap(), want) < 1e-13);
        let h = (45.0 / w.delta()).powi(2) / s;
        let q = sector_quadrature(&w, s, h, |_, _| C64::new(1.0, 0.0));
        assert!(rel(q, want) < 1e-8, "s={s}: {}", rel(q, want));
    }
}

#[test]
fn sector_truncation_respects_tail_bound() {
    let w = SectorW::new(0.0, PI / 3.0).unwrap();
    for s in [50.0, 100.0, 400.0] {
        let exact = sector_integral_exact(&w, s).unwrap();
        let q = sector_quadrature(&w, s, 1.0, |_, _| C64::new(1.0, 0.0));
        assert!((exact - q).norm() <= sector_tail_bound(&w, s, 1.0) + 1e-13);
        let scaled: Vec<C64> = [1e2, 1e3, 1e4].iter().map(|&s| sector_integral_exact(&w, s).unwrap() * s * s).collect();
        assert!((scaled[0] - scaled[2]).norm() < 1e-10 * scaled[0].norm());
    }
}

#[test]
fn normal_derivative_matches_oracle() {
    let v = cgo_normal_derivative(4.0, 1.0, 0.0, -PI / 2.0).unwrap();
    let want = C64::new(data::NORMAL_DERIVATIVE.0, data::NORMAL_DERIVATIVE.1);
    assert!((v - want).norm() < 1e-14);
}

#[test]
fn single_mode_corner_expansions() {
    let u = Expansion::sine_mode(2, 1.0).unwrap();
    let w = SectorW::new(0.0, PI / 3.0).unwrap();
    let rep = verify_corner_expansions(&u, &w, None, &[100.0, 200.0, 400.0, 800.0, 1600.0], 4.0).unwrap();
    assert_eq!(rep.i11_minus.status, SlopeStatus::Negligible);
    assert!(rep.all_pass(), "{rep:#?}");
    let s = 800.0;
    let lead = -48.0 * beta(PI / 3.0, PI / 3.0 + PI / 2.0) * c2(&u, PI / 3.0) / (s * s * zeta(PI / 3.0).powi(5));
    let sample = rep.samples.iter().find(|p| p.s == s).unwrap();
    assert!((sample.i11_plus - lead).norm() < 1e-2 * lead.norm());
}

#[test]
fn impedance_corner_expansions() {
    let (e1, e2) = (C64::new(0.5, 0.0), C64::new(0.4, 0.2));
    let alpha = (5f64.sqrt() - 1.0) / 4.0;
    let cfg = CornerConfig::new(LineCondition::impedance(e1), LineCondition::impedance(e2), alpha, 1.0, C64::new(1.0, 0.0)).unwrap();
    let (u, _) = constructed_expansion(&cfg, 24).unwrap();
    let w = SectorW::new(0.0, alpha * PI).unwrap();
    let rep = verify_corner_expansions(&u, &w, Some((e1, e2)), &[100.0, 200.0, 400.0, 800.0, 1600.0], 4.0).unwrap();
    for c in [&rep.i11_plus, &rep.i11_minus, &rep.i12_plus, &rep.i12_minus, &rep.i2] {
        assert_eq!(c.status, SlopeStatus::Pass, "{c:?}");
    }
    assert!(rep.green_pass, "{}", rep.green_max_gap);
}

#[test]
fn singular_line_second_derivative_identity() {
    for (p, q) in [(1u64, 3u64), (2, 5), (3, 7)] {
        let cfg = CornerConfig::rational(LineCondition::Singular, LineCondition::Singular, p, q, 2.0, C64::new(0.7, 0.2)).unwrap();
        let (u, _) = constructed_expansion(&cfg, 20).unwrap();
        let th0 = cfg.theta0();
        let scale = u.derivatives_at_center().hessian.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(normal_derivative_slope(&u, 0.0, -PI / 2.0).norm() < 1e-10 * scale.max(1.0));
        assert!(normal_derivative_slope(&u, th0, th0 + PI / 2.0).norm() < 1e-10 * scale.max(1.0));
    }
}
