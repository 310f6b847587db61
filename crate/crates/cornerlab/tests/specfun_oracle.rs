use cornerlab::specfun::{bessel_j, bessel_j_prime};

#[allow(dead_code)]
mod data {
    include!("data/bessel.rs");
}

fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}

#[test]
fn series_oracle_up_to_thirty() {
    let mut worst = (0.0, 0, 0.0);
    for &(n, t, want) in data::J_SERIES {
        let got = bessel_j(n, t).unwrap();
        let e = rel_err(got, want);
        if e > worst.0 {
            worst = (e, n, t);
        }
    }
    assert!(worst.0 <= 1e-13, "worst relative error {:?}", worst);
}

#[test]
fn large_argument_absolute() {
    for &(n, t, want) in data::J_LARGE {
        let got = bessel_j(n, t).unwrap();
        assert!((got - want).abs() <= 1e-12, "n={n} t={t} got {got} want {want}");
    }
}

#[test]
fn second_order_at_one() {
    let want = data::J_SERIES.iter().find(|r| r.0 == 2 && r.1 == 1.0).unwrap().2;
    assert!((bessel_j(2, 1.0).unwrap() - want).abs() <= 1e-13 * want.abs());
}

#[test]
fn derivative_matches_richardson_difference() {
    let f = |t: f64| bessel_j(3, t).unwrap();
    let d = |h: f64| (f(2.0 + h) - f(2.0 - h)) / (2.0 * h);
    let h = 1e-3;
    let rich = (4.0 * d(h / 2.0) - d(h)) / 3.0;
    assert!((bessel_j_prime(3, 2.0).unwrap() - rich).abs() < 1e-10);
}

#[test]
fn recurrence_residual() {
    for n in 1..=30usize {
        for i in 0..=290 {
            let t = 0.1 + 0.1 * i as f64;
            let r = bessel_j(n - 1, t).unwrap() + bessel_j(n + 1, t).unwrap()
                - 2.0 * n as f64 / t * bessel_j(n, t).unwrap();
            assert!(r.abs() <= 1e-11, "n={n} t={t} residual {r}");
        }
    }
}

#[test]
fn bounded_by_one() {
    for n in 0..=64usize {
        for i in 0..400 {
            let t = 0.25 * i as f64;
            assert!(bessel_j(n, t).unwrap().abs() <= 1.0);
        }
    }
}

#[test]
fn hankel_oracle() {
    use cornerlab::specfun::{bessel_y01, hankel01, hankel1_all};
    for &(x, j0, y0, j1, y1) in data::HANKEL {
        let (h0, h1) = hankel01(x);
        let scale0 = (j0 * j0 + y0 * y0).sqrt();
        let scale1 = (j1 * j1 + y1 * y1).sqrt();
        assert!((h0.re - j0).abs() <= 1e-10 * scale0, "J0({x})");
        assert!((h0.im - y0).abs() <= 1e-10 * scale0, "Y0({x}) got {} want {y0}", h0.im);
        assert!((h1.re - j1).abs() <= 1e-10 * scale1, "J1({x})");
        assert!((h1.im - y1).abs() <= 1e-10 * scale1, "Y1({x}) got {} want {y1}", h1.im);
        let (a, b) = bessel_y01(x);
        assert_eq!((a, b), (h0.im, h1.im));
        let all = hankel1_all(1, x);
        assert!((all[1] - h1).norm() <= 1e-10 * scale1);
    }
}

#[test]
fn hankel_wronskian_for_higher_orders() {
    use cornerlab::specfun::hankel1_all;
    for x in [0.3, 2.0, 7.5, 12.0, 30.0] {
        let h = hankel1_all(20, x);
        for n in 0..19 {
            let w = h[n].re * h[n + 1].im - h[n + 1].re * h[n].im;
            let want = -2.0 / (std::f64::consts::PI * x);
            assert!((w - want).abs() <= 1e-11 * (h[n].norm() * h[n + 1].norm()).max(1.0), "x={x} n={n}");
        }
    }
}
