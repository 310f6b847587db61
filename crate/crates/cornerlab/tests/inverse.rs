use std::f64::consts::PI;

use cornerlab::expansion::{Expansion, VanishingOrder};
use cornerlab::inverse::{
    check_cc1, combined_field, convex_hull, corner_vanishing_probe, discrimination_experiment, independence_witness,
    local_average, CornerProbe, CornerSetting, Estimate, Field, Prediction,
};
use cornerlab::lines::{AngleClass, LineCondition};
use cornerlab::scatter::{Boundary, ForwardSolver, Incident, MeshConfig, PolygonalObstacle};
use cornerlab::vanishing::{constructed_expansion, CornerConfig};
use num_complex::Complex64 as C64;

struct Scaled<'a>(C64, &'a dyn Field);

impl Field for Scaled<'_> {
    fn value(&self, x: [f64; 2]) -> C64 {
        self.0 * self.1.value(x)
    }

    fn gradient(&self, x: [f64; 2]) -> [C64; 2] {
        let g = self.1.gradient(x);
        [self.0 * g[0], self.0 * g[1]]
    }
}

fn triangle_a() -> Vec<[f64; 2]> {
    vec![[-0.5, -0.4], [0.7, -0.3], [0.1, 0.6]]
}

fn triangle_b() -> Vec<[f64; 2]> {
    vec![[-0.62, 0.05], [0.15, -0.71], [0.58, 0.43]]
}

#[test]
fn local_average_of_constant_is_exact() {
    let probe = CornerProbe::geometric([0.2, -0.1], 0.7, 4.3, 0.1).unwrap();
    let c = C64::new(1.5, -0.25);
    let avg = local_average(|_| [c], &probe);
    for a in &avg.averages {
        assert!((a[0] - c).norm() < 1e-14);
    }
    assert!((avg.limit.unwrap()[0] - c).norm() < 1e-14);
}

#[test]
fn local_average_of_smooth_field_extrapolates_to_point_value() {
    let xc = [0.3, -0.2];
    let f = |x: [f64; 2]| C64::new(x[0], 2.0 * x[1]).exp() * (3.0 * x[1]).cos();
    for (start, width) in [(0.4, 4.1), (0.0, 2.0 * PI), (-1.0, 0.3)] {
        let probe = CornerProbe::geometric(xc, start, width, 0.1).unwrap();
        let avg = local_average(|x| [f(x)], &probe);
        let limit = avg.limit.expect("smooth field converges")[0];
        assert!((limit - f(xc)).norm() < 1e-6 * f(xc).norm(), "{limit} vs {}", f(xc));
        assert!(avg.error_estimate < 1e-6);
    }
}

#[test]
fn inverse_square_root_singularity_is_reported_divergent() {
    let xc = [0.0, 0.0];
    let probe = CornerProbe::geometric(xc, 0.0, 1.5 * PI, 0.2).unwrap();
    let avg = local_average(|x: [f64; 2]| [C64::new(x[0].hypot(x[1]).powf(-0.5), 0.0)], &probe);
    for (a, r) in avg.averages.iter().zip(&avg.radii) {
        let exact = 4.0 / 3.0 / r.sqrt();
        assert!((a[0].re - exact).abs() < 1e-4 * exact, "{} vs {exact}", a[0].re);
    }
    assert!(avg.limit.is_none());
    assert!((avg.contraction - 2f64.sqrt()).abs() < 1e-3);
}

#[test]
fn cc1_vanishes_for_proportional_fields_and_is_antisymmetric() {
    let k = 1.3;
    let u1 = Incident::plane_wave(k, 0.4);
    let u2 = Incident::plane_wave(k, 1.9);
    let probe = CornerProbe::geometric([0.5, 0.2], 1.0, 1.2 * PI, 0.1).unwrap();
    let same = check_cc1(&u1, &u1, &probe, 1e-8).unwrap();
    assert!(same.norm < 1e-15 && !same.nonzero);
    let scaled = Scaled(C64::new(-0.7, 2.0), &u1);
    let prop = check_cc1(&u1, &scaled, &probe, 1e-8).unwrap();
    assert!(prop.norm < 1e-14 && !prop.nonzero);
    let ab = check_cc1(&u1, &u2, &probe, 1e-8).unwrap();
    let ba = check_cc1(&u2, &u1, &probe, 1e-8).unwrap();
    for c in 0..2 {
        assert!((ab.value[c] + ba.value[c]).norm() < 1e-12 * ab.norm);
    }
    let (c1, c2) = (C64::new(0.2, -3.0), C64::new(-1.5, 0.1));
    let s1 = Scaled(c1, &u1);
    let s2 = Scaled(c2, &u2);
    let scaled_pair = check_cc1(&s1, &s2, &probe, 1e-8).unwrap();
    assert!(ab.nonzero && scaled_pair.nonzero);
    for c in 0..2 {
        assert!((scaled_pair.value[c] - c1 * c2 * ab.value[c]).norm() < 1e-12 * scaled_pair.norm);
    }
}

#[test]
fn cc1_small_obstacle_matches_incident_only_expression() {
    let k = 1.0;
    let tri = PolygonalObstacle::uniform(triangle_a(), LineCondition::Singular).unwrap();
    let scale = 0.05 / (k * tri.diameter());
    let small = tri.scaled([0.0, 0.0], scale).unwrap();
    assert!((k * small.diameter() - 0.05).abs() < 1e-12);
    let solver = ForwardSolver::new(&Boundary::from_obstacle(&small), k, &MeshConfig::default()).unwrap();
    let (d1, d2) = (0.3, 0.3 + 0.5 * PI);
    let u1 = solver.solve(&Incident::plane_wave(k, d1)).unwrap();
    let u2 = solver.solve(&Incident::plane_wave(k, d2)).unwrap();
    let shifted: Vec<[f64; 2]> = triangle_b().iter().map(|v| [scale * v[0] + 0.15, scale * v[1] + 0.05]).collect();
    let candidate = PolygonalObstacle::uniform(shifted, LineCondition::Singular).unwrap();
    let probe = CornerProbe::at_vertex(&candidate, 0, 0).unwrap();
    assert!(probe.avoids(&small));
    let rep = check_cc1(&u1, &u2, &probe, 1e-6).unwrap();
    let xc = probe.corner;
    let (a, b) = ([d1.cos(), d1.sin()], [d2.cos(), d2.sin()]);
    let phase = C64::new(0.0, k * (xc[0] * (a[0] + b[0]) + xc[1] * (a[1] + b[1]))).exp();
    let expected = [phase * C64::new(0.0, k * (a[0] - b[0])), phase * C64::new(0.0, k * (a[1] - b[1]))];
    let err = ((rep.value[0] - expected[0]).norm_sqr() + (rep.value[1] - expected[1]).norm_sqr()).sqrt();
    let scale = (expected[0].norm_sqr() + expected[1].norm_sqr()).sqrt();
    assert!(err <= 0.1 * scale, "relative deviation {}", err / scale);
    assert!(rep.nonzero);
}

#[test]
fn combined_field_vanishes_at_corner() {
    let k = 2.0;
    let u1 = Incident::plane_wave(k, 0.1);
    let u2 = Incident::plane_wave(k, 2.3);
    let xc = [0.37, -0.52];
    let v = combined_field(&u1, &u2, xc);
    assert!(!v.degenerate);
    let bound = (v.alpha1 * u1.value(xc)).norm().max((v.alpha2 * u2.value(xc)).norm());
    assert!(v.value(xc).norm() <= 1e-12 * bound);
    assert!((v.alpha1 - u2.value(xc)).norm() < 1e-15 && (v.alpha2 + u1.value(xc)).norm() < 1e-15);

    let same = combined_field(&u1, &u1, xc);
    assert!((same.alpha1 + same.alpha2).norm() < 1e-15);
    for p in [[0.0, 0.0], [1.0, -2.0], [3.0, 0.5]] {
        assert!(same.value(p).norm() < 1e-15);
    }

    let e1 = Expansion::sine_mode(2, 4.0).unwrap();
    let e2 = Expansion::sine_mode(3, 4.0).unwrap();
    let zero = combined_field(&e1, &e2, [0.0, 0.0]);
    assert!(zero.degenerate);
    assert_eq!((zero.alpha1, zero.alpha2), (C64::new(1.0, 0.0), C64::new(0.0, 0.0)));
}

#[test]
fn distinct_plane_waves_are_linearly_independent() {
    let k = 2.0;
    let u1 = Incident::plane_wave(k, 0.0);
    let u2 = Incident::plane_wave(k, 0.5 * PI);
    let sigma = independence_witness(&u1, &u2, [0.3, 0.1], 0.2, 8);
    assert!(sigma > 0.05, "{sigma}");
    let tiny = independence_witness(&u1, &u1, [0.3, 0.1], 0.2, 8);
    assert!(tiny < 1e-7, "{tiny}");
}

#[test]
fn vanishing_probe_recovers_constructed_order() {
    let config = CornerConfig::rational(LineCondition::Nodal, LineCondition::Nodal, 1, 3, 1.0, C64::new(0.0, 0.0)).unwrap();
    let (u, _) = constructed_expansion(&config, 20).unwrap();
    let probe = CornerProbe::geometric([0.0, 0.0], 0.0, PI / 3.0, 0.5).unwrap();
    let setting = CornerSetting {
        angle: 1.0 / 3.0,
        class: AngleClass::Rational { p: 1, q: 3 },
        conditions: (LineCondition::Nodal, LineCondition::Nodal),
        lambda: 1.0,
    };
    let rep = corner_vanishing_probe(&u, &probe, &setting);
    assert_eq!(rep.estimated, Estimate::Order { order: VanishingOrder::Finite(3) });
    assert_eq!(rep.predicted.unwrap().order, VanishingOrder::Finite(3));
    assert_eq!(rep.consistent, Some(true));

    let zero = Expansion::new(1.0, vec![(C64::new(0.0, 0.0), C64::new(0.0, 0.0))]).unwrap();
    let rep = corner_vanishing_probe(&zero, &probe, &setting);
    assert!(matches!(rep.estimated, Estimate::Order { order: VanishingOrder::AtLeast(_) }));

    let wave = Incident::plane_wave(1.0, 0.8);
    let free = CornerProbe::disk([0.4, 0.9], 0.2).unwrap();
    let rep = corner_vanishing_probe(&wave, &free, &setting);
    assert_eq!(rep.estimated, Estimate::Order { order: VanishingOrder::Finite(0) });
}

#[test]
fn convex_hull_drops_interior_and_collinear_points() {
    let pts = [[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [2.0, 2.0], [1.0, 1.0], [0.0, 2.0], [0.5, 1.5]];
    assert_eq!(convex_hull(&pts), vec![[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]);
}

#[test]
fn identical_obstacles_give_noise_level_discrepancy() {
    let tri = PolygonalObstacle::uniform(triangle_a(), LineCondition::Nodal).unwrap();
    let rep = discrimination_experiment(&tri, &tri, 2.0, 0.3, 1.9, 128, &MeshConfig::default()).unwrap();
    assert!(rep.discrepancies.iter().all(|d| *d <= 1e-5));
    assert!(rep.noise_floor <= 1e-5);
    assert_eq!(rep.prediction, Prediction::Identical);
    assert!(rep.corners.is_empty());
}

#[test]
fn irrational_triangles_are_discriminated() {
    let a = PolygonalObstacle::uniform(triangle_a(), LineCondition::Nodal).unwrap();
    let b = PolygonalObstacle::uniform(triangle_b(), LineCondition::Nodal).unwrap();
    let rep = discrimination_experiment(&a, &b, 2.0, 0.3, 1.9, 128, &MeshConfig::default()).unwrap();
    assert!(!rep.corners.is_empty());
    assert_eq!(rep.prediction, Prediction::DistinctByCorner);
    for d in rep.discrepancies {
        assert!(d > 1e-2 && d > 100.0 * rep.noise_floor, "{d} vs floor {}", rep.noise_floor);
    }
    for c in &rep.corners {
        assert_eq!(c.angle_class, AngleClass::Irrational);
        assert_eq!(c.vanishing.consistent, Some(false), "{c:?}");
    }
    serde_json::to_string(&rep).unwrap();
}

#[test]
fn impedance_contrast_on_hull_edge_is_discriminated() {
    let square = vec![[-0.5, -0.5], [0.5, -0.5], [0.5, 0.5], [-0.5, 0.5]];
    let eta = LineCondition::Impedance(C64::new(1.0, 0.0));
    let a = PolygonalObstacle::uniform(square, eta).unwrap();
    let b = a.with_edge_condition(0, 1, LineCondition::Impedance(C64::new(3.0, 1.0))).unwrap();
    let rep = discrimination_experiment(&a, &b, 2.0, 0.3, 1.9, 128, &MeshConfig::default()).unwrap();
    assert_eq!(rep.prediction, Prediction::DistinctByImpedance);
    assert_eq!(rep.hull_edge_differences.len(), 1);
    for d in rep.discrepancies {
        assert!(d > 1e-3 && d > 10.0 * rep.noise_floor, "{d} vs floor {}", rep.noise_floor);
    }
}
