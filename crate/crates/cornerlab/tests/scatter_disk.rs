use std::f64::consts::PI;

use cornerlab::lines::LineCondition;
use cornerlab::scatter::{far_field, Boundary, ForwardSolver, Formulation, Incident, MeshConfig, MieDisk};
use num_complex::Complex64 as C64;

fn rel_l2(got: &[C64], want: &[C64]) -> f64 {
    let num: f64 = got.iter().zip(want).map(|(a, b)| (a - b).norm_sqr()).sum();
    let den: f64 = want.iter().map(|b| b.norm_sqr()).sum();
    (num / den).sqrt()
}

fn disk_far_field_error(cond: LineCondition, formulation: Formulation) -> f64 {
    let k = 2.0;
    let angle = 0.4;
    let mesh = MeshConfig { formulation, ..MeshConfig::default() };
    let solver = ForwardSolver::new(&Boundary::disk([0.0, 0.0], 1.0, cond, 1), k, &mesh).unwrap();
    let sol = solver.solve(&Incident::plane_wave(k, angle)).unwrap();
    let ff = far_field(&sol, 128).unwrap();
    let mie = MieDisk::new(k, 1.0, angle, cond);
    let want: Vec<C64> = ff.samples.iter().map(|(a, _)| mie.far_field(*a)).collect();
    let got: Vec<C64> = ff.samples.iter().map(|(_, v)| *v).collect();
    rel_l2(&got, &want)
}

#[test]
fn sound_soft_disk_far_field_matches_mie() {
    let e = disk_far_field_error(LineCondition::Nodal, Formulation::Auto);
    assert!(e <= 1e-4, "{e:e}");
    let e = disk_far_field_error(LineCondition::Nodal, Formulation::Direct);
    assert!(e <= 1e-4, "{e:e}");
}

#[test]
fn sound_hard_and_impedance_disk_far_fields_match_mie() {
    for cond in [LineCondition::Singular, LineCondition::Impedance(C64::new(0.8, 0.5))] {
        let e = disk_far_field_error(cond, Formulation::Auto);
        assert!(e <= 1e-4, "{cond:?}: {e:e}");
    }
}

#[test]
fn disk_boundary_densities_match_mie() {
    let k = 2.0;
    let angle = 0.4;
    for cond in [LineCondition::Nodal, LineCondition::Singular, LineCondition::Impedance(C64::new(0.8, 0.5))] {
        let mesh = MeshConfig { formulation: Formulation::Direct, ..MeshConfig::default() };
        let solver = ForwardSolver::new(&Boundary::disk([0.0, 0.0], 1.0, cond, 1), k, &mesh).unwrap();
        let sol = solver.solve(&Incident::plane_wave(k, angle)).unwrap();
        let mie = MieDisk::new(k, 1.0, angle, cond);
        let vals = sol.boundary_values().unwrap();
        let (mut got, mut want) = (Vec::new(), Vec::new());
        for (x, u, dn) in vals {
            let th = x[1].atan2(x[0]);
            got.push(u);
            got.push(dn);
            want.push(mie.boundary_value(th));
            want.push(mie.boundary_normal_derivative(th));
        }
        let e = rel_l2(&got, &want);
        assert!(e <= 1e-4, "{cond:?}: {e:e}");
        let r = sol.boundary_residual();
        assert!(r.max <= 1e-6);
    }
}

#[test]
fn far_field_extraction_from_near_field() {
    let k = 2.0;
    let cond = LineCondition::Nodal;
    let solver = ForwardSolver::new(&Boundary::disk([0.0, 0.0], 1.0, cond, 1), k, &MeshConfig::default()).unwrap();
    let sol = solver.solve(&Incident::plane_wave(k, 0.0)).unwrap();
    let mut errs = Vec::new();
    for r in [50.0 / k, 100.0 / k] {
        let mut e: f64 = 0.0;
        for j in 0..16 {
            let a = 2.0 * PI * j as f64 / 16.0;
            let us = sol.scattered([r * a.cos(), r * a.sin()]);
            let approx = us * r.sqrt() * C64::from_polar(1.0, -k * r);
            e = e.max((approx - sol.far_field_at(a)).norm());
        }
        errs.push(e);
    }
    let ratio = errs[0] / errs[1];
    assert!(ratio > 1.7 && ratio < 2.3, "{errs:?}");
}
