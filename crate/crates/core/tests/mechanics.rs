use nalgebra::{Matrix4, Vector4};
use ncphase::linalg::{rat, Rational};
use ncphase::mechanics::{
    apply_coupling, canonical_brackets, galilei_coupling_jacobian, hamilton_rhs, integrate,
    paragalilei_coupling_jacobian, transport, HamiltonianSpec, NCPhaseSpace2D, QuadraticPotential,
};

fn free(m: f64) -> HamiltonianSpec {
    HamiltonianSpec::new(m, QuadraticPotential::default()).unwrap()
}

#[test]
fn free_canonical_motion() {
    let d = hamilton_rhs(&NCPhaseSpace2D::commutative(), &free(1.0), &[0.0, 0.0, 1.0, 0.0]);
    assert_eq!(d, [1.0, 0.0, 0.0, 0.0]);
}

#[test]
fn lorentz_like_force() {
    let (f, m) = (0.7, 2.0);
    let s = [0.3, -0.2, 1.5, -0.5];
    let d = hamilton_rhs(&NCPhaseSpace2D::new(0.0, f).unwrap(), &free(m), &s);
    assert_eq!([d[2], d[3]], [f * s[3] / m, -f * s[2] / m]);
}

#[test]
fn constant_force_drift() {
    let (g, force) = (0.4, [1.0, -2.0]);
    let h = HamiltonianSpec::new(1.0, QuadraticPotential::constant_force(force)).unwrap();
    let d = hamilton_rhs(&NCPhaseSpace2D::new(g, 0.0).unwrap(), &h, &[0.0; 4]);
    // grad V = -F, so the drift is G eps^{ij} dV/dx^j = -G eps^{ij} F_j
    assert_eq!(d, [-g * force[1], g * force[0], force[0], force[1]]);
}

#[test]
fn free_particle_is_exact() {
    let tr = integrate(&NCPhaseSpace2D::commutative(), &free(2.0), [1.0, -1.0, 0.5, 3.0], 5.0, 0.1).unwrap();
    let s = tr.last();
    assert!((s[0] - (1.0 + 0.25 * 5.0)).abs() < 1e-12);
    assert!((s[1] - (-1.0 + 1.5 * 5.0)).abs() < 1e-12);
}

#[test]
fn momentum_rotation_matches_matrix_exponential() {
    // Para-Galilei at m = omega = 1, omega0 = 2: F = -m omega^2/omega0
    let (m, f) = (1.0, -0.5);
    let period = 2.0 * std::f64::consts::PI * m / f64::abs(f);
    let x0 = [0.0, 0.0, 1.0, 0.5];
    let tr = integrate(&NCPhaseSpace2D::new(0.0, f).unwrap(), &free(m), x0, 10.0 * period, period / 1000.0).unwrap();
    let a = Matrix4::new(
        0.0, 0.0, 1.0 / m, 0.0, //
        0.0, 0.0, 0.0, 1.0 / m, //
        0.0, 0.0, 0.0, f / m, //
        0.0, 0.0, -f / m, 0.0,
    );
    for (t, s) in tr.times.iter().zip(&tr.states).step_by(250) {
        let exact = (a * *t).exp() * Vector4::from_column_slice(&x0);
        for (u, v) in s.iter().zip(exact.iter()) {
            assert!((u - v).abs() <= 1e-8 * (1.0 + v.abs()), "t={t}: {s:?} vs {exact:?}");
        }
    }
}

#[test]
fn oscillator_energy_drift() {
    let h = HamiltonianSpec::new(1.5, QuadraticPotential::isotropic_oscillator(2.0)).unwrap();
    let tr = integrate(&NCPhaseSpace2D::new(0.3, -0.4).unwrap(), &h, [1.0, 0.0, 0.0, 1.0], 10.0, 1e-3).unwrap();
    assert!(tr.states.len() > 10_000);
    assert!(tr.energy_drift() <= 1e-8, "{}", tr.energy_drift());
}

#[test]
fn galilei_coupling_example() {
    let j = galilei_coupling_jacobian(&1.0, &1.0).unwrap();
    assert_eq!(apply_coupling(&j, &[0.0, 0.0, 2.0, 0.0]).unwrap(), vec![0.0, 1.0, 2.0, 0.0]);
    assert_eq!(apply_coupling(&j, &[0.5, -1.0, 0.0, 0.0]).unwrap(), vec![0.5, -1.0, 0.0, 0.0]);
}

#[test]
fn paragalilei_coupling_example() {
    let j = paragalilei_coupling_jacobian(&1.0, &1.0, &1.0).unwrap();
    assert_eq!(apply_coupling(&j, &[0.0, 2.0, 0.0, 0.0]).unwrap(), vec![0.0, 2.0, 1.0, 0.0]);
    assert_eq!(apply_coupling(&j, &[0.0, 0.0, 3.0, 4.0]).unwrap(), vec![0.0, 0.0, 3.0, 4.0]);
}

#[test]
fn coupling_rejects_zero_scale() {
    assert!(galilei_coupling_jacobian(&0.0, &1.0).is_err());
    assert!(paragalilei_coupling_jacobian(&1.0, &0.0, &1.0).is_err());
}

#[test]
fn transported_brackets_are_exact() {
    let (m, w0) = (rat(3, 2), rat(5, 7));
    let t = transport(&galilei_coupling_jacobian(&m, &w0).unwrap(), &canonical_brackets::<Rational>()).unwrap();
    assert_eq!(t[(0, 1)], rat(-14, 15));
    assert_eq!(t[(2, 0)], rat(1, 1));
    assert_eq!(t[(2, 3)], rat(0, 1));
}
