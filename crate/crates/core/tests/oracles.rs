//! Independent oracles: the Static group law against BCH in the algebra, the
//! realization against exp(-ad) acting on the dual, and frozen printed matrices.

use nalgebra::{DMatrix, DVector};
use ncphase::algebra::{adjoint_matrix, bracket, AlgebraElement, StructureConstants};
use ncphase::catalog::{build, AlgebraDescriptor, AlgebraName, KinematicalParams, Variant};
use ncphase::coadjoint::DualPoint;
use ncphase::linalg::{int, rat, Matrix, Rational};
use ncphase::orbits::{OrbitFixture, OrbitParams};
use ncphase::static_group::{compose, realize, StaticConstants, StaticGroupElement, StaticOrbitState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn static_algebra() -> StructureConstants {
    let p = KinematicalParams::from_curvatures(int(1), int(1)).unwrap();
    build(&AlgebraDescriptor { name: AlgebraName::Static, variant: Variant::NoncentralExt }, &p).unwrap()
}

fn dense(m: &Matrix<f64>) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)])
}

fn element(alg: &StructureConstants, parts: &[(&str, f64)]) -> AlgebraElement<f64> {
    let mut x = AlgebraElement::zero(alg);
    for (name, v) in parts {
        x.coords[alg.index_of(name).unwrap()] += v;
    }
    x
}

fn add(a: &AlgebraElement<f64>, b: &AlgebraElement<f64>, s: f64) -> AlgebraElement<f64> {
    AlgebraElement { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + s * y).collect() }
}

/// Split of g = exp(C) exp(V) exp(W) exp(theta J) into C, V and W.
fn factors(alg: &StructureConstants, g: &StaticGroupElement) -> [AlgebraElement<f64>; 3] {
    [
        element(alg, &[("M", g.xi), ("M'", g.phi), ("B", g.b), ("Lambda", g.a)]),
        element(alg, &[("F1", g.eta[0]), ("F2", g.eta[1]), ("Pi1", g.l[0]), ("Pi2", g.l[1])]),
        element(alg, &[("K1", g.v[0]), ("K2", g.v[1]), ("P1", g.x[0]), ("P2", g.x[1]), ("H", g.t)]),
    ]
}

/// log(e^X e^Y) in the rotation-free part, which is nilpotent of step three.
fn bch(alg: &StructureConstants, x: &AlgebraElement<f64>, y: &AlgebraElement<f64>) -> AlgebraElement<f64> {
    let br = |a: &AlgebraElement<f64>, b: &AlgebraElement<f64>| bracket(alg, a, b).unwrap();
    let xy = br(x, y);
    let xxy = br(x, &xy);
    let yxy = br(y, &xy);
    let mut z = add(x, y, 1.0);
    z = add(&z, &xy, 0.5);
    z = add(&z, &xxy, 1.0 / 12.0);
    z = add(&z, &yxy, -1.0 / 12.0);
    add(&z, &br(y, &xxy), -1.0 / 24.0)
}

fn rotate(alg: &StructureConstants, theta: f64, y: &AlgebraElement<f64>) -> AlgebraElement<f64> {
    let ad_j = dense(&adjoint_matrix(alg, &element(alg, &[("J", theta)])));
    let out = ad_j.exp() * DVector::from_column_slice(&y.coords);
    AlgebraElement { coords: out.iter().copied().collect() }
}

/// Group product computed in the algebra: e^{Xg} e^{tg J} e^{Xh} e^{th J} =
/// e^{BCH(Xg, R Xh)} e^{(tg + th) J}, then split back into the factors.
fn oracle_compose(alg: &StructureConstants, g: &StaticGroupElement, h: &StaticGroupElement) -> StaticGroupElement {
    let log = |e: &StaticGroupElement| {
        let [c, v, w] = factors(alg, e);
        add(&c, &bch(alg, &v, &w), 1.0)
    };
    let z = bch(alg, &log(g), &rotate(alg, g.theta, &log(h)));
    let at = |n: &str| z.coords[alg.index_of(n).unwrap()];
    let w = element(alg, &[("K1", at("K1")), ("K2", at("K2")), ("P1", at("P1")), ("P2", at("P2")), ("H", at("H"))]);
    let v = element(alg, &[("F1", at("F1")), ("F2", at("F2")), ("Pi1", at("Pi1")), ("Pi2", at("Pi2"))]);
    // z = C + V + W + [V, W]/2 since [V, W] is central
    let c = add(&add(&add(&z, &v, -1.0), &w, -1.0), &bracket(alg, &v, &w).unwrap(), -0.5);
    let cat = |n: &str| c.coords[alg.index_of(n).unwrap()];
    StaticGroupElement {
        theta: g.theta + h.theta,
        v: [at("K1"), at("K2")],
        x: [at("P1"), at("P2")],
        t: at("H"),
        eta: [at("F1"), at("F2")],
        l: [at("Pi1"), at("Pi2")],
        xi: cat("M"),
        phi: cat("M'"),
        b: cat("B"),
        a: cat("Lambda"),
    }
}

fn random_element(rng: &mut ChaCha8Rng) -> StaticGroupElement {
    let mut u = || rng.gen_range(-1.0..1.0);
    StaticGroupElement {
        theta: 3.0 * u(),
        v: [u(), u()],
        x: [u(), u()],
        t: u(),
        eta: [u(), u()],
        l: [u(), u()],
        xi: u(),
        phi: u(),
        b: u(),
        a: u(),
    }
}

#[test]
fn group_law_matches_bch() {
    let alg = static_algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..50 {
        let (g, h) = (random_element(&mut rng), random_element(&mut rng));
        let want = oracle_compose(&alg, &g, &h);
        let got = compose(&g, &h);
        assert!(got.distance(&want) < 1e-12, "{got:?}\n{want:?}");
    }
}

#[test]
fn realization_is_the_coadjoint_action() {
    let alg = static_algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let template = DualPoint::<f64>::zeros(&alg);
    for _ in 0..30 {
        let g = random_element(&mut rng);
        let constants = StaticConstants::new(
            rng.gen_range(0.5..2.0),
            rng.gen_range(1.0..3.0),
            rng.gen_range(-0.5..0.5),
            rng.gen_range(1.0..3.0),
        )
        .unwrap();
        let mut u = || rng.gen_range(-1.0..1.0);
        let s = StaticOrbitState { j: u(), energy: u(), p: [u(), u()], k: [u(), u()], q: [u(), u()], u: [u(), u()], constants };

        // (Ad*_g a)(Y) = a(Ad_{g^-1} Y), Ad_{g^-1} = e^{-theta ad J} e^{-ad W} e^{-ad V}
        let [_, v, w] = factors(&alg, &g);
        let ad = |x: &AlgebraElement<f64>, s: f64| (dense(&adjoint_matrix(&alg, x)) * -s).exp();
        let ad_inv = ad(&element(&alg, &[("J", g.theta)]), 1.0) * ad(&w, 1.0) * ad(&v, 1.0);
        let a = DVector::from_column_slice(s.to_dual(&template).unwrap().coords());
        let moved = ad_inv.transpose() * a;
        let want = StaticOrbitState::from_dual(&DualPoint::from_coords(&alg, moved.iter().copied().collect()).unwrap()).unwrap();
        let got = realize(&g, &s).unwrap();
        assert!(got.max_abs_diff(&want) < 1e-12, "{got:?}\n{want:?}");
    }
}

fn frozen(rows: &[&[Rational]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn galilei_theta_frozen() {
    // m = 2, h = 1, c = 1: omega0 = 2
    let p = OrbitParams::new(KinematicalParams::from_curvatures(int(1), int(1)).unwrap(), int(2), int(1));
    let s = OrbitFixture::Galilei.structure(&p).unwrap();
    let (z, h, q) = (int(0), rat(1, 2), rat(1, 4));
    let want = frozen(&[
        &[z.clone(), z.clone(), -h.clone(), z.clone()],
        &[z.clone(), z.clone(), z.clone(), -h.clone()],
        &[h.clone(), z.clone(), z.clone(), q.clone()],
        &[z.clone(), h.clone(), -q.clone(), z.clone()],
    ]);
    assert_eq!(s.theta, want);
    assert_eq!(s.g_field, rat(-1, 4));
}

#[test]
fn noncentral_static_theta_frozen() {
    // m = 1, mu = 2, kappa = 3, beta = 1; beta^2 - mu kappa = -5
    let p = OrbitParams::new(KinematicalParams::from_curvatures(int(1), int(1)).unwrap(), int(1), int(1))
        .with_static(int(2), int(1), int(3));
    let s = OrbitFixture::NoncentralStatic.structure(&p).unwrap();
    let r = |n: i64| rat(n, -5);
    let z = || int(0);
    let want = frozen(&[
        &[z(), z(), z(), z(), r(2), z(), r(-1), z()],
        &[z(), z(), z(), z(), z(), r(2), z(), r(-1)],
        &[z(), z(), z(), z(), r(-1), z(), r(3), z()],
        &[z(), z(), z(), z(), z(), r(-1), z(), r(3)],
        &[r(-2), z(), r(1), z(), z(), z(), r(1), z()],
        &[z(), r(-2), z(), r(1), z(), z(), z(), r(1)],
        &[r(1), z(), r(-3), z(), r(-1), z(), z(), z()],
        &[z(), r(1), z(), r(-3), z(), r(-1), z(), z()],
    ]);
    assert_eq!(s.theta, want);
}

#[test]
fn anisotropic_static_omega_frozen() {
    // m = 2, h = 1, omega = kappa = 1 (c = 1)
    let p = OrbitParams::new(KinematicalParams::from_curvatures(int(1), int(1)).unwrap(), int(2), int(1));
    let s = OrbitFixture::AnisotropicStatic.structure(&p).unwrap();
    let (z, o, m) = (int(0), int(1), int(2));
    let want = frozen(&[
        &[z.clone(), o.clone(), m.clone(), z.clone()],
        &[-o.clone(), z.clone(), z.clone(), m.clone()],
        &[-m.clone(), z.clone(), z.clone(), o.clone()],
        &[z.clone(), -m.clone(), -o.clone(), z.clone()],
    ]);
    assert_eq!(s.omega, want);
    // the true inverse: 1/(m^2 - ab) [[b eps, -m I], [m I, a eps]] with a = b = 1
    let t = rat(1, 3);
    let tm = rat(2, 3);
    let inv = frozen(&[
        &[z.clone(), t.clone(), -tm.clone(), z.clone()],
        &[-t.clone(), z.clone(), z.clone(), -tm.clone()],
        &[tm.clone(), z.clone(), z.clone(), t.clone()],
        &[z.clone(), tm.clone(), -t.clone(), z.clone()],
    ]);
    assert_eq!(s.theta, inv);
}
