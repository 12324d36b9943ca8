//! The noncentrally extended planar Static group.
//!
//! Elements are parameterized as
//! g = exp(xi M + phi M' + b B + a Lambda) exp(eta F + l Pi) exp(v K + x P + t H) exp(theta J).
//! Orbit coordinates: q = -f/kappa_e, u = I/mu_e with
//! kappa_e = kappa - beta^2/mu and mu_e = mu - beta^2/kappa.

use serde::{Deserialize, Serialize};

use crate::coadjoint::{DualPoint, Role, SymplecticStructure};
use crate::error::{Error, Result};
use crate::linalg::{from_f64, Matrix};
use crate::mechanics::PoissonSystem;
use crate::orbits::{OrbitFixture, OrbitParams};
use crate::report::{Cell, Record};

pub type Vec2 = [f64; 2];

fn rot(theta: f64, v: Vec2) -> Vec2 {
    let (s, c) = theta.sin_cos();
    [c * v[0] - s * v[1], s * v[0] + c * v[1]]
}

fn dot(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

/// a x b = a1 b2 - a2 b1
pub fn cross(a: Vec2, b: Vec2) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn add(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] + b[0], a[1] + b[1]]
}

fn sub(a: Vec2, b: Vec2) -> Vec2 {
    [a[0] - b[0], a[1] - b[1]]
}

fn scale(s: f64, a: Vec2) -> Vec2 {
    [s * a[0], s * a[1]]
}

/// Values of the central dual coordinates on the orbit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StaticConstants {
    pub m: f64,
    pub mu_mass: f64,
    pub beta_dual: f64,
    pub kappa_hooke: f64,
}

impl StaticConstants {
    pub fn new(m: f64, mu_mass: f64, beta_dual: f64, kappa_hooke: f64) -> Result<Self> {
        let c = StaticConstants { m, mu_mass, beta_dual, kappa_hooke };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        let vals = [self.m, self.mu_mass, self.beta_dual, self.kappa_hooke];
        if vals.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("Static constants must be finite".into()));
        }
        if self.mu_mass == 0.0 || self.kappa_hooke == 0.0 {
            return Err(Error::InvalidParameter("Static constants need mu != 0 and kappa != 0".into()));
        }
        if self.mu_mass * self.kappa_hooke == self.beta_dual * self.beta_dual {
            return Err(Error::InvalidParameter("degenerate Static orbit: mu*kappa = beta^2".into()));
        }
        Ok(())
    }

    pub fn kappa_e(&self) -> f64 {
        self.kappa_hooke - self.beta_dual * self.beta_dual / self.mu_mass
    }

    pub fn mu_e(&self) -> f64 {
        self.mu_mass - self.beta_dual * self.beta_dual / self.kappa_hooke
    }

    pub fn tau(&self) -> f64 {
        self.beta_dual / self.kappa_e()
    }

    pub fn nu_e(&self) -> f64 {
        self.beta_dual / self.mu_e()
    }
}

/// A point of the noncentral Static orbit, carrying j and E as well.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StaticOrbitState {
    pub j: f64,
    pub energy: f64,
    pub p: Vec2,
    pub k: Vec2,
    pub q: Vec2,
    pub u: Vec2,
    pub constants: StaticConstants,
}

impl StaticOrbitState {
    /// Force f = -kappa_e q.
    pub fn force(&self) -> Vec2 {
        scale(-self.constants.kappa_e(), self.q)
    }

    /// Second linear momentum I = mu_e u.
    pub fn second_momentum(&self) -> Vec2 {
        scale(self.constants.mu_e(), self.u)
    }

    pub fn from_dual(a: &DualPoint<f64>) -> Result<Self> {
        let get = |l: &str| a.get(l);
        let constants = StaticConstants::new(get("m")?, get("mu_mass")?, get("beta_dual")?, get("kappa_hooke")?)?;
        let (ke, me) = (constants.kappa_e(), constants.mu_e());
        Ok(StaticOrbitState {
            j: get("j")?,
            energy: get("E")?,
            p: [get("p1")?, get("p2")?],
            k: [get("k1")?, get("k2")?],
            q: [-get("f1")? / ke, -get("f2")? / ke],
            u: [get("I1")? / me, get("I2")? / me],
            constants,
        })
    }

    /// Writes the state into a dual point of the noncentral Static algebra.
    pub fn to_dual(&self, template: &DualPoint<f64>) -> Result<DualPoint<f64>> {
        let c = &self.constants;
        let f = self.force();
        let i = self.second_momentum();
        let mut a = template.clone();
        for (l, v) in [
            ("j", self.j),
            ("E", self.energy),
            ("p1", self.p[0]),
            ("p2", self.p[1]),
            ("k1", self.k[0]),
            ("k2", self.k[1]),
            ("f1", f[0]),
            ("f2", f[1]),
            ("I1", i[0]),
            ("I2", i[1]),
            ("m", c.m),
            ("mu_mass", c.mu_mass),
            ("beta_dual", c.beta_dual),
            ("kappa_hooke", c.kappa_hooke),
        ] {
            a.set(l, v)?;
        }
        Ok(a)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d = (self.j - other.j).abs().max((self.energy - other.energy).abs());
        for (a, b) in [(self.p, other.p), (self.k, other.k), (self.q, other.q), (self.u, other.u)] {
            d = d.max((a[0] - b[0]).abs()).max((a[1] - b[1]).abs());
        }
        d
    }
}

/// s = j - (k - (beta/kappa) p) x u + (p - (beta/mu) k) x q + m (mu_e/mu) q x u.
pub fn invariant_s(s: &StaticOrbitState) -> f64 {
    let c = &s.constants;
    let (b, mu, ka) = (c.beta_dual, c.mu_mass, c.kappa_hooke);
    let w = sub(s.k, scale(b / ka, s.p));
    let z = sub(s.p, scale(b / mu, s.k));
    s.j - cross(w, s.u) + cross(z, s.q) + c.m * c.mu_e() / mu * cross(s.q, s.u)
}

/// U = E - mu_e u^2/2 - kappa_e q^2/2 - (beta mu_e/mu) q.u - nu h.
pub fn invariant_u(s: &StaticOrbitState, nu_h: f64) -> f64 {
    let c = &s.constants;
    s.energy - c.mu_e() * dot(s.u, s.u) / 2.0 - c.kappa_e() * dot(s.q, s.q) / 2.0
        - c.beta_dual * c.mu_e() / c.mu_mass * dot(s.q, s.u)
        - nu_h
}

/// (s, U) on a state.
pub fn static_invariants(s: &StaticOrbitState, nu_h: f64) -> (f64, f64) {
    (invariant_s(s), invariant_u(s, nu_h))
}

/// s and its gradient over the non-central dual coordinates (j, k, p, f, I).
/// Central directions have vanishing Kirillov columns, so their components
/// do not enter a Casimir residual and are left at zero.
pub fn casimir_s(a: &DualPoint<f64>) -> (f64, Vec<f64>) {
    let st = StaticOrbitState::from_dual(a).expect("noncentral Static dual point");
    let c = st.constants;
    let (b, mu, ka, ke, me) = (c.beta_dual, c.mu_mass, c.kappa_hooke, c.kappa_e(), c.mu_e());
    let cq = c.m * me / mu;
    let w = sub(st.k, scale(b / ka, st.p));
    let z = sub(st.p, scale(b / mu, st.k));
    let (q, u) = (st.q, st.u);
    // d(a x b)/da = (b2, -b1), d(a x b)/db = (-a2, a1)
    let dk = add(scale(-1.0, [u[1], -u[0]]), scale(-b / mu, [q[1], -q[0]]));
    let dp = add(scale(b / ka, [u[1], -u[0]]), [q[1], -q[0]]);
    let dq = add([-z[1], z[0]], scale(cq, [u[1], -u[0]]));
    let du = add([w[1], -w[0]], scale(cq, [-q[1], q[0]]));
    let mut grad = vec![0.0; a.coords().len()];
    let mut put = |l: &str, v: f64| grad[a.index_of(l).expect("label")] = v;
    put("j", 1.0);
    put("k1", dk[0]);
    put("k2", dk[1]);
    put("p1", dp[0]);
    put("p2", dp[1]);
    put("f1", -dq[0] / ke);
    put("f2", -dq[1] / ke);
    put("I1", du[0] / me);
    put("I2", du[1] / me);
    (invariant_s(&st), grad)
}

/// U and its gradient over the non-central dual coordinates.
pub fn casimir_u(a: &DualPoint<f64>, nu_h: f64) -> (f64, Vec<f64>) {
    let st = StaticOrbitState::from_dual(a).expect("noncentral Static dual point");
    let c = st.constants;
    let (ke, me) = (c.kappa_e(), c.mu_e());
    let cqu = c.beta_dual * me / c.mu_mass;
    let dq = add(scale(-ke, st.q), scale(-cqu, st.u));
    let du = add(scale(-me, st.u), scale(-cqu, st.q));
    let mut grad = vec![0.0; a.coords().len()];
    let mut put = |l: &str, v: f64| grad[a.index_of(l).expect("label")] = v;
    put("E", 1.0);
    put("f1", -dq[0] / ke);
    put("f2", -dq[1] / ke);
    put("I1", du[0] / me);
    put("I2", du[1] / me);
    (invariant_u(&st, nu_h), grad)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct StaticGroupElement {
    pub theta: f64,
    pub v: Vec2,
    pub x: Vec2,
    pub t: f64,
    pub eta: Vec2,
    pub l: Vec2,
    /// coefficient of M
    pub xi: f64,
    /// coefficient of M'
    pub phi: f64,
    /// coefficient of B
    pub b: f64,
    /// coefficient of Lambda
    pub a: f64,
}

impl StaticGroupElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn time_translation(t: f64) -> Self {
        StaticGroupElement { t, ..Self::default() }
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|x| x.is_finite())
    }

    pub fn components(&self) -> [f64; 16] {
        [
            self.theta, self.v[0], self.v[1], self.x[0], self.x[1], self.t, self.eta[0], self.eta[1], self.l[0],
            self.l[1], self.xi, self.phi, self.b, self.a, 0.0, 0.0,
        ]
    }

    /// Largest component difference, with angles compared modulo 2 pi.
    pub fn distance(&self, other: &Self) -> f64 {
        let d = (self.theta - other.theta).rem_euclid(std::f64::consts::TAU);
        let dtheta = d.min(std::f64::consts::TAU - d);
        self.components()
            .iter()
            .zip(other.components().iter())
            .skip(1)
            .map(|(a, b)| (a - b).abs())
            .fold(dtheta, f64::max)
    }

    pub fn inverse(&self) -> Self {
        let r = |w| rot(-self.theta, scale(-1.0, w));
        StaticGroupElement {
            theta: -self.theta,
            v: r(self.v),
            x: r(self.x),
            t: -self.t,
            eta: r(self.eta),
            l: r(self.l),
            xi: -self.xi,
            phi: -self.phi + dot(self.v, self.l),
            b: -self.b + dot(self.v, self.eta) + dot(self.x, self.l),
            a: -self.a + dot(self.x, self.eta),
        }
    }
}

/// Group law. The base part rotates and adds; the vector cocycle is
/// (1/2 (x t' - t R x'), 1/2 (v t' - t R v')). The scalar cocycle follows from
/// BCH for this step-three nilpotent algebra.
pub fn compose(g: &StaticGroupElement, h: &StaticGroupElement) -> StaticGroupElement {
    let r = |w| rot(g.theta, w);
    let (rv, rx, reta, rl) = (r(h.v), r(h.x), r(h.eta), r(h.l));
    let n_f = sub(scale(h.t, g.x), scale(g.t, rx));
    let n_pi = sub(scale(h.t, g.v), scale(g.t, rv));
    let av = add(scale(1.0 / 3.0, g.v), scale(1.0 / 6.0, rv));
    let bx = add(scale(1.0 / 3.0, g.x), scale(1.0 / 6.0, rx));
    let c_m = 0.5 * (dot(g.v, rx) - dot(g.x, rv));
    let c_mp = dot(g.v, rl) + dot(av, n_pi);
    let c_b = dot(g.v, reta) + dot(g.x, rl) + dot(av, n_f) + dot(bx, n_pi);
    let c_l = dot(g.x, reta) + dot(bx, n_f);
    StaticGroupElement {
        theta: g.theta + h.theta,
        v: add(g.v, rv),
        x: add(g.x, rx),
        t: g.t + h.t,
        eta: add(add(reta, g.eta), scale(0.5, n_f)),
        l: add(add(rl, g.l), scale(0.5, n_pi)),
        xi: g.xi + h.xi + c_m,
        phi: g.phi + h.phi + c_mp,
        b: g.b + h.b + c_b,
        a: g.a + h.a + c_l,
    }
}

/// Coadjoint action on the orbit: rotation, then exp(vK + xP + tH), then
/// exp(eta F + l Pi). Central factors act trivially.
pub fn realize(g: &StaticGroupElement, s: &StaticOrbitState) -> Result<StaticOrbitState> {
    let c = s.constants;
    c.validate()?;
    let (m, mu, be, ka) = (c.m, c.mu_mass, c.beta_dual, c.kappa_hooke);
    let r = |w| rot(g.theta, w);
    let (p, k) = (r(s.p), r(s.k));
    let (f, i) = (r(s.force()), r(s.second_momentum()));
    let (v, x, t, eta, l) = (g.v, g.x, g.t, g.eta, g.l);

    let (ke, me) = (c.kappa_e(), c.mu_e());
    let q2 = add(r(s.q), add(scale(be / ke, v), scale(ka / ke, x)));
    let u2 = sub(r(s.u), add(scale(be / me, x), scale(mu / me, v)));
    let p2 = add(
        sub(add(p, scale(t, f)), add(scale(0.5 * t, add(scale(be, v), scale(ka, x))), scale(m, v))),
        add(scale(ka, eta), scale(be, l)),
    );
    let k2 = add(
        sub(add(k, scale(t, i)), scale(0.5 * t, add(scale(be, x), scale(mu, v)))),
        add(add(scale(m, x), scale(mu, l)), scale(be, eta)),
    );
    let e2 = s.energy - dot(i, v) - dot(f, x) + be * dot(v, x) + ka * dot(x, x) / 2.0 + mu * dot(v, v) / 2.0;
    let j2 = s.j
        + cross(v, k)
        + cross(x, p)
        + cross(eta, f)
        + cross(l, i)
        + 0.5 * t * (cross(v, i) + cross(x, f))
        + be * (cross(v, eta) + cross(x, l))
        + ka * cross(x, eta)
        + mu * cross(v, l)
        + m * cross(v, x);
    Ok(StaticOrbitState {
        j: j2,
        energy: e2,
        p: p2,
        k: k2,
        q: q2,
        u: u2,
        constants: c,
    })
}

/// State after time t: p - t kappa_e q, k + t mu_e u, q and u fixed.
pub fn evolve(s: &StaticOrbitState, t: f64) -> Result<StaticOrbitState> {
    realize(&StaticGroupElement::time_translation(t), s)
}

/// The bracket table on (q, u, p, k) as printed: {p_j,q^i} = delta, {k_j,u^i} = delta,
/// {p_j,u^i} = (beta/kappa) eps_ij, {q^i,k_j} = (beta/mu) eps_ij, all others zero.
pub fn static_symplectic(c: &StaticConstants) -> Result<SymplecticStructure<f64>> {
    c.validate()?;
    let names = ["q1", "q2", "u1", "u2", "p1", "p2", "k1", "k2"];
    let (q, u, p, k) = (0, 2, 4, 6);
    let eps = |i: usize, j: usize| crate::linalg::eps(i, j) as f64;
    let mut br = Matrix::<f64>::zeros(8, 8);
    let mut set = |a: usize, b: usize, v: f64| {
        br[(a, b)] = v;
        br[(b, a)] = -v;
    };
    for i in 0..2 {
        for j in 0..2 {
            if i == j {
                set(p + j, q + i, 1.0);
                set(k + j, u + i, 1.0);
            }
            set(p + j, u + i, c.beta_dual / c.kappa_hooke * eps(i, j));
            set(q + i, k + j, c.beta_dual / c.mu_mass * eps(i, j));
        }
    }
    let omega = br.scale(&-1.0);
    let theta = omega.inverse()?;
    let roles = [Role::Position; 4].into_iter().chain([Role::Momentum; 4]).collect();
    Ok(SymplecticStructure {
        chart: "static-printed".into(),
        orbit_labels: names.iter().map(|s| s.to_string()).collect(),
        omega,
        theta,
        coordinates: names.iter().map(|s| s.to_string()).collect(),
        roles,
        pairs: vec![0, 1, 2, 3, 0, 1, 2, 3],
        g_field: 0.0,
        f_field: 0.0,
        brackets: br,
    })
}

/// The structure the Kirillov form induces on (q, u, p, k).
pub fn static_orbit_structure(c: &StaticConstants) -> Result<SymplecticStructure<f64>> {
    c.validate()?;
    let p = orbit_params(c)?;
    Ok(OrbitFixture::NoncentralStatic.structure(&p)?.to_f64())
}

fn orbit_params(c: &StaticConstants) -> Result<OrbitParams> {
    let kin = crate::catalog::KinematicalParams::new(from_f64(0.0)?, from_f64(1.0)?, from_f64(1.0)?)?;
    Ok(OrbitParams::new(kin, from_f64(c.m)?, from_f64(1.0)?).with_static(
        from_f64(c.mu_mass)?,
        from_f64(c.beta_dual)?,
        from_f64(c.kappa_hooke)?,
    ))
}

/// Hamiltonian E = U + mu_e u^2/2 + kappa_e q^2/2 + (beta mu_e/mu) q.u + nu h on the
/// Kirillov-induced structure, as a linear Poisson system on (q, u, p, k).
pub fn static_energy_system(c: &StaticConstants, internal_energy: f64) -> Result<PoissonSystem> {
    let s = static_orbit_structure(c)?;
    let (ke, me) = (c.kappa_e(), c.mu_e());
    let cqu = c.beta_dual * me / c.mu_mass;
    let mut hess = Matrix::<f64>::zeros(8, 8);
    for i in 0..2 {
        hess[(i, i)] = ke;
        hess[(2 + i, 2 + i)] = me;
        hess[(i, 2 + i)] = cqu;
        hess[(2 + i, i)] = cqu;
    }
    PoissonSystem::new(s.brackets, hess, vec![0.0; 8], internal_energy)
}

/// States s0, g s0, g^2 s0, ... (steps + 1 entries).
pub fn trace(g: &StaticGroupElement, s0: &StaticOrbitState, steps: usize) -> Result<Vec<StaticOrbitState>> {
    let mut out = Vec::with_capacity(steps + 1);
    out.push(*s0);
    let mut s = *s0;
    for i in 0..steps {
        s = realize(g, &s)?;
        if !chart_vector(&s).iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite { step: i + 1 });
        }
        out.push(s);
    }
    Ok(out)
}

/// Rows (step, j, E, q, u, p, k, s, U, drift) with drift the larger change of s and U.
pub fn trace_records(states: &[StaticOrbitState], nu_h: f64) -> Vec<Record> {
    let (s0, u0) = states.first().map(|s| static_invariants(s, nu_h)).unwrap_or((0.0, 0.0));
    states
        .iter()
        .enumerate()
        .map(|(i, st)| {
            let (si, ui) = static_invariants(st, nu_h);
            let mut r: Record = vec![("step", i.into()), ("j", st.j.into()), ("E", st.energy.into())];
            for (names, v) in [(["q1", "q2"], st.q), (["u1", "u2"], st.u), (["p1", "p2"], st.p), (["k1", "k2"], st.k)] {
                r.push((names[0], Cell::Num(v[0])));
                r.push((names[1], Cell::Num(v[1])));
            }
            r.push(("s", si.into()));
            r.push(("U", ui.into()));
            r.push(("drift", (si - s0).abs().max((ui - u0).abs()).into()));
            r
        })
        .collect()
}

/// (q, u, p, k) coordinates of a state, in the order of the orbit structures.
pub fn chart_vector(s: &StaticOrbitState) -> Vec<f64> {
    vec![s.q[0], s.q[1], s.u[0], s.u[1], s.p[0], s.p[1], s.k[0], s.k[1]]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn consts() -> StaticConstants {
        StaticConstants::new(1.5, 2.0, 0.7, 3.0).unwrap()
    }

    fn state() -> StaticOrbitState {
        StaticOrbitState { j: 0.3, energy: 1.1, p: [0.4, -0.2], k: [1.0, 0.5], q: [0.25, -0.75], u: [-0.5, 0.6], constants: consts() }
    }

    fn elem(seed: f64) -> StaticGroupElement {
        let s = |k: f64| (seed * 1.7 + k).sin();
        StaticGroupElement {
            theta: s(0.1) * 3.0,
            v: [s(0.2), s(0.3)],
            x: [s(0.4), s(0.5)],
            t: s(0.6),
            eta: [s(0.7), s(0.8)],
            l: [s(0.9), s(1.0)],
            xi: s(1.1),
            phi: s(1.2),
            b: s(1.3),
            a: s(1.4),
        }
    }

    #[test]
    fn identity_law() {
        let g = elem(1.0);
        assert_eq!(compose(&g, &StaticGroupElement::identity()), g);
        assert_eq!(compose(&StaticGroupElement::identity(), &g), g);
        assert_eq!(realize(&StaticGroupElement::identity(), &state()).unwrap(), state());
    }

    #[test]
    fn inverse_law() {
        let g = elem(2.0);
        assert!(compose(&g, &g.inverse()).distance(&StaticGroupElement::identity()) < 1e-14);
        assert!(compose(&g.inverse(), &g).distance(&StaticGroupElement::identity()) < 1e-14);
    }

    #[test]
    fn time_then_space_vector_cocycle() {
        let t = StaticGroupElement::time_translation(2.0);
        let x = StaticGroupElement { x: [1.0, 3.0], ..Default::default() };
        // eta = 1/2 (x t' - t R x') with g = t, g' = x
        assert_eq!(compose(&t, &x).eta, [-1.0, -3.0]);
        assert_eq!(compose(&x, &t).eta, [1.0, 3.0]);
    }

    #[test]
    fn associativity_sample() {
        let (a, b, c) = (elem(0.3), elem(1.9), elem(-2.2));
        let lhs = compose(&compose(&a, &b), &c);
        let rhs = compose(&a, &compose(&b, &c));
        assert!(lhs.distance(&rhs) < 1e-12, "{lhs:?} vs {rhs:?}");
    }

    #[test]
    fn action_compatibility_sample() {
        let (a, b) = (elem(0.5), elem(-1.3));
        let lhs = realize(&compose(&a, &b), &state()).unwrap();
        let rhs = realize(&a, &realize(&b, &state()).unwrap()).unwrap();
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn time_evolution_closed_form() {
        let s = state();
        let e = evolve(&s, 0.8).unwrap();
        let c = s.constants;
        for i in 0..2 {
            assert!((e.p[i] - (s.p[i] - 0.8 * c.kappa_e() * s.q[i])).abs() < 1e-15);
            assert!((e.k[i] - (s.k[i] + 0.8 * c.mu_e() * s.u[i])).abs() < 1e-15);
        }
        assert_eq!((e.q, e.u), (s.q, s.u));
    }

    #[test]
    fn trivial_invariants_at_origin() {
        let s = StaticOrbitState { q: [0.0; 2], u: [0.0; 2], ..state() };
        let (si, ui) = static_invariants(&s, 0.25);
        assert_eq!(si, s.j);
        assert_eq!(ui, s.energy - 0.25);
    }

    #[test]
    fn invariants_survive_the_action() {
        let s = state();
        let before = static_invariants(&s, 0.1);
        for seed in 0..10 {
            let after = static_invariants(&realize(&elem(seed as f64), &s).unwrap(), 0.1);
            assert!((before.0 - after.0).abs() < 1e-12 && (before.1 - after.1).abs() < 1e-12);
        }
    }

    #[test]
    fn printed_table_beta_zero_decouples() {
        let c = StaticConstants::new(1.0, 2.0, 0.0, 3.0).unwrap();
        let s = static_symplectic(&c).unwrap();
        let b = |x: &str, y: &str| s.bracket_of(x, y).unwrap();
        assert_eq!(b("p1", "q1"), 1.0);
        assert_eq!(b("k2", "u2"), 1.0);
        assert_eq!(b("p1", "u2"), 0.0);
        assert_eq!(b("q1", "k2"), 0.0);
        assert_eq!(b("p1", "k1"), 0.0);
    }

    #[test]
    fn printed_table_placement() {
        let c = consts();
        let s = static_symplectic(&c).unwrap();
        let b = |x: &str, y: &str| s.bracket_of(x, y).unwrap();
        assert_eq!(b("p1", "u1"), 0.0);
        // {p_j, u^i} = (beta/kappa) eps_ij: i is the u index
        assert_eq!(b("p1", "u2"), -c.beta_dual / c.kappa_hooke);
        assert_eq!(b("p2", "u1"), c.beta_dual / c.kappa_hooke);
        assert_eq!(b("q1", "k2"), c.beta_dual / c.mu_mass);
        assert_eq!(b("q2", "q1"), 0.0);
        assert!(s.identity_defect() < 1e-12);
    }

    #[test]
    fn degenerate_constants_rejected() {
        assert!(StaticConstants::new(1.0, 2.0, 2.0, 2.0).is_err());
        let mut s = state();
        s.constants = StaticConstants { m: 1.0, mu_mass: 1.0, beta_dual: 2.0, kappa_hooke: 4.0 };
        assert!(realize(&StaticGroupElement::identity(), &s).is_err());
    }

    #[test]
    fn orbit_flow_reproduces_time_translation() {
        let s = state();
        let sys = static_energy_system(&s.constants, 0.0).unwrap();
        let x0 = chart_vector(&s);
        let rate = sys.rhs(&x0);
        let c = s.constants;
        let expect = [0.0, 0.0, 0.0, 0.0, -c.kappa_e() * s.q[0], -c.kappa_e() * s.q[1], c.mu_e() * s.u[0], c.mu_e() * s.u[1]];
        for (a, b) in rate.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12, "{rate:?}");
        }
    }
}
