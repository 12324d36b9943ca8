//! Worked coadjoint orbits: algebra, chart and invariants for each fixture.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::StructureConstants;
use crate::catalog::{build, AlgebraDescriptor, AlgebraName, Charges, KinematicalParams, Variant};
use crate::coadjoint::{
    central_difference_gradient, kirillov_matrix, restrict, CanonicalCoordinate, DualPoint, OrbitChart, Role,
    SymplecticStructure,
};
use crate::error::{Error, Result};
use crate::linalg::{int, to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrbitFixture {
    Galilei,
    ParaGalileiPlus,
    ParaGalileiMinus,
    NewtonHookePlus,
    NewtonHookeMinus,
    AnisotropicStatic,
    Carroll,
    NoncentralStatic,
}

/// Orbit parameters. `kinematics` fixes the algebra; the rest are values of
/// the central coordinates on the orbit.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitParams {
    pub kinematics: KinematicalParams,
    /// m
    pub mass: Rational,
    /// h
    pub action: Rational,
    /// mu (dual of M')
    pub mu_mass: Rational,
    /// beta (dual of B)
    pub beta_dual: Rational,
    /// kappa (dual of Lambda)
    pub kappa_hooke: Rational,
    /// the constant nu*h in the internal energy of the noncentral Static orbit
    pub nu_h: Rational,
}

impl OrbitParams {
    pub fn new(kinematics: KinematicalParams, mass: Rational, action: Rational) -> Self {
        OrbitParams {
            kinematics,
            mass,
            action,
            mu_mass: int(2),
            beta_dual: int(1),
            kappa_hooke: int(3),
            nu_h: int(0),
        }
    }

    pub fn with_static(mut self, mu_mass: Rational, beta_dual: Rational, kappa_hooke: Rational) -> Self {
        self.mu_mass = mu_mass;
        self.beta_dual = beta_dual;
        self.kappa_hooke = kappa_hooke;
        self
    }

    /// omega0 = m c^2 / h
    pub fn omega0(&self) -> Result<Rational> {
        if self.mass.is_zero() || self.action.is_zero() {
            return Err(Error::InvalidParameter(
                "omega0 = m c^2 / h is undefined or zero (need m != 0 and h != 0)".into(),
            ));
        }
        let c = &self.kinematics.c;
        Ok(self.mass.clone() * c.clone() * c.clone() / self.action.clone())
    }
}

pub type DualFn = Box<dyn Fn(&DualPoint<f64>) -> f64 + Send + Sync>;
pub type DualGrad = Box<dyn Fn(&DualPoint<f64>) -> Vec<f64> + Send + Sync>;

/// An orbit invariant with its gradient over all dual coordinates.
pub struct Invariant {
    pub name: &'static str,
    pub value: DualFn,
    pub gradient: DualGrad,
}

impl Invariant {
    /// Central-difference gradient of `value`, for cross-checking `gradient`.
    pub fn numeric_gradient(&self, a: &DualPoint<f64>) -> Vec<f64> {
        let labels = a.labels().to_vec();
        central_difference_gradient(|x| (self.value)(&DualPoint::from_parts(labels.clone(), x.to_vec())), a.coords())
    }
}

impl fmt::Debug for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Invariant").field("name", &self.name).finish()
    }
}

fn g(a: &DualPoint<f64>, l: &str) -> f64 {
    a.get(l).expect("label present on fixture algebra")
}

fn grad_from(a: &DualPoint<f64>, parts: &[(&str, f64)]) -> Vec<f64> {
    let mut v = vec![0.0; a.coords().len()];
    for (l, x) in parts {
        v[a.index_of(l).expect("label present on fixture algebra")] += x;
    }
    v
}

/// U = E + a p^2 + b k^2 + d k x p, solving K grad U = 0 for the extended NH
/// algebras, with effective mass M = cm m and action A = cs h:
/// D = A^2 kappa^4 + s M^2 omega^2, a = -s M omega^2/(2D), b = M omega^4/(2D), d = A kappa^2 omega^2/D.
fn newton_hooke_u(a: &DualPoint<f64>, s: f64, omega: f64, kappa: f64, cm: f64, cs: f64) -> (f64, Vec<f64>) {
    let (m, h) = (cm * g(a, "m"), cs * g(a, "h"));
    let (w2, k2) = (omega * omega, kappa * kappa);
    let d = h * h * k2 * k2 + s * m * m * w2;
    let (dd_m, dd_h) = (2.0 * s * m * w2, 2.0 * h * k2 * k2);
    let ca = -s * m * w2 / (2.0 * d);
    let cb = m * w2 * w2 / (2.0 * d);
    let cd = h * k2 * w2 / d;
    // quotient rule on each coefficient
    let ca_m = -s * w2 / (2.0 * d) - ca * dd_m / d;
    let ca_h = -ca * dd_h / d;
    let cb_m = w2 * w2 / (2.0 * d) - cb * dd_m / d;
    let cb_h = -cb * dd_h / d;
    let cd_m = -cd * dd_m / d;
    let cd_h = k2 * w2 / d - cd * dd_h / d;
    let (k1, k2v, p1, p2) = (g(a, "k1"), g(a, "k2"), g(a, "p1"), g(a, "p2"));
    let (pp, kk, kxp) = (p1 * p1 + p2 * p2, k1 * k1 + k2v * k2v, k1 * p2 - k2v * p1);
    let value = g(a, "E") + ca * pp + cb * kk + cd * kxp;
    let grad = grad_from(
        a,
        &[
            ("E", 1.0),
            ("p1", 2.0 * ca * p1 - cd * k2v),
            ("p2", 2.0 * ca * p2 + cd * k1),
            ("k1", 2.0 * cb * k1 + cd * p2),
            ("k2", 2.0 * cb * k2v - cd * p1),
            ("m", cm * (ca_m * pp + cb_m * kk + cd_m * kxp)),
            ("h", cs * (ca_h * pp + cb_h * kk + cd_h * kxp)),
        ],
    );
    (value, grad)
}

impl OrbitFixture {
    pub const ALL: [OrbitFixture; 8] = [
        OrbitFixture::Galilei,
        OrbitFixture::ParaGalileiPlus,
        OrbitFixture::ParaGalileiMinus,
        OrbitFixture::NewtonHookePlus,
        OrbitFixture::NewtonHookeMinus,
        OrbitFixture::AnisotropicStatic,
        OrbitFixture::Carroll,
        OrbitFixture::NoncentralStatic,
    ];

    pub fn algebra_name(self) -> AlgebraName {
        match self {
            Self::Galilei => AlgebraName::Galilei,
            Self::ParaGalileiPlus => AlgebraName::ParaGalileiPlus,
            Self::ParaGalileiMinus => AlgebraName::ParaGalileiMinus,
            Self::NewtonHookePlus => AlgebraName::NewtonHookePlus,
            Self::NewtonHookeMinus => AlgebraName::NewtonHookeMinus,
            Self::AnisotropicStatic | Self::NoncentralStatic => AlgebraName::Static,
            Self::Carroll => AlgebraName::Carroll,
        }
    }

    pub fn variant(self) -> Variant {
        match self {
            Self::NoncentralStatic => Variant::NoncentralExt,
            _ => Variant::CentralExt,
        }
    }

    pub fn descriptor(self) -> AlgebraDescriptor {
        AlgebraDescriptor { name: self.algebra_name(), variant: self.variant() }
    }

    /// Fixture for an algebra/variant pair, if one exists.
    pub fn for_descriptor(desc: &AlgebraDescriptor) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.descriptor() == *desc)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Galilei => "galilei",
            Self::ParaGalileiPlus => "para-galilei+",
            Self::ParaGalileiMinus => "para-galilei-",
            Self::NewtonHookePlus => "newton-hooke+",
            Self::NewtonHookeMinus => "newton-hooke-",
            Self::AnisotropicStatic => "static",
            Self::Carroll => "carroll",
            Self::NoncentralStatic => "static-noncentral",
        }
    }

    pub fn algebra(self, p: &OrbitParams) -> Result<StructureConstants> {
        build(&self.descriptor(), &p.kinematics)
    }

    /// Same fixture with only the mass extension switched on, the
    /// one-parameter extension with commuting positions and momenta.
    pub fn mass_only(p: &OrbitParams) -> OrbitParams {
        let mut q = p.clone();
        q.kinematics.charges = Charges { spin: int(0), ..q.kinematics.charges.clone() };
        q
    }

    /// The mass appearing in [K_i, P_j] on the orbit.
    fn chart_mass(self, p: &OrbitParams) -> Rational {
        match self {
            Self::Carroll => self.carroll_energy(p) * p.kinematics.inv_c2(),
            _ => p.mass.clone() * p.kinematics.charges.mass.clone(),
        }
    }

    fn carroll_energy(self, p: &OrbitParams) -> Rational {
        p.mass.clone() * p.kinematics.c.clone() * p.kinematics.c.clone()
    }

    pub fn effective_constants(p: &OrbitParams) -> Result<(Rational, Rational)> {
        let (m, b, k) = (&p.mu_mass, &p.beta_dual, &p.kappa_hooke);
        if m.is_zero() || k.is_zero() || m.clone() * k.clone() == b.clone() * b.clone() {
            return Err(Error::InvalidParameter(
                "noncentral Static orbit needs mu != 0, kappa != 0 and mu*kappa != beta^2".into(),
            ));
        }
        let kappa_e = k.clone() - b.clone() * b.clone() / m.clone();
        let mu_e = m.clone() - b.clone() * b.clone() / k.clone();
        Ok((kappa_e, mu_e))
    }

    /// Base point: central coordinates from the parameters, orbit coordinates zero.
    pub fn base_point(self, alg: &StructureConstants, p: &OrbitParams) -> Result<DualPoint<Rational>> {
        let mut a = DualPoint::zeros(alg);
        match self {
            Self::Carroll => {
                a.set("E", self.carroll_energy(p))?;
                a.set("h", p.action.clone())?;
            }
            Self::NoncentralStatic => {
                a.set("m", p.mass.clone())?;
                a.set("mu_mass", p.mu_mass.clone())?;
                a.set("beta_dual", p.beta_dual.clone())?;
                a.set("kappa_hooke", p.kappa_hooke.clone())?;
            }
            _ => {
                a.set("m", p.mass.clone())?;
                a.set("h", p.action.clone())?;
            }
        }
        Ok(a)
    }

    pub fn chart(self, alg: &StructureConstants, p: &OrbitParams) -> Result<OrbitChart<Rational>> {
        let ix = |n: &str| alg.index_of(n);
        let coord = |name: &str, role, pair, slot, scale| CanonicalCoordinate { name: name.into(), role, pair, slot, scale };
        if self == Self::NoncentralStatic {
            let (kappa_e, mu_e) = Self::effective_constants(p)?;
            let orbit_indices = ["P1", "P2", "K1", "K2", "F1", "F2", "Pi1", "Pi2"].map(ix).into_iter().collect::<Result<Vec<_>>>()?;
            let qs = -(int(1) / kappa_e);
            let us = int(1) / mu_e;
            return Ok(OrbitChart {
                name: self.name().into(),
                orbit_indices,
                casimir_values: vec![
                    ("m".into(), p.mass.clone()),
                    ("mu_mass".into(), p.mu_mass.clone()),
                    ("beta_dual".into(), p.beta_dual.clone()),
                    ("kappa_hooke".into(), p.kappa_hooke.clone()),
                ],
                coordinate_map: vec![
                    coord("q1", Role::Position, 0, 4, qs.clone()),
                    coord("q2", Role::Position, 1, 5, qs),
                    coord("u1", Role::Position, 2, 6, us.clone()),
                    coord("u2", Role::Position, 3, 7, us),
                    coord("p1", Role::Momentum, 0, 0, int(1)),
                    coord("p2", Role::Momentum, 1, 1, int(1)),
                    coord("k1", Role::Momentum, 2, 2, int(1)),
                    coord("k2", Role::Momentum, 3, 3, int(1)),
                ],
            });
        }
        let m = self.chart_mass(p);
        if m.is_zero() {
            return Err(Error::DegenerateChart { chart: self.name().into(), rank: 0, dim: 4 });
        }
        let orbit_indices = ["K1", "K2", "P1", "P2"].map(ix).into_iter().collect::<Result<Vec<_>>>()?;
        let casimir_values = match self {
            Self::Carroll => vec![("E".into(), self.carroll_energy(p)), ("h".into(), p.action.clone())],
            _ => vec![("m".into(), p.mass.clone()), ("h".into(), p.action.clone())],
        };
        let qs = int(1) / m;
        Ok(OrbitChart {
            name: self.name().into(),
            orbit_indices,
            casimir_values,
            coordinate_map: vec![
                coord("q1", Role::Position, 0, 0, qs.clone()),
                coord("q2", Role::Position, 1, 1, qs),
                coord("p1", Role::Momentum, 0, 2, int(1)),
                coord("p2", Role::Momentum, 1, 3, int(1)),
            ],
        })
    }

    /// Algebra, Kirillov matrix at the base point, restriction to the chart.
    pub fn structure(self, p: &OrbitParams) -> Result<SymplecticStructure<Rational>> {
        let alg = self.algebra(p)?;
        let alpha = self.base_point(&alg, p)?;
        let chart = self.chart(&alg, p)?;
        restrict(&kirillov_matrix(&alg, &alpha)?, &chart)
    }

    /// Nontrivial invariants of the orbit family, as functions on the dual.
    pub fn invariants(self, p: &OrbitParams) -> Vec<Invariant> {
        let kin = &p.kinematics;
        let omega = to_f64(&kin.omega);
        let kappa = to_f64(&kin.kappa);
        let (cm, cs) = (to_f64(&kin.charges.mass), to_f64(&kin.charges.spin));
        match self {
            // U = E - p^2/(2M) with M = cm m
            Self::Galilei => vec![Invariant {
                name: "U",
                value: Box::new(move |a| g(a, "E") - (g(a, "p1").powi(2) + g(a, "p2").powi(2)) / (2.0 * cm * g(a, "m"))),
                gradient: Box::new(move |a| {
                    let m = cm * g(a, "m");
                    let p2 = g(a, "p1").powi(2) + g(a, "p2").powi(2);
                    grad_from(a, &[("E", 1.0), ("p1", -g(a, "p1") / m), ("p2", -g(a, "p2") / m), ("m", cm * p2 / (2.0 * m * m))])
                }),
            }],
            // U = E + beta k^2/(2M), beta = +-omega^2
            Self::ParaGalileiPlus | Self::ParaGalileiMinus => {
                let beta = to_f64(&kin.beta(self.algebra_name()));
                vec![Invariant {
                    name: "U",
                    value: Box::new(move |a| g(a, "E") + beta * (g(a, "k1").powi(2) + g(a, "k2").powi(2)) / (2.0 * cm * g(a, "m"))),
                    gradient: Box::new(move |a| {
                        let m = cm * g(a, "m");
                        let k2 = g(a, "k1").powi(2) + g(a, "k2").powi(2);
                        grad_from(
                            a,
                            &[
                                ("E", 1.0),
                                ("k1", beta * g(a, "k1") / m),
                                ("k2", beta * g(a, "k2") / m),
                                ("m", -cm * beta * k2 / (2.0 * m * m)),
                            ],
                        )
                    }),
                }]
            }
            Self::NewtonHookePlus | Self::NewtonHookeMinus => {
                let s = if self == Self::NewtonHookePlus { 1.0 } else { -1.0 };
                vec![Invariant {
                    name: "U",
                    value: Box::new(move |a| newton_hooke_u(a, s, omega, kappa, cm, cs).0),
                    gradient: Box::new(move |a| newton_hooke_u(a, s, omega, kappa, cm, cs).1),
                }]
            }
            Self::AnisotropicStatic | Self::Carroll => vec![Invariant {
                name: "E",
                value: Box::new(|a| g(a, "E")),
                gradient: Box::new(|a| grad_from(a, &[("E", 1.0)])),
            }],
            Self::NoncentralStatic => {
                let nu_h = to_f64(&p.nu_h);
                vec![
                    Invariant {
                        name: "s",
                        value: Box::new(|a| crate::static_group::casimir_s(a).0),
                        gradient: Box::new(|a| crate::static_group::casimir_s(a).1),
                            },
                    Invariant {
                        name: "U",
                        value: Box::new(move |a| crate::static_group::casimir_u(a, nu_h).0),
                        gradient: Box::new(move |a| crate::static_group::casimir_u(a, nu_h).1),
                            },
                ]
            }
        }
    }
}

/// m and h on the orbit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Masses {
    pub mass: f64,
    pub action: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MagneticFields {
    /// e*B*, equal to G
    pub dual_coupling: f64,
    /// eB
    pub coupling: f64,
    /// mu_e = m - eB/omega, anisotropic Static only
    pub effective_mass: Option<f64>,
}

/// Dual-magnetic and magnetic couplings of a 4-dimensional orbit chart.
/// On the anisotropic Static chart eB = (m - mu_e) omega = -F; elsewhere eB eps_ij = F_ij.
pub fn magnetic_fields(s: &SymplecticStructure<f64>, params: &KinematicalParams, masses: &Masses) -> Result<MagneticFields> {
    let c = to_f64(&params.c);
    let omega0 = masses.mass * c * c / masses.action;
    if !omega0.is_finite() || omega0 == 0.0 {
        return Err(Error::InvalidParameter(format!(
            "omega0 = m c^2 / h is undefined or zero (m={}, h={}, c={c})",
            masses.mass, masses.action
        )));
    }
    if s.chart == OrbitFixture::AnisotropicStatic.name() {
        let omega = to_f64(&params.omega);
        if omega == 0.0 {
            return Err(Error::InvalidParameter("the Static effective mass needs omega != 0".into()));
        }
        let eb = -s.f_field;
        return Ok(MagneticFields { dual_coupling: s.g_field, coupling: eb, effective_mass: Some(masses.mass - eb / omega) });
    }
    Ok(MagneticFields { dual_coupling: s.g_field, coupling: s.f_field, effective_mass: None })
}

impl fmt::Display for OrbitFixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrbitFixture {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s.trim().to_ascii_lowercase()).ok_or_else(|| Error::UnknownName {
            kind: "orbit",
            name: s.to_string(),
            valid: Self::ALL.map(Self::name).join(", "),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coadjoint::{classify, PhaseSpaceClass};
    use crate::linalg::rat;

    fn params(omega: i64, kappa: i64, m: i64, h: i64) -> OrbitParams {
        OrbitParams::new(KinematicalParams::from_curvatures(int(omega), int(kappa)).unwrap(), int(m), int(h))
    }

    #[test]
    fn galilei_unit_sample() {
        // m = 1, omega0 = 1 through h omega0 = m c^2 with c = 1
        let p = OrbitParams::new(KinematicalParams::new(int(0), int(1), int(1)).unwrap(), int(1), int(1));
        let s = OrbitFixture::Galilei.structure(&p).unwrap();
        assert_eq!(s.g_field, int(-1));
        assert_eq!(s.f_field, int(0));
        assert_eq!(s.bracket_of("p1", "q1").unwrap(), int(1));
        assert_eq!(s.bracket_of("p1", "q2").unwrap(), int(0));
        assert_eq!(classify(&s), PhaseSpaceClass::PositionNc);
    }

    #[test]
    fn para_galilei_unit_sample() {
        let p = params(1, 1, 1, 1);
        let s = OrbitFixture::ParaGalileiPlus.structure(&p).unwrap();
        assert_eq!(s.f_field, int(-1));
        assert_eq!(s.g_field, int(0));
        assert_eq!(classify(&s), PhaseSpaceClass::MomentumNc);
    }

    #[test]
    fn static_and_carroll_fully_noncommutative() {
        let p = params(1, 1, 2, 1);
        for f in [OrbitFixture::AnisotropicStatic, OrbitFixture::Carroll, OrbitFixture::NewtonHookePlus, OrbitFixture::NoncentralStatic] {
            let s = f.structure(&p).unwrap();
            assert_eq!(classify(&s), PhaseSpaceClass::FullyNc, "{f}");
            assert_eq!(s.identity_defect(), 0.0);
        }
    }

    #[test]
    fn mass_only_extension_is_canonical() {
        let p = OrbitFixture::mass_only(&params(2, 3, 2, 1));
        for f in OrbitFixture::ALL.into_iter().filter(|f| *f != OrbitFixture::NoncentralStatic) {
            let s = f.structure(&p).unwrap();
            assert_eq!(classify(&s), PhaseSpaceClass::Canonical, "{f}");
        }
    }

    #[test]
    fn zero_mass_is_degenerate() {
        let p = params(1, 1, 0, 1);
        assert!(matches!(OrbitFixture::Galilei.structure(&p), Err(Error::DegenerateChart { .. })));
        let q = params(1, 1, 1, 1).with_static(int(2), int(2), int(2));
        assert!(OrbitFixture::NoncentralStatic.structure(&q).is_err());
    }

    #[test]
    fn static_effective_constants() {
        let p = params(1, 1, 1, 1).with_static(int(2), int(1), int(3));
        let (ke, me) = OrbitFixture::effective_constants(&p).unwrap();
        assert_eq!(ke, rat(5, 2));
        assert_eq!(me, rat(5, 3));
    }

    #[test]
    fn magnetic_field_samples() {
        let unit = Masses { mass: 1.0, action: 1.0 };
        let p = OrbitParams::new(KinematicalParams::new(int(0), int(1), int(1)).unwrap(), int(1), int(1));
        let s = OrbitFixture::Galilei.structure(&p).unwrap().to_f64();
        let b = magnetic_fields(&s, &p.kinematics, &unit).unwrap();
        assert_eq!((b.dual_coupling, b.coupling), (-1.0, 0.0));

        let p = params(1, 1, 1, 1);
        let s = OrbitFixture::ParaGalileiPlus.structure(&p).unwrap().to_f64();
        assert_eq!(magnetic_fields(&s, &p.kinematics, &unit).unwrap().coupling, -1.0);

        // m = 2, omega = 1, kappa^2 h = 1 so mu_e = 1
        let p = params(1, 1, 2, 1);
        let s = OrbitFixture::AnisotropicStatic.structure(&p).unwrap().to_f64();
        let b = magnetic_fields(&s, &p.kinematics, &Masses { mass: 2.0, action: 1.0 }).unwrap();
        assert_eq!(b.coupling, 1.0);
        assert_eq!(b.effective_mass, Some(1.0));
        assert_eq!(b.dual_coupling, -0.25);

        assert!(magnetic_fields(&s, &p.kinematics, &Masses { mass: 0.0, action: 1.0 }).is_err());
    }

    #[test]
    fn fixture_names_round_trip() {
        for f in OrbitFixture::ALL {
            assert_eq!(f.name().parse::<OrbitFixture>().unwrap(), f);
        }
        assert!("minkowski".parse::<OrbitFixture>().is_err());
    }
}
