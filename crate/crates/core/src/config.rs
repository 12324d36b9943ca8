//! Run configuration: a TOML file plus command-line overrides.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::catalog::{AlgebraDescriptor, AlgebraName, Charges, KinematicalParams, Variant};
use crate::error::{Error, Result};
use crate::linalg::{int, parse_rational, to_f64, Rational};
use crate::mechanics::QuadraticPotential;
use crate::orbits::{OrbitFixture, OrbitParams};
use crate::report::Format;
use crate::static_group::{StaticConstants, StaticGroupElement, StaticOrbitState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    List,
    Verify,
    Orbit,
    Classify,
    Simulate,
    Realize,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::List => "list",
            Command::Verify => "verify",
            Command::Orbit => "orbit",
            Command::Classify => "classify",
            Command::Simulate => "simulate",
            Command::Realize => "realize",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Keys accepted under `[params]` and by `--param key=value`.
pub const PARAM_KEYS: [&str; 13] = [
    "omega",
    "kappa",
    "c",
    "m",
    "h",
    "mu_mass",
    "beta_dual",
    "kappa_hooke",
    "nu_h",
    "charge_mass",
    "charge_spin",
    "charge_vector",
    "charge_secondary",
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimConfig {
    pub t_end: f64,
    pub dt: f64,
    /// (q1, q2, p1, p2)
    pub initial: [f64; 4],
    pub potential: QuadraticPotential,
    /// overrides the orbit's G
    pub g_field: Option<f64>,
    /// overrides the orbit's F
    pub f_field: Option<f64>,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            t_end: 10.0,
            dt: 1e-3,
            initial: [1.0, 0.0, 0.0, 1.0],
            potential: QuadraticPotential::default(),
            g_field: None,
            f_field: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct StateConfig {
    pub j: f64,
    pub energy: f64,
    pub p: [f64; 2],
    pub k: [f64; 2],
    pub q: [f64; 2],
    pub u: [f64; 2],
}

impl Default for StateConfig {
    fn default() -> Self {
        StateConfig { j: 0.0, energy: 1.0, p: [0.0; 2], k: [0.0; 2], q: [1.0, 0.0], u: [0.0, 1.0] }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RealizeConfig {
    /// applied repeatedly; defaults to a time translation by `sim.dt`
    pub element: Option<StaticGroupElement>,
    /// defaults to t_end/dt
    pub steps: Option<usize>,
    pub state: StateConfig,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub command: Option<Command>,
    /// algebra symbol or orbit name
    pub algebra: Option<String>,
    pub variant: Option<String>,
    /// exact numbers as strings: "2", "-1/3", "0.25"
    pub params: BTreeMap<String, String>,
    pub sim: SimConfig,
    pub realize: RealizeConfig,
    pub output: Option<PathBuf>,
    pub format: Format,
    /// random dual points per orbit in the Casimir suite
    pub samples: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: None,
            algebra: None,
            variant: None,
            params: BTreeMap::new(),
            sim: SimConfig::default(),
            realize: RealizeConfig::default(),
            output: None,
            format: Format::Csv,
            samples: 100,
            seed: 0,
        }
    }
}

impl FromStr for RunConfig {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::Config(e.to_string()))
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        text.parse()
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    /// Sets one `key=value` parameter.
    pub fn set_param(&mut self, assignment: &str) -> Result<()> {
        let (k, v) = assignment
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("--param expects key=value, got `{assignment}`")))?;
        let key = k.trim();
        if !PARAM_KEYS.contains(&key) {
            return Err(Error::UnknownName { kind: "parameter", name: key.into(), valid: PARAM_KEYS.join(", ") });
        }
        parse_rational(v)?;
        self.params.insert(key.into(), v.trim().into());
        Ok(())
    }

    /// Checks parameter names and values and per-command requirements.
    pub fn validate(&self) -> Result<()> {
        for (k, v) in &self.params {
            if !PARAM_KEYS.contains(&k.as_str()) {
                return Err(Error::UnknownName { kind: "parameter", name: k.clone(), valid: PARAM_KEYS.join(", ") });
            }
            parse_rational(v)?;
        }
        if let Some(v) = &self.variant {
            v.parse::<Variant>()?;
        }
        let command = self.command.ok_or_else(|| {
            Error::Config("no command given; choose one of list, verify, orbit, classify, simulate, realize".into())
        })?;
        match command {
            Command::Orbit => {
                self.orbit_fixture()?;
            }
            Command::Simulate | Command::Realize => {
                if !(self.sim.dt.is_finite() && self.sim.dt > 0.0) {
                    return Err(Error::Config(format!("dt must be positive, got {}", self.sim.dt)));
                }
                if !(self.sim.t_end.is_finite() && self.sim.t_end >= 0.0) {
                    return Err(Error::Config(format!("t_end must be nonnegative, got {}", self.sim.t_end)));
                }
            }
            _ => {}
        }
        if command == Command::Simulate && self.algebra.is_some() {
            let f = self.orbit_fixture()?;
            if f == OrbitFixture::NoncentralStatic {
                return Err(Error::Config("simulate needs a 4-dimensional orbit; use realize for static-noncentral".into()));
            }
        }
        if command == Command::Verify {
            if let Some(a) = &self.algebra {
                if a.parse::<OrbitFixture>().is_err() {
                    a.parse::<AlgebraName>()?;
                }
            }
        }
        self.kinematics()?;
        Ok(())
    }

    fn param(&self, key: &str) -> Result<Option<Rational>> {
        self.params.get(key).map(|v| parse_rational(v)).transpose()
    }

    fn param_or(&self, key: &str, default: Rational) -> Result<Rational> {
        Ok(self.param(key)?.unwrap_or(default))
    }

    /// omega and kappa default to 1; c defaults to omega/kappa, or 1 when omega = 0.
    pub fn kinematics(&self) -> Result<KinematicalParams> {
        let omega = self.param_or("omega", int(1))?;
        let kappa = self.param_or("kappa", int(1))?;
        let c = match self.param("c")? {
            Some(c) => c,
            None if omega.is_zero() => int(1),
            None if kappa.is_zero() => {
                return Err(Error::InvalidParameter("kappa = 0 with omega != 0 needs an explicit c".into()))
            }
            None => omega.clone() / kappa.clone(),
        };
        let d = Charges::default();
        let charges = Charges {
            mass: self.param_or("charge_mass", d.mass)?,
            spin: self.param_or("charge_spin", d.spin)?,
            vector: self.param_or("charge_vector", d.vector)?,
            secondary: self.param_or("charge_secondary", d.secondary)?,
        };
        Ok(KinematicalParams::new(omega, kappa, c)?.with_charges(charges))
    }

    /// m defaults to 2 and h to 1, which keeps every default orbit nondegenerate
    /// (m = h = omega = kappa = 1 is the degenerate Newton-Hooke- orbit).
    pub fn orbit_params(&self) -> Result<OrbitParams> {
        let mut p = OrbitParams::new(self.kinematics()?, self.param_or("m", int(2))?, self.param_or("h", int(1))?);
        let mu = self.param_or("mu_mass", p.mu_mass.clone())?;
        let beta = self.param_or("beta_dual", p.beta_dual.clone())?;
        let kappa = self.param_or("kappa_hooke", p.kappa_hooke.clone())?;
        p = p.with_static(mu, beta, kappa);
        p.nu_h = self.param_or("nu_h", p.nu_h.clone())?;
        Ok(p)
    }

    /// Resolves `algebra` (and `variant`, default central_ext) to an orbit fixture.
    pub fn orbit_fixture(&self) -> Result<OrbitFixture> {
        let name = self.algebra.as_deref().ok_or_else(|| Error::Config("this command needs --algebra".into()))?;
        if let Ok(f) = name.parse::<OrbitFixture>() {
            return Ok(f);
        }
        let unknown = || Error::UnknownName {
            kind: "orbit",
            name: name.into(),
            valid: OrbitFixture::ALL.map(OrbitFixture::name).join(", "),
        };
        let alg: AlgebraName = name.parse().map_err(|_| unknown())?;
        let variant = match &self.variant {
            Some(v) => v.parse()?,
            None => Variant::CentralExt,
        };
        let desc = AlgebraDescriptor::new(alg, variant)?;
        OrbitFixture::for_descriptor(&desc).ok_or_else(unknown)
    }

    pub fn static_constants(&self) -> Result<StaticConstants> {
        let p = self.orbit_params()?;
        StaticConstants::new(to_f64(&p.mass), to_f64(&p.mu_mass), to_f64(&p.beta_dual), to_f64(&p.kappa_hooke))
    }

    pub fn static_state(&self) -> Result<StaticOrbitState> {
        let s = &self.realize.state;
        Ok(StaticOrbitState { j: s.j, energy: s.energy, p: s.p, k: s.k, q: s.q, u: s.u, constants: self.static_constants()? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn toml_round_trip() {
        let mut c = RunConfig { command: Some(Command::Simulate), algebra: Some("G".into()), ..Default::default() };
        c.set_param("m=3/2").unwrap();
        c.set_param("omega=0.1").unwrap();
        c.sim.potential = QuadraticPotential::constant_force([0.3, -1.0 / 3.0]);
        c.realize.element = Some(StaticGroupElement { t: 0.5, ..Default::default() });
        let text = c.to_toml().unwrap();
        assert_eq!(text.parse::<RunConfig>().unwrap(), c);
    }

    #[test]
    fn parses_file_layout() {
        let c: RunConfig = r#"
            command = "orbit"
            algebra = "galilei"
            format = "json-lines"
            [params]
            m = "2"
            omega = "0"
            h = "1"
            [sim]
            dt = 0.01
        "#
        .parse()
        .unwrap();
        c.validate().unwrap();
        assert_eq!(c.format, Format::JsonLines);
        assert_eq!(c.orbit_params().unwrap().mass, int(2));
        assert_eq!(c.orbit_params().unwrap().action, int(1));
        assert_eq!(c.kinematics().unwrap().c, int(1));
        assert_eq!(c.sim.t_end, 10.0);
    }

    #[test]
    fn c_follows_curvatures() {
        let mut c = RunConfig::default();
        c.set_param("omega=2").unwrap();
        c.set_param("kappa=3").unwrap();
        assert_eq!(c.kinematics().unwrap().c, rat(2, 3));
        c.set_param("c=1").unwrap();
        assert!(c.kinematics().is_err());
    }

    #[test]
    fn unknown_names_list_choices() {
        let c = RunConfig { command: Some(Command::Orbit), algebra: Some("Minkowski".into()), ..Default::default() };
        let e = c.validate().unwrap_err().to_string();
        assert!(e.contains("galilei") && e.contains("carroll"), "{e}");
        assert!(RunConfig::default().set_param("mass=1").unwrap_err().to_string().contains("kappa_hooke"));
        assert!("bogus = 1".parse::<RunConfig>().is_err());
    }

    #[test]
    fn orbit_from_symbol_and_variant() {
        let mut c = RunConfig { algebra: Some("S".into()), ..Default::default() };
        assert_eq!(c.orbit_fixture().unwrap(), OrbitFixture::AnisotropicStatic);
        c.variant = Some("noncentral_ext".into());
        assert_eq!(c.orbit_fixture().unwrap(), OrbitFixture::NoncentralStatic);
        c.algebra = Some("dS+".into());
        assert!(c.orbit_fixture().is_err());
    }

    #[test]
    fn simulate_requires_positive_dt() {
        let mut c = RunConfig { command: Some(Command::Simulate), ..Default::default() };
        c.sim.dt = 0.0;
        assert!(c.validate().is_err());
    }
}
