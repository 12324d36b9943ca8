//! Command-line front end. `run` does the work so tests can drive it directly.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use crate::catalog::{catalog_entries, AlgebraDescriptor, AlgebraName};
use crate::coadjoint::classify;
use crate::config::{Command, RunConfig};
use crate::error::{Error, Result};
use crate::linalg::to_f64;
use crate::mechanics::{integrate, HamiltonianSpec, NCPhaseSpace2D};
use crate::orbits::{magnetic_fields, Masses, OrbitFixture};
use crate::report::{num, write_records, Record};
use crate::static_group::{trace, trace_records, StaticGroupElement};
use crate::verify::{classification_sweep, full_suite, jacobi_suite, orbit_record, orbit_suite, Check};

#[derive(Debug, Parser)]
#[command(name = "ncphase", version, about = "Kinematical algebras, coadjoint orbits and noncommutative phase-space mechanics")]
pub struct Cli {
    /// What to run; may also come from the config file
    #[arg(value_enum)]
    pub command: Option<Command>,
    /// TOML run configuration; flags override it
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Algebra symbol (G, NH+, S, ...) or orbit name (galilei, static-noncentral, ...)
    #[arg(long)]
    pub algebra: Option<String>,
    /// isotropic, anisotropic, central_ext or noncentral_ext
    #[arg(long)]
    pub variant: Option<String>,
    /// key=value, repeatable; exact values like 3, -1/2, 0.25
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
    #[arg(long)]
    pub t_end: Option<f64>,
    #[arg(long)]
    pub dt: Option<f64>,
    /// Output file; standard output when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// csv or json-lines
    #[arg(long)]
    pub format: Option<String>,
    /// Random dual points per orbit for the Casimir suite
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Print the resolved configuration as TOML and exit
    #[arg(long)]
    pub dump_config: bool,
}

impl Cli {
    /// Config file first, then flags.
    pub fn resolve(&self) -> Result<RunConfig> {
        let mut c = match &self.config {
            Some(p) => RunConfig::load(p)?,
            None => RunConfig::default(),
        };
        if self.command.is_some() {
            c.command = self.command;
        }
        if let Some(a) = &self.algebra {
            c.algebra = Some(a.clone());
        }
        if let Some(v) = &self.variant {
            c.variant = Some(v.clone());
        }
        for p in &self.params {
            c.set_param(p)?;
        }
        if let Some(t) = self.t_end {
            c.sim.t_end = t;
        }
        if let Some(dt) = self.dt {
            c.sim.dt = dt;
        }
        if let Some(o) = &self.out {
            c.output = Some(o.clone());
        }
        if let Some(f) = &self.format {
            c.format = f.parse()?;
        }
        if let Some(s) = self.samples {
            c.samples = s;
        }
        if let Some(s) = self.seed {
            c.seed = s;
        }
        Ok(c)
    }
}

/// Exit status for a finished run: 0 all checks passed, 1 a check failed or the
/// dynamics blew up, 2 the configuration was rejected.
pub fn exit_status(r: &Result<bool>) -> u8 {
    match r {
        Ok(true) => 0,
        Ok(false) | Err(Error::NonFinite { .. }) => 1,
        Err(_) => 2,
    }
}

pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = cli.resolve().and_then(|cfg| {
        if cli.dump_config {
            print!("{}", cfg.to_toml()?);
            return Ok(true);
        }
        run(&cfg, std::io::stdout().lock())
    });
    if let Err(e) = &result {
        eprintln!("error: {e}");
    }
    ExitCode::from(exit_status(&result))
}

/// Runs one command. Data goes to `config.output` when set, else to `stdout`.
/// Returns whether every check passed.
pub fn run<W: Write>(config: &RunConfig, stdout: W) -> Result<bool> {
    config.validate()?;
    let command = config.command.expect("validated");
    let (records, metadata, passed) = match command {
        Command::List => (list(), vec![], true),
        Command::Verify => verify(config)?,
        Command::Orbit => orbit(config)?,
        Command::Classify => {
            let p = config.orbit_params()?;
            let rows = classification_sweep(&p, config.samples, config.seed)?;
            (rows.iter().map(|r| r.record()).collect(), meta(config), true)
        }
        Command::Simulate => simulate(config)?,
        Command::Realize => realize(config)?,
    };
    match &config.output {
        Some(path) => {
            let f = File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(f);
            write_records(&mut w, config.format, &metadata, &records)?;
            w.flush()?;
        }
        None => {
            let mut w = BufWriter::new(stdout);
            write_records(&mut w, config.format, &metadata, &records)?;
            w.flush()?;
        }
    }
    Ok(passed)
}

fn meta(config: &RunConfig) -> Vec<(&'static str, String)> {
    let mut m = vec![("command", config.command.map_or(String::new(), |c| c.to_string()))];
    if let Some(a) = &config.algebra {
        m.push(("algebra", a.clone()));
    }
    if let Some(v) = &config.variant {
        m.push(("variant", v.clone()));
    }
    if !config.params.is_empty() {
        m.push(("params", config.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")));
    }
    m
}

fn list() -> Vec<Record> {
    catalog_entries()
        .into_iter()
        .map(|e| {
            let admissible = AlgebraName::ALL
                .into_iter()
                .find(|n| n.symbol() == e.name)
                .map(|n| AlgebraDescriptor::admissible_variants(n).iter().map(|v| v.as_str()).collect::<Vec<_>>().join(" "))
                .unwrap_or_default();
            vec![
                ("name", e.name.into()),
                ("long_name", e.long_name.into()),
                ("variant", e.variant.as_str().into()),
                ("dim", e.dim.into()),
                ("time", absoluteness(e.time_class).into()),
                ("space", absoluteness(e.space_class).into()),
                ("parameter_slots", e.parameter_slots.join(" ").into()),
                ("admissible_variants", admissible.into()),
                ("basis", e.basis.join(" ").into()),
            ]
        })
        .collect()
}

fn absoluteness(a: crate::catalog::Absoluteness) -> &'static str {
    match a {
        crate::catalog::Absoluteness::Absolute => "absolute",
        crate::catalog::Absoluteness::Relative => "relative",
    }
}

type Output = (Vec<Record>, Vec<(&'static str, String)>, bool);

fn verify(config: &RunConfig) -> Result<Output> {
    let p = config.orbit_params()?;
    let checks: Vec<Check> = match &config.algebra {
        None => full_suite(&p, config.samples, config.seed)?,
        Some(a) => {
            let fixtures: Vec<OrbitFixture> = match a.parse::<OrbitFixture>() {
                Ok(f) => vec![f],
                Err(_) => {
                    let n: AlgebraName = a.parse()?;
                    OrbitFixture::ALL.into_iter().filter(|f| f.algebra_name() == n).collect()
                }
            };
            let name = fixtures.first().map(|f| f.algebra_name()).or_else(|| a.parse().ok());
            let mut c = jacobi_suite(&p.kinematics, name)?;
            for f in fixtures {
                c.extend(orbit_suite(f, &p, config.samples, config.seed)?);
            }
            c
        }
    };
    let passed = checks.iter().all(|c| c.passed);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut m = meta(config);
    m.push(("failed", failed.to_string()));
    Ok((checks.iter().map(Check::record).collect(), m, passed))
}

fn orbit(config: &RunConfig) -> Result<Output> {
    let f = config.orbit_fixture()?;
    let p = config.orbit_params()?;
    let rec = orbit_record(f, &p, f.name().into(), config.samples, config.seed)?;
    let s = f.structure(&p)?.to_f64();
    let fields = if f == OrbitFixture::NoncentralStatic {
        None
    } else {
        let masses = Masses { mass: to_f64(&p.mass), action: to_f64(&p.action) };
        Some(magnetic_fields(&s, &p.kinematics, &masses)?)
    };
    let mut r = rec.record();
    r.push(("chart", s.coordinates.join(" ").into()));
    r.push(("orbit_coordinates", s.orbit_labels.join(" ").into()));
    r.push(("Omega", (&s.omega).into()));
    r.push(("Theta", (&s.theta).into()));
    r.push(("e_star_b_star", fields.map(|b| b.dual_coupling).into()));
    r.push(("e_b", fields.map(|b| b.coupling).into()));
    r.push(("mu_e", fields.and_then(|b| b.effective_mass).into()));
    debug_assert_eq!(classify(&s), rec.class);
    let passed = rec.max_residual <= crate::verify::ANALYTIC_TOL;
    Ok((vec![r], meta(config), passed))
}

fn simulate(config: &RunConfig) -> Result<Output> {
    let p = config.orbit_params()?;
    let (mut g, mut f) = (0.0, 0.0);
    if config.algebra.is_some() {
        let s = config.orbit_fixture()?.structure(&p)?;
        g = to_f64(&s.g_field);
        f = to_f64(&s.f_field);
    }
    g = config.sim.g_field.unwrap_or(g);
    f = config.sim.f_field.unwrap_or(f);
    let ps = NCPhaseSpace2D::new(g, f)?;
    let h = HamiltonianSpec::new(to_f64(&p.mass), config.sim.potential)?;
    let tr = integrate(&ps, &h, config.sim.initial, config.sim.t_end, config.sim.dt)?;
    let mut m = meta(config);
    m.extend([
        ("G", num(g)),
        ("F", num(f)),
        ("mass", num(h.mass)),
        ("dt", num(config.sim.dt)),
        ("t_end", num(config.sim.t_end)),
        ("max_drift", num(tr.energy_drift())),
    ]);
    Ok((tr.records(), m, true))
}

fn realize(config: &RunConfig) -> Result<Output> {
    let s0 = config.static_state()?;
    let g = config.realize.element.unwrap_or(StaticGroupElement::time_translation(config.sim.dt));
    if !g.is_finite() {
        return Err(Error::InvalidParameter("group element components must be finite".into()));
    }
    let steps = config.realize.steps.unwrap_or((config.sim.t_end / config.sim.dt).round() as usize);
    let nu_h = to_f64(&config.orbit_params()?.nu_h);
    let states = trace(&g, &s0, steps)?;
    let records = trace_records(&states, nu_h);
    let c = s0.constants;
    let mut m = meta(config);
    m.extend([("kappa_e", num(c.kappa_e())), ("mu_e", num(c.mu_e())), ("steps", steps.to_string())]);
    Ok((records, m, true))
}
