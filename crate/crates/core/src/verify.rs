//! Verification suites: Jacobi over the catalog, and per orbit the
//! Omega Theta = I check and Casimir residuals at random dual points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{build, AlgebraDescriptor, AlgebraName, KinematicalParams};
use crate::coadjoint::{casimir_residual, classify, DualPoint};
use crate::error::Result;
use crate::linalg::to_f64;
use crate::orbits::{OrbitFixture, OrbitParams};
use crate::report::{OrbitRecord, Record};

/// Omega Theta = I on small dense systems.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Casimir residual with analytic gradients.
pub const ANALYTIC_TOL: f64 = 1e-12;
/// Casimir residual with central-difference gradients.
pub const NUMERIC_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub subject: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn new(suite: &'static str, subject: String, residual: f64, tolerance: f64) -> Self {
        let passed = residual.is_finite() && residual <= tolerance;
        Check { suite, subject, residual, tolerance, passed }
    }

    pub fn record(&self) -> Record {
        vec![
            ("suite", self.suite.into()),
            ("subject", self.subject.clone().into()),
            ("residual", self.residual.into()),
            ("tolerance", self.tolerance.into()),
            ("status", if self.passed { "PASS" } else { "FAIL" }.into()),
        ]
    }
}

/// Jacobi on every admissible (algebra, variant) pair. The residual is the
/// number of violating triples, so the tolerance is zero.
pub fn jacobi_suite(params: &KinematicalParams, only: Option<AlgebraName>) -> Result<Vec<Check>> {
    let descs: Vec<AlgebraDescriptor> = AlgebraName::ALL
        .into_iter()
        .filter(|n| only.is_none_or(|o| o == *n))
        .flat_map(|name| AlgebraDescriptor::admissible_variants(name).into_iter().map(move |variant| AlgebraDescriptor { name, variant }))
        .collect();
    descs
        .par_iter()
        .map(|d| {
            let alg = build(d, params)?;
            let n = alg.check_jacobi().len();
            Ok(Check::new("jacobi", format!("{}/{}", d.name.symbol(), d.variant.as_str()), n as f64, 0.0))
        })
        .collect()
}

/// Random dual point near an orbit: central coordinates keep the base
/// point's values, the others are uniform in [-2, 2].
pub fn random_dual_point(base: &DualPoint<f64>, central: &[bool], rng: &mut impl Rng) -> DualPoint<f64> {
    let coords = base
        .coords()
        .iter()
        .zip(central)
        .map(|(x, c)| if *c { *x } else { rng.gen_range(-2.0..2.0) })
        .collect();
    DualPoint::from_parts(base.labels().to_vec(), coords)
}

/// Omega Theta = I, then for each invariant the Casimir residual with its
/// analytic gradient and with central differences, at `samples` seeded random points.
pub fn orbit_suite(fixture: OrbitFixture, p: &OrbitParams, samples: usize, seed: u64) -> Result<Vec<Check>> {
    let s = fixture.structure(p)?;
    let mut out = vec![Check::new("omega_theta", fixture.name().into(), s.to_f64().identity_defect(), IDENTITY_TOL)];
    let alg = fixture.algebra(p)?;
    let base = fixture.base_point(&alg, p)?.to_f64();
    let central: Vec<bool> = (0..alg.dim()).map(|i| (0..alg.dim()).all(|j| alg.bracket_terms(i, j).is_empty())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<_> = (0..samples).map(|_| random_dual_point(&base, &central, &mut rng)).collect();
    for inv in fixture.invariants(p) {
        let (mut exact, mut fd): (f64, f64) = (0.0, 0.0);
        for a in &points {
            let r = casimir_residual(&alg, a, &(inv.gradient)(a))?;
            exact = r.iter().map(|x| x.abs()).fold(exact, f64::max);
            let r = casimir_residual(&alg, a, &inv.numeric_gradient(a))?;
            fd = r.iter().map(|x| x.abs()).fold(fd, f64::max);
        }
        out.push(Check::new("casimir", format!("{}:{}", fixture.name(), inv.name), exact, ANALYTIC_TOL));
        out.push(Check::new("casimir_fd", format!("{}:{}", fixture.name(), inv.name), fd, NUMERIC_TOL));
    }
    Ok(out)
}

/// Every suite: Jacobi over the catalog and each orbit fixture.
pub fn full_suite(p: &OrbitParams, samples: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = jacobi_suite(&p.kinematics, None)?;
    let orbits: Vec<Result<Vec<Check>>> = OrbitFixture::ALL.par_iter().map(|f| orbit_suite(*f, p, samples, seed)).collect();
    for r in orbits {
        out.extend(r?);
    }
    Ok(out)
}

/// One report row for a fixture. max_residual covers Omega Theta - I and the
/// analytic Casimir residuals; the finite-difference cross-check is left out.
pub fn orbit_record(fixture: OrbitFixture, p: &OrbitParams, label: String, samples: usize, seed: u64) -> Result<OrbitRecord> {
    let s = fixture.structure(p)?;
    let worst = orbit_suite(fixture, p, samples, seed)?
        .iter()
        .filter(|c| c.suite != "casimir_fd")
        .map(|c| c.residual)
        .fold(0.0, f64::max);
    Ok(OrbitRecord {
        name: label,
        variant: fixture.variant().as_str().into(),
        dim: s.coordinates.len(),
        class: classify(&s),
        g: to_f64(&s.g_field),
        f: to_f64(&s.f_field),
        max_residual: worst,
    })
}

/// The classification sweep: each fixture, then each central fixture with
/// only the mass extension switched on. Catalog order, computed in parallel.
pub fn classification_sweep(p: &OrbitParams, samples: usize, seed: u64) -> Result<Vec<OrbitRecord>> {
    let mut jobs: Vec<(OrbitFixture, OrbitParams, String)> =
        OrbitFixture::ALL.iter().map(|f| (*f, p.clone(), f.name().to_string())).collect();
    let mass_only = OrbitFixture::mass_only(p);
    for f in OrbitFixture::ALL.into_iter().filter(|f| *f != OrbitFixture::NoncentralStatic) {
        jobs.push((f, mass_only.clone(), format!("{}:mass-only", f.name())));
    }
    jobs.into_par_iter().map(|(f, p, label)| orbit_record(f, &p, label, samples, seed)).collect()
}
