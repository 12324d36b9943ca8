//! Kirillov matrix, Casimir checks, orbit charts and the induced
//! symplectic structure.
//!
//! Sign convention: the Poisson bracket of dual coordinates is
//! {alpha_a, alpha_b} = -Omega_ab and motion is xdot = {H, x}. In the charts
//! used here this gives the canonical block {p_i, q^j} = +delta.

use serde::Serialize;

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Scalar};

/// Name of the dual coordinate paired with a generator.
pub fn dual_label(generator: &str) -> String {
    match generator {
        "J" => "j".into(),
        "H" => "E".into(),
        "M" => "m".into(),
        "S" => "h".into(),
        "M'" => "mu_mass".into(),
        "B" => "beta_dual".into(),
        "Lambda" => "kappa_hooke".into(),
        g => {
            if let Some(i) = g.strip_prefix("Pi") {
                format!("I{i}")
            } else {
                g.to_ascii_lowercase()
            }
        }
    }
}

/// A point of the dual space, labeled by the dual basis of its algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct DualPoint<T> {
    labels: Vec<String>,
    coords: Vec<T>,
}

impl<T: Scalar> DualPoint<T> {
    pub fn zeros(alg: &StructureConstants) -> Self {
        DualPoint {
            labels: alg.names().iter().map(|n| dual_label(n)).collect(),
            coords: vec![T::zero(); alg.dim()],
        }
    }

    pub fn from_coords(alg: &StructureConstants, coords: Vec<T>) -> Result<Self> {
        if coords.len() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), found: coords.len() });
        }
        Ok(DualPoint { coords, ..Self::zeros(alg) })
    }

    pub(crate) fn from_parts(labels: Vec<String>, coords: Vec<T>) -> Self {
        DualPoint { labels, coords }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn get(&self, label: &str) -> Result<T> {
        Ok(self.coords[self.index_of(label)?].clone())
    }

    pub fn set(&mut self, label: &str, value: T) -> Result<()> {
        let i = self.index_of(label)?;
        self.coords[i] = value;
        Ok(())
    }

    pub fn with(mut self, label: &str, value: T) -> Result<Self> {
        self.set(label, value)?;
        Ok(self)
    }

    fn check(&self, alg: &StructureConstants) -> Result<()> {
        let expected: Vec<String> = alg.names().iter().map(|n| dual_label(n)).collect();
        if self.labels != expected {
            return Err(Error::UnknownLabel(format!(
                "dual point labels {:?} do not match the dual basis {:?}",
                self.labels, expected
            )));
        }
        Ok(())
    }
}

impl DualPoint<Rational> {
    pub fn to_f64(&self) -> DualPoint<f64> {
        DualPoint { labels: self.labels.clone(), coords: self.coords.iter().map(f64::from_rational).collect() }
    }
}

/// K_ij(alpha) = alpha_k C_ij^k.
#[derive(Clone, Debug, PartialEq)]
pub struct KirillovMatrix<T> {
    pub entries: Matrix<T>,
    pub labels: Vec<String>,
}

pub fn kirillov_matrix<T: Scalar>(alg: &StructureConstants, alpha: &DualPoint<T>) -> Result<KirillovMatrix<T>> {
    alpha.check(alg)?;
    let d = alg.dim();
    let mut k = Matrix::zeros(d, d);
    for i in 0..d {
        for j in i + 1..d {
            let v = alg
                .bracket_terms(i, j)
                .iter()
                .fold(T::zero(), |acc, (l, c)| acc + alpha.coords[*l].clone() * T::from_rational(c));
            k[(j, i)] = -v.clone();
            k[(i, j)] = v;
        }
    }
    Ok(KirillovMatrix { entries: k, labels: alpha.labels.clone() })
}

/// K(alpha) grad f; vanishes when f is a Casimir at alpha.
pub fn casimir_residual<T: Scalar>(alg: &StructureConstants, alpha: &DualPoint<T>, grad_f: &[T]) -> Result<Vec<T>> {
    kirillov_matrix(alg, alpha)?.entries.matvec(grad_f)
}

/// Central differences with step 1e-6 * max(1, |x_i|).
pub fn central_difference_gradient(f: impl Fn(&[f64]) -> f64, x: &[f64]) -> Vec<f64> {
    let mut y = x.to_vec();
    (0..x.len())
        .map(|i| {
            let h = 1e-6 * x[i].abs().max(1.0);
            y[i] = x[i] + h;
            let up = f(&y);
            y[i] = x[i] - h;
            let down = f(&y);
            y[i] = x[i];
            (up - down) / (2.0 * h)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Position,
    Momentum,
}

/// x = scale * alpha[slot], where slot indexes the chart's orbit coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalCoordinate<T> {
    pub name: String,
    pub role: Role,
    /// conjugate pairs share this index
    pub pair: usize,
    pub slot: usize,
    pub scale: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrbitChart<T> {
    pub name: String,
    pub orbit_indices: Vec<usize>,
    /// fixed values of the coordinates off the chart (m, h, ...)
    pub casimir_values: Vec<(String, T)>,
    pub coordinate_map: Vec<CanonicalCoordinate<T>>,
}

impl<T: Scalar> OrbitChart<T> {
    fn position_of(&self, role: Role, pair: usize) -> Option<usize> {
        self.coordinate_map.iter().position(|c| c.role == role && c.pair == pair)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseSpaceClass {
    Canonical,
    PositionNc,
    MomentumNc,
    FullyNc,
}

impl PhaseSpaceClass {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Canonical => "canonical",
            Self::PositionNc => "position_nc",
            Self::MomentumNc => "momentum_nc",
            Self::FullyNc => "fully_nc",
        }
    }
}

impl std::fmt::Display for PhaseSpaceClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticStructure<T> {
    pub chart: String,
    /// dual labels of the orbit coordinates, in chart order
    pub orbit_labels: Vec<String>,
    /// restricted Kirillov matrix
    pub omega: Matrix<T>,
    /// Omega^{-1}, the matrix of the symplectic form
    pub theta: Matrix<T>,
    pub coordinates: Vec<String>,
    pub roles: Vec<Role>,
    pub pairs: Vec<usize>,
    /// Poisson tensor {x_a, x_b} in the canonical coordinates
    pub brackets: Matrix<T>,
    /// {q^1, q^2}
    pub g_field: T,
    /// {p_1, p_2}
    pub f_field: T,
}

impl<T: Scalar> SymplecticStructure<T> {
    pub fn coordinate_index(&self, name: &str) -> Result<usize> {
        self.coordinates.iter().position(|c| c == name).ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    /// {a, b} for two canonical coordinates by name.
    pub fn bracket_of(&self, a: &str, b: &str) -> Result<T> {
        Ok(self.brackets[(self.coordinate_index(a)?, self.coordinate_index(b)?)].clone())
    }

    /// Largest bracket between a position and a momentum that are not conjugate.
    pub fn mixing(&self) -> f64 {
        let n = self.roles.len();
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                if self.roles[a] == Role::Position && self.roles[b] == Role::Momentum && self.pairs[a] != self.pairs[b] {
                    worst = worst.max(self.brackets[(a, b)].magnitude());
                }
            }
        }
        worst
    }

    fn sector_max(&self, role: Role) -> f64 {
        let n = self.roles.len();
        let mut worst: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                if self.roles[a] == role && self.roles[b] == role {
                    worst = worst.max(self.brackets[(a, b)].magnitude());
                }
            }
        }
        worst
    }

    /// Omega * Theta - I, largest entry.
    pub fn identity_defect(&self) -> f64 {
        let n = self.omega.rows();
        match self.omega.matmul(&self.theta).and_then(|p| p.sub(&Matrix::identity(n))) {
            Ok(d) => d.max_abs(),
            Err(_) => f64::INFINITY,
        }
    }
}

impl SymplecticStructure<Rational> {
    pub fn to_f64(&self) -> SymplecticStructure<f64> {
        SymplecticStructure {
            chart: self.chart.clone(),
            orbit_labels: self.orbit_labels.clone(),
            omega: self.omega.to_f64(),
            theta: self.theta.to_f64(),
            coordinates: self.coordinates.clone(),
            roles: self.roles.clone(),
            pairs: self.pairs.clone(),
            brackets: self.brackets.to_f64(),
            g_field: f64::from_rational(&self.g_field),
            f_field: f64::from_rational(&self.f_field),
        }
    }
}

/// Restricts K to the chart, inverts, and transports the Poisson tensor to
/// the canonical coordinates.
pub fn restrict<T: Scalar>(k: &KirillovMatrix<T>, chart: &OrbitChart<T>) -> Result<SymplecticStructure<T>> {
    let idx = &chart.orbit_indices;
    let n = idx.len();
    if let Some(bad) = idx.iter().find(|&&i| i >= k.entries.rows()) {
        return Err(Error::DimensionMismatch { expected: k.entries.rows(), found: *bad });
    }
    if chart.coordinate_map.len() != n || chart.coordinate_map.iter().any(|c| c.slot >= n) {
        return Err(Error::DimensionMismatch { expected: n, found: chart.coordinate_map.len() });
    }
    let omega = k.entries.sub_matrix(idx, idx);
    let theta = omega.inverse().map_err(|e| match e {
        Error::Singular { rank, dim } => Error::DegenerateChart { chart: chart.name.clone(), rank, dim },
        other => other,
    })?;
    let cm = &chart.coordinate_map;
    let brackets = Matrix::from_fn(n, n, |a, b| {
        -(cm[a].scale.clone() * cm[b].scale.clone() * omega[(cm[a].slot, cm[b].slot)].clone())
    });
    let pick = |role, pair| chart.position_of(role, pair);
    let field = |role| match (pick(role, 0), pick(role, 1)) {
        (Some(a), Some(b)) => brackets[(a, b)].clone(),
        _ => T::zero(),
    };
    Ok(SymplecticStructure {
        chart: chart.name.clone(),
        orbit_labels: idx.iter().map(|&i| k.labels[i].clone()).collect(),
        g_field: field(Role::Position),
        f_field: field(Role::Momentum),
        omega,
        theta,
        coordinates: cm.iter().map(|c| c.name.clone()).collect(),
        roles: cm.iter().map(|c| c.role).collect(),
        pairs: cm.iter().map(|c| c.pair).collect(),
        brackets,
    })
}

/// Position sector noncommutative when positions fail to commute among
/// themselves or with a non-conjugate momentum; likewise for momenta.
/// For one position and one momentum per pair in the plane this is the
/// G/F rule. Zero test relative to the largest bracket, 1e-12 (exact for rationals).
pub fn classify<T: Scalar>(s: &SymplecticStructure<T>) -> PhaseSpaceClass {
    let scale = s.brackets.max_abs();
    let tol = if T::EXACT { 0.0 } else { 1e-12 * scale };
    let mixing = s.mixing() > tol;
    let pos = s.sector_max(Role::Position) > tol || mixing;
    let mom = s.sector_max(Role::Momentum) > tol || mixing;
    match (pos, mom) {
        (false, false) => PhaseSpaceClass::Canonical,
        (true, false) => PhaseSpaceClass::PositionNc,
        (false, true) => PhaseSpaceClass::MomentumNc,
        (true, true) => PhaseSpaceClass::FullyNc,
    }
}

/// {f, g} = grad_f^T P grad_g with the canonical-coordinate tensor P.
pub fn poisson_bracket<T: Scalar>(s: &SymplecticStructure<T>, grad_f: &[T], grad_g: &[T]) -> Result<T> {
    let n = s.brackets.rows();
    for g in [grad_f, grad_g] {
        if g.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.len() });
        }
    }
    let pg = s.brackets.matvec(grad_g)?;
    Ok(grad_f.iter().zip(&pg).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
}
