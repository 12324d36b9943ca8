//! Classical mechanics on planar noncommutative phase spaces.
//!
//! Brackets: {x^1,x^2} = G, {p_1,p_2} = F, {p_i,x^j} = delta. The flow of H is
//!   xdot^i = dH/dp_i + G eps^ij dH/dx^j
//!   pdot_i = -dH/dx^i + F eps_ij dH/dp_j.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::report::{write_records, Cell, Format, Record};

/// (x1, x2, p1, p2)
pub type State = [f64; 4];

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NCPhaseSpace2D {
    pub g_field: f64,
    pub f_field: f64,
}

impl NCPhaseSpace2D {
    pub fn new(g_field: f64, f_field: f64) -> Result<Self> {
        if !g_field.is_finite() || !f_field.is_finite() {
            return Err(Error::InvalidParameter("G and F must be finite".into()));
        }
        if 1.0 - g_field * f_field == 0.0 {
            return Err(Error::InvalidParameter("degenerate phase space: G F = 1".into()));
        }
        Ok(NCPhaseSpace2D { g_field, f_field })
    }

    pub fn commutative() -> Self {
        NCPhaseSpace2D { g_field: 0.0, f_field: 0.0 }
    }
}

/// V(x) = c0 + b.x + 1/2 x^T A x with A symmetric.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuadraticPotential {
    pub constant: f64,
    pub linear: [f64; 2],
    pub quadratic: [[f64; 2]; 2],
}

impl QuadraticPotential {
    pub fn isotropic_oscillator(k: f64) -> Self {
        QuadraticPotential { quadratic: [[k, 0.0], [0.0, k]], ..Default::default() }
    }

    /// Constant force: V = -F.x
    pub fn constant_force(force: [f64; 2]) -> Self {
        QuadraticPotential { linear: [-force[0], -force[1]], ..Default::default() }
    }

    pub fn value(&self, x: [f64; 2]) -> f64 {
        let a = &self.quadratic;
        self.constant
            + self.linear[0] * x[0]
            + self.linear[1] * x[1]
            + 0.5 * (a[0][0] * x[0] * x[0] + (a[0][1] + a[1][0]) * x[0] * x[1] + a[1][1] * x[1] * x[1])
    }

    pub fn gradient(&self, x: [f64; 2]) -> [f64; 2] {
        let a = &self.quadratic;
        let s = 0.5 * (a[0][1] + a[1][0]);
        [self.linear[0] + a[0][0] * x[0] + s * x[1], self.linear[1] + s * x[0] + a[1][1] * x[1]]
    }
}

/// H = p^2/(2m) + V(x)
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HamiltonianSpec {
    pub mass: f64,
    pub potential: QuadraticPotential,
}

impl HamiltonianSpec {
    pub fn new(mass: f64, potential: QuadraticPotential) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidParameter(format!("mass must be positive, got {mass}")));
        }
        Ok(HamiltonianSpec { mass, potential })
    }

    pub fn energy(&self, s: &State) -> f64 {
        (s[2] * s[2] + s[3] * s[3]) / (2.0 * self.mass) + self.potential.value([s[0], s[1]])
    }

    /// (dH/dx, dH/dp)
    pub fn gradient(&self, s: &State) -> ([f64; 2], [f64; 2]) {
        (self.potential.gradient([s[0], s[1]]), [s[2] / self.mass, s[3] / self.mass])
    }
}

pub fn hamilton_rhs(ps: &NCPhaseSpace2D, h: &HamiltonianSpec, s: &State) -> State {
    let (dx, dp) = h.gradient(s);
    let (g, f) = (ps.g_field, ps.f_field);
    [dp[0] + g * dx[1], dp[1] - g * dx[0], -dx[0] + f * dp[1], -dx[1] - f * dp[0]]
}

/// One classical RK4 step of xdot = rhs(x).
pub fn rk4_step<const N: usize>(rhs: impl Fn(&[f64; N]) -> [f64; N], x: &[f64; N], dt: f64) -> [f64; N] {
    let shift = |a: &[f64; N], k: &[f64; N], h: f64| -> [f64; N] { std::array::from_fn(|i| a[i] + h * k[i]) };
    let k1 = rhs(x);
    let k2 = rhs(&shift(x, &k1, dt / 2.0));
    let k3 = rhs(&shift(x, &k2, dt / 2.0));
    let k4 = rhs(&shift(x, &k3, dt));
    std::array::from_fn(|i| x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
}

fn step_count(t_end: f64, dt: f64) -> Result<usize> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidParameter(format!("dt must be positive, got {dt}")));
    }
    if !(t_end.is_finite() && t_end >= 0.0) {
        return Err(Error::InvalidParameter(format!("t_end must be nonnegative, got {t_end}")));
    }
    Ok((t_end / dt - 1e-9).ceil().max(0.0) as usize)
}

/// Fixed-step schedule ending exactly at t_end; the last step may be shorter.
fn schedule(t_end: f64, dt: f64) -> Result<Vec<(f64, f64)>> {
    let n = step_count(t_end, dt)?;
    Ok((0..n)
        .map(|i| {
            let t = i as f64 * dt;
            let h = if i + 1 == n { t_end - t } else { dt };
            (t, h)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NCTrajectory {
    pub times: Vec<f64>,
    pub states: Vec<State>,
    pub energies: Vec<f64>,
}

impl NCTrajectory {
    /// max |H(t) - H(0)|
    pub fn energy_drift(&self) -> f64 {
        let e0 = self.energies.first().copied().unwrap_or(0.0);
        self.energies.iter().map(|e| (e - e0).abs()).fold(0.0, f64::max)
    }

    pub fn last(&self) -> &State {
        self.states.last().expect("trajectory holds the initial state")
    }

    /// Rows (t, q1, q2, p1, p2, H, drift) with drift = |H - H(0)|.
    pub fn records(&self) -> Vec<Record> {
        let e0 = self.energies.first().copied().unwrap_or(0.0);
        self.times
            .iter()
            .zip(&self.states)
            .zip(&self.energies)
            .map(|((t, s), e)| {
                vec![
                    ("t", Cell::Num(*t)),
                    ("q1", Cell::Num(s[0])),
                    ("q2", Cell::Num(s[1])),
                    ("p1", Cell::Num(s[2])),
                    ("p2", Cell::Num(s[3])),
                    ("H", Cell::Num(*e)),
                    ("drift", Cell::Num((e - e0).abs())),
                ]
            })
            .collect()
    }

    pub fn write<W: Write>(&self, w: W, format: Format, metadata: &[(&str, String)]) -> Result<()> {
        write_records(w, format, metadata, &self.records())
    }
}

/// RK4 integration of the noncommutative flow from 0 to t_end.
pub fn integrate(ps: &NCPhaseSpace2D, h: &HamiltonianSpec, s0: State, t_end: f64, dt: f64) -> Result<NCTrajectory> {
    let steps = schedule(t_end, dt)?;
    let mut tr = NCTrajectory {
        times: Vec::with_capacity(steps.len() + 1),
        states: Vec::with_capacity(steps.len() + 1),
        energies: Vec::with_capacity(steps.len() + 1),
    };
    tr.times.push(0.0);
    tr.states.push(s0);
    tr.energies.push(h.energy(&s0));
    let mut s = s0;
    for (i, (t, dt)) in steps.into_iter().enumerate() {
        s = rk4_step(|x| hamilton_rhs(ps, h, x), &s, dt);
        if s.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite { step: i + 1 });
        }
        tr.times.push(t + dt);
        tr.states.push(s);
        tr.energies.push(h.energy(&s));
    }
    Ok(tr)
}

/// Linear flow xdot_a = {H, x_a} = -(B grad H)_a for a constant bracket matrix B
/// and H = c + g.x + 1/2 x^T A x.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonSystem {
    pub brackets: Matrix<f64>,
    pub hessian: Matrix<f64>,
    pub linear: Vec<f64>,
    pub constant: f64,
}

impl PoissonSystem {
    pub fn new(brackets: Matrix<f64>, hessian: Matrix<f64>, linear: Vec<f64>, constant: f64) -> Result<Self> {
        let n = brackets.rows();
        for (r, c) in [(brackets.cols(), n), (hessian.rows(), n), (hessian.cols(), n), (linear.len(), n)] {
            if r != c {
                return Err(Error::DimensionMismatch { expected: n, found: r });
            }
        }
        Ok(PoissonSystem { brackets, hessian, linear, constant })
    }

    pub fn dim(&self) -> usize {
        self.brackets.rows()
    }

    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        let ax = self.hessian.matvec(x).expect("dimension checked");
        ax.iter().zip(&self.linear).map(|(a, b)| a + b).collect()
    }

    pub fn energy(&self, x: &[f64]) -> f64 {
        let ax = self.hessian.matvec(x).expect("dimension checked");
        self.constant + x.iter().zip(&self.linear).map(|(a, b)| a * b).sum::<f64>()
            + 0.5 * x.iter().zip(&ax).map(|(a, b)| a * b).sum::<f64>()
    }

    pub fn rhs(&self, x: &[f64]) -> Vec<f64> {
        let g = self.gradient(x);
        self.brackets.matvec(&g).expect("dimension checked").into_iter().map(|v| -v).collect()
    }

    /// RK4 from 0 to t_end; returns (times, states).
    pub fn integrate(&self, x0: &[f64], t_end: f64, dt: f64) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
        if x0.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x0.len() });
        }
        let mut times = vec![0.0];
        let mut states = vec![x0.to_vec()];
        let mut x = x0.to_vec();
        let shift = |a: &[f64], k: &[f64], h: f64| a.iter().zip(k).map(|(a, k)| a + h * k).collect::<Vec<_>>();
        for (i, (t, h)) in schedule(t_end, dt)?.into_iter().enumerate() {
            let k1 = self.rhs(&x);
            let k2 = self.rhs(&shift(&x, &k1, h / 2.0));
            let k3 = self.rhs(&shift(&x, &k2, h / 2.0));
            let k4 = self.rhs(&shift(&x, &k3, h));
            for j in 0..x.len() {
                x[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
            }
            if x.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite { step: i + 1 });
            }
            times.push(t + h);
            states.push(x.clone());
        }
        Ok((times, states))
    }
}

/// Canonical brackets on (q1, q2, p1, p2): {p_i, q^j} = delta.
pub fn canonical_brackets<T: Scalar>() -> Matrix<T> {
    let mut b = Matrix::zeros(4, 4);
    for i in 0..2 {
        b[(2 + i, i)] = T::one();
        b[(i, 2 + i)] = -T::one();
    }
    b
}

/// Jacobian of x^i = q^i + a eps^ki p_k, a = 1/(2 m omega0), on (q, p).
pub fn galilei_coupling_jacobian<T: Scalar>(mass: &T, omega0: &T) -> Result<Matrix<T>> {
    let a = coupling_scale(mass, omega0, &T::one())?;
    let mut j = Matrix::identity(4);
    j[(0, 3)] = -a.clone();
    j[(1, 2)] = a;
    Ok(j)
}

/// Jacobian of pi_i = p_i + b eps_ij q^j, b = m omega^2/(2 omega0), on (q, p).
pub fn paragalilei_coupling_jacobian<T: Scalar>(mass: &T, omega0: &T, omega: &T) -> Result<Matrix<T>> {
    let b = coupling_scale(mass, omega0, &(mass.clone() * mass.clone() * omega.clone() * omega.clone()))?;
    let mut j = Matrix::identity(4);
    j[(2, 1)] = b.clone();
    j[(3, 0)] = -b;
    Ok(j)
}

/// num / (2 m omega0)
fn coupling_scale<T: Scalar>(mass: &T, omega0: &T, num: &T) -> Result<T> {
    let d = (T::one() + T::one()) * mass.clone() * omega0.clone();
    if d == T::zero() {
        return Err(Error::InvalidParameter("minimal coupling needs m != 0 and omega0 != 0".into()));
    }
    Ok(num.clone() / d)
}

/// Apply a linear coordinate change to a state.
pub fn apply_coupling<T: Scalar>(jacobian: &Matrix<T>, state: &[T]) -> Result<Vec<T>> {
    jacobian.matvec(state)
}

/// Brackets in the new coordinates: J B J^T.
pub fn transport<T: Scalar>(jacobian: &Matrix<T>, brackets: &Matrix<T>) -> Result<Matrix<T>> {
    jacobian.matmul(brackets)?.matmul(&jacobian.transpose())
}
