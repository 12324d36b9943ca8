//! C ABI over ncphase.
//!
//! Every function returns an [`NcStatus`]. On failure the message is kept per
//! thread and can be read with [`nc_last_error_message`]. Handles are opaque
//! and must be released with their `_free` function. Matrices are written
//! row-major into caller buffers; a buffer that is too small yields
//! `NC_STATUS_BUFFER_TOO_SMALL` with the required length stored in `*needed`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ncphase::catalog::{build, AlgebraDescriptor, AlgebraName, KinematicalParams, Variant};
use ncphase::coadjoint::{classify, PhaseSpaceClass, SymplecticStructure};
use ncphase::linalg::{parse_rational, to_f64, Matrix};
use ncphase::mechanics::{integrate, HamiltonianSpec, NCPhaseSpace2D, QuadraticPotential};
use ncphase::orbits::{OrbitFixture, OrbitParams};
use ncphase::static_group::{realize, StaticConstants, StaticGroupElement, StaticOrbitState};
use ncphase::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownName = 3,
    Degenerate = 4,
    NonFinite = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcClass {
    Canonical = 0,
    PositionNc = 1,
    MomentumNc = 2,
    FullyNc = 3,
}

/// A kinematical Lie algebra with exact structure constants.
pub struct NcAlgebra {
    inner: ncphase::algebra::StructureConstants,
}

/// A coadjoint orbit chart with its symplectic data.
pub struct NcOrbit {
    exact: SymplecticStructure<ncphase::linalg::Rational>,
    approx: SymplecticStructure<f64>,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

struct Failure(NcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::UnknownName { .. } | Error::UnknownLabel(_) => NcStatus::UnknownName,
            Error::Singular { .. } | Error::DegenerateChart { .. } => NcStatus::Degenerate,
            Error::NonFinite { .. } => NcStatus::NonFinite,
            _ => NcStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> NcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            NcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            NcStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(NcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(NcStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Copies `data` into `buf`; `needed` always receives `data.len()`.
unsafe fn fill(data: &[f64], buf: *mut f64, len: usize, needed: *mut usize) -> Result<(), Failure> {
    if let Some(n) = needed.as_mut() {
        *n = data.len();
    }
    if len < data.len() {
        return Err(Failure(NcStatus::BufferTooSmall, format!("buffer holds {len} values, {} needed", data.len())));
    }
    if buf.is_null() {
        return Err(null("buf"));
    }
    std::ptr::copy_nonoverlapping(data.as_ptr(), buf, data.len());
    Ok(())
}

fn flat(m: &Matrix<f64>) -> Vec<f64> {
    m.to_rows().concat()
}

fn kinematics(omega: &str, kappa: &str) -> Result<KinematicalParams, Failure> {
    Ok(KinematicalParams::from_curvatures(parse_rational(omega)?, parse_rational(kappa)?)?)
}

/// Length in bytes of the last error message of this thread, without the NUL.
#[no_mangle]
pub extern "C" fn nc_last_error_length() -> usize {
    LAST_ERROR.with(|e| e.borrow().len())
}

/// Copies the last error message, NUL-terminated and truncated to `len` bytes.
/// Returns the number of bytes written, excluding the NUL.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn nc_last_error_message(buf: *mut c_char, len: usize) -> usize {
    if buf.is_null() || len == 0 {
        return 0;
    }
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let n = e.len().min(len - 1);
        std::ptr::copy_nonoverlapping(e.as_ptr().cast::<c_char>(), buf, n);
        *buf.add(n) = 0;
        n
    })
}

/// Builds an algebra from a symbol ("G", "NH+", "S", ...), a variant
/// ("isotropic", "anisotropic", "central_ext", "noncentral_ext") and the
/// curvature constants as exact numbers ("1", "-3/2", "0.25").
///
/// # Safety
/// String arguments must be NUL-terminated; `out_algebra` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nc_algebra_new(
    name: *const c_char,
    variant: *const c_char,
    omega: *const c_char,
    kappa: *const c_char,
    out_algebra: *mut *mut NcAlgebra,
) -> NcStatus {
    guard(|| {
        let slot = out(out_algebra, "out_algebra")?;
        let name: AlgebraName = text(name, "name")?.parse()?;
        let variant: Variant = text(variant, "variant")?.parse()?;
        let p = kinematics(text(omega, "omega")?, text(kappa, "kappa")?)?;
        let inner = build(&AlgebraDescriptor::new(name, variant)?, &p)?;
        *slot = Box::into_raw(Box::new(NcAlgebra { inner }));
        Ok(())
    })
}

/// # Safety
/// `algebra` must be null or come from `nc_algebra_new`, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nc_algebra_free(algebra: *mut NcAlgebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// # Safety
/// `algebra` must be a live handle; `dim` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nc_algebra_dim(algebra: *const NcAlgebra, dim: *mut usize) -> NcStatus {
    guard(|| {
        *out(dim, "dim")? = handle(algebra, "algebra")?.inner.dim();
        Ok(())
    })
}

/// Number of basis triples i < j < k violating the Jacobi identity.
///
/// # Safety
/// `algebra` must be a live handle; `count` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nc_algebra_jacobi_violations(algebra: *const NcAlgebra, count: *mut usize) -> NcStatus {
    guard(|| {
        *out(count, "count")? = handle(algebra, "algebra")?.inner.check_jacobi().len();
        Ok(())
    })
}

/// Structure constants C_ij^k as doubles, index (i*dim + j)*dim + k.
///
/// # Safety
/// `algebra` must be a live handle; `buf` valid for `len` doubles; `needed` null or valid.
#[no_mangle]
pub unsafe extern "C" fn nc_algebra_structure_constants(
    algebra: *const NcAlgebra,
    buf: *mut f64,
    len: usize,
    needed: *mut usize,
) -> NcStatus {
    guard(|| {
        let data: Vec<f64> = handle(algebra, "algebra")?.inner.dense().iter().map(to_f64).collect();
        fill(&data, buf, len, needed)
    })
}

/// Builds an orbit chart by name ("galilei", "para-galilei+", "newton-hooke-",
/// "static", "carroll", "static-noncentral") with exact omega, kappa, mass and action.
///
/// # Safety
/// String arguments must be NUL-terminated; `out_orbit` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nc_orbit_new(
    name: *const c_char,
    omega: *const c_char,
    kappa: *const c_char,
    mass: *const c_char,
    action: *const c_char,
    out_orbit: *mut *mut NcOrbit,
) -> NcStatus {
    guard(|| {
        let slot = out(out_orbit, "out_orbit")?;
        let fixture: OrbitFixture = text(name, "name")?.parse()?;
        let p = OrbitParams::new(
            kinematics(text(omega, "omega")?, text(kappa, "kappa")?)?,
            parse_rational(text(mass, "mass")?)?,
            parse_rational(text(action, "action")?)?,
        );
        let exact = fixture.structure(&p)?;
        let approx = exact.to_f64();
        *slot = Box::into_raw(Box::new(NcOrbit { exact, approx }));
        Ok(())
    })
}

/// # Safety
/// `orbit` must be null or come from `nc_orbit_new`, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nc_orbit_free(orbit: *mut NcOrbit) {
    if !orbit.is_null() {
        drop(Box::from_raw(orbit));
    }
}

/// Number of chart coordinates.
///
/// # Safety
/// `orbit` must be a live handle; `dim` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nc_orbit_dim(orbit: *const NcOrbit, dim: *mut usize) -> NcStatus {
    guard(|| {
        *out(dim, "dim")? = handle(orbit, "orbit")?.approx.coordinates.len();
        Ok(())
    })
}

/// Restricted Kirillov matrix, row-major.
///
/// # Safety
/// `orbit` must be a live handle; `buf` valid for `len` doubles; `needed` null or valid.
#[no_mangle]
pub unsafe extern "C" fn nc_orbit_omega(orbit: *const NcOrbit, buf: *mut f64, len: usize, needed: *mut usize) -> NcStatus {
    guard(|| fill(&flat(&handle(orbit, "orbit")?.approx.omega), buf, len, needed))
}

/// Inverse of the restricted Kirillov matrix, row-major.
///
/// # Safety
/// As for `nc_orbit_omega`.
#[no_mangle]
pub unsafe extern "C" fn nc_orbit_theta(orbit: *const NcOrbit, buf: *mut f64, len: usize, needed: *mut usize) -> NcStatus {
    guard(|| fill(&flat(&handle(orbit, "orbit")?.approx.theta), buf, len, needed))
}

/// Poisson tensor in the canonical chart coordinates, row-major.
///
/// # Safety
/// As for `nc_orbit_omega`.
#[no_mangle]
pub unsafe extern "C" fn nc_orbit_brackets(orbit: *const NcOrbit, buf: *mut f64, len: usize, needed: *mut usize) -> NcStatus {
    guard(|| fill(&flat(&handle(orbit, "orbit")?.approx.brackets), buf, len, needed))
}

/// G = {q1, q2} and F = {p1, p2}.
///
/// # Safety
/// `orbit` must be a live handle; `g` and `f` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nc_orbit_fields(orbit: *const NcOrbit, g: *mut f64, f: *mut f64) -> NcStatus {
    guard(|| {
        let o = handle(orbit, "orbit")?;
        *out(g, "g")? = o.approx.g_field;
        *out(f, "f")? = o.approx.f_field;
        Ok(())
    })
}

/// # Safety
/// `orbit` must be a live handle; `class` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nc_orbit_class(orbit: *const NcOrbit, class: *mut NcClass) -> NcStatus {
    guard(|| {
        *out(class, "class")? = match classify(&handle(orbit, "orbit")?.exact) {
            PhaseSpaceClass::Canonical => NcClass::Canonical,
            PhaseSpaceClass::PositionNc => NcClass::PositionNc,
            PhaseSpaceClass::MomentumNc => NcClass::MomentumNc,
            PhaseSpaceClass::FullyNc => NcClass::FullyNc,
        };
        Ok(())
    })
}

/// Integrates H = p^2/(2 mass) + k x^2/2 on the plane with {q1,q2} = g and
/// {p1,p2} = f. Rows of (t, q1, q2, p1, p2) go to `buf`, five doubles each;
/// `rows` receives the row count.
///
/// # Safety
/// `initial` must point to 4 doubles; `buf` valid for `len` doubles; `rows` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn nc_simulate_oscillator(
    g: f64,
    f: f64,
    mass: f64,
    k: f64,
    initial: *const f64,
    t_end: f64,
    dt: f64,
    buf: *mut f64,
    len: usize,
    rows: *mut usize,
) -> NcStatus {
    guard(|| {
        let rows = out(rows, "rows")?;
        if initial.is_null() {
            return Err(null("initial"));
        }
        let x0: [f64; 4] = std::array::from_fn(|i| *initial.add(i));
        let h = HamiltonianSpec::new(mass, QuadraticPotential::isotropic_oscillator(k))?;
        let tr = integrate(&NCPhaseSpace2D::new(g, f)?, &h, x0, t_end, dt)?;
        let data: Vec<f64> = tr.times.iter().zip(&tr.states).flat_map(|(t, s)| [*t, s[0], s[1], s[2], s[3]]).collect();
        *rows = tr.times.len();
        fill(&data, buf, len, std::ptr::null_mut())
    })
}

/// Applies a noncentral Static group element to an orbit state.
/// `constants` = (m, mu, beta, kappa); `state` = (j, E, p1, p2, k1, k2, q1, q2, u1, u2);
/// `element` = (theta, v1, v2, x1, x2, t, eta1, eta2, l1, l2, xi, phi, b, a).
/// The result is written to `out_state` in the state layout.
///
/// # Safety
/// Pointers must be valid for 4, 10, 14 and 10 doubles.
#[no_mangle]
pub unsafe extern "C" fn nc_static_realize(
    constants: *const f64,
    state: *const f64,
    element: *const f64,
    out_state: *mut f64,
) -> NcStatus {
    guard(|| {
        if constants.is_null() || state.is_null() || element.is_null() || out_state.is_null() {
            return Err(null("argument"));
        }
        let c = std::slice::from_raw_parts(constants, 4);
        let s = std::slice::from_raw_parts(state, 10);
        let e = std::slice::from_raw_parts(element, 14);
        let s0 = StaticOrbitState {
            j: s[0],
            energy: s[1],
            p: [s[2], s[3]],
            k: [s[4], s[5]],
            q: [s[6], s[7]],
            u: [s[8], s[9]],
            constants: StaticConstants::new(c[0], c[1], c[2], c[3])?,
        };
        let g = StaticGroupElement {
            theta: e[0],
            v: [e[1], e[2]],
            x: [e[3], e[4]],
            t: e[5],
            eta: [e[6], e[7]],
            l: [e[8], e[9]],
            xi: e[10],
            phi: e[11],
            b: e[12],
            a: e[13],
        };
        if !g.is_finite() {
            return Err(Failure(NcStatus::InvalidArgument, "group element components must be finite".into()));
        }
        let r = realize(&g, &s0)?;
        let v = [r.j, r.energy, r.p[0], r.p[1], r.k[0], r.k[1], r.q[0], r.q[1], r.u[0], r.u[1]];
        std::ptr::copy_nonoverlapping(v.as_ptr(), out_state, 10);
        Ok(())
    })
}
