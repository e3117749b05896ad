//! C ABI for `selfcomm`.
//!
//! Matrices and polygons are opaque handles created by `*_new` and released
//! by `*_free`. Every fallible call returns a [`SelfcommStatus`] and writes
//! its results through out-pointers; on failure a message is available from
//! [`selfcomm_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use selfcomm::bounds::{evaluate_bounds, BoundReport};
use selfcomm::convexgeom::{self, ConvexPolygon, Point};
use selfcomm::linalg::{hermitian_norm, operator_norm, self_commutator};
use selfcomm::numrange::{self, area_corrected, boundary, min_shift_distance, numerical_radius};
use selfcomm::{ComplexScalar, Matrix};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelfcommStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NumericalFailure = 3,
    Panic = 4,
}

/// Opaque square complex matrix.
pub struct SelfcommMatrix {
    inner: Matrix,
}

/// Opaque convex polygon.
pub struct SelfcommPolygon {
    inner: ConvexPolygon,
}

/// Self-commutator norm against each estimate.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SelfcommBoundReport {
    pub dim: usize,
    pub comm_norm: f64,
    pub norm_sq: f64,
    pub m_sq: f64,
    pub numerical_radius: f64,
    pub width_product: f64,
    pub wang_du: f64,
    pub two_area: f64,
    pub four_over_pi_area: f64,
    pub conj1_slack: f64,
    pub conj2_slack: f64,
    /// Smallest theorem slack divided by `max(1, ‖A‖²)`.
    pub min_theorem_slack: f64,
    pub all_theorems_hold: bool,
}

impl From<&BoundReport> for SelfcommBoundReport {
    fn from(r: &BoundReport) -> Self {
        Self {
            dim: r.dim,
            comm_norm: r.comm_norm,
            norm_sq: r.norm_sq,
            m_sq: r.m_sq,
            numerical_radius: r.numerical_radius,
            width_product: r.width_product,
            wang_du: r.wang_du,
            two_area: r.two_area,
            four_over_pi_area: r.four_over_pi_area,
            conj1_slack: r.conj1_slack,
            conj2_slack: r.conj2_slack,
            min_theorem_slack: r.slacks.min_theorem() / r.scale(),
            all_theorems_hold: r.satisfied.all_theorems_hold(),
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

struct Failure(SelfcommStatus, String);

impl Failure {
    fn null(what: &str) -> Self {
        Failure(SelfcommStatus::NullPointer, format!("{what} is null"))
    }

    fn invalid(msg: impl std::fmt::Display) -> Self {
        Failure(SelfcommStatus::InvalidArgument, msg.to_string())
    }

    fn numerical(msg: impl std::fmt::Display) -> Self {
        Failure(SelfcommStatus::NumericalFailure, msg.to_string())
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SelfcommStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SelfcommStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("panic: {msg}"));
            SelfcommStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::null(what))
}

unsafe fn write<T>(p: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        return Err(Failure::null(what));
    }
    p.write(value);
    Ok(())
}

fn check_angles(n: usize, min: usize) -> Result<(), Failure> {
    if n < min {
        Err(Failure::invalid(format!("need at least {min} angles, got {n}")))
    } else {
        Ok(())
    }
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn selfcomm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn selfcomm_version() -> *const c_char {
    const VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(s) => s,
        Err(_) => panic!("version string"),
    };
    VERSION.as_ptr()
}

/// Builds an `n × n` matrix from row-major real and imaginary parts. `im`
/// may be null for a real matrix.
///
/// # Safety
/// `re` (and `im` unless null) must point to `n * n` readable doubles and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_matrix_new(
    n: usize,
    re: *const f64,
    im: *const f64,
    out: *mut *mut SelfcommMatrix,
) -> SelfcommStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure::null("out"));
        }
        if re.is_null() {
            return Err(Failure::null("re"));
        }
        let len = n.checked_mul(n).ok_or_else(|| Failure::invalid("dimension overflows"))?;
        if len == 0 {
            return Err(Failure::invalid("dimension must be at least 1"));
        }
        let re = std::slice::from_raw_parts(re, len);
        let im = (!im.is_null()).then(|| std::slice::from_raw_parts(im, len));
        let data = (0..len)
            .map(|k| ComplexScalar::new(re[k], im.map_or(0.0, |v| v[k])))
            .collect();
        let inner = Matrix::from_row_major(n, data).map_err(Failure::invalid)?;
        out.write(Box::into_raw(Box::new(SelfcommMatrix { inner })));
        Ok(())
    })
}

/// Releases a matrix. Null is ignored.
///
/// # Safety
/// `m` must come from [`selfcomm_matrix_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_matrix_free(m: *mut SelfcommMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live matrix handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_matrix_dim(m: *const SelfcommMatrix, out: *mut usize) -> SelfcommStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        write(out, m.inner.dim(), "out")
    })
}

/// `‖A*A − AA*‖`.
///
/// # Safety
/// `m` must be a live matrix handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_self_commutator_norm(m: *const SelfcommMatrix, out: *mut f64) -> SelfcommStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        let v = hermitian_norm(&self_commutator(&m.inner)).map_err(Failure::numerical)?;
        write(out, v, "out")
    })
}

/// Spectral norm `‖A‖`.
///
/// # Safety
/// `m` must be a live matrix handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_operator_norm(m: *const SelfcommMatrix, out: *mut f64) -> SelfcommStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        write(out, operator_norm(&m.inner), "out")
    })
}

/// Numerical radius `w(A)`, scanned over `n_angles ≥ 64` directions.
///
/// # Safety
/// `m` must be a live matrix handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_numerical_radius(
    m: *const SelfcommMatrix,
    n_angles: usize,
    out: *mut f64,
) -> SelfcommStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        check_angles(n_angles, 64)?;
        let v = numerical_radius(&m.inner, n_angles).map_err(Failure::numerical)?;
        write(out, v, "out")
    })
}

/// Area of the numerical range from `n_angles ≥ 8` boundary samples.
///
/// # Safety
/// `m` must be a live matrix handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_numerical_range_area(
    m: *const SelfcommMatrix,
    n_angles: usize,
    out: *mut f64,
) -> SelfcommStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        check_angles(n_angles, 8)?;
        let s = boundary(&m.inner, n_angles).map_err(Failure::numerical)?;
        write(out, area_corrected(&s), "out")
    })
}

/// `min_t b_x(t) b_y(t)` and the minimizing angle.
///
/// # Safety
/// `m` must be a live matrix handle; `out_angle` and `out_value` writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_min_width_product(
    m: *const SelfcommMatrix,
    n_angles: usize,
    out_angle: *mut f64,
    out_value: *mut f64,
) -> SelfcommStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        check_angles(n_angles, 64)?;
        let (t, v) = numrange::min_width_product(&m.inner, n_angles, numrange::DEFAULT_REFINE_TOL)
            .map_err(Failure::numerical)?;
        write(out_angle, t, "out_angle")?;
        write(out_value, v, "out_value")
    })
}

/// `m(A) = inf_λ ‖A − λI‖` and the minimizing shift.
///
/// # Safety
/// `m` must be a live matrix handle; the out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_min_shift_distance(
    m: *const SelfcommMatrix,
    out_re: *mut f64,
    out_im: *mut f64,
    out_distance: *mut f64,
) -> SelfcommStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        let tol = 1e-10 * operator_norm(&m.inner).max(1.0);
        let s = min_shift_distance(&m.inner, tol).map_err(Failure::numerical)?;
        write(out_re, s.lambda.re, "out_re")?;
        write(out_im, s.lambda.im, "out_im")?;
        write(out_distance, s.distance, "out_distance")
    })
}

/// Every estimate of `‖C(A)‖`, with areas from `n_angles ≥ 8` samples.
///
/// # Safety
/// `m` must be a live matrix handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_evaluate_bounds(
    m: *const SelfcommMatrix,
    n_angles: usize,
    out: *mut SelfcommBoundReport,
) -> SelfcommStatus {
    guard(|| {
        let m = deref(m, "matrix")?;
        check_angles(n_angles, 8)?;
        let r = evaluate_bounds(&m.inner, n_angles).map_err(Failure::numerical)?;
        write(out, SelfcommBoundReport::from(&r), "out")
    })
}

/// Convex hull of `n_points` points given as coordinate arrays.
///
/// # Safety
/// `xs` and `ys` must point to `n_points` readable doubles and `out` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_polygon_new(
    n_points: usize,
    xs: *const f64,
    ys: *const f64,
    out: *mut *mut SelfcommPolygon,
) -> SelfcommStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure::null("out"));
        }
        if xs.is_null() || ys.is_null() {
            return Err(Failure::null("coordinates"));
        }
        let xs = std::slice::from_raw_parts(xs, n_points);
        let ys = std::slice::from_raw_parts(ys, n_points);
        let pts: Vec<Point> = xs.iter().zip(ys).map(|(&x, &y)| Point::new(x, y)).collect();
        let inner = ConvexPolygon::from_points(&pts).map_err(Failure::invalid)?;
        out.write(Box::into_raw(Box::new(SelfcommPolygon { inner })));
        Ok(())
    })
}

/// Releases a polygon. Null is ignored.
///
/// # Safety
/// `p` must come from [`selfcomm_polygon_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_polygon_free(p: *mut SelfcommPolygon) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live polygon handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_polygon_area(p: *const SelfcommPolygon, out: *mut f64) -> SelfcommStatus {
    guard(|| {
        let p = deref(p, "polygon")?;
        write(out, convexgeom::polygon_area(&p.inner), "out")
    })
}

/// `min_t w(t) w(t + π/2)` and the minimizing angle.
///
/// # Safety
/// `p` must be a live polygon handle; `out_angle` and `out_value` writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_polygon_min_width_product(
    p: *const SelfcommPolygon,
    n_angles: usize,
    out_angle: *mut f64,
    out_value: *mut f64,
) -> SelfcommStatus {
    guard(|| {
        let p = deref(p, "polygon")?;
        check_angles(n_angles, 64)?;
        let (t, v) = convexgeom::min_width_product(&p.inner, n_angles, convexgeom::DEFAULT_REFINE_TOL)
            .map_err(Failure::invalid)?;
        write(out_angle, t, "out_angle")?;
        write(out_value, v, "out_value")
    })
}

/// Minimum width product divided by area, in `[1, 2]`.
///
/// # Safety
/// `p` must be a live polygon handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn selfcomm_polygon_width_ratio(p: *const SelfcommPolygon, out: *mut f64) -> SelfcommStatus {
    guard(|| {
        let p = deref(p, "polygon")?;
        let r = convexgeom::width_ratio(&p.inner).map_err(Failure::invalid)?;
        write(out, r, "out")
    })
}
