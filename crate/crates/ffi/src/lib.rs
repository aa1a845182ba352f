//! C ABI over `elastic-weyl`.
//!
//! Materials and spectra are opaque heap handles created by `ew_*_new` style
//! calls and released with the matching `*_free`. Every fallible call returns
//! an [`EwStatus`]; on failure `ew_last_error()` describes what went wrong on
//! the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use elastic_weyl::coefficients::{Method, WeylCoefficients};
use elastic_weyl::rayleigh::gamma_r;
use elastic_weyl::shift::shift;
use elastic_weyl::spectra::{cylinder_spectrum, disk_spectrum, CountingFunction};
use elastic_weyl::{Admissibility, Bc, Error, Material};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidMaterial = 2,
    InvalidArgument = 3,
    Numerical = 4,
    IndexOutOfRange = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EwBc {
    Dirichlet = 0,
    Free = 1,
}

impl From<EwBc> for Bc {
    fn from(b: EwBc) -> Self {
        match b {
            EwBc::Dirichlet => Bc::Dir,
            EwBc::Free => Bc::Free,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct EwCoefficients {
    pub a: f64,
    pub b_dir: f64,
    pub b_free: f64,
    pub a_heat: f64,
    pub b_dir_heat: f64,
    pub b_free_heat: f64,
    pub b_dir_liu: f64,
}

/// Opaque material handle.
pub struct EwMaterial(Material);

/// Opaque counting-function handle.
pub struct EwSpectrum(CountingFunction);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> EwStatus {
    match e {
        Error::InvalidMaterial(_) => EwStatus::InvalidMaterial,
        e if e.is_config() => EwStatus::InvalidArgument,
        _ => EwStatus::Numerical,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), (EwStatus, String)>>(f: F) -> EwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            EwStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            EwStatus::Panic
        }
    }
}

fn lift(e: Error) -> (EwStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (EwStatus, String) {
    (EwStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (EwStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(p: *mut T, v: T, what: &str) -> Result<(), (EwStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(v);
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ew_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates a material. `extended != 0` only requires `lambda + mu > 0`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ew_material_new(lambda: f64, mu: f64, dim: u32, extended: bool, out: *mut *mut EwMaterial) -> EwStatus {
    guard(|| {
        let mode = if extended { Admissibility::Extended } else { Admissibility::Standard };
        let m = Material::with_mode(lambda, mu, dim as usize, mode).map_err(lift)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, Box::into_raw(Box::new(EwMaterial(m))), "out")
    })
}

/// # Safety
/// `m` must be null or a handle from `ew_material_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ew_material_free(m: *mut EwMaterial) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ew_material_alpha(m: *const EwMaterial, out: *mut f64) -> EwStatus {
    guard(|| write(out, deref(m, "material")?.0.alpha(), "out"))
}

/// Weyl coefficients by quadrature with tolerance `tol`.
///
/// # Safety
/// `m` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ew_weyl_coefficients(m: *const EwMaterial, tol: f64, out: *mut EwCoefficients) -> EwStatus {
    guard(|| {
        let c = WeylCoefficients::compute(&deref(m, "material")?.0, Method::Quadrature, tol).map_err(lift)?;
        let v = EwCoefficients {
            a: c.a,
            b_dir: c.b_dir,
            b_free: c.b_free,
            a_heat: c.a_heat,
            b_dir_heat: c.b_dir_heat,
            b_free_heat: c.b_free_heat,
            b_dir_liu: c.b_dir_liu,
        };
        write(out, v, "out")
    })
}

/// Rayleigh speed ratio `gamma_R` for `alpha` in `(0, 1)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ew_gamma_r(alpha: f64, out: *mut f64) -> EwStatus {
    guard(|| write(out, gamma_r(alpha).map_err(lift)?, "out"))
}

/// Spectral shift at tangential frequency `xi` and spectral parameter `lambda`.
/// `at_breakpoint` may be null.
///
/// # Safety
/// `m` must be a live handle, `value` valid for writes, `at_breakpoint` null or valid.
#[no_mangle]
pub unsafe extern "C" fn ew_shift(
    m: *const EwMaterial,
    bc: EwBc,
    xi: f64,
    lambda: f64,
    value: *mut f64,
    at_breakpoint: *mut bool,
) -> EwStatus {
    guard(|| {
        let s = shift(&deref(m, "material")?.0, bc.into(), xi, lambda).map_err(lift)?;
        write(value, s.value, "value")?;
        if !at_breakpoint.is_null() {
            at_breakpoint.write(s.at_breakpoint);
        }
        Ok(())
    })
}

unsafe fn spectrum_out(
    out: *mut *mut EwSpectrum,
    make: impl FnOnce() -> elastic_weyl::Result<CountingFunction>,
) -> Result<(), (EwStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = make().map_err(lift)?;
    write(out, Box::into_raw(Box::new(EwSpectrum(c))), "out")
}

/// All eigenvalues of the unit disk up to `lambda_max`; needs a 2-D material.
///
/// # Safety
/// `m` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ew_spectrum_disk(m: *const EwMaterial, bc: EwBc, lambda_max: f64, out: *mut *mut EwSpectrum) -> EwStatus {
    guard(|| {
        let m = &deref(m, "material")?.0;
        spectrum_out(out, || disk_spectrum(m, bc.into(), lambda_max))
    })
}

/// All eigenvalues of `T^2 x [0, h]` up to `lambda_max`; needs a 3-D material.
///
/// # Safety
/// `m` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ew_spectrum_cylinder(
    m: *const EwMaterial,
    bc: EwBc,
    h: f64,
    lambda_max: f64,
    out: *mut *mut EwSpectrum,
) -> EwStatus {
    guard(|| {
        let m = &deref(m, "material")?.0;
        spectrum_out(out, || cylinder_spectrum(m, bc.into(), h, lambda_max))
    })
}

/// # Safety
/// `s` must be null or a live spectrum handle.
#[no_mangle]
pub unsafe extern "C" fn ew_spectrum_free(s: *mut EwSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of distinct eigenvalues stored.
///
/// # Safety
/// `s` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ew_spectrum_len(s: *const EwSpectrum, out: *mut usize) -> EwStatus {
    guard(|| write(out, deref(s, "spectrum")?.0.entries.len(), "out"))
}

/// The `i`-th distinct eigenvalue and its multiplicity.
///
/// # Safety
/// `s` must be a live handle, `lambda` and `multiplicity` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ew_spectrum_get(s: *const EwSpectrum, i: usize, lambda: *mut f64, multiplicity: *mut u32) -> EwStatus {
    guard(|| {
        let e = deref(s, "spectrum")?
            .0
            .entries
            .get(i)
            .ok_or_else(|| (EwStatus::IndexOutOfRange, format!("index {i} out of range")))?;
        write(lambda, e.lambda, "lambda")?;
        write(multiplicity, e.multiplicity, "multiplicity")
    })
}

/// `N(lambda)`: eigenvalues strictly below `lambda`, with multiplicity.
///
/// # Safety
/// `s` must be a live handle, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ew_spectrum_count(s: *const EwSpectrum, lambda: f64, out: *mut u64) -> EwStatus {
    guard(|| write(out, deref(s, "spectrum")?.0.count(lambda), "out"))
}
