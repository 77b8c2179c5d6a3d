//! C ABI over `ngroupoid`.
//!
//! Mixtures and skeletons are opaque handles created from JSON and released
//! with their `_free` function. Every fallible call returns an [`NgStatus`];
//! on failure [`ng_last_error_message`] describes the problem. Strings handed
//! out by the library are released with [`ng_string_free`].
//!
//! Tolerance arguments are relative Frobenius tolerances; `0` selects the
//! library default.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ngroupoid::analysis::{self, generate};
use ngroupoid::groupoid::DEFAULT_TOLERANCE;
use ngroupoid::{compose, Error, MixtureSpec, ObjectiveSkeleton};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON or a document that fails validation.
    InvalidInput = 3,
    /// Dimension, face dimension or axis out of range.
    OutOfRange = 4,
    Singular = 5,
    /// Facets or arrow endpoints do not match.
    NotComposable = 6,
    /// Some constituent has no arrow for a required edge.
    ConstructionHalted = 7,
    /// A weight is not an arrow of its constituent.
    NotMember = 8,
    Panic = 9,
}

/// Opaque mixture handle.
pub struct NgMixture(MixtureSpec);

/// Opaque objective skeleton handle.
pub struct NgSkeleton(ObjectiveSkeleton);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> NgStatus {
    match err {
        Error::Dimension { .. } | Error::FaceDimension { .. } | Error::Axis { .. } => NgStatus::OutOfRange,
        Error::Singular { .. } => NgStatus::Singular,
        Error::NotComposable { .. } | Error::FacetMismatch { .. } => NgStatus::NotComposable,
        Error::ConstructionHalted { .. } => NgStatus::ConstructionHalted,
        Error::NotMember { .. } => NgStatus::NotMember,
        _ => NgStatus::InvalidInput,
    }
}

struct Fail(NgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> NgStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NgStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            NgStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(NgStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| Fail(NgStatus::NullPointer, format!("{what} is null")))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(NgStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(NgStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn tolerance(tol: f64) -> Result<f64, Fail> {
    if tol == 0.0 {
        Ok(DEFAULT_TOLERANCE)
    } else if tol > 0.0 && tol < 1.0 {
        Ok(tol)
    } else {
        Err(Fail(NgStatus::OutOfRange, format!("tolerance {tol} not in (0, 1)")))
    }
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON output has no nul bytes").into_raw()
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next library call on the same thread.
#[no_mangle]
pub extern "C" fn ng_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ng_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of `h`-faces of the `n`-cube, `2^(n-h) * C(n, h)` for `0 <= h < n`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_count_faces(n: usize, h: usize, out: *mut u64) -> NgStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let count = ngroupoid::count_faces(n, h)?;
        *out = u64::try_from(count)
            .map_err(|_| Fail(NgStatus::OutOfRange, format!("count for n={n}, h={h} exceeds 64 bits")))?;
        Ok(())
    })
}

/// # Safety
/// `json` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_mixture_from_json(json: *const c_char, out: *mut *mut NgMixture) -> NgStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let mix = MixtureSpec::from_json(text(json, "json")?)?;
        *out = Box::into_raw(Box::new(NgMixture(mix)));
        Ok(())
    })
}

/// # Safety
/// `m` must be null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ng_mixture_free(m: *mut NgMixture) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of constituents, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live mixture handle.
#[no_mangle]
pub unsafe extern "C" fn ng_mixture_n(m: *const NgMixture) -> usize {
    m.as_ref().map_or(0, |m| m.0.n())
}

/// # Safety
/// `json` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_skeleton_from_json(json: *const c_char, out: *mut *mut NgSkeleton) -> NgStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let t = ObjectiveSkeleton::from_json(text(json, "json")?)?;
        *out = Box::into_raw(Box::new(NgSkeleton(t)));
        Ok(())
    })
}

/// Serializes a skeleton; free the result with [`ng_string_free`].
///
/// # Safety
/// `s` must be a live skeleton handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_skeleton_to_json(s: *const NgSkeleton, out: *mut *mut c_char) -> NgStatus {
    guard(|| {
        let s = deref(s, "skeleton")?;
        *out_ptr(out, "out")? = c_string(s.0.to_json());
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ng_skeleton_free(s: *mut NgSkeleton) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Dimension of a skeleton, or 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live skeleton handle.
#[no_mangle]
pub unsafe extern "C" fn ng_skeleton_n(s: *const NgSkeleton) -> usize {
    s.as_ref().map_or(0, |s| s.0.n())
}

/// Seeded random skeleton on raw labels. Conservative unless `perturbed`,
/// in which case one edge weight is multiplied by `diag(2, 1, 1)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_skeleton_generate(
    n: usize,
    seed: u64,
    perturbed: bool,
    out: *mut *mut NgSkeleton,
) -> NgStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        ngroupoid::HypercubeSkeleton::new(n)?;
        let t = if perturbed {
            generate::random_perturbed(n, seed).0
        } else {
            generate::random_conservative(n, seed)
        };
        *out = Box::into_raw(Box::new(NgSkeleton(t)));
        Ok(())
    })
}

/// Seeded conservative skeleton whose weights are arrows of the mixture.
///
/// # Safety
/// `m` must be a live mixture handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_skeleton_generate_in(
    m: *const NgMixture,
    seed: u64,
    out: *mut *mut NgSkeleton,
) -> NgStatus {
    guard(|| {
        let m = deref(m, "mixture")?;
        let out = out_ptr(out, "out")?;
        let t = generate::random_conservative_in(&m.0, seed)?;
        *out = Box::into_raw(Box::new(NgSkeleton(t)));
        Ok(())
    })
}

/// Checks that every axis-`I` weight is an arrow of the `I`-th constituent.
///
/// # Safety
/// `s` and `m` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn ng_skeleton_validate(s: *const NgSkeleton, m: *const NgMixture) -> NgStatus {
    guard(|| {
        let s = deref(s, "skeleton")?;
        let m = deref(m, "mixture")?;
        s.0.validate_in(&m.0)?;
        Ok(())
    })
}

/// Composite along `axis` (1-based): `second` is traversed first, so its
/// target facet must equal the source facet of `first`.
///
/// # Safety
/// `first` and `second` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_skeleton_compose(
    first: *const NgSkeleton,
    second: *const NgSkeleton,
    axis: usize,
    tol: f64,
    out: *mut *mut NgSkeleton,
) -> NgStatus {
    guard(|| {
        let t = deref(first, "first")?;
        let tp = deref(second, "second")?;
        let out = out_ptr(out, "out")?;
        let c = compose(&t.0, &tp.0, axis, tolerance(tol)?)?;
        *out = Box::into_raw(Box::new(NgSkeleton(c)));
        Ok(())
    })
}

/// Conservativity decided from 2-face commutativity.
///
/// # Safety
/// `s` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_check_conservative(s: *const NgSkeleton, tol: f64, out: *mut bool) -> NgStatus {
    guard(|| {
        let s = deref(s, "skeleton")?;
        let out = out_ptr(out, "out")?;
        *out = analysis::is_conservative(&s.0, tolerance(tol)?).verdict;
        Ok(())
    })
}

/// Conservativity decided by the spanning-tree potential.
///
/// # Safety
/// `s` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_oracle_conservative(s: *const NgSkeleton, tol: f64, out: *mut bool) -> NgStatus {
    guard(|| {
        let s = deref(s, "skeleton")?;
        let out = out_ptr(out, "out")?;
        *out = analysis::conservative_oracle(&s.0, tolerance(tol)?);
        Ok(())
    })
}

/// JSON report of the 2-face check with failing faces as witnesses; free
/// the result with [`ng_string_free`].
///
/// # Safety
/// `s` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_conservativity_report_json(
    s: *const NgSkeleton,
    tol: f64,
    out: *mut *mut c_char,
) -> NgStatus {
    guard(|| {
        let s = deref(s, "skeleton")?;
        let out = out_ptr(out, "out")?;
        let report = analysis::is_conservative(&s.0, tolerance(tol)?);
        *out = c_string(serde_json::to_string(&report).expect("report serializes"));
        Ok(())
    })
}

/// Whether the core groupoid of the mixture is transitive.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_mixture_is_uniform(m: *const NgMixture, out: *mut bool) -> NgStatus {
    guard(|| {
        let m = deref(m, "mixture")?;
        let out = out_ptr(out, "out")?;
        *out = analysis::is_uniform(&m.0)?.verdict;
        Ok(())
    })
}

/// JSON uniformity report listing the misaligned pairs; free the result
/// with [`ng_string_free`].
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ng_uniformity_report_json(m: *const NgMixture, out: *mut *mut c_char) -> NgStatus {
    guard(|| {
        let m = deref(m, "mixture")?;
        let out = out_ptr(out, "out")?;
        let report = analysis::is_uniform(&m.0)?;
        *out = c_string(serde_json::to_string(&report).expect("report serializes"));
        Ok(())
    })
}
