//! C interface to `jackalg`.
//!
//! Objects are handed out as opaque pointers and released with the matching
//! `*_free` function. Every fallible call returns a [`JkStatus`]; on failure
//! the message is available from [`jk_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use jackalg::cms;
use jackalg::deformed::{self, ShiftedConvention, SuperJackMethod};
use jackalg::error::Error;
use jackalg::multipoly::MultiPoly;
use jackalg::ratfun::BigRational;
use jackalg::partitions::Partition;
use jackalg::shifted::{self, ShiftedMethod};
use jackalg::symfunc::{Basis, SymFn};

/// Symmetric function with coefficients in Q(θ).
pub struct JkSymFn(SymFn);

/// Polynomial in finitely many variables with coefficients in Q(θ).
pub struct JkPoly(MultiPoly);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    NotInFatHook = 3,
    TooFewVariables = 4,
    NonGenericTheta = 5,
    NotInAlgebra = 6,
    Internal = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JkBasis {
    Monomial = 0,
    PowerSum = 1,
    Elementary = 2,
    Complete = 3,
    Jack = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JkShiftedMethod {
    Branching = 0,
    Vanishing = 1,
    Tableau = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JkConvention {
    Flat = 0,
    Natural = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> JkStatus {
    match err {
        Error::NotInFatHook(..) => JkStatus::NotInFatHook,
        Error::TooFewVariables(..) => JkStatus::TooFewVariables,
        Error::NonGenericTheta(_) | Error::PoleAtTheta(_) | Error::DivisionByZero => JkStatus::NonGenericTheta,
        Error::NotInAlgebra(_) => JkStatus::NotInAlgebra,
        Error::InternalInconsistency(_) | Error::InvariantViolation(_) => JkStatus::Internal,
        _ => JkStatus::InvalidInput,
    }
}

fn guard(body: impl FnOnce() -> Result<(), JkStatus>) -> JkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => JkStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside jackalg".into());
            JkStatus::Panic
        }
    }
}

fn lift<T>(r: jackalg::error::Result<T>) -> Result<T, JkStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

fn null() -> JkStatus {
    set_error("null pointer argument".into());
    JkStatus::NullPointer
}

unsafe fn partition(parts: *const usize, len: usize) -> Result<Partition, JkStatus> {
    if len == 0 {
        return Ok(Partition::empty());
    }
    if parts.is_null() {
        return Err(null());
    }
    let v = std::slice::from_raw_parts(parts, len).to_vec();
    lift(Partition::new(v))
}

unsafe fn write<T>(out: *mut *mut T, value: T) -> Result<(), JkStatus> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, JkStatus> {
    p.as_ref().ok_or_else(null)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message of the most recent failure on this thread, or NULL. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn jk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from a `jk_*_to_string` call or be NULL.
#[no_mangle]
pub unsafe extern "C" fn jk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Jack polynomial P_λ in the Jack basis.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jk_jack(parts: *const usize, len: usize, out: *mut *mut JkSymFn) -> JkStatus {
    guard(|| {
        let lam = partition(parts, len)?;
        write(out, JkSymFn(cms::jack(&lam)))
    })
}

/// Re-expands `f` in another basis.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jk_symfn_convert(f: *const JkSymFn, basis: JkBasis, out: *mut *mut JkSymFn) -> JkStatus {
    guard(|| {
        let f = borrow(f)?;
        let target = match basis {
            JkBasis::Monomial => Basis::M,
            JkBasis::PowerSum => Basis::P,
            JkBasis::Elementary => Basis::E,
            JkBasis::Complete => Basis::H,
            JkBasis::Jack => Basis::Jack,
        };
        write(out, JkSymFn(lift(cms::convert(&f.0, target))?))
    })
}

/// Sets θ = num/den.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jk_symfn_specialize(f: *const JkSymFn, num: i64, den: i64, out: *mut *mut JkSymFn) -> JkStatus {
    guard(|| {
        let f = borrow(f)?;
        if den == 0 {
            set_error("zero denominator for theta".into());
            return Err(JkStatus::InvalidInput);
        }
        let t = BigRational::new(num.into(), den.into());
        write(out, JkSymFn(lift(f.0.specialize(&t))?))
    })
}

/// Restricts `f` to the variables x1..xn.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jk_symfn_expand(f: *const JkSymFn, n: usize, out: *mut *mut JkPoly) -> JkStatus {
    guard(|| {
        let f = borrow(f)?;
        write(out, JkPoly(lift(jackalg::symfunc::expand_in_variables(&f.0, n))?))
    })
}

/// # Safety
/// `f` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn jk_symfn_to_string(f: *const JkSymFn) -> *mut c_char {
    match f.as_ref() {
        Some(f) => into_c_string(f.0.to_string()),
        None => {
            null();
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `f` must come from this library or be NULL, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn jk_symfn_free(f: *mut JkSymFn) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Shifted Jack polynomial P*_λ in z1..zn.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jk_shifted_jack(
    parts: *const usize,
    len: usize,
    n: usize,
    method: JkShiftedMethod,
    out: *mut *mut JkPoly,
) -> JkStatus {
    guard(|| {
        let lam = partition(parts, len)?;
        let method = match method {
            JkShiftedMethod::Branching => ShiftedMethod::Branching,
            JkShiftedMethod::Vanishing => ShiftedMethod::Vanishing,
            JkShiftedMethod::Tableau => ShiftedMethod::Tableau,
        };
        write(out, JkPoly(lift(shifted::shifted_jack(&lam, n, method))?))
    })
}

/// Super-Jack polynomial SP_λ in x1..xn, y1..ym.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jk_superjack(
    parts: *const usize,
    len: usize,
    n: usize,
    m: usize,
    out: *mut *mut JkPoly,
) -> JkStatus {
    guard(|| {
        let lam = partition(parts, len)?;
        let sp = lift(deformed::super_jack(&lam, n, m, SuperJackMethod::SkewExpansion))?;
        write(out, JkPoly(sp.poly))
    })
}

/// Shifted super-Jack polynomial; fails with `NotInFatHook` outside the (n,m)-hook.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn jk_shifted_superjack(
    parts: *const usize,
    len: usize,
    n: usize,
    m: usize,
    convention: JkConvention,
    out: *mut *mut JkPoly,
) -> JkStatus {
    guard(|| {
        let lam = partition(parts, len)?;
        let conv = match convention {
            JkConvention::Flat => ShiftedConvention::Flat,
            JkConvention::Natural => ShiftedConvention::Natural,
        };
        write(out, JkPoly(lift(deformed::shifted_super_jack(&lam, n, m, conv))?))
    })
}

/// # Safety
/// `p` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn jk_poly_nvars(p: *const JkPoly) -> usize {
    p.as_ref().map_or(0, |p| p.0.nvars())
}

/// Returns 1 if equal, 0 if not, -1 on a NULL argument.
///
/// # Safety
/// `a` and `b` must be live handles or NULL.
#[no_mangle]
pub unsafe extern "C" fn jk_poly_equal(a: *const JkPoly, b: *const JkPoly) -> i32 {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => i32::from(a.0 == b.0),
        _ => -1,
    }
}

/// # Safety
/// `p` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn jk_poly_to_string(p: *const JkPoly) -> *mut c_char {
    match p.as_ref() {
        Some(p) => into_c_string(p.0.to_string()),
        None => {
            null();
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `p` must come from this library or be NULL, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn jk_poly_free(p: *mut JkPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Parses a partition such as `"3,1,1"`, writing its parts to `buf` (capacity
/// `cap`) and the length to `len`.
///
/// # Safety
/// `s` must be a NUL-terminated string; `buf` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn jk_parse_partition(s: *const c_char, buf: *mut usize, cap: usize, len: *mut usize) -> JkStatus {
    guard(|| {
        if s.is_null() || len.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(s).to_str().map_err(|_| {
            set_error("partition string is not UTF-8".into());
            JkStatus::InvalidInput
        })?;
        let lam: Partition = lift(text.parse())?;
        *len = lam.len();
        if lam.len() > cap || (buf.is_null() && !lam.is_empty()) {
            set_error(format!("buffer holds {cap} parts, need {}", lam.len()));
            return Err(JkStatus::InvalidInput);
        }
        if !lam.is_empty() {
            std::slice::from_raw_parts_mut(buf, lam.len()).copy_from_slice(lam.parts());
        }
        Ok(())
    })
}
