//! C ABI over the supertwist character calculus.
//!
//! Conventions:
//! - every constructor writes an opaque handle through an out-pointer and
//!   returns an [`StStatus`]; on error the handle is untouched;
//! - weights travel as comma-separated rational strings (`"1,1/2,-1"`),
//!   Weyl words as token strings (`"s1 t1"`), characters and reports as
//!   JSON in the library's canonical shape;
//! - strings returned by the library must be released with
//!   [`st_string_free`], handles with their matching `*_free`;
//! - [`st_last_error`] returns the message of the most recent failure on
//!   the calling thread (valid until the next failing call).
//!
//! Handles and strings must come from this library and may not be used
//! after their free call; that contract covers every `unsafe fn` here.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use supertwist::char_ring::FormalCharacter;
use supertwist::error::Error;
use supertwist::roots::{ParabolicData, RootSystem, Weight};
use supertwist::twist::{twist_report, twisted_gvm_char_one_dim};
use supertwist::verma::{gvm_char_one_dim, verma_char};
use supertwist::weyl::WeylElement;

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StStatus {
    Ok = 0,
    NullArgument = 1,
    Utf8 = 2,
    Parse = 3,
    Precondition = 4,
    Incompatible = 5,
    Window = 6,
    VerificationFailed = 7,
}

/// Root datum handle.
pub struct StRootSystem(RootSystem);
/// Standard parabolic handle.
pub struct StParabolic(ParabolicData);
/// Weyl group element handle.
pub struct StWeyl(WeylElement);
/// Formal character handle.
pub struct StCharacter(FormalCharacter);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> StStatus {
    match err {
        Error::Parse(_) | Error::BadWordToken { .. } => StStatus::Parse,
        Error::IncompatibleTwist { .. } => StStatus::Incompatible,
        Error::WindowExceeded { .. } => StStatus::Window,
        _ => StStatus::Precondition,
    }
}

fn fail(err: Error) -> StStatus {
    set_error(&err.to_string());
    status_of(&err)
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, StStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(StStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        StStatus::Utf8
    })
}

unsafe fn deref<'a, T>(ptr: *const T) -> Result<&'a T, StStatus> {
    ptr.as_ref().ok_or_else(|| {
        set_error("null handle argument");
        StStatus::NullArgument
    })
}

fn write_handle<T>(out: *mut *mut T, value: T) -> StStatus {
    if out.is_null() {
        set_error("null out-pointer");
        return StStatus::NullArgument;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    StStatus::Ok
}

fn write_string(out: *mut *mut c_char, text: String) -> StStatus {
    if out.is_null() {
        set_error("null out-pointer");
        return StStatus::NullArgument;
    }
    match CString::new(text) {
        Ok(cstring) => {
            unsafe { *out = cstring.into_raw() };
            StStatus::Ok
        }
        Err(_) => {
            set_error("payload contained an interior NUL byte");
            StStatus::Utf8
        }
    }
}

/// Message of the most recent failure on this thread. The pointer stays
/// valid until the next failing call; do not free it.
#[no_mangle]
pub extern "C" fn st_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Release a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn st_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(CString::from_raw(ptr));
    }
}

/// Build the root datum of gl(m|n); rejects m = n = 0.
#[no_mangle]
pub unsafe extern "C" fn st_root_system_new(
    m: usize,
    n: usize,
    out: *mut *mut StRootSystem,
) -> StStatus {
    match RootSystem::gl(m, n) {
        Ok(rs) => write_handle(out, StRootSystem(rs)),
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn st_root_system_free(ptr: *mut StRootSystem) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// Root datum as JSON.
#[no_mangle]
pub unsafe extern "C" fn st_root_system_json(
    rs: *const StRootSystem,
    out: *mut *mut c_char,
) -> StStatus {
    let rs = match deref(rs) {
        Ok(v) => v,
        Err(s) => return s,
    };
    write_string(out, rs.0.to_json().to_string())
}

/// Standard parabolic from 0-based simple-root indices.
#[no_mangle]
pub unsafe extern "C" fn st_parabolic_new(
    rs: *const StRootSystem,
    indices: *const usize,
    len: usize,
    out: *mut *mut StParabolic,
) -> StStatus {
    let rs = match deref(rs) {
        Ok(v) => v,
        Err(s) => return s,
    };
    if indices.is_null() && len > 0 {
        set_error("null index array");
        return StStatus::NullArgument;
    }
    let subset = if len == 0 {
        Default::default()
    } else {
        std::slice::from_raw_parts(indices, len)
            .iter()
            .copied()
            .collect()
    };
    match rs.0.parabolic(&subset) {
        Ok(p) => write_handle(out, StParabolic(p)),
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn st_parabolic_free(ptr: *mut StParabolic) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// Weyl element from a reflection word like `"s1 t1"`; `""` is the identity.
#[no_mangle]
pub unsafe extern "C" fn st_weyl_from_word(
    rs: *const StRootSystem,
    word: *const c_char,
    out: *mut *mut StWeyl,
) -> StStatus {
    let rs = match deref(rs) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let word = match read_str(word) {
        Ok(v) => v,
        Err(s) => return s,
    };
    match WeylElement::parse_word(&rs.0, word) {
        Ok(w) => write_handle(out, StWeyl(w)),
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn st_weyl_free(ptr: *mut StWeyl) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

fn parse_weight_checked(rs: &RootSystem, text: &str) -> Result<Weight, Error> {
    let w = Weight::parse(text)?;
    if w.len() != rs.dim() {
        return Err(Error::DimensionMismatch {
            expected: rs.dim(),
            got: w.len(),
        });
    }
    Ok(w)
}

/// Verma character e^λ p_∅ truncated at `trunc`.
#[no_mangle]
pub unsafe extern "C" fn st_verma_char(
    rs: *const StRootSystem,
    weight: *const c_char,
    trunc: u32,
    out: *mut *mut StCharacter,
) -> StStatus {
    let rs = match deref(rs) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let text = match read_str(weight) {
        Ok(v) => v,
        Err(s) => return s,
    };
    match parse_weight_checked(&rs.0, text) {
        Ok(lam) => write_handle(out, StCharacter(verma_char(&rs.0, &lam, trunc))),
        Err(e) => fail(e),
    }
}

/// Generalized Verma character e^λ p_X for a one-dimensional weight.
#[no_mangle]
pub unsafe extern "C" fn st_gvm_char(
    rs: *const StRootSystem,
    parabolic: *const StParabolic,
    weight: *const c_char,
    trunc: u32,
    out: *mut *mut StCharacter,
) -> StStatus {
    let rs = match deref(rs) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let p = match deref(parabolic) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let text = match read_str(weight) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let run = || -> Result<FormalCharacter, Error> {
        let lam = parse_weight_checked(&rs.0, text)?;
        gvm_char_one_dim(&rs.0, &p.0, &lam, trunc)
    };
    match run() {
        Ok(chi) => write_handle(out, StCharacter(chi)),
        Err(e) => fail(e),
    }
}

/// Twisted character e^{w·λ} p_{wX}; requires N(w) ∩ X = ∅.
#[no_mangle]
pub unsafe extern "C" fn st_twisted_char(
    rs: *const StRootSystem,
    parabolic: *const StParabolic,
    w: *const StWeyl,
    weight: *const c_char,
    trunc: u32,
    out: *mut *mut StCharacter,
) -> StStatus {
    let rs = match deref(rs) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let p = match deref(parabolic) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let w = match deref(w) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let text = match read_str(weight) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let run = || -> Result<FormalCharacter, Error> {
        let lam = parse_weight_checked(&rs.0, text)?;
        twisted_gvm_char_one_dim(&rs.0, &p.0, &w.0, &lam, trunc)
    };
    match run() {
        Ok(chi) => write_handle(out, StCharacter(chi)),
        Err(e) => fail(e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn st_char_free(ptr: *mut StCharacter) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// Coefficient at a weight. Distinguishes a true zero from a query beyond
/// the truncation window, which fails with `Window`.
#[no_mangle]
pub unsafe extern "C" fn st_char_coefficient(
    chi: *const StCharacter,
    weight: *const c_char,
    out: *mut i64,
) -> StStatus {
    let chi = match deref(chi) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let text = match read_str(weight) {
        Ok(v) => v,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null out-pointer");
        return StStatus::NullArgument;
    }
    let run = || -> Result<i64, Error> {
        let mu = Weight::parse(text)?;
        if mu.len() != chi.0.anchor().len() {
            return Err(Error::DimensionMismatch {
                expected: chi.0.anchor().len(),
                got: mu.len(),
            });
        }
        chi.0.coefficient(&mu)
    };
    match run() {
        Ok(c) => {
            *out = c;
            StStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Character as canonical JSON.
#[no_mangle]
pub unsafe extern "C" fn st_char_json(chi: *const StCharacter, out: *mut *mut c_char) -> StStatus {
    let chi = match deref(chi) {
        Ok(v) => v,
        Err(s) => return s,
    };
    write_string(out, chi.0.to_json().to_string())
}

/// Character as the canonical `c*e^[...]` text listing.
#[no_mangle]
pub unsafe extern "C" fn st_char_text(chi: *const StCharacter, out: *mut *mut c_char) -> StStatus {
    let chi = match deref(chi) {
        Ok(v) => v,
        Err(s) => return s,
    };
    write_string(out, chi.0.to_text())
}

/// Compare the closed twisted character with the Verma-expansion route and
/// return the report as JSON. `Ok` means the routes agree; a disagreement
/// returns `VerificationFailed` and still writes the report.
#[no_mangle]
pub unsafe extern "C" fn st_twist_report_json(
    rs: *const StRootSystem,
    parabolic: *const StParabolic,
    w: *const StWeyl,
    weight: *const c_char,
    trunc: u32,
    out: *mut *mut c_char,
) -> StStatus {
    let rs = match deref(rs) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let p = match deref(parabolic) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let w = match deref(w) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let text = match read_str(weight) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let run = || -> Result<supertwist::twist::TwistReport, Error> {
        let lam = parse_weight_checked(&rs.0, text)?;
        twist_report(&rs.0, &p.0, &w.0, &lam, trunc)
    };
    match run() {
        Ok(report) => {
            let agree = report.agree();
            let status = write_string(out, report.to_json().to_string());
            if status != StStatus::Ok {
                return status;
            }
            if agree {
                StStatus::Ok
            } else {
                set_error("closed form and expansion route disagree");
                StStatus::VerificationFailed
            }
        }
        Err(e) => fail(e),
    }
}
