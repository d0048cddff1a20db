//! C ABI for `arithnull`.
//!
//! Polynomials and certificates cross the boundary as opaque handles that
//! the caller frees with the matching `_free` function. Every fallible call
//! returns an [`ArithnullStatus`]; on failure the message is kept per thread
//! and read with [`arithnull_last_error`]. Strings returned by the library
//! are freed with [`arithnull_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use arithnull::geometry::{bound, normalized_volume, support, BoundInputs};
use arithnull::heights::{global_height, mahler_auto};
use arithnull::nullsatz::{certificate_search, certificate_verify, BezoutCertificate, SearchStrategy};
use arithnull::poly::{parse_with_nvars, MultiPoly};
use arithnull::quotient::{divide_trace_formula, pseudo_jacobian, QuotientAlgebra};
use arithnull::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithnullStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed polynomial, JSON or numeric input.
    Parse = 3,
    /// Inputs of incompatible sizes or variable counts.
    Arity = 4,
    /// No certificate exists up to the requested degree.
    Infeasible = 5,
    /// An identity that should hold exactly does not.
    VerificationFailed = 6,
    /// Any other library error; see [`arithnull_last_error`].
    Failed = 7,
    /// The library panicked; this is a bug.
    Panic = 8,
}

/// Opaque polynomial handle.
pub struct ArithnullPoly(MultiPoly);

/// Opaque Bezout certificate handle.
pub struct ArithnullCertificate(BezoutCertificate);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> ArithnullStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => ArithnullStatus::Parse,
        Error::VarCountMismatch { .. } | Error::LengthMismatch { .. } | Error::NonSquareSystem { .. } => {
            ArithnullStatus::Arity
        }
        Error::Infeasible { .. } => ArithnullStatus::Infeasible,
        Error::IdentityFailed(_) | Error::DivisibilityFailure => ArithnullStatus::VerificationFailed,
        _ => ArithnullStatus::Failed,
    }
}

struct Fail(ArithnullStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

type Outcome = Result<(), Fail>;

/// Runs `body`, recording its error message and turning panics into a status.
fn guard(body: impl FnOnce() -> Outcome) -> ArithnullStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            ArithnullStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ArithnullStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(ArithnullStatus::NullPointer, format!("`{what}` is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(ArithnullStatus::InvalidUtf8, format!("`{what}` is not UTF-8")))
}

unsafe fn poly<'a>(p: *const ArithnullPoly, what: &str) -> Result<&'a MultiPoly, Fail> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| null(what))
}

unsafe fn polys(p: *const *const ArithnullPoly, count: usize) -> Result<Vec<MultiPoly>, Fail> {
    if count == 0 {
        return Err(Fail(ArithnullStatus::Arity, "no polynomials given".into()));
    }
    if p.is_null() {
        return Err(null("polys"));
    }
    std::slice::from_raw_parts(p, count).iter().map(|&h| poly(h, "polys[i]").cloned()).collect()
}

fn out_string(s: String, out: *mut *mut c_char) -> Outcome {
    let c = CString::new(s).map_err(|_| Fail(ArithnullStatus::Failed, "output contains a nul byte".into()))?;
    // SAFETY: the caller checked `out` for null before calling.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn arithnull_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn arithnull_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `text` as a polynomial in `nvars` variables `x1..x{nvars}`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn arithnull_poly_parse(
    text: *const c_char,
    nvars: usize,
    out: *mut *mut ArithnullPoly,
) -> ArithnullStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let f = parse_with_nvars(self::text(text, "text")?, nvars)?;
        *out = Box::into_raw(Box::new(ArithnullPoly(f)));
        Ok(())
    })
}

/// Frees a polynomial. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn arithnull_poly_free(p: *mut ArithnullPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Writes the polynomial's text form to `out`; free it with
/// [`arithnull_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn arithnull_poly_to_string(p: *const ArithnullPoly, out: *mut *mut c_char) -> ArithnullStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        out_string(poly(p, "p")?.to_string(), out)
    })
}

/// Total degree, or −1 for the zero polynomial and for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn arithnull_poly_degree(p: *const ArithnullPoly) -> i64 {
    p.as_ref().and_then(|h| h.0.degree()).map_or(-1, i64::from)
}

/// Global height `Σ_v max_i h_v(f_i)` of `count` polynomials.
///
/// # Safety
/// `polys` must point to `count` live handles and `out` be valid.
#[no_mangle]
pub unsafe extern "C" fn arithnull_global_height(
    polys: *const *const ArithnullPoly,
    count: usize,
    out: *mut f64,
) -> ArithnullStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = global_height(&self::polys(polys, count)?)?.global;
        Ok(())
    })
}

/// Mahler measure: exact for univariate input, otherwise a torus Monte Carlo
/// estimate with `samples` draws from `seed`.
///
/// # Safety
/// `p` must be a live handle; `value` and `stderr` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn arithnull_mahler(
    p: *const ArithnullPoly,
    samples: u64,
    seed: u64,
    value: *mut f64,
    stderr: *mut f64,
) -> ArithnullStatus {
    guard(|| {
        if value.is_null() || stderr.is_null() {
            return Err(null("value/stderr"));
        }
        let m = mahler_auto(poly(p, "p")?, samples, seed)?;
        *value = m.value;
        *stderr = m.stderr;
        Ok(())
    })
}

/// Normalized volume of the union of the supports, with `0, e_1, …, e_n`
/// adjoined when `frame` is nonzero.
///
/// # Safety
/// `polys` must point to `count` live handles and `out` be valid.
#[no_mangle]
pub unsafe extern "C" fn arithnull_normalized_volume(
    polys: *const *const ArithnullPoly,
    count: usize,
    frame: i32,
    out: *mut u64,
) -> ArithnullStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = normalized_volume(&support(&self::polys(polys, count)?, frame != 0)?)?;
        Ok(())
    })
}

/// Evaluates a bound statement. `inputs_json` is an object of strings, for
/// instance `{"n": "2", "d": "3", "h": "log(5)"}`; the report is written to
/// `out` as JSON.
///
/// # Safety
/// Both strings must be nul-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn arithnull_bound(
    statement: *const c_char,
    inputs_json: *const c_char,
    out: *mut *mut c_char,
) -> ArithnullStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let statement = text(statement, "statement")?;
        let v: serde_json::Value = serde_json::from_str(text(inputs_json, "inputs_json")?)
            .map_err(|e| Fail(ArithnullStatus::Parse, e.to_string()))?;
        let obj = v.as_object().ok_or_else(|| Fail(ArithnullStatus::Parse, "inputs must be a JSON object".into()))?;
        let mut inputs = BoundInputs::default();
        for (k, v) in obj {
            let s = match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            inputs.set(k, &s)?;
        }
        out_string(bound(statement, &inputs)?.to_json().to_string(), out)
    })
}

/// Searches a certificate of minimal degree up to `max_degree`, or up to
/// `4 n d^n` when `max_degree` is negative.
///
/// # Safety
/// `polys` must point to `count` live handles and `out` be valid.
#[no_mangle]
pub unsafe extern "C" fn arithnull_certificate_search(
    polys: *const *const ArithnullPoly,
    count: usize,
    max_degree: i32,
    out: *mut *mut ArithnullCertificate,
) -> ArithnullStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let cap = u32::try_from(max_degree).ok();
        let c = certificate_search(&self::polys(polys, count)?, cap, SearchStrategy::MinimalFirst)?;
        *out = Box::into_raw(Box::new(ArithnullCertificate(c)));
        Ok(())
    })
}

/// Checks `a = Σ g_i f_i` exactly. Returns `VerificationFailed` when the
/// identity does not hold; on success writes the certificate degree.
///
/// # Safety
/// `cert` must be a live handle, `polys` point to `count` live handles and
/// `degree` be null or valid.
#[no_mangle]
pub unsafe extern "C" fn arithnull_certificate_verify(
    cert: *const ArithnullCertificate,
    polys: *const *const ArithnullPoly,
    count: usize,
    degree: *mut u32,
) -> ArithnullStatus {
    guard(|| {
        let c = cert.as_ref().ok_or_else(|| null("cert"))?;
        let r = certificate_verify(&c.0, &self::polys(polys, count)?)?;
        if let Some(d) = degree.as_mut() {
            *d = r.degree;
        }
        Ok(())
    })
}

/// Writes the certificate as JSON (integers as decimal strings).
///
/// # Safety
/// `cert` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn arithnull_certificate_to_json(
    cert: *const ArithnullCertificate,
    out: *mut *mut c_char,
) -> ArithnullStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let c = cert.as_ref().ok_or_else(|| null("cert"))?;
        out_string(c.0.to_json().to_string(), out)
    })
}

/// Reads a certificate from its JSON form.
///
/// # Safety
/// `json` must be nul-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn arithnull_certificate_from_json(
    json: *const c_char,
    out: *mut *mut ArithnullCertificate,
) -> ArithnullStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let v: serde_json::Value =
            serde_json::from_str(text(json, "json")?).map_err(|e| Fail(ArithnullStatus::Parse, e.to_string()))?;
        *out = Box::into_raw(Box::new(ArithnullCertificate(BezoutCertificate::from_json(&v)?)));
        Ok(())
    })
}

/// The integer `a` of `a = Σ g_i f_i`, as a decimal string.
///
/// # Safety
/// `cert` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn arithnull_certificate_a(
    cert: *const ArithnullCertificate,
    out: *mut *mut c_char,
) -> ArithnullStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let c = cert.as_ref().ok_or_else(|| null("cert"))?;
        out_string(c.0.a.to_string(), out)
    })
}

/// Frees a certificate. Null is ignored.
///
/// # Safety
/// `cert` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn arithnull_certificate_free(cert: *mut ArithnullCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// Divides `g` by `f` modulo the zero-dimensional complete intersection
/// `ideal`, through the trace formula; writes the unreduced quotient.
///
/// # Safety
/// `ideal` must point to `count` live handles, `f`, `g` be live handles and
/// `out` valid.
#[no_mangle]
pub unsafe extern "C" fn arithnull_divide(
    ideal: *const *const ArithnullPoly,
    count: usize,
    f: *const ArithnullPoly,
    g: *const ArithnullPoly,
    out: *mut *mut ArithnullPoly,
) -> ArithnullStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let fs = polys(ideal, count)?;
        let b = QuotientAlgebra::new(&fs)?;
        let td = pseudo_jacobian(&fs)?;
        let r = divide_trace_formula(&b, &td, poly(f, "f")?, poly(g, "g")?)?;
        *out = Box::into_raw(Box::new(ArithnullPoly(r.q)));
        Ok(())
    })
}
