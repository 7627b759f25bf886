//! C ABI over the `fplab` engine.
//!
//! Objects cross the boundary as opaque handles created by `*_new` /
//! `*_parse` functions and released with the matching `*_free`. Every
//! fallible call returns an [`FplabStatus`]; on failure a message for the
//! calling thread is available from [`fplab_last_error`]. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`fplab_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fplab::field::Prime;
use fplab::frobenius::{
    bracket_power, fedder_is_fpure, frobenius_preimage, frobenius_root_ideal, hsl_hypersurface,
    in_frobenius_closure, ClosureMembership,
};
use fplab::groebner::{colon, ideal_product, ideal_sum, intersect, set_pair_budget, Ideal};
use fplab::hilbert::{dimension, embedding_dimension, length_quotient, multiplicity, Length};
use fplab::poly::{parse_poly, parse_poly_list, MonomialOrder, Polynomial, Ring, RingCtx};
use fplab::verify::{run_suite, SuiteName};
use fplab::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FplabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    NotPrime = 3,
    Syntax = 4,
    ContextMismatch = 5,
    NotHomogeneous = 6,
    UnitIdeal = 7,
    ZeroInput = 8,
    BudgetExceeded = 9,
    Inconclusive = 10,
    InvalidArgument = 11,
    Internal = 12,
    Panic = 13,
}

/// A polynomial ring over `F_p`.
pub struct FplabRing {
    ring: Ring,
}

pub struct FplabPoly {
    poly: Polynomial,
}

pub struct FplabIdeal {
    ideal: Ideal,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(FplabStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NotPrime(_) => FplabStatus::NotPrime,
            Error::Syntax { .. } | Error::UnknownVariable(_) | Error::Session { .. } => {
                FplabStatus::Syntax
            }
            Error::ContextMismatch | Error::CharacteristicMismatch(..) => {
                FplabStatus::ContextMismatch
            }
            Error::NotHomogeneous => FplabStatus::NotHomogeneous,
            Error::UnitIdeal => FplabStatus::UnitIdeal,
            Error::ZeroPolynomial | Error::ZeroIdeal | Error::DivisionByZero(_) => {
                FplabStatus::ZeroInput
            }
            Error::PairBudgetExceeded(_) => FplabStatus::BudgetExceeded,
            Error::Inconclusive(_) => FplabStatus::Inconclusive,
            Error::InvalidArgument(_) | Error::InvalidRing(_) | Error::ExponentOverflow => {
                FplabStatus::InvalidArgument
            }
            Error::DivisionFailure | Error::Io(_) => FplabStatus::Internal,
        };
        Failure(code, e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn guard(body: impl FnOnce() -> FfiResult<()>) -> FplabStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            FplabStatus::Ok
        }
        Ok(Err(Failure(code, msg))) => {
            set_last_error(&msg);
            code
        }
        Err(_) => {
            set_last_error("internal panic");
            FplabStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(FplabStatus::NullPointer, "null pointer argument".into())
}

unsafe fn str_arg<'a>(s: *const c_char) -> FfiResult<&'a str> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        Failure(
            FplabStatus::InvalidUtf8,
            "argument is not valid UTF-8".into(),
        )
    })
}

unsafe fn obj<'a, T>(p: *const T) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, v: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    let c = CString::new(s).map_err(|_| Failure(FplabStatus::Internal, "interior nul".into()))?;
    put(out, c.into_raw())
}

unsafe fn put_ideal(out: *mut *mut FplabIdeal, ideal: Ideal) -> FfiResult<()> {
    put(out, Box::into_raw(Box::new(FplabIdeal { ideal })))
}

/// Message describing the last failed call on this thread, or "" after a
/// successful one. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn fplab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn fplab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fplab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Sets the S-pair budget for every later Groebner basis computation.
#[no_mangle]
pub extern "C" fn fplab_set_pair_budget(budget: u64) {
    set_pair_budget(budget);
}

/// Creates `F_p[vars]`. `vars` is comma-separated; `order` is "grevlex",
/// "lex", or null for grevlex.
///
/// # Safety
/// String arguments must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_ring_new(
    p: u64,
    vars: *const c_char,
    order: *const c_char,
    out: *mut *mut FplabRing,
) -> FplabStatus {
    guard(|| {
        let prime = Prime::new(p)?;
        let names: Vec<&str> = str_arg(vars)?.split(',').map(str::trim).collect();
        let order = if order.is_null() {
            MonomialOrder::Grevlex
        } else {
            str_arg(order)?.parse()?
        };
        let ring = RingCtx::new(prime, &names, order)?;
        put(out, Box::into_raw(Box::new(FplabRing { ring })))
    })
}

/// # Safety
/// `ring` must come from [`fplab_ring_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fplab_ring_free(ring: *mut FplabRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// # Safety
/// Handles must be live; `text` nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_poly_parse(
    ring: *const FplabRing,
    text: *const c_char,
    out: *mut *mut FplabPoly,
) -> FplabStatus {
    guard(|| {
        let poly = parse_poly(str_arg(text)?, &obj(ring)?.ring)?;
        put(out, Box::into_raw(Box::new(FplabPoly { poly })))
    })
}

/// # Safety
/// `poly` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_poly_to_string(
    poly: *const FplabPoly,
    out: *mut *mut c_char,
) -> FplabStatus {
    guard(|| put_string(out, obj(poly)?.poly.to_string()))
}

/// # Safety
/// `poly` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fplab_poly_free(poly: *mut FplabPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Parses a comma-separated generator list.
///
/// # Safety
/// Handles must be live; `text` nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_ideal_parse(
    ring: *const FplabRing,
    text: *const c_char,
    out: *mut *mut FplabIdeal,
) -> FplabStatus {
    guard(|| {
        let ring = &obj(ring)?.ring;
        let gens = parse_poly_list(str_arg(text)?, ring)?;
        put_ideal(out, Ideal::new(ring, gens)?)
    })
}

/// # Safety
/// `ideal` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fplab_ideal_free(ideal: *mut FplabIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Reduced grevlex basis as "g1, g2, ...", or "0" for the zero ideal.
///
/// # Safety
/// `ideal` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_ideal_groebner_basis(
    ideal: *const FplabIdeal,
    out: *mut *mut c_char,
) -> FplabStatus {
    guard(|| {
        let gb = obj(ideal)?.ideal.grevlex_basis()?;
        let parts: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        let text = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(", ")
        };
        put_string(out, text)
    })
}

/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_ideal_contains(
    ideal: *const FplabIdeal,
    poly: *const FplabPoly,
    out: *mut bool,
) -> FplabStatus {
    guard(|| put(out, obj(ideal)?.ideal.contains(&obj(poly)?.poly)?))
}

/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_ideal_equal(
    a: *const FplabIdeal,
    b: *const FplabIdeal,
    out: *mut bool,
) -> FplabStatus {
    guard(|| put(out, obj(a)?.ideal.ideal_eq(&obj(b)?.ideal)?))
}

/// Binary ideal operations selectable from C.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FplabIdealOp {
    Sum = 0,
    Product = 1,
    Intersect = 2,
    Colon = 3,
}

/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_ideal_binary(
    op: FplabIdealOp,
    a: *const FplabIdeal,
    b: *const FplabIdeal,
    out: *mut *mut FplabIdeal,
) -> FplabStatus {
    guard(|| {
        let (a, b) = (&obj(a)?.ideal, &obj(b)?.ideal);
        let r = match op {
            FplabIdealOp::Sum => ideal_sum(a, b)?,
            FplabIdealOp::Product => ideal_product(a, b)?,
            FplabIdealOp::Intersect => intersect(a, b)?,
            FplabIdealOp::Colon => colon(a, b)?,
        };
        put_ideal(out, r)
    })
}

/// Krull dimension of `S/I` (homogeneous `I`).
///
/// # Safety
/// `ideal` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_dimension(ideal: *const FplabIdeal, out: *mut u64) -> FplabStatus {
    guard(|| put(out, dimension(&obj(ideal)?.ideal)? as u64))
}

/// Multiplicity of `S/I` (homogeneous `I`).
///
/// # Safety
/// `ideal` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_multiplicity(
    ideal: *const FplabIdeal,
    out: *mut u64,
) -> FplabStatus {
    guard(|| put(out, multiplicity(&obj(ideal)?.ideal)?))
}

/// # Safety
/// `ideal` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_embedding_dimension(
    ideal: *const FplabIdeal,
    out: *mut u64,
) -> FplabStatus {
    guard(|| put(out, embedding_dimension(&obj(ideal)?.ideal)? as u64))
}

/// Length of `S/I`; `*finite` is false (and `*out` 0) when it is infinite.
///
/// # Safety
/// `ideal` must be live; `out` and `finite` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_length(
    ideal: *const FplabIdeal,
    out: *mut u64,
    finite: *mut bool,
) -> FplabStatus {
    guard(|| {
        let len = length_quotient(&obj(ideal)?.ideal)?;
        put(finite, len != Length::Infinite)?;
        put(out, len.finite().unwrap_or(0))
    })
}

/// Frobenius constructions selectable from C.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FplabFrobeniusOp {
    /// `I^[p^e]`
    BracketPower = 0,
    /// `I_e(I)`
    Root = 1,
    /// `{x : x^(p^e) ∈ I}`
    Preimage = 2,
}

/// # Safety
/// `ideal` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_frobenius(
    op: FplabFrobeniusOp,
    ideal: *const FplabIdeal,
    e: u32,
    out: *mut *mut FplabIdeal,
) -> FplabStatus {
    guard(|| {
        let i = &obj(ideal)?.ideal;
        let r = match op {
            FplabFrobeniusOp::BracketPower => bracket_power(i, e)?,
            FplabFrobeniusOp::Root => frobenius_root_ideal(i, e)?,
            FplabFrobeniusOp::Preimage => frobenius_preimage(i, e)?,
        };
        put_ideal(out, r)
    })
}

/// Fedder's criterion for `S/I` at the homogeneous maximal ideal.
///
/// # Safety
/// `ideal` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_fedder_is_fpure(
    ideal: *const FplabIdeal,
    out: *mut bool,
) -> FplabStatus {
    guard(|| put(out, fedder_is_fpure(&obj(ideal)?.ideal)?))
}

/// HSL number of the hypersurface `f`; `Inconclusive` when the chain has
/// not stabilized by `e_max`.
///
/// # Safety
/// `f` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_hsl_number(
    f: *const FplabPoly,
    e_max: u32,
    out: *mut u32,
) -> FplabStatus {
    guard(|| {
        let chain = hsl_hypersurface(&obj(f)?.poly, e_max)?;
        let eta = chain.stabilized_at.ok_or_else(|| {
            Failure(
                FplabStatus::Inconclusive,
                format!("HSL chain not stable within e_max = {e_max}"),
            )
        })?;
        put(out, eta)
    })
}

/// Searches `e = 1..e_max` for `x^(p^e) ∈ J^[p^e] + I`. `*witness_e` is the
/// smallest such `e`, or 0 when none was found.
///
/// # Safety
/// Handles must be live; `witness_e` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_in_frobenius_closure(
    x: *const FplabPoly,
    j: *const FplabIdeal,
    ambient: *const FplabIdeal,
    e_max: u32,
    witness_e: *mut u32,
) -> FplabStatus {
    guard(|| {
        let m = in_frobenius_closure(&obj(x)?.poly, &obj(j)?.ideal, &obj(ambient)?.ideal, e_max)?;
        let e = match m {
            ClosureMembership::Member(w) => w.e,
            ClosureMembership::NonMemberUpTo { .. } => 0,
        };
        put(witness_e, e)
    })
}

/// Runs a built-in suite ("example1", "example2", "bounds", "remark33" or
/// "remark33(n,p)") and writes its JSON report. `*all_passed` tells whether
/// every check passed.
///
/// # Safety
/// `name` nul-terminated; `json` and `all_passed` writable.
#[no_mangle]
pub unsafe extern "C" fn fplab_run_suite(
    name: *const c_char,
    e_max: u32,
    s_max: u32,
    json: *mut *mut c_char,
    all_passed: *mut bool,
) -> FplabStatus {
    guard(|| {
        let suite: SuiteName = str_arg(name)?.parse()?;
        let report = run_suite(suite, e_max, s_max);
        let text = serde_json::to_string(&report)
            .map_err(|e| Failure(FplabStatus::Internal, e.to_string()))?;
        put(all_passed, report.verdict() == fplab::verify::Verdict::Pass)?;
        put_string(json, text)
    })
}
