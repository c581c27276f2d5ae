//! C ABI over `boolean-kerov`.
//!
//! Every function returns a [`BkStatus`]; on failure a message is available
//! from [`bk_last_error_message`] on the same thread. Objects are opaque
//! handles released with their `*_free` function; strings returned through
//! `char **` outputs are released with [`bk_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use boolean_kerov::basischange::{boolean_in_characters, boolean_kerov_polynomial, display_order};
use boolean_kerov::combinatorics::Partition;
use boolean_kerov::exactmath::GradedPolynomial;
use boolean_kerov::heiscalc::reduce_alpha;
use boolean_kerov::observables::{normalized_character, observable, ObservableKind};
use boolean_kerov::Error;

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    InvariantViolation = 4,
    Internal = 5,
    Panic = 6,
}

/// Observable family for [`bk_observable_json`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BkObservableKind {
    Moment = 0,
    Boolean = 1,
    TwistedBoolean = 2,
    Free = 3,
}

/// Opaque integer partition.
pub struct BkPartition {
    inner: Partition,
}

/// Opaque polynomial with rational coefficients.
pub struct BkPolynomial {
    inner: GradedPolynomial,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> BkStatus {
    match e {
        Error::InvalidInput(_) => BkStatus::InvalidInput,
        Error::Parse { .. } => BkStatus::Parse,
        Error::InvariantViolation(_) => BkStatus::InvariantViolation,
        _ => BkStatus::Internal,
    }
}

fn fail(status: BkStatus, msg: impl Into<String>) -> BkStatus {
    set_error(msg);
    status
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), BkStatus>) -> BkStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BkStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(BkStatus::Panic, "internal panic"),
    }
}

fn lift<T>(r: boolean_kerov::Result<T>) -> Result<T, BkStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, BkStatus> {
    p.as_ref()
        .ok_or_else(|| fail(BkStatus::NullPointer, format!("{what} is null")))
}

fn check_out<T>(out: *mut T) -> Result<(), BkStatus> {
    if out.is_null() {
        Err(fail(BkStatus::NullPointer, "output pointer is null"))
    } else {
        Ok(())
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), BkStatus> {
    check_out(out)?;
    let c = CString::new(s).map_err(|_| fail(BkStatus::Internal, "string contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or NULL. Valid until
/// the next call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn bk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn bk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses "(a,b,c)", "a,b,c" or "()".
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_partition_parse(
    text: *const c_char,
    out: *mut *mut BkPartition,
) -> BkStatus {
    guard(|| {
        check_out(out)?;
        if text.is_null() {
            return Err(fail(BkStatus::NullPointer, "text is null"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(BkStatus::Parse, "text is not UTF-8"))?;
        let p: Partition = lift(s.parse())?;
        *out = Box::into_raw(Box::new(BkPartition { inner: p }));
        Ok(())
    })
}

/// Builds a partition from `len` weakly decreasing positive parts.
///
/// # Safety
/// `parts` must point to `len` values (or be NULL with `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn bk_partition_from_parts(
    parts: *const u32,
    len: usize,
    out: *mut *mut BkPartition,
) -> BkStatus {
    guard(|| {
        check_out(out)?;
        let v = if len == 0 {
            Vec::new()
        } else if parts.is_null() {
            return Err(fail(BkStatus::NullPointer, "parts is null"));
        } else {
            std::slice::from_raw_parts(parts, len).to_vec()
        };
        let p = lift(Partition::from_parts(v))?;
        *out = Box::into_raw(Box::new(BkPartition { inner: p }));
        Ok(())
    })
}

/// # Safety
/// `p` must be a live partition handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn bk_partition_free(p: *mut BkPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Writes `|λ|`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_partition_size(p: *const BkPartition, out: *mut u32) -> BkStatus {
    guard(|| {
        check_out(out)?;
        *out = deref(p, "partition")?.inner.size();
        Ok(())
    })
}

/// Writes the number of parts.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_partition_length(p: *const BkPartition, out: *mut usize) -> BkStatus {
    guard(|| {
        check_out(out)?;
        *out = deref(p, "partition")?.inner.len();
        Ok(())
    })
}

/// Writes "(a,b,c)"; free with `bk_string_free`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_partition_to_string(
    p: *const BkPartition,
    out: *mut *mut c_char,
) -> BkStatus {
    guard(|| {
        let s = deref(p, "partition")?.inner.to_string();
        write_string(out, s)
    })
}

/// `P_π` in the variables `x2, x3, ...`.
///
/// # Safety
/// `pi` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_boolean_kerov_polynomial(
    pi: *const BkPartition,
    out: *mut *mut BkPolynomial,
) -> BkStatus {
    guard(|| {
        check_out(out)?;
        let pi = &deref(pi, "partition")?.inner;
        let p = lift(boolean_kerov_polynomial(pi))?;
        *out = Box::into_raw(Box::new(BkPolynomial { inner: p }));
        Ok(())
    })
}

/// `P_(π,i)` in the variables `y0, y1, ...`, by diagram rewriting.
///
/// # Safety
/// `pi` must be a live handle, `dots` must point to `len` values (or be
/// NULL with `len == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_reduce_alpha(
    pi: *const BkPartition,
    dots: *const u32,
    len: usize,
    out: *mut *mut BkPolynomial,
) -> BkStatus {
    guard(|| {
        check_out(out)?;
        let pi = &deref(pi, "partition")?.inner;
        let d = if len == 0 {
            Vec::new()
        } else if dots.is_null() {
            return Err(fail(BkStatus::NullPointer, "dots is null"));
        } else {
            std::slice::from_raw_parts(dots, len).to_vec()
        };
        let p = lift(reduce_alpha(pi, &d))?;
        *out = Box::into_raw(Box::new(BkPolynomial { inner: p }));
        Ok(())
    })
}

/// # Safety
/// `p` must be a live polynomial handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn bk_polynomial_free(p: *mut BkPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of nonzero terms.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_polynomial_num_terms(
    p: *const BkPolynomial,
    out: *mut usize,
) -> BkStatus {
    guard(|| {
        check_out(out)?;
        *out = deref(p, "polynomial")?.inner.len();
        Ok(())
    })
}

/// Weighted degree; `BK_STATUS_INVALID_INPUT` for the zero polynomial.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_polynomial_weighted_degree(
    p: *const BkPolynomial,
    out: *mut i64,
) -> BkStatus {
    guard(|| {
        check_out(out)?;
        match deref(p, "polynomial")?.inner.weighted_degree() {
            Some(d) => {
                *out = d;
                Ok(())
            }
            None => Err(fail(
                BkStatus::InvalidInput,
                "zero polynomial has no degree",
            )),
        }
    })
}

/// Canonical text such as "x4 + x2^2 + x2".
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_polynomial_to_string(
    p: *const BkPolynomial,
    out: *mut *mut c_char,
) -> BkStatus {
    guard(|| {
        let s = deref(p, "polynomial")?.inner.to_string();
        write_string(out, s)
    })
}

/// Ordered term list `[{"coeff": .., "vars": [..]}]`; non-integer
/// coefficients are strings "p/q".
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_polynomial_to_json(
    p: *const BkPolynomial,
    out: *mut *mut c_char,
) -> BkStatus {
    guard(|| {
        let p = &deref(p, "polynomial")?.inner;
        let terms: Vec<serde_json::Value> = p
            .ordered_terms()
            .into_iter()
            .map(|(m, c)| {
                let coeff = match (c.is_integer(), i64::try_from(c.numer())) {
                    (true, Ok(v)) => serde_json::json!(v),
                    _ => serde_json::json!(c.to_string()),
                };
                serde_json::json!({ "coeff": coeff, "vars": m.indices() })
            })
            .collect();
        write_string(out, serde_json::Value::Array(terms).to_string())
    })
}

/// `[v_1, ..., v_K]` as a JSON array of exact rational strings.
///
/// # Safety
/// `lambda` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_observable_json(
    lambda: *const BkPartition,
    kind: BkObservableKind,
    max_k: usize,
    out: *mut *mut c_char,
) -> BkStatus {
    guard(|| {
        let lambda = &deref(lambda, "partition")?.inner;
        if max_k == 0 {
            return Err(fail(BkStatus::InvalidInput, "max_k must be at least 1"));
        }
        let kind = match kind {
            BkObservableKind::Moment => ObservableKind::Moment,
            BkObservableKind::Boolean => ObservableKind::Boolean,
            BkObservableKind::TwistedBoolean => ObservableKind::TwistedBoolean,
            BkObservableKind::Free => ObservableKind::Free,
        };
        let v = observable(lambda, kind, max_k);
        let items: Vec<String> = v.values.iter().map(|q| q.to_string()).collect();
        write_string(out, serde_json::json!(items).to_string())
    })
}

/// `Σ_π(λ)` as a decimal string.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_normalized_character(
    pi: *const BkPartition,
    lambda: *const BkPartition,
    out: *mut *mut c_char,
) -> BkStatus {
    guard(|| {
        let pi = &deref(pi, "pi")?.inner;
        let lambda = &deref(lambda, "lambda")?.inner;
        write_string(out, normalized_character(pi, lambda).to_string())
    })
}

/// Coefficients of `B_k` in normalized characters as
/// `[{"pi": [..], "coeff": ..}]`, larger `|π|` first.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_boolean_in_characters_json(k: u32, out: *mut *mut c_char) -> BkStatus {
    guard(|| {
        check_out(out)?;
        if k < 2 {
            return Err(fail(BkStatus::InvalidInput, "k must be at least 2"));
        }
        let map = lift(boolean_in_characters(k))?;
        let mut terms: Vec<_> = map.into_iter().collect();
        terms.sort_by(|a, b| display_order(&a.0, &b.0));
        let items: Vec<serde_json::Value> = terms
            .iter()
            .map(|(p, c)| serde_json::json!({ "pi": p.parts(), "coeff": c.to_string() }))
            .collect();
        write_string(out, serde_json::Value::Array(items).to_string())
    })
}
