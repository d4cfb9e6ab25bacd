//! C interface to the operator engine.
//!
//! Operators cross the boundary as opaque `WolfesOp` handles owned by the
//! caller and released with [`wolfes_op_free`]. Every fallible call returns a
//! [`WolfesStatus`]; on failure [`wolfes_last_error`] describes the cause for
//! the calling thread. Strings returned by the library are released with
//! [`wolfes_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wolfes_core::diffop2::{json, latex, text, DiffOp};
use wolfes_core::exactcoeff::{parse_rational, Rational};
use wolfes_core::modelbank::resolve;
use wolfes_core::verifysuite::{run_group, Orientation};
use wolfes_core::Error;

/// Opaque operator handle.
pub struct WolfesOp(DiffOp);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WolfesStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownModel = 4,
    InvalidArgument = 5,
    /// A computation failed, e.g. a space was not invariant.
    Compute = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WolfesFormat {
    Text = 0,
    Json = 1,
    Latex = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: WolfesStatus, msg: impl Into<String>) -> WolfesStatus {
    set_error(msg);
    status
}

fn from_core(e: Error) -> WolfesStatus {
    let status = match e {
        Error::Parse { .. } | Error::BadRational(_) | Error::BadParamPoly(_) => WolfesStatus::Parse,
        Error::UnknownModel(_) | Error::BadGenerator(_) => WolfesStatus::UnknownModel,
        Error::InvalidArgument(_) => WolfesStatus::InvalidArgument,
        _ => WolfesStatus::Compute,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> WolfesStatus) -> WolfesStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(WolfesStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, WolfesStatus> {
    if p.is_null() {
        return Err(fail(WolfesStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(WolfesStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn opt_rational(p: *const c_char, what: &str) -> Result<Option<Rational>, WolfesStatus> {
    if p.is_null() {
        return Ok(None);
    }
    let s = str_arg(p, what)?;
    parse_rational(s).map(Some).map_err(from_core)
}

unsafe fn op_arg<'a>(p: *const WolfesOp, what: &str) -> Result<&'a DiffOp, WolfesStatus> {
    p.as_ref()
        .map(|o| &o.0)
        .ok_or_else(|| fail(WolfesStatus::NullPointer, format!("{what} is null")))
}

unsafe fn put(out: *mut *mut WolfesOp, d: DiffOp) -> WolfesStatus {
    if out.is_null() {
        return fail(WolfesStatus::NullPointer, "output pointer is null");
    }
    *out = Box::into_raw(Box::new(WolfesOp(d)));
    WolfesStatus::Ok
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn wolfes_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a registered operator (`h.g2`, `k.a2`, `gen.T.3.1`, ...).
/// `mark` is a `p/q` literal or null for 0.
///
/// # Safety
/// `name` and a non-null `mark` must be NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_resolve(name: *const c_char, mark: *const c_char, out: *mut *mut WolfesOp) -> WolfesStatus {
    guard(|| {
        let name = tri!(str_arg(name, "name"));
        let mark = tri!(opt_rational(mark, "mark")).unwrap_or_else(|| Rational::from_integer(0.into()));
        match resolve(name, &mark) {
            Ok(d) => put(out, d),
            Err(e) => from_core(e),
        }
    })
}

/// Parses the canonical text form.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_parse(src: *const c_char, out: *mut *mut WolfesOp) -> WolfesStatus {
    guard(|| {
        let src = tri!(str_arg(src, "source"));
        match text::parse(src) {
            Ok(d) => put(out, d),
            Err(e) => from_core(e),
        }
    })
}

/// Parses the JSON form.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_parse_json(src: *const c_char, out: *mut *mut WolfesOp) -> WolfesStatus {
    guard(|| {
        let src = tri!(str_arg(src, "source"));
        match json::from_json_str(src) {
            Ok(d) => put(out, d),
            Err(e) => from_core(e),
        }
    })
}

/// Substitutes any of `lambda`, `nu`, `omega` given as `p/q` literals; null
/// leaves that parameter symbolic.
///
/// # Safety
/// `op` must be a live handle; non-null strings NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_substitute(
    op: *const WolfesOp,
    lambda: *const c_char,
    nu: *const c_char,
    omega: *const c_char,
    out: *mut *mut WolfesOp,
) -> WolfesStatus {
    guard(|| {
        let d = tri!(op_arg(op, "op"));
        let l = tri!(opt_rational(lambda, "lambda"));
        let n = tri!(opt_rational(nu, "nu"));
        let w = tri!(opt_rational(omega, "omega"));
        put(out, d.substitute(l.as_ref(), n.as_ref(), w.as_ref()))
    })
}

/// `a b`, i.e. apply `b` first.
///
/// # Safety
/// `a`, `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_compose(a: *const WolfesOp, b: *const WolfesOp, out: *mut *mut WolfesOp) -> WolfesStatus {
    guard(|| {
        let a = tri!(op_arg(a, "a"));
        let b = tri!(op_arg(b, "b"));
        put(out, a.compose(b))
    })
}

/// `[a, b] = a b - b a`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_commutator(a: *const WolfesOp, b: *const WolfesOp, out: *mut *mut WolfesOp) -> WolfesStatus {
    guard(|| {
        let a = tri!(op_arg(a, "a"));
        let b = tri!(op_arg(b, "b"));
        put(out, a.commutator(b))
    })
}

/// `a - b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_sub(a: *const WolfesOp, b: *const WolfesOp, out: *mut *mut WolfesOp) -> WolfesStatus {
    guard(|| {
        let a = tri!(op_arg(a, "a"));
        let b = tri!(op_arg(b, "b"));
        put(out, a - b)
    })
}

/// Differential order; -1 for a null handle.
///
/// # Safety
/// `op` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_order(op: *const WolfesOp) -> i32 {
    op.as_ref().map_or(-1, |o| o.0.order() as i32)
}

/// 1 if zero, 0 if not, -1 for a null handle.
///
/// # Safety
/// `op` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_is_zero(op: *const WolfesOp) -> i32 {
    op.as_ref().map_or(-1, |o| o.0.is_zero() as i32)
}

/// 1 if equal, 0 if not, -1 if either handle is null.
///
/// # Safety
/// `a`, `b` must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_equal(a: *const WolfesOp, b: *const WolfesOp) -> i32 {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => (a.0 == b.0) as i32,
        _ => -1,
    }
}

/// Serializes into a newly allocated string released with
/// [`wolfes_string_free`].
///
/// # Safety
/// `op` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_to_string(op: *const WolfesOp, format: WolfesFormat, out: *mut *mut c_char) -> WolfesStatus {
    guard(|| {
        let d = tri!(op_arg(op, "op"));
        if out.is_null() {
            return fail(WolfesStatus::NullPointer, "output pointer is null");
        }
        let s = match format {
            WolfesFormat::Text => text::serialize(d),
            WolfesFormat::Json => json::to_json_string(d),
            WolfesFormat::Latex => latex::to_latex(d),
        };
        *out = CString::new(s).expect("serializations contain no NUL").into_raw();
        WolfesStatus::Ok
    })
}

/// Runs a named check group (`g2-quartic`, `a2-cubic`, ...). `orientation`
/// is `forward`, `reversed`, or null for the default. Writes 1 to `all_ok`
/// when every report passed.
///
/// # Safety
/// `group` must be a NUL-terminated string, `orientation` null or one;
/// `all_ok` writable.
#[no_mangle]
pub unsafe extern "C" fn wolfes_verify(group: *const c_char, orientation: *const c_char, all_ok: *mut i32) -> WolfesStatus {
    guard(|| {
        let group = tri!(str_arg(group, "group"));
        let o = if orientation.is_null() {
            Orientation::default()
        } else {
            match tri!(str_arg(orientation, "orientation")).parse() {
                Ok(o) => o,
                Err(e) => return from_core(e),
            }
        };
        if all_ok.is_null() {
            return fail(WolfesStatus::NullPointer, "all_ok is null");
        }
        match run_group(group, o) {
            Ok(reports) => {
                *all_ok = reports.iter().all(|r| r.ok) as i32;
                WolfesStatus::Ok
            }
            Err(e) => from_core(e),
        }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `op` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wolfes_op_free(op: *mut WolfesOp) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

/// Releases a string from [`wolfes_op_to_string`]; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wolfes_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
