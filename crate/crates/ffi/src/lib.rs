//! C ABI over [`su2branch`].
//!
//! Every entry point returns an [`Su2Status`]; on failure the message is
//! available from [`su2_last_error`] on the same thread. Handles are opaque
//! and must be released with [`su2_branching_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use su2branch::{Branching, DiagramType, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Su2Status {
    Ok = 0,
    NullPointer = 1,
    /// Bad type string, excluded rank, or node out of range.
    InvalidArgument = 2,
    /// The caller's buffer is too short; the required length was written.
    BufferTooSmall = 3,
    /// An internal consistency check failed.
    Internal = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Su2Params {
    pub a: usize,
    pub b: usize,
    pub h: usize,
    pub g: usize,
    /// Extended index of the special node.
    pub special_node: usize,
    pub order_f: usize,
    pub order_fstar: usize,
}

/// Opaque handle.
pub struct Su2Branching {
    inner: Branching,
}

static CONVENTION: &CStr = c"bourbaki-ext/1";

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let mut s = msg.into();
    s.retain(|c| c != '\0');
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).unwrap_or_default());
}

fn fail(e: Error) -> Su2Status {
    set_error(e.to_string());
    if e.is_usage() {
        Su2Status::InvalidArgument
    } else {
        Su2Status::Internal
    }
}

fn guard(f: impl FnOnce() -> Su2Status) -> Su2Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == Su2Status::Ok {
                set_error("");
            }
            s
        }
        Err(_) => {
            set_error("panic inside su2branch");
            Su2Status::Panic
        }
    }
}

unsafe fn handle<'a>(h: *const Su2Branching) -> Option<&'a Branching> {
    h.as_ref().map(|b| &b.inner)
}

fn copy_out(src: &[i64], buf: *mut i64, cap: usize, len: *mut usize) -> Su2Status {
    if !len.is_null() {
        unsafe { *len = src.len() };
    }
    if cap < src.len() {
        set_error(format!("buffer holds {cap} values, {} needed", src.len()));
        return Su2Status::BufferTooSmall;
    }
    if src.is_empty() {
        return Su2Status::Ok;
    }
    if buf.is_null() {
        set_error("null output buffer");
        return Su2Status::NullPointer;
    }
    unsafe { ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len()) };
    Su2Status::Ok
}

/// Message for the most recent failure on this thread, or `""`.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn su2_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Node numbering convention tag, a static string.
#[no_mangle]
pub extern "C" fn su2_convention() -> *const c_char {
    CONVENTION.as_ptr()
}

/// Builds the branching data for a type such as `"E8"` or `"D5"`.
///
/// # Safety
/// `type_name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn su2_branching_open(
    type_name: *const c_char,
    out: *mut *mut Su2Branching,
) -> Su2Status {
    guard(|| {
        if type_name.is_null() || out.is_null() {
            set_error("null argument");
            return Su2Status::NullPointer;
        }
        *out = ptr::null_mut();
        let Ok(s) = CStr::from_ptr(type_name).to_str() else {
            set_error("type name is not UTF-8");
            return Su2Status::InvalidArgument;
        };
        let built = s.parse::<DiagramType>().and_then(Branching::new);
        match built {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(Su2Branching { inner }));
                Su2Status::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `h` must come from [`su2_branching_open`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn su2_branching_free(h: *mut Su2Branching) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn su2_branching_rank(h: *const Su2Branching, out: *mut usize) -> Su2Status {
    guard(|| match (handle(h), out.is_null()) {
        (Some(b), false) => {
            *out = b.root_system().rank();
            Su2Status::Ok
        }
        _ => {
            set_error("null argument");
            Su2Status::NullPointer
        }
    })
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn su2_branching_params(
    h: *const Su2Branching,
    out: *mut Su2Params,
) -> Su2Status {
    guard(|| match (handle(h), out.is_null()) {
        (Some(b), false) => {
            let p = b.params();
            *out = Su2Params {
                a: p.a,
                b: p.b,
                h: p.h,
                g: p.g,
                special_node: b.special_node(),
                order_f: p.order_f,
                order_fstar: p.order_fstar,
            };
            Su2Status::Ok
        }
        _ => {
            set_error("null argument");
            Su2Status::NullPointer
        }
    })
}

/// Resolves a `(mark, distance)` label to an extended node index.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn su2_branching_find_node(
    h: *const Su2Branching,
    mark: i64,
    distance: usize,
    out: *mut usize,
) -> Su2Status {
    guard(|| match (handle(h), out.is_null()) {
        (Some(b), false) => match b.graph().find_label(mark, distance) {
            Ok(i) => {
                *out = i;
                Su2Status::Ok
            }
            Err(e) => fail(e),
        },
        _ => {
            set_error("null argument");
            Su2Status::NullPointer
        }
    })
}

/// Coefficients of `z_node(t)`, lowest degree first. `*len` receives the
/// number of coefficients even when the buffer is too small.
///
/// # Safety
/// `buf` must be writable for `cap` values; `len` may be null.
#[no_mangle]
pub unsafe extern "C" fn su2_branching_zpoly(
    h: *const Su2Branching,
    node: usize,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> Su2Status {
    guard(|| {
        let Some(b) = handle(h) else {
            set_error("null handle");
            return Su2Status::NullPointer;
        };
        match b.z(node) {
            Ok(z) => copy_out(z.coeffs(), buf, cap, len),
            Err(e) => fail(e),
        }
    })
}

/// `m_{0,node}, …, m_{order,node}`; needs `cap >= order + 1`.
///
/// # Safety
/// `buf` must be writable for `cap` values; `len` may be null.
#[no_mangle]
pub unsafe extern "C" fn su2_branching_series(
    h: *const Su2Branching,
    node: usize,
    order: usize,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> Su2Status {
    guard(|| {
        let Some(b) = handle(h) else {
            set_error("null handle");
            return Su2Status::NullPointer;
        };
        match b.series(node, order) {
            Ok(s) => copy_out(s.coeffs(), buf, cap, len),
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn su2_branching_multiplicity(
    h: *const Su2Branching,
    n: usize,
    node: usize,
    out: *mut i64,
) -> Su2Status {
    guard(|| match (handle(h), out.is_null()) {
        (Some(b), false) => match b.multiplicity(n, node) {
            Ok(m) => {
                *out = m;
                Su2Status::Ok
            }
            Err(e) => fail(e),
        },
        _ => {
            set_error("null argument");
            Su2Status::NullPointer
        }
    })
}
