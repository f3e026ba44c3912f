//! C ABI over `enriques_core`.
//!
//! Every function returns an [`ElStatus`]; on failure the message is available
//! from [`el_last_error`] on the same thread. Handles are opaque and must be
//! released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use enriques_core::graph::IntersectionGraph;
use enriques_core::report::{self, RunOptions, Suite, VerificationReport};
use enriques_core::{sylvester, vinberg};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    OutOfRange = 3,
    ComputationFailed = 4,
    Panic = 5,
}

/// A finished verification run.
pub struct ElReport {
    report: VerificationReport,
    json: CString,
}

/// The 40-vertex graph with its labels.
pub struct ElGamma {
    graph: IntersectionGraph,
    labels: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn fail(status: ElStatus, msg: impl Into<String>) -> ElStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> ElStatus) -> ElStatus {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(ElStatus::Panic, "internal panic"),
    }
}

fn to_cstring(s: String) -> Result<CString, ElStatus> {
    CString::new(s).map_err(|_| fail(ElStatus::ComputationFailed, "string contains NUL"))
}

/// Message for the last failing call on this thread. Empty if none.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn el_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Runs a suite (`"all"`, `"plane"`, `"lattice"`, `"gamma"`, `"vinberg"`,
/// `"char2"`). A run with failing checks still returns `EL_STATUS_OK`;
/// query [`el_report_passed`].
///
/// # Safety
/// `suite` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn el_run(
    suite: *const c_char,
    config_index: u32,
    seed: u64,
    out: *mut *mut ElReport,
) -> ElStatus {
    guard(|| {
        if suite.is_null() || out.is_null() {
            return fail(ElStatus::NullPointer, "null argument");
        }
        let name = match CStr::from_ptr(suite).to_str() {
            Ok(s) => s,
            Err(_) => return fail(ElStatus::InvalidArgument, "suite is not UTF-8"),
        };
        let suite: Suite = match name.parse() {
            Ok(s) => s,
            Err(e) => return fail(ElStatus::InvalidArgument, e.to_string()),
        };
        if config_index >= 168 {
            return fail(ElStatus::OutOfRange, format!("config index {config_index} out of range 0..168"));
        }
        let r = report::run(&RunOptions { suite, config_index: config_index as usize, seed });
        let json = match r.to_json().map_err(|e| fail(ElStatus::ComputationFailed, e.to_string())) {
            Ok(j) => j,
            Err(s) => return s,
        };
        let json = match to_cstring(json) {
            Ok(j) => j,
            Err(s) => return s,
        };
        *out = Box::into_raw(Box::new(ElReport { report: r, json }));
        ElStatus::Ok
    })
}

/// # Safety
/// `r` must come from [`el_run`]; `passed` must be valid.
#[no_mangle]
pub unsafe extern "C" fn el_report_passed(r: *const ElReport, passed: *mut bool) -> ElStatus {
    if r.is_null() || passed.is_null() {
        return fail(ElStatus::NullPointer, "null argument");
    }
    *passed = (*r).report.all_passed();
    ElStatus::Ok
}

/// Number of checks run, and how many failed.
///
/// # Safety
/// `r` must come from [`el_run`]; the out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn el_report_counts(r: *const ElReport, total: *mut usize, failed: *mut usize) -> ElStatus {
    if r.is_null() || total.is_null() || failed.is_null() {
        return fail(ElStatus::NullPointer, "null argument");
    }
    *total = (*r).report.checks.len();
    *failed = (*r).report.failed;
    ElStatus::Ok
}

/// JSON text of the report, owned by the handle.
///
/// # Safety
/// `r` must come from [`el_run`]. Returns null for a null handle.
#[no_mangle]
pub unsafe extern "C" fn el_report_json(r: *const ElReport) -> *const c_char {
    if r.is_null() {
        set_error("null argument");
        return ptr::null();
    }
    (*r).json.as_ptr()
}

/// # Safety
/// `r` must come from [`el_run`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn el_report_free(r: *mut ElReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Builds the combinatorial 40-vertex graph.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn el_gamma_new(out: *mut *mut ElGamma) -> ElStatus {
    guard(|| {
        if out.is_null() {
            return fail(ElStatus::NullPointer, "null argument");
        }
        let graph = sylvester::combinatorial_gamma();
        let labels = match graph.labels().iter().map(|l| to_cstring(l.clone())).collect() {
            Ok(l) => l,
            Err(s) => return s,
        };
        *out = Box::into_raw(Box::new(ElGamma { graph, labels }));
        ElStatus::Ok
    })
}

/// # Safety
/// `g` must come from [`el_gamma_new`]. Returns 0 for null.
#[no_mangle]
pub unsafe extern "C" fn el_gamma_len(g: *const ElGamma) -> usize {
    if g.is_null() {
        return 0;
    }
    (*g).graph.len()
}

/// # Safety
/// `g` must come from [`el_gamma_new`]; `value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn el_gamma_pairing(g: *const ElGamma, i: usize, j: usize, value: *mut i64) -> ElStatus {
    if g.is_null() || value.is_null() {
        return fail(ElStatus::NullPointer, "null argument");
    }
    let n = (*g).graph.len();
    if i >= n || j >= n {
        return fail(ElStatus::OutOfRange, format!("vertex index out of range 0..{n}"));
    }
    *value = (*g).graph.pairing(i, j);
    ElStatus::Ok
}

/// Label of vertex `i`, owned by the handle. Null when out of range.
///
/// # Safety
/// `g` must come from [`el_gamma_new`].
#[no_mangle]
pub unsafe extern "C" fn el_gamma_label(g: *const ElGamma, i: usize) -> *const c_char {
    if g.is_null() {
        set_error("null argument");
        return ptr::null();
    }
    let g = &*g;
    match g.labels.get(i) {
        Some(l) => l.as_ptr(),
        None => {
            set_error("vertex index out of range");
            ptr::null()
        }
    }
}

/// Graphviz text; release with [`el_string_free`].
///
/// # Safety
/// `g` must come from [`el_gamma_new`]; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn el_gamma_dot(g: *const ElGamma, out: *mut *mut c_char) -> ElStatus {
    if g.is_null() || out.is_null() {
        return fail(ElStatus::NullPointer, "null argument");
    }
    match to_cstring((*g).graph.to_dot()) {
        Ok(s) => {
            *out = s.into_raw();
            ElStatus::Ok
        }
        Err(s) => s,
    }
}

/// Finite-index test for the reflection group of the graph in a lattice of
/// the given rank.
///
/// # Safety
/// `g` must come from [`el_gamma_new`]; `verdict` must be valid.
#[no_mangle]
pub unsafe extern "C" fn el_gamma_vinberg_check(g: *const ElGamma, ambient_rank: usize, verdict: *mut bool) -> ElStatus {
    guard(|| {
        if g.is_null() || verdict.is_null() {
            return fail(ElStatus::NullPointer, "null argument");
        }
        match vinberg::vinberg_check(&(*g).graph, ambient_rank) {
            Ok(c) => {
                *verdict = c.verdict;
                ElStatus::Ok
            }
            Err(e) => fail(ElStatus::ComputationFailed, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must come from [`el_gamma_new`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn el_gamma_free(g: *mut ElGamma) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn el_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
