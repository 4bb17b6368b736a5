//! C ABI over the a-number invariant and toric Betti computations.
//!
//! Conventions, uniform across every entry point:
//!
//! - Graphs travel behind the opaque handle [`AnGraph`]; constructors hand
//!   ownership to the caller, who must release it with [`an_graph_free`].
//! - Every fallible function returns an [`AnStatus`] code and writes its
//!   result through an out-pointer only on `AN_STATUS_OK`.
//! - String results are NUL-terminated, heap-allocated copies owned by the
//!   caller; release them with [`an_string_free`].
//! - On failure a human-readable message is stored per thread and can be
//!   fetched with [`an_last_error_message`].
//! - Panics never unwind across the boundary: they are caught and surfaced
//!   as `AN_STATUS_PANIC`.
//! - A cap argument of `0` selects the built-in default
//!   ([`an_default_dp_cap`] / [`an_default_homology_cap`]).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use anumber::graph::{encode_graph6, generate, parse_edge_list, parse_graph6, GraphFamily};
use anumber::invariants::{compute_sa_table_with_cap, DEFAULT_DP_CAP};
use anumber::toric::{
    betti_complex_toric_with_cap, betti_via_component_product_with_cap,
    betti_via_recursion_with_cap, betti_via_s_sum_with_cap, betti_via_t_sum_with_cap,
    verify_routes, TaSource, DEFAULT_HOMOLOGY_CAP,
};
use anumber::{Error, SimpleGraph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AnStatus {
    /// Success; out-parameters are filled in.
    Ok = 0,
    /// Input text could not be decoded (graph6, edge list, name strings).
    MalformedInput = 1,
    /// A mathematical precondition was violated (wrong parity, wrong
    /// connectivity, out-of-range index).
    DomainError = 2,
    /// Well-formed input outside the supported model (for example a cycle
    /// on two vertices, or a host beyond the vertex-count limit).
    Unsupported = 3,
    /// The computation would exceed a size cap; raise the cap to proceed.
    ResourceLimit = 4,
    /// A required pointer argument was NULL.
    NullArgument = 5,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 6,
    /// An internal panic was caught at the boundary; treat as a bug.
    Panic = 7,
}

/// Opaque graph handle. Create with one of the `an_graph_*` constructors,
/// release with [`an_graph_free`].
pub struct AnGraph {
    inner: SimpleGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: AnStatus, message: impl Into<String>) -> AnStatus {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(text).unwrap_or_default());
    });
    status
}

fn fail_error(e: &Error) -> AnStatus {
    let status = match e {
        Error::MalformedInput(_) => AnStatus::MalformedInput,
        Error::DomainError(_) => AnStatus::DomainError,
        Error::UnsupportedInstance(_) => AnStatus::Unsupported,
        Error::ResourceLimit(_) => AnStatus::ResourceLimit,
    };
    fail(status, e.to_string())
}

/// Run `body` with panics converted to `AN_STATUS_PANIC`; a fresh call
/// starts with the thread's error slot cleared.
fn guarded(body: impl FnOnce() -> AnStatus) -> AnStatus {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(AnStatus::Panic, "internal panic caught at the C boundary"),
    }
}

/// Read a required UTF-8 C string argument.
///
/// # Safety
/// `text` must be NULL or point to a NUL-terminated buffer.
unsafe fn required_str<'a>(text: *const c_char, what: &str) -> Result<&'a str, AnStatus> {
    if text.is_null() {
        return Err(fail(AnStatus::NullArgument, format!("{what} is NULL")));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(AnStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

fn required_out<T>(out: *mut T, what: &str) -> Result<(), AnStatus> {
    if out.is_null() {
        Err(fail(AnStatus::NullArgument, format!("{what} is NULL")))
    } else {
        Ok(())
    }
}

/// # Safety
/// `handle` must be NULL or a live pointer from an `an_graph_*` constructor.
unsafe fn required_graph<'a>(handle: *const AnGraph) -> Result<&'a SimpleGraph, AnStatus> {
    if handle.is_null() {
        return Err(fail(AnStatus::NullArgument, "graph handle is NULL"));
    }
    Ok(&(*handle).inner)
}

/// Hand a Rust string to the caller as an owned C string.
fn give_string(out: *mut *mut c_char, text: String) -> AnStatus {
    let c = match CString::new(text.replace('\0', " ")) {
        Ok(c) => c,
        Err(_) => return fail(AnStatus::Panic, "string result contained an interior NUL"),
    };
    unsafe { *out = c.into_raw() };
    AnStatus::Ok
}

fn give_graph(out: *mut *mut AnGraph, g: SimpleGraph) -> AnStatus {
    let boxed = Box::new(AnGraph { inner: g });
    unsafe { *out = Box::into_raw(boxed) };
    AnStatus::Ok
}

fn dp_cap_or_default(cap: u32) -> usize {
    if cap == 0 {
        DEFAULT_DP_CAP
    } else {
        cap as usize
    }
}

fn homology_cap_or_default(cap: u32) -> usize {
    if cap == 0 {
        DEFAULT_HOMOLOGY_CAP
    } else {
        cap as usize
    }
}

// ============================================================
// Defaults and error retrieval
// ============================================================

/// Default cap on host order for the subset recursion.
#[no_mangle]
pub extern "C" fn an_default_dp_cap() -> u32 {
    DEFAULT_DP_CAP as u32
}

/// Default cap on host order for the homology-based routes.
#[no_mangle]
pub extern "C" fn an_default_homology_cap() -> u32 {
    DEFAULT_HOMOLOGY_CAP as u32
}

/// Message describing this thread's most recent failure, as an owned string
/// (empty if the last call succeeded). Free with `an_string_free`.
#[no_mangle]
pub extern "C" fn an_last_error_message() -> *mut c_char {
    let message = LAST_ERROR.with(|slot| slot.borrow().clone());
    message.unwrap_or_default().into_raw()
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `text` must be NULL or an unreleased pointer returned by this library.
#[no_mangle]
pub unsafe extern "C" fn an_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

// ============================================================
// Graph handles
// ============================================================

/// Parse a graph from its graph6 encoding.
///
/// # Safety
/// `text` must be NULL or NUL-terminated; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn an_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut AnGraph,
) -> AnStatus {
    guarded(|| {
        let text = match required_str(text, "graph6 text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if let Err(s) = required_out(out, "graph out-pointer") {
            return s;
        }
        match parse_graph6(text.trim()) {
            Ok(g) => give_graph(out, g),
            Err(e) => fail_error(&e),
        }
    })
}

/// Parse a graph from edge-list text: first line the vertex count, then one
/// `u v` pair per line; `#` starts a comment.
///
/// # Safety
/// `text` must be NULL or NUL-terminated; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn an_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut AnGraph,
) -> AnStatus {
    guarded(|| {
        let text = match required_str(text, "edge-list text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if let Err(s) = required_out(out, "graph out-pointer") {
            return s;
        }
        match parse_edge_list(text) {
            Ok(g) => give_graph(out, g),
            Err(e) => fail_error(&e),
        }
    })
}

/// Build a member of a named family (`"path"`, `"cycle"`, `"complete"`,
/// `"star"`) on `n` vertices.
///
/// # Safety
/// `family` must be NULL or NUL-terminated; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn an_graph_generate(
    family: *const c_char,
    n: u32,
    out: *mut *mut AnGraph,
) -> AnStatus {
    guarded(|| {
        let family = match required_str(family, "family name") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if let Err(s) = required_out(out, "graph out-pointer") {
            return s;
        }
        let parsed: GraphFamily = match family.parse() {
            Ok(f) => f,
            Err(e) => return fail_error(&e),
        };
        match generate(parsed, n as usize) {
            Ok(g) => give_graph(out, g),
            Err(e) => fail_error(&e),
        }
    })
}

/// Release a graph handle. NULL is ignored.
///
/// # Safety
/// `handle` must be NULL or an unreleased pointer from a constructor.
#[no_mangle]
pub unsafe extern "C" fn an_graph_free(handle: *mut AnGraph) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of vertices, or -1 if the handle is NULL.
///
/// # Safety
/// `handle` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn an_graph_vertex_count(handle: *const AnGraph) -> i32 {
    if handle.is_null() {
        return -1;
    }
    (*handle).inner.vertex_count() as i32
}

/// Number of edges, or -1 if the handle is NULL.
///
/// # Safety
/// `handle` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn an_graph_edge_count(handle: *const AnGraph) -> i64 {
    if handle.is_null() {
        return -1;
    }
    (*handle).inner.edge_count() as i64
}

/// The graph6 encoding of the graph, as an owned string.
///
/// # Safety
/// `handle` must be NULL or a live graph handle; `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn an_graph_to_graph6(
    handle: *const AnGraph,
    out: *mut *mut c_char,
) -> AnStatus {
    guarded(|| {
        let g = match required_graph(handle) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if let Err(s) = required_out(out, "string out-pointer") {
            return s;
        }
        give_string(out, encode_graph6(g))
    })
}

// ============================================================
// Invariants and Betti numbers
// ============================================================

/// The a-vector, alternating total `b` and signed value `sa` of the graph,
/// as a JSON object (all numbers in decimal strings). `dp_cap` of 0 selects
/// the default cap.
///
/// # Safety
/// `handle` must be NULL or a live graph handle; `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn an_invariants_json(
    handle: *const AnGraph,
    dp_cap: u32,
    out: *mut *mut c_char,
) -> AnStatus {
    guarded(|| {
        let g = match required_graph(handle) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if let Err(s) = required_out(out, "string out-pointer") {
            return s;
        }
        match compute_sa_table_with_cap(g, dp_cap_or_default(dp_cap)) {
            Ok(table) => give_string(out, table.to_json().to_string()),
            Err(e) => fail_error(&e),
        }
    })
}

/// Betti numbers of the toric space over the graph associahedron, as a JSON
/// object, by the requested route:
///
/// - `"recursion"`: real space via the signed subset recursion (`dp_cap`);
/// - `"odd-intersection"`: real space via homology of the subcomplexes
///   meeting each even subset oddly (`homology_cap`);
/// - `"row-combination"`: real space via homology over all row combinations
///   of the folded characteristic matrix (`homology_cap`);
/// - `"component-product"`: real space via per-component homology factors
///   (`homology_cap`);
/// - `"complex"`: the complex-case ranks, i.e. the h-vector of the nested
///   set complex, reported in degree `2i` (`homology_cap`).
///
/// A cap of 0 selects the default.
///
/// # Safety
/// `handle` must be NULL or a live graph handle; `method` NULL or
/// NUL-terminated; `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn an_betti_json(
    handle: *const AnGraph,
    method: *const c_char,
    dp_cap: u32,
    homology_cap: u32,
    out: *mut *mut c_char,
) -> AnStatus {
    guarded(|| {
        let g = match required_graph(handle) {
            Ok(g) => g,
            Err(s) => return s,
        };
        let method = match required_str(method, "method name") {
            Ok(m) => m,
            Err(s) => return s,
        };
        if let Err(s) = required_out(out, "string out-pointer") {
            return s;
        }
        let dp = dp_cap_or_default(dp_cap);
        let homology = homology_cap_or_default(homology_cap);
        let report = match method {
            "recursion" => betti_via_recursion_with_cap(g, dp),
            "odd-intersection" => betti_via_t_sum_with_cap(g, homology),
            "row-combination" => betti_via_s_sum_with_cap(g, homology),
            "component-product" => {
                betti_via_component_product_with_cap(g, TaSource::Homology, homology)
            }
            "complex" => betti_complex_toric_with_cap(g, homology),
            other => {
                return fail(
                    AnStatus::MalformedInput,
                    format!(
                        "unknown method {other:?} (expected recursion, odd-intersection, \
                         row-combination, component-product or complex)"
                    ),
                )
            }
        };
        match report {
            Ok(r) => give_string(out, r.to_json().to_string()),
            Err(e) => fail_error(&e),
        }
    })
}

/// Run every Betti route and cross-check them; writes 1 to `out_consistent`
/// when all checks agree, 0 otherwise. Caps of 0 select the defaults.
///
/// # Safety
/// `handle` must be NULL or a live graph handle; `out_consistent` NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn an_verify(
    handle: *const AnGraph,
    dp_cap: u32,
    homology_cap: u32,
    out_consistent: *mut u8,
) -> AnStatus {
    guarded(|| {
        let g = match required_graph(handle) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if let Err(s) = required_out(out_consistent, "consistency out-pointer") {
            return s;
        }
        match verify_routes(g, dp_cap_or_default(dp_cap), homology_cap_or_default(homology_cap)) {
            Ok(report) => {
                *out_consistent = u8::from(report.consistent);
                AnStatus::Ok
            }
            Err(e) => fail_error(&e),
        }
    })
}

/// Like `an_verify`, but returns the full report (per-route Betti numbers
/// and each named check) as a JSON object.
///
/// # Safety
/// `handle` must be NULL or a live graph handle; `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn an_verify_json(
    handle: *const AnGraph,
    dp_cap: u32,
    homology_cap: u32,
    out: *mut *mut c_char,
) -> AnStatus {
    guarded(|| {
        let g = match required_graph(handle) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if let Err(s) = required_out(out, "string out-pointer") {
            return s;
        }
        match verify_routes(g, dp_cap_or_default(dp_cap), homology_cap_or_default(homology_cap)) {
            Ok(report) => give_string(out, report.to_json().to_string()),
            Err(e) => fail_error(&e),
        }
    })
}
