//! C ABI for the link-invariant pipeline.
//!
//! Graphs are handled through the opaque [`FlGraph`] pointer; every
//! constructor hands out an owned handle that must be released with
//! [`fl_graph_free`]. Strings returned through out-parameters are UTF-8,
//! NUL-terminated, owned by the caller, and must be released with
//! [`fl_string_free`]. All functions are total: errors come back as
//! [`FlStatus`] codes, never as panics across the boundary.
//!
//! The generated header lives at `include/forklink.h`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use forklink::braid::band_word_from_graph;
use forklink::invariants::fingerprint;
use forklink::partition::{twisted_torus_graph, Partition};
use forklink::{BipartiteGraph, Error};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input was structurally invalid (bad JSON, edge out of range,
    /// empty partition, zero vertex counts, ...).
    InvalidInput = 3,
    /// The operation needs a connected diagram but the graph splits.
    Disconnected = 4,
    /// An internal invariant failed; this is a bug in the library.
    Internal = 5,
}

/// Opaque handle to an embedded bipartite graph.
pub struct FlGraph {
    inner: BipartiteGraph,
}

fn status_of(err: &Error) -> FlStatus {
    match err {
        Error::DisconnectedGraph { .. } | Error::DisconnectedDiagram { .. } => {
            FlStatus::Disconnected
        }
        _ => FlStatus::InvalidInput,
    }
}

/// Runs a closure, converting panics into [`FlStatus::Internal`] instead of
/// unwinding across the C boundary.
fn guarded(f: impl FnOnce() -> FlStatus) -> FlStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(FlStatus::Internal)
}

/// # Safety
///
/// `text` must be NULL or a NUL-terminated string.
unsafe fn utf8_in<'a>(text: *const c_char) -> Result<&'a str, FlStatus> {
    if text.is_null() {
        return Err(FlStatus::NullPointer);
    }
    CStr::from_ptr(text).to_str().map_err(|_| FlStatus::InvalidUtf8)
}

fn string_out(text: String, out: *mut *mut c_char) -> FlStatus {
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            FlStatus::Ok
        }
        Err(_) => FlStatus::Internal,
    }
}

fn graph_out(graph: BipartiteGraph, out: *mut *mut FlGraph) -> FlStatus {
    unsafe { *out = Box::into_raw(Box::new(FlGraph { inner: graph })) };
    FlStatus::Ok
}

/// Parses a graph from JSON of the form `{"p":…,"q":…,"edges":[[u,l],…]}`.
///
/// # Safety
///
/// `json` must be a NUL-terminated string; `out` must point to writable
/// memory. On success `*out` owns a new handle.
#[no_mangle]
pub unsafe extern "C" fn fl_graph_from_json(
    json: *const c_char,
    out: *mut *mut FlGraph,
) -> FlStatus {
    if out.is_null() {
        return FlStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let text = match utf8_in(json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    guarded(|| match BipartiteGraph::from_json(text) {
        Ok(g) => graph_out(g, out),
        Err(e) => status_of(&e),
    })
}

/// Builds the complete graph on `p` upper and `q` lower vertices, whose
/// boundary is the torus link T(p, q).
///
/// # Safety
///
/// `out` must point to writable memory. On success `*out` owns a new handle.
#[no_mangle]
pub unsafe extern "C" fn fl_graph_theta(p: u32, q: u32, out: *mut *mut FlGraph) -> FlStatus {
    if out.is_null() {
        return FlStatus::NullPointer;
    }
    *out = ptr::null_mut();
    guarded(|| match BipartiteGraph::complete(p as usize, q as usize) {
        Ok(g) => graph_out(g, out),
        Err(e) => status_of(&e),
    })
}

/// Builds the twisted-torus graph of a weakly decreasing positive partition.
///
/// # Safety
///
/// `parts` must point to `len` readable values; `out` must point to writable
/// memory. On success `*out` owns a new handle.
#[no_mangle]
pub unsafe extern "C" fn fl_graph_twisted_torus(
    parts: *const u32,
    len: usize,
    out: *mut *mut FlGraph,
) -> FlStatus {
    if out.is_null() {
        return FlStatus::NullPointer;
    }
    *out = ptr::null_mut();
    if parts.is_null() {
        return FlStatus::NullPointer;
    }
    let parts: Vec<usize> =
        std::slice::from_raw_parts(parts, len).iter().map(|&a| a as usize).collect();
    guarded(|| match Partition::new(&parts) {
        Ok(partition) => graph_out(twisted_torus_graph(&partition), out),
        Err(e) => status_of(&e),
    })
}

/// Releases a graph handle. NULL is ignored.
///
/// # Safety
///
/// `graph` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fl_graph_free(graph: *mut FlGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Serializes a graph back to JSON.
///
/// # Safety
///
/// `graph` must be a live handle; `out` must point to writable memory. On
/// success `*out` owns a new string.
#[no_mangle]
pub unsafe extern "C" fn fl_graph_to_json(
    graph: *const FlGraph,
    out: *mut *mut c_char,
) -> FlStatus {
    if graph.is_null() || out.is_null() {
        return FlStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let graph = &(*graph).inner;
    guarded(|| string_out(graph.to_json(), out))
}

/// Computes the invariant fingerprint of the presented link, as JSON.
///
/// # Safety
///
/// `graph` must be a live handle; `out` must point to writable memory. On
/// success `*out` owns a new string.
#[no_mangle]
pub unsafe extern "C" fn fl_fingerprint_json(
    graph: *const FlGraph,
    out: *mut *mut c_char,
) -> FlStatus {
    if graph.is_null() || out.is_null() {
        return FlStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let graph = &(*graph).inner;
    guarded(|| string_out(fingerprint(graph).to_json(), out))
}

/// Writes the quasipositive band word of a connected graph, for example
/// `"s[1,2] s[1,3]"`.
///
/// # Safety
///
/// `graph` must be a live handle; `out` must point to writable memory. On
/// success `*out` owns a new string.
#[no_mangle]
pub unsafe extern "C" fn fl_band_word(graph: *const FlGraph, out: *mut *mut c_char) -> FlStatus {
    if graph.is_null() || out.is_null() {
        return FlStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let graph = &(*graph).inner;
    guarded(|| match band_word_from_graph(graph) {
        Ok(word) => string_out(format!("strands={}; {word}", word.strands()), out),
        Err(e) => status_of(&e),
    })
}

/// Writes the Artin-generator expansion of the band word, for example
/// `"strands=2; +1 +1 +1"`.
///
/// # Safety
///
/// `graph` must be a live handle; `out` must point to writable memory. On
/// success `*out` owns a new string.
#[no_mangle]
pub unsafe extern "C" fn fl_artin_word(graph: *const FlGraph, out: *mut *mut c_char) -> FlStatus {
    if graph.is_null() || out.is_null() {
        return FlStatus::NullPointer;
    }
    *out = ptr::null_mut();
    let graph = &(*graph).inner;
    guarded(|| match band_word_from_graph(graph) {
        Ok(word) => string_out(word.expand().to_string(), out),
        Err(e) => status_of(&e),
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
///
/// `text` must be NULL or a string from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fl_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Static description of a status code; never needs freeing.
#[no_mangle]
pub extern "C" fn fl_status_message(status: FlStatus) -> *const c_char {
    let text: &'static CStr = match status {
        FlStatus::Ok => c"ok",
        FlStatus::NullPointer => c"required pointer was NULL",
        FlStatus::InvalidUtf8 => c"string was not valid UTF-8",
        FlStatus::InvalidInput => c"input was structurally invalid",
        FlStatus::Disconnected => c"graph is disconnected; split it first",
        FlStatus::Internal => c"internal error",
    };
    text.as_ptr()
}

#[cfg(test)]
mod tests {
    use super::*;

    unsafe fn theta(p: u32, q: u32) -> *mut FlGraph {
        let mut g = ptr::null_mut();
        assert_eq!(fl_graph_theta(p, q, &mut g), FlStatus::Ok);
        assert!(!g.is_null());
        g
    }

    unsafe fn take_string(text: *mut c_char) -> String {
        assert!(!text.is_null());
        let s = CStr::from_ptr(text).to_str().unwrap().to_owned();
        fl_string_free(text);
        s
    }

    #[test]
    fn round_trips_graph_json() {
        unsafe {
            let json = c"{\"p\":2,\"q\":2,\"edges\":[[0,0],[1,0],[0,1],[1,1]]}";
            let mut g = ptr::null_mut();
            assert_eq!(fl_graph_from_json(json.as_ptr(), &mut g), FlStatus::Ok);
            let mut text = ptr::null_mut();
            assert_eq!(fl_graph_to_json(g, &mut text), FlStatus::Ok);
            assert_eq!(
                take_string(text),
                "{\"p\":2,\"q\":2,\"edges\":[[0,0],[1,0],[0,1],[1,1]]}"
            );
            fl_graph_free(g);
        }
    }

    #[test]
    fn fingerprints_the_trefoil() {
        unsafe {
            let g = theta(2, 3);
            let mut text = ptr::null_mut();
            assert_eq!(fl_fingerprint_json(g, &mut text), FlStatus::Ok);
            let fp = take_string(text);
            assert!(fp.contains("\"signature\":2"));
            assert!(fp.contains("\"determinant\":3"));
            assert!(fp.contains("\"alexander\":[[-1,1],[0,-1],[1,1]]"));
            fl_graph_free(g);
        }
    }

    #[test]
    fn emits_band_and_artin_words() {
        unsafe {
            let g = theta(2, 3);
            let mut text = ptr::null_mut();
            assert_eq!(fl_band_word(g, &mut text), FlStatus::Ok);
            assert_eq!(take_string(text), "strands=2; s[1,2] s[1,2] s[1,2]");
            assert_eq!(fl_artin_word(g, &mut text), FlStatus::Ok);
            assert_eq!(take_string(text), "strands=2; +1 +1 +1");
            fl_graph_free(g);
        }
    }

    #[test]
    fn builds_twisted_torus_graphs() {
        unsafe {
            let parts = [4u32, 4, 3, 2, 2];
            let mut g = ptr::null_mut();
            assert_eq!(
                fl_graph_twisted_torus(parts.as_ptr(), parts.len(), &mut g),
                FlStatus::Ok
            );
            let mut text = ptr::null_mut();
            assert_eq!(fl_fingerprint_json(g, &mut text), FlStatus::Ok);
            assert!(take_string(text).contains("\"components\":2"));
            fl_graph_free(g);
            // Increasing parts are rejected.
            let bad = [2u32, 3];
            assert_eq!(
                fl_graph_twisted_torus(bad.as_ptr(), bad.len(), &mut g),
                FlStatus::InvalidInput
            );
            assert!(g.is_null());
        }
    }

    #[test]
    fn reports_statuses_for_bad_inputs() {
        unsafe {
            let mut g = ptr::null_mut();
            assert_eq!(
                fl_graph_from_json(ptr::null(), &mut g),
                FlStatus::NullPointer
            );
            assert_eq!(fl_graph_theta(0, 2, &mut g), FlStatus::InvalidInput);
            assert_eq!(
                fl_graph_from_json(c"{\"p\":1}".as_ptr(), &mut g),
                FlStatus::InvalidInput
            );
            // A disconnected graph has no single braid word.
            let json = c"{\"p\":2,\"q\":2,\"edges\":[[0,0],[1,1]]}";
            assert_eq!(fl_graph_from_json(json.as_ptr(), &mut g), FlStatus::Ok);
            let mut text = ptr::null_mut();
            assert_eq!(fl_band_word(g, &mut text), FlStatus::Disconnected);
            assert!(text.is_null());
            fl_graph_free(g);
            // Status messages are static C strings.
            let msg = CStr::from_ptr(fl_status_message(FlStatus::Disconnected));
            assert_eq!(msg.to_str().unwrap(), "graph is disconnected; split it first");
        }
    }
}
