//! C ABI over the radial-moore library.
//!
//! Graphs cross the boundary as opaque `RmGraph` handles. Every function
//! returns an `RmStatus`; on failure the message is kept per thread and can
//! be read with `rm_last_error`. Strings handed out by this library must be
//! released with `rm_string_free`, graphs with `rm_graph_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use radial_moore::bounds::{moore_bound, moore_status};
use radial_moore::canon::automorphism_group_order;
use radial_moore::gd::build_gd;
use radial_moore::graph::{graph6, radius_diameter, status, status_vector, verify_radial_moore};
use radial_moore::recurrence::central_upper_bound;
use radial_moore::search::hoffman_singleton;
use radial_moore::{Error, Graph};

/// Opaque graph handle.
pub struct RmGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    Unsupported = 4,
    Disconnected = 5,
    Timeout = 6,
    CheckFailed = 7,
    Panic = 8,
}

/// Result of `rm_verify_radial_moore`. `radius` and `diameter` are 0 for a
/// disconnected graph.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RmRadialReport {
    pub is_radial_moore: bool,
    pub order_ok: bool,
    pub regular_ok: bool,
    pub connected: bool,
    pub radius: usize,
    pub diameter: usize,
    pub central_count: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> RmStatus {
    match e {
        Error::Graph6 { .. } => RmStatus::ParseError,
        Error::Disconnected => RmStatus::Disconnected,
        Error::Timeout { .. } => RmStatus::Timeout,
        Error::UnsupportedDegree { .. }
        | Error::UnsupportedRadius { .. }
        | Error::NotApplicable(_)
        | Error::CensusNeedsStream { .. } => RmStatus::Unsupported,
        Error::Consistency(_) | Error::NotRadialMoore { .. } => RmStatus::CheckFailed,
        _ => RmStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), RmStatusError>) -> RmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RmStatus::Ok,
        Ok(Err(RmStatusError(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            RmStatus::Panic
        }
    }
}

struct RmStatusError(RmStatus, String);

impl From<Error> for RmStatusError {
    fn from(e: Error) -> Self {
        RmStatusError(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> RmStatusError {
    RmStatusError(RmStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn graph_ref<'a>(g: *const RmGraph) -> Result<&'a Graph, RmStatusError> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), RmStatusError> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), RmStatusError> {
    let c = CString::new(s).map_err(|e| RmStatusError(RmStatus::InvalidArgument, e.to_string()))?;
    write_out(out, c.into_raw())
}

unsafe fn write_graph(out: *mut *mut RmGraph, g: Graph) -> Result<(), RmStatusError> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(RmGraph(g))));
    Ok(())
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn rm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be NULL or a handle returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_free(g: *mut RmGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Decodes one graph6 string (optional header, no trailing data).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut RmGraph,
) -> RmStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| RmStatusError(RmStatus::ParseError, e.to_string()))?;
        write_graph(out, graph6::decode(s)?)
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_to_graph6(g: *const RmGraph, out: *mut *mut c_char) -> RmStatus {
    guard(|| write_string(out, graph6::encode(graph_ref(g)?)))
}

/// Builds a graph on `order` vertices from `edge_count` pairs stored flat
/// in `edges` as `u0, v0, u1, v1, ...`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be NULL when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_from_edges(
    order: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut RmGraph,
) -> RmStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0], p[1]));
        write_graph(out, Graph::from_edges(order, pairs)?)
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_order(g: *const RmGraph, out: *mut usize) -> RmStatus {
    guard(|| write_out(out, graph_ref(g)?.order()))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_graph_edge_count(g: *const RmGraph, out: *mut usize) -> RmStatus {
    guard(|| write_out(out, graph_ref(g)?.edge_count()))
}

/// The graph `G_d` with the center at vertex 0.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_build_gd(d: usize, out: *mut *mut RmGraph) -> RmStatus {
    guard(|| write_graph(out, build_gd(d)?.graph))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_hoffman_singleton(out: *mut *mut RmGraph) -> RmStatus {
    guard(|| write_graph(out, hoffman_singleton()))
}

/// Sum of distances from `v` to every vertex.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_vertex_status(g: *const RmGraph, v: usize, out: *mut u64) -> RmStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            }
            .into());
        }
        write_out(out, status(g, v)?)
    })
}

/// Sum of all vertex statuses (twice the Wiener index).
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_total_status(g: *const RmGraph, out: *mut u64) -> RmStatus {
    guard(|| write_out(out, status_vector(graph_ref(g)?)?.total))
}

/// # Safety
/// `g` must be a live handle; `radius` and `diameter` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_radius_diameter(
    g: *const RmGraph,
    radius: *mut usize,
    diameter: *mut usize,
) -> RmStatus {
    guard(|| {
        if radius.is_null() || diameter.is_null() {
            return Err(null("output pointer"));
        }
        let (r, d) = radius_diameter(graph_ref(g)?)?;
        write_out(radius, r)?;
        write_out(diameter, d)
    })
}

/// Checks order `M(d,k)`, `d`-regularity, radius `k` and diameter `k+1`.
/// A negative verdict is reported in `out`, not as an error.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_verify_radial_moore(
    g: *const RmGraph,
    d: usize,
    k: usize,
    out: *mut RmRadialReport,
) -> RmStatus {
    guard(|| {
        let r = verify_radial_moore(graph_ref(g)?, d, k);
        write_out(
            out,
            RmRadialReport {
                is_radial_moore: r.is_radial_moore,
                order_ok: r.order_ok,
                regular_ok: r.regular_ok,
                connected: r.connected,
                radius: r.radius.unwrap_or(0),
                diameter: r.diameter.unwrap_or(0),
                central_count: r.central_count(),
            },
        )
    })
}

/// `M(d,k)` as a decimal string.
///
/// # Safety
/// `out` must be writable; free the result with `rm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn rm_moore_bound(d: u64, k: u64, out: *mut *mut c_char) -> RmStatus {
    guard(|| write_string(out, moore_bound(d, k)?.to_string()))
}

/// Status of any vertex of a Moore graph, as a decimal string.
///
/// # Safety
/// `out` must be writable; free the result with `rm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn rm_moore_status(d: u64, k: u64, out: *mut *mut c_char) -> RmStatus {
    guard(|| write_string(out, moore_status(d, k)?.to_string()))
}

/// Upper bound on the number of central vertices, as a decimal string.
///
/// # Safety
/// `out` must be writable; free the result with `rm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn rm_central_upper_bound(d: u64, k: u64, out: *mut *mut c_char) -> RmStatus {
    guard(|| write_string(out, central_upper_bound(d, k)?.to_string()))
}

/// Order of the automorphism group as a decimal string. Fails with
/// `RM_STATUS_TIMEOUT` once `budget` search nodes are spent.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rm_automorphism_group_order(
    g: *const RmGraph,
    budget: u64,
    out: *mut *mut c_char,
) -> RmStatus {
    guard(|| {
        write_string(
            out,
            automorphism_group_order(graph_ref(g)?, budget)?.to_string(),
        )
    })
}
