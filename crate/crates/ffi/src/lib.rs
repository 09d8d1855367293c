//! C ABI over `sqo-core`.
//!
//! Objects cross the boundary as opaque heap handles that the caller
//! releases with the matching `_free` function. Every fallible call returns
//! an [`SqoStatus`]; on failure a message is available from
//! [`sqo_last_error`] on the same thread until the next failing call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sqo_core::coloring::{greedy_lpq, LpqParams};
use sqo_core::constructions::by_name;
use sqo_core::discharging::audit;
use sqo_core::ordering::{good_ordering, GoodOrdering, OrderingOutcome};
use sqo_core::{square, Error, Graph, PlaneGraph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqoStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidInput = 2,
    Disconnected = 3,
    /// No good ordering exists at the requested thresholds.
    Stuck = 4,
    BufferTooSmall = 5,
    Budget = 6,
    Panic = 99,
}

pub struct SqoGraph {
    inner: Graph,
}

pub struct SqoPlaneGraph {
    inner: PlaneGraph,
}

pub struct SqoOrdering {
    inner: GoodOrdering,
}

/// Final state of a discharging run. The total is `total_num / total_den`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SqoAudit {
    pub conserved: bool,
    pub faces_nonnegative: bool,
    pub high_vertices_nonnegative: bool,
    pub negative_vertices: usize,
    pub negative_faces: usize,
    pub total_num: i64,
    pub total_den: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(status: SqoStatus, message: impl Into<String>) -> SqoStatus {
    set_error(message.into());
    status
}

fn from_error(e: Error) -> SqoStatus {
    let status = match e {
        Error::Disconnected => SqoStatus::Disconnected,
        Error::Budget(_) => SqoStatus::Budget,
        _ => SqoStatus::InvalidInput,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into [`SqoStatus::Panic`].
fn guard(f: impl FnOnce() -> SqoStatus) -> SqoStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(SqoStatus::Panic, "internal panic"))
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sqo_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a simple graph on `n` vertices from `edge_count` pairs stored
/// flat in `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sqo_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut SqoGraph,
) -> SqoStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return fail(SqoStatus::NullArgument, "null argument");
        }
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        match Graph::from_edges(n, flat.chunks_exact(2).map(|p| (p[0], p[1]))) {
            Ok(g) => {
                *out = boxed(SqoGraph { inner: g });
                SqoStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sqo_graph_free(g: *mut SqoGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sqo_graph_vertex_count(g: *const SqoGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.vertex_count())
}

/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sqo_graph_edge_count(g: *const SqoGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sqo_graph_max_degree(g: *const SqoGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.max_degree())
}

/// The square of `g` as a new graph handle.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sqo_graph_square(g: *const SqoGraph, out: *mut *mut SqoGraph) -> SqoStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(SqoStatus::NullArgument, "null argument");
        };
        *out = boxed(SqoGraph {
            inner: square(&g.inner).into_graph(),
        });
        SqoStatus::Ok
    })
}

/// Generates a named construction (`"gk"`, `"wegner"`, `"dvorak"`, ...).
///
/// # Safety
/// `family` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sqo_plane_generate(
    family: *const c_char,
    param: usize,
    out: *mut *mut SqoPlaneGraph,
) -> SqoStatus {
    guard(|| {
        if family.is_null() || out.is_null() {
            return fail(SqoStatus::NullArgument, "null argument");
        }
        let Ok(name) = CStr::from_ptr(family).to_str() else {
            return fail(SqoStatus::InvalidInput, "family name is not UTF-8");
        };
        match by_name(name, param) {
            Ok(pg) => {
                *out = boxed(SqoPlaneGraph { inner: pg });
                SqoStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `pg` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sqo_plane_free(pg: *mut SqoPlaneGraph) {
    if !pg.is_null() {
        drop(Box::from_raw(pg));
    }
}

/// Copies the underlying graph into a new handle.
///
/// # Safety
/// `pg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sqo_plane_graph(pg: *const SqoPlaneGraph, out: *mut *mut SqoGraph) -> SqoStatus {
    guard(|| {
        let (Some(pg), false) = (pg.as_ref(), out.is_null()) else {
            return fail(SqoStatus::NullArgument, "null argument");
        };
        *out = boxed(SqoGraph {
            inner: pg.inner.graph().clone(),
        });
        SqoStatus::Ok
    })
}

/// Extracts a good ordering. Zero for `d_param` or `t_g` selects the
/// defaults (`max(Δ, 32)` and 3). On [`SqoStatus::Stuck`], `stuck_count`
/// (if non-null) receives the size of the certificate.
///
/// # Safety
/// `g` must be a live handle, `out` writable, `stuck_count` null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sqo_good_ordering(
    g: *const SqoGraph,
    d_param: usize,
    t_g: usize,
    out: *mut *mut SqoOrdering,
    stuck_count: *mut usize,
) -> SqoStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(SqoStatus::NullArgument, "null argument");
        };
        let pick = |x: usize| (x != 0).then_some(x);
        match good_ordering(&g.inner, pick(d_param), pick(t_g)) {
            OrderingOutcome::Good(o) => {
                *out = boxed(SqoOrdering { inner: o });
                SqoStatus::Ok
            }
            OrderingOutcome::Stuck(cert) => {
                if !stuck_count.is_null() {
                    *stuck_count = cert.remaining.len();
                }
                fail(SqoStatus::Stuck, format!("stuck on {} vertices", cert.remaining.len()))
            }
        }
    })
}

/// # Safety
/// `o` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sqo_ordering_free(o: *mut SqoOrdering) {
    if !o.is_null() {
        drop(Box::from_raw(o));
    }
}

/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sqo_ordering_len(o: *const SqoOrdering) -> usize {
    o.as_ref().map_or(0, |o| o.inner.order().len())
}

/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sqo_ordering_max_back_g(o: *const SqoOrdering) -> usize {
    o.as_ref().map_or(0, |o| o.inner.max_back_g())
}

/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sqo_ordering_max_back_sq(o: *const SqoOrdering) -> usize {
    o.as_ref().map_or(0, |o| o.inner.max_back_sq())
}

/// Copies the ordering into `buf`, which must hold [`sqo_ordering_len`]
/// entries.
///
/// # Safety
/// `o` must be a live handle and `buf` writable for `len` entries.
#[no_mangle]
pub unsafe extern "C" fn sqo_ordering_copy(o: *const SqoOrdering, buf: *mut usize, len: usize) -> SqoStatus {
    guard(|| {
        let (Some(o), false) = (o.as_ref(), buf.is_null()) else {
            return fail(SqoStatus::NullArgument, "null argument");
        };
        let order = o.inner.order();
        if len < order.len() {
            return fail(SqoStatus::BufferTooSmall, format!("need {} entries", order.len()));
        }
        ptr::copy_nonoverlapping(order.as_ptr(), buf, order.len());
        SqoStatus::Ok
    })
}

/// Greedy L(p,q)-labeling of `g` along `o`. `labels` receives one label per
/// vertex and `span` the largest label.
///
/// # Safety
/// `g` and `o` must be live handles for the same graph; `labels` writable
/// for `len` entries; `span` null or writable.
#[no_mangle]
pub unsafe extern "C" fn sqo_greedy_lpq(
    g: *const SqoGraph,
    o: *const SqoOrdering,
    p: u32,
    q: u32,
    labels: *mut u32,
    len: usize,
    span: *mut u32,
) -> SqoStatus {
    guard(|| {
        let (Some(g), Some(o), false) = (g.as_ref(), o.as_ref(), labels.is_null()) else {
            return fail(SqoStatus::NullArgument, "null argument");
        };
        let n = g.inner.vertex_count();
        if len < n {
            return fail(SqoStatus::BufferTooSmall, format!("need {n} entries"));
        }
        let result = LpqParams::new(p, q).and_then(|params| greedy_lpq(&g.inner, o.inner.order(), params));
        match result {
            Ok(labeling) => {
                ptr::copy_nonoverlapping(labeling.labels().as_ptr(), labels, n);
                if !span.is_null() {
                    *span = labeling.span();
                }
                SqoStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Runs the discharging rules with parameter `d_param` (0 for
/// `max(Δ, 32)`) and summarizes the final charges.
///
/// # Safety
/// `pg` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sqo_discharge_audit(
    pg: *const SqoPlaneGraph,
    d_param: usize,
    out: *mut SqoAudit,
) -> SqoStatus {
    guard(|| {
        let (Some(pg), false) = (pg.as_ref(), out.is_null()) else {
            return fail(SqoStatus::NullArgument, "null argument");
        };
        let d = if d_param == 0 {
            pg.inner.graph().max_degree().max(32)
        } else {
            d_param
        };
        match audit(&pg.inner, d) {
            Ok(report) => {
                let total = &report.totals.last().expect("phases recorded").1;
                let (Ok(num), Ok(den)) = (i64::try_from(total.numer()), i64::try_from(total.denom())) else {
                    return fail(SqoStatus::InvalidInput, "total does not fit in 64 bits");
                };
                *out = SqoAudit {
                    conserved: report.conserved,
                    faces_nonnegative: report.faces_nonnegative,
                    high_vertices_nonnegative: report.high_vertices_nonnegative,
                    negative_vertices: report.negative_vertices.len(),
                    negative_faces: report.negative_faces.len(),
                    total_num: num,
                    total_den: den,
                };
                SqoStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}
