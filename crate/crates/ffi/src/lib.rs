//! C ABI over `orbitkit`.
//!
//! Graphs and orbit partitions are opaque heap handles, created by the
//! `*_from_*`/`*_compute` functions and released with the matching `*_free`.
//! Every fallible call returns an [`OrbitkitStatus`] and writes its result
//! through an out-pointer; on failure a message is available from
//! [`orbitkit_last_error`] until the next failing call on the same thread.
//! Strings returned through `char **` are owned by the caller and must be
//! released with [`orbitkit_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use orbitkit::aut::DEFAULT_NODE_BUDGET;
use orbitkit::graph::{parse_edge_list, parse_graph6, to_graph6};
use orbitkit::invariants::{evaluate_fast, evaluate_naive, table_from_values, Property};
use orbitkit::orbits::{orbits_with_budget, OrbitPartition};
use orbitkit::products::{product_with_limit, ProductKind, DEFAULT_PRODUCT_LIMIT};
use orbitkit::{Error, Graph};

/// Result of every fallible call. Values 2 to 6 match the exit codes of the
/// `orbitkit` command-line tool.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitkitStatus {
    Ok = 0,
    Error = 1,
    ParseError = 2,
    ResourceLimit = 3,
    SizeLimit = 4,
    UnknownName = 5,
    Disconnected = 6,
    NullPointer = 7,
    InvalidArgument = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitkitProduct {
    Cartesian = 0,
    Strong = 1,
    Corona = 2,
    Join = 3,
}

impl From<OrbitkitProduct> for ProductKind {
    fn from(k: OrbitkitProduct) -> Self {
        match k {
            OrbitkitProduct::Cartesian => ProductKind::Cartesian,
            OrbitkitProduct::Strong => ProductKind::Strong,
            OrbitkitProduct::Corona => ProductKind::Corona,
            OrbitkitProduct::Join => ProductKind::Join,
        }
    }
}

/// Opaque graph handle.
pub struct OrbitkitGraph(Graph);

/// Opaque orbit partition handle. Independent of the graph it came from.
pub struct OrbitkitOrbits(OrbitPartition);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> OrbitkitStatus {
    match e.exit_code() {
        2 => OrbitkitStatus::ParseError,
        3 => OrbitkitStatus::ResourceLimit,
        4 => OrbitkitStatus::SizeLimit,
        5 => OrbitkitStatus::UnknownName,
        6 => OrbitkitStatus::Disconnected,
        _ => match e {
            Error::VertexOutOfRange { .. } => OrbitkitStatus::InvalidArgument,
            _ => OrbitkitStatus::Error,
        },
    }
}

struct Failure(OrbitkitStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(OrbitkitStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> OrbitkitStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OrbitkitStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            OrbitkitStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(OrbitkitStatus::ParseError, format!("{what} is not valid UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(OrbitkitStatus::Error, "string contains NUL".into()))?;
    write_out(out, c.into_raw())
}

unsafe fn write_graph(out: *mut *mut OrbitkitGraph, g: Graph) -> Result<(), Failure> {
    write_out(out, Box::into_raw(Box::new(OrbitkitGraph(g))))
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn orbitkit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn orbitkit_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses one graph6 record.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut OrbitkitGraph,
) -> OrbitkitStatus {
    guard(|| write_graph(out, parse_graph6(str_arg(text, "text")?)?))
}

/// Parses an edge list: a line `n m` followed by `m` lines `u v`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut OrbitkitGraph,
) -> OrbitkitStatus {
    guard(|| write_graph(out, parse_edge_list(str_arg(text, "text")?)?))
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `endpoints` (`2 * edge_count` entries).
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` readable values (it may be
/// NULL when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    edge_count: usize,
    out: *mut *mut OrbitkitGraph,
) -> OrbitkitStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if endpoints.is_null() {
            return Err(null("endpoints"));
        } else {
            let len = edge_count
                .checked_mul(2)
                .ok_or_else(|| Failure(OrbitkitStatus::InvalidArgument, "edge_count overflows".into()))?;
            std::slice::from_raw_parts(endpoints, len)
        };
        let edges = flat.chunks_exact(2).map(|e| (e[0], e[1]));
        write_graph(out, Graph::from_edges(n, edges)?)
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_graph_free(g: *mut OrbitkitGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_graph_order(g: *const OrbitkitGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Number of edges; 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_graph_edge_count(g: *const OrbitkitGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// graph6 encoding of `g`. Free the result with [`orbitkit_string_free`].
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_graph_to_graph6(g: *const OrbitkitGraph, out: *mut *mut c_char) -> OrbitkitStatus {
    guard(|| write_string(out, to_graph6(&ref_arg(g, "graph")?.0)))
}

/// Orbit partition of Aut(`g`). `node_budget` 0 selects the default.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_orbits_compute(
    g: *const OrbitkitGraph,
    node_budget: u64,
    out: *mut *mut OrbitkitOrbits,
) -> OrbitkitStatus {
    guard(|| {
        let g = &ref_arg(g, "graph")?.0;
        let budget = if node_budget == 0 { DEFAULT_NODE_BUDGET } else { node_budget };
        let p = orbits_with_budget(g, budget)?.clone();
        write_out(out, Box::into_raw(Box::new(OrbitkitOrbits(p))))
    })
}

/// # Safety
/// `o` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_orbits_free(o: *mut OrbitkitOrbits) {
    if !o.is_null() {
        drop(Box::from_raw(o));
    }
}

/// Number of orbits (the transitivity number); 0 for NULL.
///
/// # Safety
/// `o` must be NULL or a live orbits handle.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_orbits_count(o: *const OrbitkitOrbits) -> usize {
    o.as_ref().map_or(0, |o| o.0.count())
}

/// Copies the representatives (smallest vertex of each orbit, in orbit
/// order) into `buf`, which must hold at least
/// [`orbitkit_orbits_count`] entries.
///
/// # Safety
/// `o` must be a live orbits handle and `buf` must point to `len` writable
/// values.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_orbits_representatives(
    o: *const OrbitkitOrbits,
    buf: *mut usize,
    len: usize,
) -> OrbitkitStatus {
    guard(|| {
        let reps = ref_arg(o, "orbits")?.0.representatives();
        if len < reps.len() {
            return Err(Failure(
                OrbitkitStatus::InvalidArgument,
                format!("buffer holds {len} entries, {} needed", reps.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(reps.as_ptr(), buf, reps.len());
        Ok(())
    })
}

/// Index of the orbit containing `v`.
///
/// # Safety
/// `o` must be a live orbits handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_orbits_orbit_of(
    o: *const OrbitkitOrbits,
    v: usize,
    out: *mut usize,
) -> OrbitkitStatus {
    guard(|| {
        let p = &ref_arg(o, "orbits")?.0;
        if v >= p.order() {
            return Err(Error::VertexOutOfRange { vertex: v, n: p.order() }.into());
        }
        write_out(out, p.orbit_index(v))
    })
}

/// `{"n", "r", "orbits", "representatives"}` as JSON.
///
/// # Safety
/// `o` must be a live orbits handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_orbits_to_json(o: *const OrbitkitOrbits, out: *mut *mut c_char) -> OrbitkitStatus {
    guard(|| write_string(out, ref_arg(o, "orbits")?.0.to_json()))
}

/// Transitivity number of `g` with the default search budget.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_transitivity_number(g: *const OrbitkitGraph, out: *mut usize) -> OrbitkitStatus {
    guard(|| write_out(out, orbitkit::orbits::transitivity_number(&ref_arg(g, "graph")?.0)?))
}

/// Whether some automorphism of `g` maps `u` to `v`.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_interchangeable(
    g: *const OrbitkitGraph,
    u: usize,
    v: usize,
    out: *mut bool,
) -> OrbitkitStatus {
    guard(|| write_out(out, orbitkit::orbits::interchangeable(&ref_arg(g, "graph")?.0, u, v)?))
}

/// Builds a product of `g` and `h`. `vertex_limit` 0 selects the default.
///
/// # Safety
/// `g` and `h` must be live graph handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_product(
    kind: OrbitkitProduct,
    g: *const OrbitkitGraph,
    h: *const OrbitkitGraph,
    vertex_limit: usize,
    out: *mut *mut OrbitkitGraph,
) -> OrbitkitStatus {
    guard(|| {
        let limit = if vertex_limit == 0 { DEFAULT_PRODUCT_LIMIT } else { vertex_limit };
        let (p, _) = product_with_limit(kind.into(), &ref_arg(g, "g")?.0, &ref_arg(h, "h")?.0, limit)?;
        write_graph(out, p)
    })
}

/// Property report as JSON:
/// `{"property", "r", "per_orbit": [{"rep", "value"}], "distinct_values"}`.
/// `name` is one of `degree`, `eccentricity`, `total_distance`,
/// `betweenness`. With `fast`, the property is evaluated once per orbit.
///
/// # Safety
/// `g` must be a live graph handle, `name` a NUL-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orbitkit_property_json(
    g: *const OrbitkitGraph,
    name: *const c_char,
    fast: bool,
    out: *mut *mut c_char,
) -> OrbitkitStatus {
    guard(|| {
        let g = &ref_arg(g, "graph")?.0;
        let property: Property = str_arg(name, "name")?.parse()?;
        let orbits = orbitkit::orbits::orbits(g)?;
        let table = if fast {
            evaluate_fast(g, property, orbits)?
        } else {
            table_from_values(property, orbits, evaluate_naive(g, property)?)
        };
        write_string(out, table.report_json())
    })
}
