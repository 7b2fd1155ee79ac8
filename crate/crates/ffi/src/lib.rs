//! C ABI for genus-forge.
//!
//! Graphs and engines are opaque handles created and freed through this
//! API. Every fallible call returns a [`GfStatus`]; results come back
//! through out-pointers that are left untouched on failure. Panics never
//! cross the boundary and are reported as `GF_STATUS_INTERNAL`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use genus_forge::catalog::{Catalog, ValidationOptions};
use genus_forge::embedding::{Engine, ParameterProfile};
use genus_forge::graph::{parse_records, GraphRecord, SimpleGraph, TerminalGraph};
use genus_forge::torus::{enumerate_torus_c2, ObstructionRecord, ValidatedCatalog};
use genus_forge::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidGraph = 2,
    Parse = 3,
    /// The call needs terminals and the graph has none.
    NoTerminals = 4,
    /// The terminals are adjacent where that is not allowed.
    XyPresent = 5,
    IndexOutOfRange = 6,
    Catalog = 7,
    CountMismatch = 8,
    Internal = 9,
}

impl From<&Error> for GfStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Io(_) => GfStatus::Parse,
            Error::XyPresent | Error::PartsMustAvoidXy => GfStatus::XyPresent,
            Error::Catalog(_) => GfStatus::Catalog,
            Error::CountMismatch(_) => GfStatus::CountMismatch,
            Error::ClassificationViolation(_) | Error::BadRotation(_) => GfStatus::Internal,
            _ => GfStatus::InvalidGraph,
        }
    }
}

/// Opaque graph, optionally carrying two terminals.
pub struct GfGraph {
    graph: SimpleGraph,
    terminals: Option<TerminalGraph>,
}

/// Opaque genus engine with its profile cache. Safe to share between
/// threads.
pub struct GfEngine {
    engine: Engine,
}

/// Opaque list of torus obstructions.
pub struct GfObstructions {
    records: Vec<ObstructionRecord>,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GfProfile {
    pub g: u32,
    pub g_plus: u32,
    pub theta: u32,
    pub epsilon: u32,
    pub epsilon_plus: u32,
    pub g_a: u32,
    pub g_a_plus: u32,
}

impl From<ParameterProfile> for GfProfile {
    fn from(p: ParameterProfile) -> Self {
        GfProfile {
            g: p.g as u32,
            g_plus: p.g_plus as u32,
            theta: p.theta as u32,
            epsilon: p.epsilon as u32,
            epsilon_plus: p.epsilon_plus as u32,
            g_a: p.g_a as u32,
            g_a_plus: p.g_a_plus as u32,
        }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GfTorusCounts {
    pub pairs: u32,
    pub filtered: u32,
    pub obstructions: u32,
    pub t2_pairs: u32,
    pub t2_survivors: u32,
}

fn guard(f: impl FnOnce() -> GfStatus) -> GfStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(GfStatus::Internal)
}

fn boxed<T>(value: T, out: *mut *mut T) -> GfStatus {
    // SAFETY: callers check `out` for null first.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    GfStatus::Ok
}

fn terminals(g: &GfGraph) -> Result<&TerminalGraph, GfStatus> {
    g.terminals.as_ref().ok_or(GfStatus::NoTerminals)
}

/// Static description of a status code. Never null, never freed.
#[no_mangle]
pub extern "C" fn gf_status_message(status: GfStatus) -> *const c_char {
    let s: &'static CStr = match status {
        GfStatus::Ok => c"ok",
        GfStatus::NullPointer => c"null pointer argument",
        GfStatus::InvalidGraph => c"invalid graph",
        GfStatus::Parse => c"malformed graph text",
        GfStatus::NoTerminals => c"graph has no terminals",
        GfStatus::XyPresent => c"terminals are adjacent",
        GfStatus::IndexOutOfRange => c"index out of range",
        GfStatus::Catalog => c"catalog failed validation",
        GfStatus::CountMismatch => c"enumeration counts differ from the expected ones",
        GfStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

#[no_mangle]
pub extern "C" fn gf_engine_new(decompose: bool) -> *mut GfEngine {
    catch_unwind(|| Box::into_raw(Box::new(GfEngine { engine: Engine::new(decompose) }))).unwrap_or(ptr::null_mut())
}

/// # Safety
/// `engine` must come from [`gf_engine_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gf_engine_free(engine: *mut GfEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be null
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_graph_new(n: u32, edges: *const u32, edge_count: usize, out: *mut *mut GfGraph) -> GfStatus {
    if out.is_null() || (edges.is_null() && edge_count > 0) {
        return GfStatus::NullPointer;
    }
    let flat: &[u32] = if edge_count == 0 { &[] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
    guard(|| {
        let pairs = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        match SimpleGraph::from_edges(n as usize, pairs) {
            Ok(graph) => boxed(GfGraph { graph, terminals: None }, out),
            Err(e) => (&e).into(),
        }
    })
}

/// Parses the first record of `text` in the plain or XY-labelled graph
/// format. Terminals are kept when the record has them.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gf_graph_parse(text: *const c_char, out: *mut *mut GfGraph) -> GfStatus {
    if text.is_null() || out.is_null() {
        return GfStatus::NullPointer;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else { return GfStatus::Parse };
    guard(|| match parse_records(text) {
        Err(e) => (&e).into(),
        Ok(records) => match records.into_iter().next() {
            None => GfStatus::Parse,
            Some(r) => {
                let terminals = r.terminal_graph();
                let graph = match &r {
                    GraphRecord::Plain(_) => r.simple_graph(),
                    _ => terminals.as_ref().map_or_else(|| r.simple_graph(), |t| t.graph().clone()),
                };
                boxed(GfGraph { graph, terminals }, out)
            }
        },
    })
}

/// Sets (or replaces) the terminals.
///
/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_graph_set_terminals(graph: *mut GfGraph, x: u32, y: u32) -> GfStatus {
    let Some(g) = graph.as_mut() else { return GfStatus::NullPointer };
    guard(|| match TerminalGraph::new(g.graph.clone(), x as usize, y as usize) {
        Ok(t) => {
            g.terminals = Some(t);
            GfStatus::Ok
        }
        Err(e) => (&e).into(),
    })
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn gf_graph_vertex_count(graph: *const GfGraph) -> u32 {
    graph.as_ref().map_or(0, |g| g.graph.vertex_count() as u32)
}

/// # Safety
/// `graph` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn gf_graph_edge_count(graph: *const GfGraph) -> u32 {
    graph.as_ref().map_or(0, |g| g.graph.edge_count() as u32)
}

/// # Safety
/// `graph` must come from this API and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gf_graph_free(graph: *mut GfGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Minimum orientable genus of the graph (terminals ignored).
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gf_min_genus(engine: *const GfEngine, graph: *const GfGraph, out: *mut u32) -> GfStatus {
    let (Some(e), Some(g)) = (engine.as_ref(), graph.as_ref()) else { return GfStatus::NullPointer };
    if out.is_null() {
        return GfStatus::NullPointer;
    }
    guard(|| {
        *out = e.engine.min_genus(&g.graph) as u32;
        GfStatus::Ok
    })
}

/// The seven two-terminal parameters.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gf_profile(engine: *const GfEngine, graph: *const GfGraph, out: *mut GfProfile) -> GfStatus {
    let (Some(e), Some(g)) = (engine.as_ref(), graph.as_ref()) else { return GfStatus::NullPointer };
    if out.is_null() {
        return GfStatus::NullPointer;
    }
    guard(|| match terminals(g) {
        Ok(t) => {
            *out = e.engine.profile(t).into();
            GfStatus::Ok
        }
        Err(s) => s,
    })
}

/// Genus of the xy-sum of two parts predicted from their profiles.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gf_two_sum_genus(
    engine: *const GfEngine,
    part1: *const GfGraph,
    part2: *const GfGraph,
    with_edge: bool,
    out: *mut u32,
) -> GfStatus {
    let (Some(e), Some(a), Some(b)) = (engine.as_ref(), part1.as_ref(), part2.as_ref()) else {
        return GfStatus::NullPointer;
    };
    if out.is_null() {
        return GfStatus::NullPointer;
    }
    guard(|| {
        let (a, b) = match (terminals(a), terminals(b)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match e.engine.two_sum_genus(a, b, with_edge) {
            Ok(s) => {
                *out = s.genus as u32;
                GfStatus::Ok
            }
            Err(err) => (&err).into(),
        }
    })
}

/// Whether the graph is a minor-minimal obstruction for the surface of
/// genus `k`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gf_is_obstruction(engine: *const GfEngine, graph: *const GfGraph, k: u32, out: *mut bool) -> GfStatus {
    let (Some(e), Some(g)) = (engine.as_ref(), graph.as_ref()) else { return GfStatus::NullPointer };
    if out.is_null() {
        return GfStatus::NullPointer;
    }
    guard(|| {
        *out = e.engine.is_obstruction(&g.graph, k as usize);
        GfStatus::Ok
    })
}

/// Validates the shipped catalog and builds the connectivity-2 torus
/// obstructions. `counts` may be null; `out` receives a list handle.
///
/// # Safety
/// `engine` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gf_enumerate_torus(
    engine: *const GfEngine,
    counts: *mut GfTorusCounts,
    out: *mut *mut GfObstructions,
) -> GfStatus {
    let Some(e) = engine.as_ref() else { return GfStatus::NullPointer };
    if out.is_null() {
        return GfStatus::NullPointer;
    }
    guard(|| {
        let validated = match ValidatedCatalog::new(&e.engine, Catalog::shipped(), &ValidationOptions::default()) {
            Ok(v) => v,
            Err(err) => return (&err).into(),
        };
        match enumerate_torus_c2(&e.engine, &validated) {
            Ok(en) => {
                if let Some(c) = counts.as_mut() {
                    *c = GfTorusCounts {
                        pairs: en.counts.pairs as u32,
                        filtered: en.counts.filtered as u32,
                        obstructions: en.counts.obstructions as u32,
                        t2_pairs: en.counts.t2_pairs as u32,
                        t2_survivors: en.counts.t2_survivors as u32,
                    };
                }
                boxed(GfObstructions { records: en.records }, out)
            }
            Err(err) => (&err).into(),
        }
    })
}

/// # Safety
/// `list` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn gf_obstructions_len(list: *const GfObstructions) -> usize {
    list.as_ref().map_or(0, |l| l.records.len())
}

/// A fresh graph handle for record `index`, with the glued pair as
/// terminals. Free it with [`gf_graph_free`].
///
/// # Safety
/// `list` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gf_obstructions_get(list: *const GfObstructions, index: usize, out: *mut *mut GfGraph) -> GfStatus {
    let Some(l) = list.as_ref() else { return GfStatus::NullPointer };
    if out.is_null() {
        return GfStatus::NullPointer;
    }
    let Some(r) = l.records.get(index) else { return GfStatus::IndexOutOfRange };
    guard(|| {
        let (x, y) = r.terminals();
        let terminals = TerminalGraph::new(r.graph.clone(), x, y).ok();
        boxed(GfGraph { graph: r.graph.clone(), terminals }, out)
    })
}

/// # Safety
/// `list` must come from [`gf_enumerate_torus`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gf_obstructions_free(list: *mut GfObstructions) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}
