//! C interface: polygons and support graphs behind opaque handles, status codes
//! for every fallible call. The generated header is `include/rectcover.h`.

use rectcover::builder::{build_complete_support, subfamily_support};
use rectcover::geom::{polygon_from_vertices, SimplePolygon};
use rectcover::hypergraph::{verify_support, CoverTarget, SupportGraph};
use rectcover::maxrect::{enumerate_maximal, RectFamily};
use rectcover::planar::lr_planarity;
use rectcover::solver::{exact_cover, local_search_cover};
use rectcover::Error;
use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidPolygon = 2,
    IndexOutOfRange = 3,
    BadParameter = 4,
    LimitExceeded = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RcTarget {
    Boundary = 0,
    Corner = 1,
    Interior = 2,
}

impl From<RcTarget> for CoverTarget {
    fn from(t: RcTarget) -> CoverTarget {
        match t {
            RcTarget::Boundary => CoverTarget::Boundary,
            RcTarget::Corner => CoverTarget::Corner,
            RcTarget::Interior => CoverTarget::Interior,
        }
    }
}

/// A polygon with its maximal rectangles in canonical order.
pub struct RcPolygon {
    poly: SimplePolygon,
    family: RectFamily,
}

/// A support graph over some family of the polygon's maximal rectangles.
pub struct RcGraph {
    graph: SupportGraph,
}

fn status_of(e: &Error) -> RcStatus {
    match e {
        Error::LimitExceeded(_) => RcStatus::LimitExceeded,
        Error::BadParameter(_) | Error::NotMaximalMember(_) => RcStatus::BadParameter,
        Error::NotOrthogonal
        | Error::SelfIntersecting
        | Error::CollinearRedundantVertex
        | Error::TooFewVertices
        | Error::CoordinateOutOfRange(_)
        | Error::Degenerate(..) => RcStatus::InvalidPolygon,
        _ => RcStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> RcStatus) -> RcStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(RcStatus::Internal)
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn rc_status_message(status: RcStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        RcStatus::Ok => b"ok\0",
        RcStatus::NullPointer => b"null pointer argument\0",
        RcStatus::InvalidPolygon => b"invalid polygon\0",
        RcStatus::IndexOutOfRange => b"index out of range\0",
        RcStatus::BadParameter => b"bad parameter\0",
        RcStatus::LimitExceeded => b"search limit exceeded\0",
        RcStatus::Internal => b"internal error\0",
    };
    s.as_ptr().cast()
}

/// Builds a polygon from `n_vertices` points stored as `x0, y0, x1, y1, ...`.
///
/// # Safety
/// `xy` must point to `2 * n_vertices` readable `int64_t` values and `out` must be
/// writable. On success `*out` owns a handle to release with `rc_polygon_free`.
#[no_mangle]
pub unsafe extern "C" fn rc_polygon_new(xy: *const i64, n_vertices: usize, out: *mut *mut RcPolygon) -> RcStatus {
    if xy.is_null() || out.is_null() {
        return RcStatus::NullPointer;
    }
    let raw = std::slice::from_raw_parts(xy, 2 * n_vertices);
    guard(|| {
        let v: Vec<(i64, i64)> = raw.chunks(2).map(|c| (c[0], c[1])).collect();
        match polygon_from_vertices(&v) {
            Ok(poly) => {
                let family = enumerate_maximal(&poly);
                *out = Box::into_raw(Box::new(RcPolygon { poly, family }));
                RcStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `p` must be null or a handle from `rc_polygon_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rc_polygon_free(p: *mut RcPolygon) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of maximal rectangles.
///
/// # Safety
/// `p` must be a live polygon handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_maximal_count(p: *const RcPolygon, out: *mut usize) -> RcStatus {
    let (Some(p), false) = (p.as_ref(), out.is_null()) else { return RcStatus::NullPointer };
    *out = p.family.len();
    RcStatus::Ok
}

/// Maximal rectangle `index` as `x1, y1, x2, y2`.
///
/// # Safety
/// `p` must be a live polygon handle and `out` must hold 4 writable `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn rc_maximal_get(p: *const RcPolygon, index: usize, out: *mut i64) -> RcStatus {
    let (Some(p), false) = (p.as_ref(), out.is_null()) else { return RcStatus::NullPointer };
    if index >= p.family.len() {
        return RcStatus::IndexOutOfRange;
    }
    let r = p.family.get(index);
    let dst = std::slice::from_raw_parts_mut(out, 4);
    dst.copy_from_slice(&[r.x1, r.y1, r.x2, r.y2]);
    RcStatus::Ok
}

/// Planar support of all maximal rectangles.
///
/// # Safety
/// `p` must be a live polygon handle and `out` writable. Release the graph with `rc_graph_free`.
#[no_mangle]
pub unsafe extern "C" fn rc_complete_support(p: *const RcPolygon, out: *mut *mut RcGraph) -> RcStatus {
    let (Some(p), false) = (p.as_ref(), out.is_null()) else { return RcStatus::NullPointer };
    guard(|| {
        *out = Box::into_raw(Box::new(RcGraph { graph: build_complete_support(&p.poly) }));
        RcStatus::Ok
    })
}

/// Planar support of the maximal rectangles at `indices`; graph vertex `i` is
/// the `i`-th smallest selected index.
///
/// # Safety
/// `p` must be a live polygon handle, `indices` must hold `n` readable values
/// (may be null when `n` is 0), and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_subfamily_support(p: *const RcPolygon, indices: *const usize, n: usize, out: *mut *mut RcGraph) -> RcStatus {
    let (Some(p), false) = (p.as_ref(), out.is_null()) else { return RcStatus::NullPointer };
    if indices.is_null() && n > 0 {
        return RcStatus::NullPointer;
    }
    let mut idx: Vec<usize> = if n == 0 { Vec::new() } else { std::slice::from_raw_parts(indices, n).to_vec() };
    if idx.iter().any(|&i| i >= p.family.len()) {
        return RcStatus::IndexOutOfRange;
    }
    idx.sort_unstable();
    idx.dedup();
    guard(|| match subfamily_support(&p.poly, &p.family.select(&idx)) {
        Ok(graph) => {
            *out = Box::into_raw(Box::new(RcGraph { graph }));
            RcStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// # Safety
/// `g` must be null or a graph handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_free(g: *mut RcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle; the out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_size(g: *const RcGraph, vertices: *mut usize, edges: *mut usize) -> RcStatus {
    let (Some(g), false, false) = (g.as_ref(), vertices.is_null(), edges.is_null()) else { return RcStatus::NullPointer };
    *vertices = g.graph.n;
    *edges = g.graph.edge_count();
    RcStatus::Ok
}

/// Edge `index` in ascending order, endpoints `a < b`.
///
/// # Safety
/// `g` must be a live graph handle; `a` and `b` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_edge(g: *const RcGraph, index: usize, a: *mut usize, b: *mut usize) -> RcStatus {
    let (Some(g), false, false) = (g.as_ref(), a.is_null(), b.is_null()) else { return RcStatus::NullPointer };
    let Some(&(x, y)) = g.graph.edges.iter().nth(index) else { return RcStatus::IndexOutOfRange };
    *a = x;
    *b = y;
    RcStatus::Ok
}

/// Whether `g` is planar and supports every boundary witness of the selected family.
///
/// # Safety
/// `p` and `g` must be live handles, `indices` as in `rc_subfamily_support`, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_graph_check(
    p: *const RcPolygon,
    g: *const RcGraph,
    indices: *const usize,
    n: usize,
    out: *mut bool,
) -> RcStatus {
    let (Some(p), Some(g), false) = (p.as_ref(), g.as_ref(), out.is_null()) else { return RcStatus::NullPointer };
    if indices.is_null() && n > 0 {
        return RcStatus::NullPointer;
    }
    let mut idx: Vec<usize> = if n == 0 { Vec::new() } else { std::slice::from_raw_parts(indices, n).to_vec() };
    if idx.iter().any(|&i| i >= p.family.len()) {
        return RcStatus::IndexOutOfRange;
    }
    idx.sort_unstable();
    idx.dedup();
    let fam = p.family.select(&idx);
    if g.graph.n != fam.len() {
        return RcStatus::BadParameter;
    }
    guard(|| {
        *out = lr_planarity(&g.graph).is_planar() && verify_support(&p.poly, &fam, &g.graph, CoverTarget::Boundary).is_empty();
        RcStatus::Ok
    })
}

/// Cover size: local search with swap size `k` when `exact` is false, otherwise
/// branch and bound limited to `node_limit` nodes.
///
/// # Safety
/// `p` must be a live polygon handle and `size` writable.
#[no_mangle]
pub unsafe extern "C" fn rc_cover_size(
    p: *const RcPolygon,
    target: RcTarget,
    k: usize,
    exact: bool,
    node_limit: usize,
    size: *mut usize,
) -> RcStatus {
    let (Some(p), false) = (p.as_ref(), size.is_null()) else { return RcStatus::NullPointer };
    if !exact && k == 0 {
        return RcStatus::BadParameter;
    }
    guard(|| {
        let sol = if exact { exact_cover(&p.poly, target.into(), node_limit) } else { Ok(local_search_cover(&p.poly, target.into(), k)) };
        match sol {
            Ok(s) => {
                *size = s.size();
                RcStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}
