//! Witness points, hyperedges, kernels and support verification.

use crate::error::{Error, Result};
use crate::geom::{Point, SimplePolygon};
use crate::maxrect::RectFamily;
use std::collections::{BTreeSet, HashMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoverTarget {
    Boundary,
    Corner,
    Interior,
}

impl std::str::FromStr for CoverTarget {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "boundary" => Ok(CoverTarget::Boundary),
            "corner" => Ok(CoverTarget::Corner),
            "interior" => Ok(CoverTarget::Interior),
            _ => Err(format!("unknown target {s}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSet {
    pub points: Vec<Point>,
    pub target: CoverTarget,
}

/// Finite probe set on which every hyperedge of the family is realized.
pub fn witness_points(poly: &SimplePolygon, fam: &RectFamily, target: CoverTarget) -> WitnessSet {
    let mut pts = BTreeSet::new();
    match target {
        CoverTarget::Boundary => {
            for s in poly.sides() {
                let (a, b) = s.span();
                let mut ev: BTreeSet<i64> = [a, b].into_iter().collect();
                for r in fam.iter() {
                    let (c0, c1) = if s.is_horizontal() { r.x_span() } else { r.y_span() };
                    for c in [c0, c1] {
                        if a <= c && c <= b {
                            ev.insert(c);
                        }
                    }
                }
                let ev: Vec<i64> = ev.into_iter().collect();
                let at = |t: i64| if s.is_horizontal() { Point::half(t, 2 * s.line()) } else { Point::half(2 * s.line(), t) };
                for (k, &e) in ev.iter().enumerate() {
                    pts.insert(at(2 * e));
                    if k + 1 < ev.len() {
                        pts.insert(at(e + ev[k + 1]));
                    }
                }
            }
        }
        CoverTarget::Corner => {
            for &(x, y) in poly.vertices() {
                pts.insert(Point::grid(x, y));
            }
        }
        CoverTarget::Interior => {
            let g = poly.grid();
            let xs: Vec<i64> =
                g.xs.iter().copied().chain(fam.iter().flat_map(|r| [r.x1, r.x2])).collect::<BTreeSet<_>>().into_iter().collect();
            let ys: Vec<i64> =
                g.ys.iter().copied().chain(fam.iter().flat_map(|r| [r.y1, r.y2])).collect::<BTreeSet<_>>().into_iter().collect();
            for wy in ys.windows(2) {
                for wx in xs.windows(2) {
                    let p = Point::half(wx[0] + wx[1], wy[0] + wy[1]);
                    if poly.contains_point(p) {
                        pts.insert(p);
                    }
                }
            }
        }
    }
    WitnessSet { points: pts.into_iter().collect(), target }
}

/// Indices of family members containing `p`.
pub fn hyperedge(fam: &RectFamily, p: Point) -> Vec<usize> {
    fam.members_at(p)
}

/// Each distinct hyperedge with the first witness realizing it, in witness order.
pub fn distinct_hyperedges(poly: &SimplePolygon, fam: &RectFamily, target: CoverTarget) -> Vec<(Point, Vec<usize>)> {
    let ws = witness_points(poly, fam, target);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in ws.points {
        let h = hyperedge(fam, p);
        if seen.insert(h.clone()) {
            out.push((p, h));
        }
    }
    out
}

/// Simple undirected graph on family indices with an optional outer-face vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SupportGraph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
    pub outer: Vec<usize>,
}

impl SupportGraph {
    pub fn new(n: usize) -> SupportGraph {
        SupportGraph { n, edges: BTreeSet::new(), outer: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> SupportGraph {
        let mut g = SupportGraph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    fn key(a: usize, b: usize) -> (usize, usize) {
        (a.min(b), a.max(b))
    }

    /// Adds `{a, b}`; loops are ignored. Returns whether the edge is new.
    pub fn add_edge(&mut self, a: usize, b: usize) -> bool {
        assert!(a < self.n && b < self.n, "edge ({a},{b}) out of range for n={}", self.n);
        a != b && self.edges.insert(Self::key(a, b))
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) -> bool {
        self.edges.remove(&Self::key(a, b))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&Self::key(a, b))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Connected components of the subgraph induced by `verts`, each sorted.
    pub fn induced_components(&self, verts: &[usize]) -> Vec<Vec<usize>> {
        let k = verts.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(verts[i], verts[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for i in 0..k {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(verts[i]);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().map(|mut g| {
            g.sort_unstable();
            g
        }).collect();
        out.sort();
        out
    }

    /// Graph on `keep` (in that order), renumbered `0..keep.len()`.
    pub fn induced(&self, keep: &[usize]) -> SupportGraph {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = SupportGraph::new(keep.len());
        for &(a, b) in &self.edges {
            if let (Some(&x), Some(&y)) = (pos.get(&a), pos.get(&b)) {
                g.add_edge(x, y);
            }
        }
        g.outer = self.outer.iter().filter_map(|v| pos.get(v).copied()).collect();
        g
    }
}

/// A witness whose hyperedge induces a disconnected subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub point: Point,
    pub components: Vec<Vec<usize>>,
}

/// Every witness hyperedge must induce a connected subgraph.
pub fn verify_support(poly: &SimplePolygon, fam: &RectFamily, graph: &SupportGraph, target: CoverTarget) -> Vec<Violation> {
    assert_eq!(graph.n, fam.len(), "graph size does not match family");
    let ws = witness_points(poly, fam, target);
    let mut cache: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
    let mut out = Vec::new();
    for p in ws.points {
        let h = hyperedge(fam, p);
        if h.len() < 2 {
            continue;
        }
        let comps = cache.entry(h.clone()).or_insert_with(|| graph.induced_components(&h));
        if comps.len() > 1 {
            out.push(Violation { point: p, components: comps.clone() });
        }
    }
    out
}

/// Intersection of all boundary hyperedges of size at least two.
/// With no such hyperedge, the whole family.
pub fn kernel(poly: &SimplePolygon, fam: &RectFamily) -> Vec<usize> {
    let mut k: Option<BTreeSet<usize>> = None;
    for (_, h) in distinct_hyperedges(poly, fam, CoverTarget::Boundary) {
        if h.len() < 2 {
            continue;
        }
        let hs: BTreeSet<usize> = h.into_iter().collect();
        k = Some(match k {
            None => hs,
            Some(prev) => prev.intersection(&hs).copied().collect(),
        });
    }
    match k {
        Some(s) => s.into_iter().collect(),
        None => (0..fam.len()).collect(),
    }
}

/// Every member shares some boundary witness with the whole kernel.
pub fn is_proper(poly: &SimplePolygon, fam: &RectFamily) -> Result<bool> {
    let ker = kernel(poly, fam);
    if ker.is_empty() {
        return Err(Error::EmptyKernel);
    }
    let hs = distinct_hyperedges(poly, fam, CoverTarget::Boundary);
    Ok((0..fam.len()).all(|r| {
        hs.iter().any(|(_, h)| h.binary_search(&r).is_ok() && ker.iter().all(|k| h.binary_search(k).is_ok()))
    }))
}

/// Pairs realized as an exact two-element hyperedge; every support contains them.
pub fn forced_support_edges(poly: &SimplePolygon, fam: &RectFamily, target: CoverTarget) -> BTreeSet<(usize, usize)> {
    distinct_hyperedges(poly, fam, target)
        .into_iter()
        .filter(|(_, h)| h.len() == 2)
        .map(|(_, h)| (h[0], h[1]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{polygon_from_union, polygon_from_vertices, Rect};

    fn r(x1: i64, y1: i64, x2: i64, y2: i64) -> Rect {
        Rect::new(x1, y1, x2, y2).unwrap()
    }

    fn biclique() -> (SimplePolygon, Vec<Rect>) {
        let rects = vec![
            r(1, 1, 4, 11),
            r(3, 0, 6, 10),
            r(5, 1, 8, 11),
            r(7, 0, 10, 10),
            r(0, 7, 10, 10),
            r(1, 5, 11, 8),
            r(0, 3, 10, 6),
            r(1, 1, 11, 4),
        ];
        (polygon_from_union(&rects).unwrap(), rects)
    }

    #[test]
    fn box_witnesses() {
        let p = polygon_from_vertices(&[(0, 0), (10, 0), (10, 5), (0, 5)]).unwrap();
        let f = RectFamily::new(&p, vec![r(0, 0, 10, 5)]).unwrap();
        assert_eq!(witness_points(&p, &f, CoverTarget::Boundary).points.len(), 8);
        assert_eq!(witness_points(&p, &f, CoverTarget::Interior).points, vec![Point::half(10, 5)]);
        assert_eq!(witness_points(&p, &f, CoverTarget::Corner).points.len(), 4);
        assert_eq!(kernel(&p, &f), vec![0]);
        assert!(is_proper(&p, &f).unwrap());
        assert!(forced_support_edges(&p, &f, CoverTarget::Boundary).is_empty());
    }

    #[test]
    fn biclique_hyperedges_and_kernel() {
        let (p, rects) = biclique();
        let f = RectFamily::new(&p, rects.clone()).unwrap();
        assert_eq!(hyperedge(&f, Point::grid(1, 10)), vec![0, 4]);
        assert!(kernel(&p, &f).is_empty());
        let mut with_c = rects;
        with_c.push(r(1, 1, 10, 10));
        let f = RectFamily::new(&p, with_c).unwrap();
        assert_eq!(kernel(&p, &f), vec![8]);
        let star = SupportGraph::from_edges(9, (0..8).map(|i| (i, 8)));
        assert!(verify_support(&p, &f, &star, CoverTarget::Boundary).is_empty());
        let empty = SupportGraph::new(9);
        assert!(!verify_support(&p, &f, &empty, CoverTarget::Boundary).is_empty());
    }

    #[test]
    fn intersection_graph_always_supports() {
        let (p, rects) = biclique();
        let f = RectFamily::new(&p, rects.clone()).unwrap();
        let mut g = SupportGraph::new(f.len());
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                if rects[i].intersects(&rects[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        for t in [CoverTarget::Boundary, CoverTarget::Corner, CoverTarget::Interior] {
            assert!(verify_support(&p, &f, &g, t).is_empty());
        }
    }

    #[test]
    fn single_rect_family_is_proper() {
        let (p, _) = biclique();
        let f = RectFamily::new(&p, vec![r(1, 1, 10, 10)]).unwrap();
        assert_eq!(kernel(&p, &f), vec![0]);
        assert!(is_proper(&p, &f).unwrap());
        assert!(forced_support_edges(&p, &f, CoverTarget::Interior).is_empty());
    }
}
