//! Planar support construction: complete families by peeling slabs, families
//! around a kernel rectangle, single-vertex deletion and arbitrary subfamilies.

use crate::error::{Error, Result};
use crate::geom::{classify_intersection, pierce_less, polygon_from_union, Dir, IntersectionKind, Point, Rect, SimplePolygon};
use crate::hypergraph::{distinct_hyperedges, is_proper, kernel, verify_support, CoverTarget, SupportGraph};
use crate::maxrect::{common_blocker, enumerate_maximal, extension, is_maximal, is_vertically_blocked, RectFamily};
use crate::planar::{dfs_orient, is_planar, lr_planarity_rooted, planar_with_face, shortcut_cotree, Planarity};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

/// Horizontal slab decomposition. Nodes are sorted by `(y1, x1)`; node 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RTree {
    pub nodes: Vec<Rect>,
    pub parent: Vec<Option<usize>>,
    /// Nodes without children, ascending.
    pub leaves: Vec<usize>,
}

impl RTree {
    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&w| self.parent[w] == Some(v)).collect()
    }
}

/// Cuts the polygon along horizontal lines through its concave corners and
/// merges stacked pieces with identical x-extent.
pub fn horizontal_rtree(poly: &SimplePolygon) -> RTree {
    let g = poly.grid();
    let mut done: Vec<Rect> = Vec::new();
    let mut open: Vec<Rect> = Vec::new();
    for j in 0..g.ny() {
        let mut runs = Vec::new();
        let mut i = 0;
        while i < g.nx() {
            if !g.cell(i, j) {
                i += 1;
                continue;
            }
            let s = i;
            while i < g.nx() && g.cell(i, j) {
                i += 1;
            }
            runs.push((g.xs[s], g.xs[i]));
        }
        let mut next = Vec::new();
        for (a, b) in runs {
            match open.iter().position(|r| r.x1 == a && r.x2 == b) {
                Some(p) => {
                    let mut r = open.swap_remove(p);
                    r.y2 = g.ys[j + 1];
                    next.push(r);
                }
                None => next.push(Rect::raw(a, g.ys[j], b, g.ys[j + 1])),
            }
        }
        done.append(&mut open);
        open = next;
    }
    done.append(&mut open);
    done.sort_by_key(|r| (r.y1, r.x1));
    let n = done.len();
    let touches = |a: &Rect, b: &Rect| (a.y2 == b.y1 || b.y2 == a.y1) && a.x2.min(b.x2) > a.x1.max(b.x1);
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for w in 0..n {
            if !seen[w] && touches(&done[v], &done[w]) {
                seen[w] = true;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    let leaves = (0..n).filter(|&v| !parent.contains(&Some(v))).collect();
    RTree { nodes: done, parent, leaves }
}

/// How the peeled leaf slab and its parent compare in x-extent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nesting {
    /// The parent's x-extent is strictly inside the leaf's.
    ParentInside,
    /// The leaf's x-extent is strictly inside the parent's.
    LeafInside,
    /// The extents overlap with neither containing the other.
    Staggered,
}

/// Maximal rectangles standing on the bottom side of a leaf slab whose parent
/// lies above it, with their images in the polygon without the leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafFamily {
    pub leaf: Rect,
    pub parent: Rect,
    pub nesting: Nesting,
    /// All members, canonical order. Contains `leaf` when the leaf itself is maximal.
    pub members: Vec<Rect>,
    /// Members whose image stays maximal, in path order.
    pub type1: Vec<Rect>,
    /// Members whose image grows back down into the leaf.
    pub type2: Vec<Rect>,
    /// Member spanning the whole leaf (its top extension).
    pub root: Option<Rect>,
    /// `(member, image)` for every member other than the leaf.
    pub image: Vec<(Rect, Rect)>,
    /// `(member, smallest member strictly containing its x-extent)`.
    pub laminar_parent: Vec<(Rect, Rect)>,
}

impl LeafFamily {
    pub fn image_of(&self, r: &Rect) -> Option<Rect> {
        self.image.iter().find(|(a, _)| a == r).map(|&(_, b)| b)
    }

    pub fn laminar_parent_of(&self, r: &Rect) -> Option<Rect> {
        self.laminar_parent.iter().find(|(a, _)| a == r).map(|&(_, b)| b)
    }

    pub fn laminar_children_of(&self, r: &Rect) -> Vec<Rect> {
        self.laminar_parent.iter().filter(|(_, p)| p == r).map(|&(c, _)| c).collect()
    }
}

/// Classifies the members on the leaf's bottom side. `poly` contains `leaf`,
/// `rest` is `poly` without it, and `parent` sits on top of `leaf`.
pub fn leaf_family(poly: &SimplePolygon, rest: &SimplePolygon, leaf: Rect, parent: Rect) -> LeafFamily {
    debug_assert_eq!(leaf.y2, parent.y1, "parent must sit on top of the leaf");
    let full = enumerate_maximal(poly);
    let t = leaf.y2;
    let members: Vec<Rect> =
        full.iter().filter(|r| r.y1 == leaf.y1 && leaf.x1 <= r.x1 && r.x2 <= leaf.x2).copied().collect();
    let nesting = if leaf.x1 <= parent.x1 && parent.x2 <= leaf.x2 {
        Nesting::ParentInside
    } else if parent.x1 <= leaf.x1 && leaf.x2 <= parent.x2 {
        Nesting::LeafInside
    } else {
        Nesting::Staggered
    };
    let mut image = Vec::new();
    let (mut left, mut both, mut right, mut type2) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for r in members.iter().filter(|r| **r != leaf) {
        let upper = Rect::raw(r.x1, t, r.x2, r.y2);
        let f = extension(rest, &upper, Dir::Left).and_then(|u| extension(rest, &u, Dir::Right)).expect("upper part lies in the rest");
        image.push((*r, f));
        if !full.contains(&f) {
            type2.push(*r);
        } else {
            match (f.x1 < leaf.x1, f.x2 > leaf.x2) {
                (true, true) => both.push(*r),
                (true, false) => left.push(*r),
                _ => right.push(*r),
            }
        }
    }
    left.sort_by_key(|r| r.x2);
    right.sort_by_key(|r| r.x1);
    let type1: Vec<Rect> = left.into_iter().chain(both).chain(right).collect();
    let mut laminar_parent = Vec::new();
    for r in &members {
        let p = members
            .iter()
            .filter(|s| *s != r && s.x1 <= r.x1 && r.x2 <= s.x2)
            .min_by_key(|s| (s.width(), s.x1));
        if let Some(p) = p {
            laminar_parent.push((*r, *p));
        }
    }
    let root = members.iter().find(|r| r.x1 == leaf.x1 && r.x2 == leaf.x2).copied();
    LeafFamily { leaf, parent, nesting, members, type1, type2, root, image, laminar_parent }
}

/// Edge added by the repair pass to reconnect a witness hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairEdge {
    pub point: Point,
    pub edge: (Rect, Rect),
    /// The designated face vertices still share a face after the edge.
    pub face_kept: bool,
    pub planar: bool,
}

/// One peeling step of the complete-family construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelStep {
    /// The step ran on the mirror image `y -> -y`; rectangles in `family` are mirrored.
    pub flipped: bool,
    pub family: LeafFamily,
    pub repairs: Vec<RepairEdge>,
    /// Vertically blocked vertices share a face after the step.
    pub face_ok: bool,
    /// The step's edges broke the shared face and were replaced by a search result.
    pub researched: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BuildTrace {
    pub steps: Vec<PeelStep>,
}

impl BuildTrace {
    pub fn repair_count(&self) -> usize {
        self.steps.iter().map(|s| s.repairs.len()).sum()
    }
}

fn key(a: Rect, b: Rect) -> (Rect, Rect) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Adds edges until every boundary hyperedge is connected, preferring edges that
/// keep `face` on one face, then edges that keep the graph planar.
fn repair(poly: &SimplePolygon, fam: &RectFamily, g: &mut SupportGraph, face: &[usize], log: &mut Vec<RepairEdge>) {
    let bound = fam.len() * fam.len() + 1;
    for _ in 0..bound {
        let viol = verify_support(poly, fam, g, CoverTarget::Boundary);
        let Some(v) = viol.first() else { return };
        let comps = &v.components;
        let cands: Vec<(usize, usize)> =
            comps[0].iter().flat_map(|&a| comps[1..].iter().flatten().map(move |&b| (a, b))).collect();
        let trial = |e: (usize, usize)| {
            let mut h = g.clone();
            h.add_edge(e.0, e.1);
            h
        };
        let pick = cands
            .iter()
            .find(|&&e| planar_with_face(&trial(e), face))
            .map(|&e| (e, true, true))
            .or_else(|| cands.iter().find(|&&e| is_planar(&trial(e))).map(|&e| (e, false, true)))
            .unwrap_or((cands[0], false, false));
        let ((a, b), face_kept, planar) = pick;
        g.add_edge(a, b);
        log.push(RepairEdge { point: v.point, edge: key(fam.get(a), fam.get(b)), face_kept, planar });
    }
}

const FACE_SEARCH_BUDGET: usize = 5_000;

/// Support keeping `face` on one face, grown from the edges of `g` that fit and
/// completed by bounded backtracking. Edges of `g` are tried first.
fn face_search(
    poly: &SimplePolygon,
    fam: &RectFamily,
    g: &SupportGraph,
    kept: &[(usize, usize)],
    face: &[usize],
) -> Option<SupportGraph> {
    let hyper: Vec<Vec<usize>> =
        distinct_hyperedges(poly, fam, CoverTarget::Boundary).into_iter().map(|(_, e)| e).filter(|e| e.len() > 1).collect();
    // keep the smaller polygon's support and redo only the new edges; failing
    // that, keep what fits of the step's edges; failing that, start from nothing
    let seed_from = |edges: &mut dyn Iterator<Item = (usize, usize)>| {
        let mut h = SupportGraph::new(fam.len());
        for (a, b) in edges {
            h.add_edge(a, b);
            if !planar_with_face(&h, face) {
                h.remove_edge(a, b);
            }
        }
        h
    };
    let seeds = [
        seed_from(&mut kept.iter().copied()),
        seed_from(&mut g.edges.iter().copied()),
        SupportGraph::new(fam.len()),
    ];
    for mut h in seeds {
        let mut seen = HashSet::new();
        let mut budget = FACE_SEARCH_BUDGET;
        if grow(&hyper, g, &mut h, face, &mut seen, &mut budget) {
            h.outer = face.to_vec();
            return Some(h);
        }
    }
    None
}

fn grow(
    hyper: &[Vec<usize>],
    hint: &SupportGraph,
    h: &mut SupportGraph,
    face: &[usize],
    seen: &mut HashSet<Vec<(usize, usize)>>,
    budget: &mut usize,
) -> bool {
    if *budget == 0 || !seen.insert(h.edges.iter().copied().collect()) {
        return false;
    }
    *budget -= 1;
    let Some(comps) = hyper.iter().map(|e| h.induced_components(e)).find(|c| c.len() > 1) else {
        return true;
    };
    let mut cands: Vec<(usize, usize)> =
        comps[0].iter().flat_map(|&a| comps[1..].iter().flatten().map(move |&b| (a, b))).collect();
    cands.sort_by_key(|&(a, b)| !hint.has_edge(a, b));
    for (a, b) in cands {
        h.add_edge(a, b);
        if planar_with_face(h, face) && grow(hyper, hint, h, face, seen, budget) {
            return true;
        }
        h.remove_edge(a, b);
    }
    false
}

/// Replaces a non-planar support by a searched planar one, if the search finds one.
fn replan_if_nonplanar(poly: &SimplePolygon, fam: &RectFamily, g: &mut SupportGraph) -> bool {
    if is_planar(g) {
        return false;
    }
    match face_search(poly, fam, g, &[], &[]) {
        Some(mut h) => {
            h.outer = g.outer.clone();
            *g = h;
            true
        }
        None => false,
    }
}

fn vertically_blocked_members(poly: &SimplePolygon, fam: &RectFamily) -> Vec<usize> {
    (0..fam.len()).filter(|&i| is_vertically_blocked(poly, &fam.get(i))).collect()
}

/// Planar support of all maximal rectangles; `outer` lists the vertically blocked ones.
pub fn build_complete_support(poly: &SimplePolygon) -> SupportGraph {
    build_complete_support_traced(poly).0
}

pub fn build_complete_support_traced(poly: &SimplePolygon) -> (SupportGraph, BuildTrace) {
    let mut trace = BuildTrace::default();
    let (_, g) = build_rec(poly, &mut trace);
    (g, trace)
}

fn build_rec(poly: &SimplePolygon, trace: &mut BuildTrace) -> (RectFamily, SupportGraph) {
    let fam = enumerate_maximal(poly);
    let tree = horizontal_rtree(poly);
    if tree.nodes.len() == 1 {
        let mut g = SupportGraph::new(fam.len());
        g.outer = vertically_blocked_members(poly, &fam);
        return (fam, g);
    }
    let a_idx = tree.leaves[0];
    let (a, b) = (tree.nodes[a_idx], tree.nodes[tree.parent[a_idx].expect("non-root leaf")]);
    let rest_nodes: Vec<Rect> = tree.nodes.iter().enumerate().filter(|&(i, _)| i != a_idx).map(|(_, r)| *r).collect();
    let rest = polygon_from_union(&rest_nodes).expect("removing a leaf slab keeps the polygon simple");
    let (sub_fam, sub_g) = build_rec(&rest, trace);

    let flipped = b.y1 < a.y1;
    let frame = |r: Rect| if flipped { r.flip_y() } else { r };
    let (pf, rf) = if flipped { (poly.flip_y(), rest.flip_y()) } else { (poly.clone(), rest.clone()) };
    let lf = leaf_family(&pf, &rf, frame(a), frame(b));
    let sub_edges: Vec<(Rect, Rect)> =
        sub_g.edges.iter().map(|&(u, v)| (frame(sub_fam.get(u)), frame(sub_fam.get(v)))).collect();
    let edges = attach(&lf, &sub_edges);

    let mut g = SupportGraph::new(fam.len());
    for (r, s) in edges {
        let i = fam.index_of(&frame(r)).expect("edge endpoint is maximal");
        let j = fam.index_of(&frame(s)).expect("edge endpoint is maximal");
        g.add_edge(i, j);
    }
    let face = vertically_blocked_members(poly, &fam);
    let mut repairs = Vec::new();
    repair(poly, &fam, &mut g, &face, &mut repairs);
    let mut face_ok = planar_with_face(&g, &face);
    let mut researched = false;
    if !face_ok {
        let kept: Vec<(usize, usize)> = renamed_edges(&lf, &sub_edges)
            .into_iter()
            .map(|(r, s)| (fam.index_of(&frame(r)).expect("maximal"), fam.index_of(&frame(s)).expect("maximal")))
            .collect();
        if let Some(h) = face_search(poly, &fam, &g, &kept, &face) {
            g = h;
            face_ok = true;
            researched = true;
        }
    }
    g.outer = face;
    trace.steps.push(PeelStep { flipped, family: lf, repairs, face_ok, researched });
    (fam, g)
}

/// Edges of the smaller polygon's support with type-2 images renamed to their preimages.
fn renamed_edges(lf: &LeafFamily, sub_edges: &[(Rect, Rect)]) -> BTreeSet<(Rect, Rect)> {
    let renamed: HashMap<Rect, Rect> =
        lf.type2.iter().map(|r| (lf.image_of(r).expect("type-2 member has an image"), *r)).collect();
    let name = |r: Rect| renamed.get(&r).copied().unwrap_or(r);
    sub_edges.iter().map(|&(u, v)| key(name(u), name(v))).filter(|(u, v)| u != v).collect()
}

/// Turns the support of the polygon without the leaf into one for the polygon.
fn attach(lf: &LeafFamily, sub_edges: &[(Rect, Rect)]) -> BTreeSet<(Rect, Rect)> {
    let mut edges = renamed_edges(lf, sub_edges);
    for w in lf.type1.windows(2) {
        edges.insert(key(w[0], w[1]));
    }
    for r in &lf.type1 {
        edges.insert(key(*r, lf.image_of(r).expect("type-1 member has an image")));
    }
    for r in &lf.type2 {
        let Some(p) = lf.laminar_parent_of(r) else { continue };
        if lf.type1.contains(&p) {
            edges.remove(&key(lf.image_of(&p).expect("type-1 image"), *r));
            edges.insert(key(p, *r));
        }
    }
    if lf.members.contains(&lf.leaf) {
        for c in lf.laminar_children_of(&lf.leaf) {
            edges.insert(key(lf.leaf, c));
        }
    }
    edges.retain(|(u, v)| u != v);
    edges
}

/// Corner of the kernel rectangle held by a corner-intersecting member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadrant {
    NorthEast,
    NorthWest,
    SouthEast,
    SouthWest,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::NorthEast, Quadrant::NorthWest, Quadrant::SouthEast, Quadrant::SouthWest];

    pub fn vertical_side(self) -> Dir {
        match self {
            Quadrant::NorthEast | Quadrant::NorthWest => Dir::Top,
            _ => Dir::Bottom,
        }
    }

    pub fn horizontal_side(self) -> Dir {
        match self {
            Quadrant::NorthEast | Quadrant::SouthEast => Dir::Right,
            _ => Dir::Left,
        }
    }
}

/// Members of a family around a kernel rectangle, split by how they meet it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelPartition {
    pub center: usize,
    pub corners: BTreeMap<Quadrant, Vec<usize>>,
    /// Members narrower than the center that pierce it.
    pub vertical: Vec<usize>,
    /// Members wider than the center that pierce it.
    pub horizontal: Vec<usize>,
    /// Pierce-maximal vertical members, ordered by left side.
    pub vertical_max: Vec<usize>,
    /// Pierce-minimal horizontal members, ordered by bottom side.
    pub horizontal_min: Vec<usize>,
    pub left_aligned: bool,
    pub right_aligned: bool,
    pub bottom_aligned: bool,
    pub top_aligned: bool,
}

impl KernelPartition {
    pub fn corner_members(&self) -> Vec<usize> {
        self.corners.values().flatten().copied().collect()
    }
}

fn quadrant_of(r: &Rect, c: &Rect) -> Quadrant {
    let east = if r.x2 > c.x2 && r.x1 >= c.x1 {
        true
    } else if r.x1 < c.x1 && r.x2 <= c.x2 {
        false
    } else {
        r.x1 + r.x2 >= c.x1 + c.x2
    };
    let north = if r.y2 > c.y2 && r.y1 >= c.y1 {
        true
    } else if r.y1 < c.y1 && r.y2 <= c.y2 {
        false
    } else {
        r.y1 + r.y2 >= c.y1 + c.y2
    };
    match (north, east) {
        (true, true) => Quadrant::NorthEast,
        (true, false) => Quadrant::NorthWest,
        (false, true) => Quadrant::SouthEast,
        (false, false) => Quadrant::SouthWest,
    }
}

pub fn partition_kernel_family(poly: &SimplePolygon, fam: &RectFamily, center: usize) -> Result<KernelPartition> {
    if center >= fam.len() || !kernel(poly, fam).contains(&center) {
        return Err(Error::NotInKernel(center));
    }
    if !is_proper(poly, fam)? {
        return Err(Error::NotProper);
    }
    split_around(poly, fam, center)
}

/// The partition without the kernel and properness preconditions.
fn split_around(poly: &SimplePolygon, fam: &RectFamily, center: usize) -> Result<KernelPartition> {
    let c = fam.get(center);
    let mut corners: BTreeMap<Quadrant, Vec<usize>> = BTreeMap::new();
    let (mut vertical, mut horizontal) = (Vec::new(), Vec::new());
    for i in (0..fam.len()).filter(|&i| i != center) {
        let r = fam.get(i);
        match classify_intersection(&r, &c)? {
            IntersectionKind::Piercing { .. } if pierce_less(&r, &c) => vertical.push(i),
            IntersectionKind::Piercing { .. } => horizontal.push(i),
            _ => corners.entry(quadrant_of(&r, &c)).or_default().push(i),
        }
    }
    for v in corners.values_mut() {
        v.sort_by(|&a, &b| {
            let (ra, rb) = (fam.get(a), fam.get(b));
            pierce_less(&rb, &ra).cmp(&pierce_less(&ra, &rb)).then(a.cmp(&b))
        });
    }
    let mut vertical_max: Vec<usize> =
        vertical.iter().copied().filter(|&i| !vertical.iter().any(|&j| pierce_less(&fam.get(i), &fam.get(j)))).collect();
    vertical_max.sort_by_key(|&i| (fam.get(i).x1, fam.get(i).x2, i));
    let mut horizontal_min: Vec<usize> = horizontal
        .iter()
        .copied()
        .filter(|&i| !horizontal.iter().any(|&j| pierce_less(&fam.get(j), &fam.get(i))))
        .collect();
    horizontal_min.sort_by_key(|&i| (fam.get(i).y1, fam.get(i).y2, i));
    let aligned = |m: Option<&usize>, d: Dir| m.is_some_and(|&i| common_blocker(poly, &fam.get(i), &c, d));
    Ok(KernelPartition {
        center,
        left_aligned: aligned(vertical_max.first(), Dir::Left),
        right_aligned: aligned(vertical_max.last(), Dir::Right),
        bottom_aligned: aligned(horizontal_min.first(), Dir::Bottom),
        top_aligned: aligned(horizontal_min.last(), Dir::Top),
        corners,
        vertical,
        horizontal,
        vertical_max,
        horizontal_min,
    })
}

/// Pairs of members meeting at a common boundary point.
pub fn boundary_pairs(poly: &SimplePolygon, fam: &RectFamily) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for (_, h) in distinct_hyperedges(poly, fam, CoverTarget::Boundary) {
        for (k, &a) in h.iter().enumerate() {
            for &b in &h[k + 1..] {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Edges of the kernel-less drawing, over indices of `fam` (center excluded).
pub fn kernel_less_edges(poly: &SimplePolygon, fam: &RectFamily, kp: &KernelPartition) -> BTreeSet<(usize, usize)> {
    let pairs = boundary_pairs(poly, fam);
    let share = |a: usize, b: usize| pairs.contains(&(a.min(b), a.max(b)));
    let mut e = BTreeSet::new();
    let mut add = |a: usize, b: usize| {
        if a != b {
            e.insert((a.min(b), a.max(b)));
        }
    };
    let (vs, hs) = (&kp.vertical_max, &kp.horizontal_min);
    // terminals joined to the whole other side
    if kp.left_aligned {
        hs.iter().for_each(|&h| add(vs[0], h));
    }
    if kp.right_aligned {
        hs.iter().for_each(|&h| add(*vs.last().unwrap(), h));
    }
    if kp.bottom_aligned {
        vs.iter().for_each(|&v| add(v, hs[0]));
    }
    if kp.top_aligned {
        vs.iter().for_each(|&v| add(v, *hs.last().unwrap()));
    }
    // consecutive extreme members and private regions
    for w in vs.windows(2).chain(hs.windows(2)) {
        if share(w[0], w[1]) {
            add(w[0], w[1]);
        }
    }
    for &r in kp.vertical.iter().filter(|r| !vs.contains(r)) {
        if let Some(&v) = vs.iter().find(|&&v| pierce_less(&fam.get(r), &fam.get(v))) {
            add(r, v);
        }
    }
    for &r in kp.horizontal.iter().filter(|r| !hs.contains(r)) {
        if let Some(&h) = hs.iter().find(|&&h| pierce_less(&fam.get(h), &fam.get(r))) {
            add(r, h);
        }
    }
    // corner members
    let c = fam.get(kp.center);
    for (&q, ns) in &kp.corners {
        let (vd, hd) = (q.vertical_side(), q.horizontal_side());
        let h_term = if vd == Dir::Top { hs.last() } else { hs.first() };
        let v_term = if hd == Dir::Right { vs.last() } else { vs.first() };
        for &n in ns {
            let h_hit = h_term.is_some_and(|&h| share(n, h));
            let v_hit = v_term.is_some_and(|&v| share(n, v));
            if h_hit {
                add(n, *h_term.unwrap());
            }
            if v_hit {
                add(n, *v_term.unwrap());
            }
            for &v in vs {
                if share(n, v) && common_blocker(poly, &fam.get(v), &c, vd) && !h_hit {
                    add(n, v);
                }
            }
            for &h in hs {
                if share(n, h) && common_blocker(poly, &fam.get(h), &c, hd) && !v_hit {
                    add(n, h);
                }
            }
        }
    }
    e
}

/// Planar support of the family with `center` removed. Output vertices follow
/// `fam` order with the center skipped.
pub fn build_kernel_less_support(poly: &SimplePolygon, fam: &RectFamily, center: usize) -> Result<SupportGraph> {
    build_kernel_less_support_traced(poly, fam, center).map(|(g, _)| g)
}

pub fn build_kernel_less_support_traced(
    poly: &SimplePolygon,
    fam: &RectFamily,
    center: usize,
) -> Result<(SupportGraph, Vec<RepairEdge>)> {
    let kp = partition_kernel_family(poly, fam, center)?;
    let edges = kernel_less_edges(poly, fam, &kp);
    let keep: Vec<usize> = (0..fam.len()).filter(|&i| i != center).collect();
    let pos = |i: usize| if i < center { i } else { i - 1 };
    let sub = fam.select(&keep);
    let mut g = SupportGraph::from_edges(keep.len(), edges.into_iter().map(|(a, b)| (pos(a), pos(b))));
    let mut log = Vec::new();
    repair(poly, &sub, &mut g, &[], &mut log);
    replan_if_nonplanar(poly, &sub, &mut g);
    Ok((g, log))
}

/// What happened while deleting one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionTrace {
    pub victim: Rect,
    /// Neighbors of the victim that formed the star.
    pub children: Vec<Rect>,
    /// The children with the victim formed a proper family around it.
    pub star_ok: bool,
    /// The result was not planar and was replaced by a searched support.
    pub researched: bool,
    pub repairs: Vec<RepairEdge>,
}

/// Planar support of `fam` without `victim`, derived from a planar support of `fam`.
/// Output vertices follow `fam` order with the victim skipped.
pub fn delete_vertex_support(poly: &SimplePolygon, fam: &RectFamily, graph: &SupportGraph, victim: usize) -> Result<SupportGraph> {
    delete_vertex_support_traced(poly, fam, graph, victim).map(|(g, _)| g)
}

pub fn delete_vertex_support_traced(
    poly: &SimplePolygon,
    fam: &RectFamily,
    graph: &SupportGraph,
    victim: usize,
) -> Result<(SupportGraph, DeletionTrace)> {
    if graph.n != fam.len() || victim >= fam.len() {
        return Err(Error::InvalidInputSupport(format!("graph on {} vertices, family of {}, victim {victim}", graph.n, fam.len())));
    }
    if let Some(v) = verify_support(poly, fam, graph, CoverTarget::Boundary).first() {
        return Err(Error::InvalidInputSupport(format!("witness {} is not supported", v.point)));
    }
    let Planarity::Planar(coloring) = lr_planarity_rooted(graph, victim) else {
        return Err(Error::InvalidInputSupport("graph is not planar".into()));
    };
    let orient = dfs_orient(graph, victim);
    let cut = shortcut_cotree(&orient, &coloring, victim)?;
    let mut edges = cut.edges;
    // components the DFS from the victim never reached
    for &(a, b) in &graph.edges {
        if orient.unreached.contains(&a) {
            edges.insert((a, b));
        }
    }
    let children: Vec<usize> = (0..fam.len()).filter(|&w| orient.parent[w] == Some(victim)).collect();
    // all neighbors, not only the DFS children: a hyperedge may be entered
    // through a back edge without containing any child
    let nbrs: Vec<usize> = graph.adjacency()[victim].clone();
    let mut star_ok = true;
    let mut extra = BTreeSet::new();
    if nbrs.len() >= 2 {
        let mut sel = nbrs.clone();
        sel.push(victim);
        sel.sort();
        let star = fam.select(&sel);
        let c = sel.binary_search(&victim).unwrap();
        let kp = match partition_kernel_family(poly, &star, c) {
            Ok(kp) => Some(kp),
            Err(_) => {
                star_ok = false;
                split_around(poly, &star, c).ok()
            }
        };
        if let Some(kp) = kp {
            for (a, b) in kernel_less_edges(poly, &star, &kp) {
                extra.insert((sel[a].min(sel[b]), sel[a].max(sel[b])));
            }
        }
    }
    let keep: Vec<usize> = (0..fam.len()).filter(|&i| i != victim).collect();
    let pos = |i: usize| if i < victim { i } else { i - 1 };
    let sub = fam.select(&keep);
    let mut g = SupportGraph::from_edges(keep.len(), edges.into_iter().filter(|&(a, b)| a != victim && b != victim).map(|(a, b)| (pos(a), pos(b))));
    for (a, b) in extra {
        if g.add_edge(pos(a), pos(b)) && !is_planar(&g) {
            g.remove_edge(pos(a), pos(b));
        }
    }
    let mut repairs = Vec::new();
    repair(poly, &sub, &mut g, &[], &mut repairs);
    let researched = replan_if_nonplanar(poly, &sub, &mut g);
    let trace =
        DeletionTrace { victim: fam.get(victim), children: children.iter().map(|&i| fam.get(i)).collect(), star_ok, repairs, researched };
    Ok((g, trace))
}

/// Planar support of an arbitrary family of maximal rectangles, obtained from
/// the complete-family support by deleting the other members in descending order.
/// Output vertices follow `subset` order.
pub fn subfamily_support(poly: &SimplePolygon, subset: &RectFamily) -> Result<SupportGraph> {
    subfamily_support_traced(poly, subset).map(|(g, _)| g)
}

pub fn subfamily_support_traced(poly: &SimplePolygon, subset: &RectFamily) -> Result<(SupportGraph, Vec<DeletionTrace>)> {
    for r in subset.iter() {
        if !is_maximal(poly, r)? {
            return Err(Error::NotMaximalMember(*r));
        }
    }
    let mut fam = enumerate_maximal(poly);
    let mut g = build_complete_support(poly);
    let mut traces = Vec::new();
    for i in (0..fam.len()).rev() {
        if subset.contains(&fam.get(i)) {
            continue;
        }
        let (h, t) = delete_vertex_support_traced(poly, &fam, &g, i)?;
        traces.push(t);
        let keep: Vec<usize> = (0..fam.len()).filter(|&j| j != i).collect();
        fam = fam.select(&keep);
        g = h;
    }
    if fam.len() == subset.len() && fam.rects() == subset.rects() {
        return Ok((g, traces));
    }
    // reorder to the caller's order
    let pos: Vec<usize> = fam.iter().map(|r| subset.index_of(r).expect("kept members are in the subset")).collect();
    let out = SupportGraph::from_edges(subset.len(), g.edges.iter().map(|&(a, b)| (pos[a], pos[b])));
    Ok((out, traces))
}
