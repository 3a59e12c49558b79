//! Executable structural lemmas about maximal rectangles and their supports,
//! with polygon minimization and reproduction files for counterexamples.

use crate::builder::{horizontal_rtree, leaf_family, partition_kernel_family, KernelPartition, RTree};
use crate::error::Result;
use crate::geom::{pierce_less, polygon_from_union, Dir, Rect, SimplePolygon};
use crate::hypergraph::{is_proper, kernel, verify_support, witness_points, CoverTarget, SupportGraph};
use crate::io::PolygonFile;
use crate::maxrect::{blockers, enumerate_maximal, RectFamily};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Lemma {
    /// No two maximal rectangles share both opposite blocker sets.
    OppositeBlockers,
    /// Rectangles blocked on one boundary segment have laminar projections.
    Laminar,
    /// Corner members of a kernel family share no boundary point.
    CornerDisjoint,
    /// No three extreme vertical (horizontal) members pairwise share boundary points.
    VerticalTriple,
    /// Two boundary-sharing extreme members have no common member below them.
    TwoCornerOnePiercing,
    /// An extreme member is a star support for the members it dominates.
    DominatedStar,
    /// Bounds on extreme members touching a corner member.
    CornerNonCorner,
    /// The ordered type-1 members of a leaf form a path support on its far side.
    PathSupport,
    /// In a minimal support, pieces away from a leaf attach to it through one vertex.
    LeafAttachment,
}

impl Lemma {
    pub const ALL: [Lemma; 9] = [
        Lemma::OppositeBlockers,
        Lemma::Laminar,
        Lemma::CornerDisjoint,
        Lemma::VerticalTriple,
        Lemma::TwoCornerOnePiercing,
        Lemma::DominatedStar,
        Lemma::CornerNonCorner,
        Lemma::PathSupport,
        Lemma::LeafAttachment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::OppositeBlockers => "opp-blockers",
            Lemma::Laminar => "laminar",
            Lemma::CornerDisjoint => "corner-disjoint",
            Lemma::VerticalTriple => "vertical-triple",
            Lemma::TwoCornerOnePiercing => "2cor-1pie",
            Lemma::DominatedStar => "prec-star",
            Lemma::CornerNonCorner => "corner-non-corner",
            Lemma::PathSupport => "path-supp",
            Lemma::LeafAttachment => "struct",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaViolation {
    pub lemma: Lemma,
    pub detail: String,
}

/// How often each lemma had its preconditions met, and what failed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub checked: BTreeMap<Lemma, usize>,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    fn tick(&mut self, l: Lemma) {
        *self.checked.entry(l).or_default() += 1;
    }

    fn fail(&mut self, lemma: Lemma, detail: String) {
        self.violations.push(LemmaViolation { lemma, detail });
    }

    pub fn merge(&mut self, o: LemmaReport) {
        for (l, c) in o.checked {
            *self.checked.entry(l).or_default() += c;
        }
        self.violations.extend(o.violations);
    }

    pub fn failed(&self, l: Lemma) -> bool {
        self.violations.iter().any(|v| v.lemma == l)
    }
}

/// Whether two rectangles of the polygon have a common boundary point.
pub fn shares_boundary(poly: &SimplePolygon, a: &Rect, b: &Rect) -> bool {
    if a == b {
        return true;
    }
    let Ok(f) = RectFamily::new(poly, vec![*a, *b]) else { return false };
    witness_points(poly, &f, CoverTarget::Boundary).points.iter().any(|&p| a.contains(p) && b.contains(p))
}

fn opposite_blockers(poly: &SimplePolygon, fam: &RectFamily, rep: &mut LemmaReport) {
    let bl: Vec<_> = fam.iter().map(|r| blockers(poly, r).expect("member inside polygon")).collect();
    let same = |i: usize, j: usize, d: Dir| {
        fam.get(i).side_coord(d) == fam.get(j).side_coord(d) && bl[i].side(d) == bl[j].side(d)
    };
    for i in 0..fam.len() {
        for j in i + 1..fam.len() {
            rep.tick(Lemma::OppositeBlockers);
            for (d, e) in [(Dir::Top, Dir::Bottom), (Dir::Left, Dir::Right)] {
                if same(i, j, d) && same(i, j, e) {
                    rep.fail(Lemma::OppositeBlockers, format!("{} and {} share {d:?}/{e:?} blockers", fam.get(i), fam.get(j)));
                }
            }
        }
    }
}

fn laminar(poly: &SimplePolygon, fam: &RectFamily, rep: &mut LemmaReport) {
    let bl: Vec<_> = fam.iter().map(|r| blockers(poly, r).expect("member inside polygon")).collect();
    for side in poly.sides() {
        let dirs = if side.is_horizontal() { [Dir::Top, Dir::Bottom] } else { [Dir::Left, Dir::Right] };
        let (lo, hi) = side.span();
        for d in dirs {
            let on: Vec<Rect> = (0..fam.len())
                .filter(|&i| fam.get(i).side_coord(d) == side.line())
                .filter(|&i| bl[i].side(d).iter().any(|&(a, b)| a <= hi && lo <= b))
                .map(|i| fam.get(i))
                .collect();
            if on.len() < 2 {
                continue;
            }
            rep.tick(Lemma::Laminar);
            let span = |r: &Rect| r.side_span(d);
            for (k, a) in on.iter().enumerate() {
                for b in &on[k + 1..] {
                    let ((a1, a2), (b1, b2)) = (span(a), span(b));
                    let crossing = (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
                    if crossing {
                        rep.fail(Lemma::Laminar, format!("{a} and {b} cross on side {side:?} ({d:?})"));
                    }
                }
            }
        }
    }
}

/// Kernel families found greedily around each maximal rectangle: start from the
/// rectangle and add boundary neighbors while it stays in the kernel and the
/// family stays proper. Several scan orders are used.
pub fn kernel_families(poly: &SimplePolygon) -> Vec<(RectFamily, usize)> {
    let all = enumerate_maximal(poly);
    let mut out: Vec<(RectFamily, usize)> = Vec::new();
    for c in all.iter() {
        let nb: Vec<Rect> = all.iter().filter(|r| *r != c && shares_boundary(poly, c, r)).copied().collect();
        let mut by_width = nb.clone();
        by_width.sort_by_key(|r| (r.width(), *r));
        let orders: [Vec<Rect>; 4] =
            [nb.clone(), nb.iter().rev().copied().collect(), by_width.clone(), by_width.into_iter().rev().collect()];
        for order in orders {
            let mut members = vec![*c];
            for r in order {
                members.push(r);
                let f = RectFamily::new(poly, members.clone()).expect("maximal rectangles");
                let ok = kernel(poly, &f).contains(&0) && is_proper(poly, &f).unwrap_or(false);
                if !ok {
                    members.pop();
                }
            }
            if members.len() > 1 && !out.iter().any(|(f, _)| f.rects() == members.as_slice()) {
                out.push((RectFamily::new(poly, members).expect("maximal rectangles"), 0));
            }
        }
    }
    out
}

/// Lemmas about a proper family with `center` in its kernel.
pub fn check_kernel_lemmas(poly: &SimplePolygon, fam: &RectFamily, center: usize) -> Result<LemmaReport> {
    let kp = partition_kernel_family(poly, fam, center)?;
    let mut rep = LemmaReport::default();
    let sh = |i: usize, j: usize| shares_boundary(poly, &fam.get(i), &fam.get(j));
    corner_disjoint(fam, &kp, &sh, &mut rep);
    for (list, name) in [(&kp.vertical_max, "vertical"), (&kp.horizontal_min, "horizontal")] {
        if list.len() >= 3 {
            rep.tick(Lemma::VerticalTriple);
        }
        for a in 0..list.len() {
            for b in a + 1..list.len() {
                for c in b + 1..list.len() {
                    let (i, j, k) = (list[a], list[b], list[c]);
                    if sh(i, j) && sh(j, k) && sh(i, k) {
                        rep.fail(
                            Lemma::VerticalTriple,
                            format!("{name} {} {} {} pairwise share boundary", fam.get(i), fam.get(j), fam.get(k)),
                        );
                    }
                }
            }
        }
    }
    two_corner_one_piercing(fam, &kp, &sh, &mut rep);
    dominated_star(poly, fam, &kp, &mut rep);
    corner_non_corner(fam, &kp, &sh, &mut rep);
    Ok(rep)
}

fn corner_disjoint(fam: &RectFamily, kp: &KernelPartition, sh: &dyn Fn(usize, usize) -> bool, rep: &mut LemmaReport) {
    let corners = kp.corner_members();
    if corners.len() >= 2 {
        rep.tick(Lemma::CornerDisjoint);
    }
    for (a, &i) in corners.iter().enumerate() {
        for &j in &corners[a + 1..] {
            if sh(i, j) {
                rep.fail(Lemma::CornerDisjoint, format!("corner members {} and {} share boundary", fam.get(i), fam.get(j)));
            }
        }
    }
}

fn two_corner_one_piercing(fam: &RectFamily, kp: &KernelPartition, sh: &dyn Fn(usize, usize) -> bool, rep: &mut LemmaReport) {
    // vertical extremes are pierce-maximal, horizontal ones pierce-minimal
    let groups: [(&Vec<usize>, &Vec<usize>, bool); 2] = [(&kp.vertical_max, &kp.vertical, true), (&kp.horizontal_min, &kp.horizontal, false)];
    for (ext, pool, below) in groups {
        for (a, &i) in ext.iter().enumerate() {
            for &j in &ext[a + 1..] {
                if !sh(i, j) {
                    continue;
                }
                rep.tick(Lemma::TwoCornerOnePiercing);
                let under = |k: usize, x: usize| {
                    if below {
                        pierce_less(&fam.get(k), &fam.get(x))
                    } else {
                        pierce_less(&fam.get(x), &fam.get(k))
                    }
                };
                if let Some(&k) = pool.iter().find(|&&k| k != i && k != j && under(k, i) && under(k, j)) {
                    rep.fail(
                        Lemma::TwoCornerOnePiercing,
                        format!("{} dominated by both {} and {}", fam.get(k), fam.get(i), fam.get(j)),
                    );
                }
            }
        }
    }
}

fn dominated_star(poly: &SimplePolygon, fam: &RectFamily, kp: &KernelPartition, rep: &mut LemmaReport) {
    let groups: [(&Vec<usize>, &Vec<usize>, bool); 2] = [(&kp.vertical_max, &kp.vertical, true), (&kp.horizontal_min, &kp.horizontal, false)];
    for (ext, pool, below) in groups {
        for &i in ext.iter() {
            let top = fam.get(i);
            let mut sel = vec![i];
            sel.extend(pool.iter().copied().filter(|&k| {
                let r = fam.get(k);
                k != i && if below { pierce_less(&r, &top) } else { pierce_less(&top, &r) }
            }));
            if sel.len() < 2 {
                continue;
            }
            rep.tick(Lemma::DominatedStar);
            let sub = fam.select(&sel);
            let star = SupportGraph::from_edges(sel.len(), (1..sel.len()).map(|k| (0, k)));
            if let Some(v) = verify_support(poly, &sub, &star, CoverTarget::Boundary).first() {
                rep.fail(Lemma::DominatedStar, format!("star at {top} misses witness {}", v.point));
            }
        }
    }
}

fn corner_non_corner(fam: &RectFamily, kp: &KernelPartition, sh: &dyn Fn(usize, usize) -> bool, rep: &mut LemmaReport) {
    let v_term: Vec<usize> = [kp.vertical_max.first(), kp.vertical_max.last()].into_iter().flatten().copied().collect();
    let h_term: Vec<usize> = [kp.horizontal_min.first(), kp.horizontal_min.last()].into_iter().flatten().copied().collect();
    for (q, members) in &kp.corners {
        for &n in members {
            rep.tick(Lemma::CornerNonCorner);
            let vs: Vec<usize> = kp.vertical_max.iter().copied().filter(|&v| sh(n, v)).collect();
            let hs: Vec<usize> = kp.horizontal_min.iter().copied().filter(|&h| sh(n, h)).collect();
            let nv_term = vs.iter().filter(|v| v_term.contains(v)).count();
            let nh_term = hs.iter().filter(|h| h_term.contains(h)).count();
            let cap = if members.len() == 2 { 1 } else { 2 };
            if vs.len() > cap || hs.len() > cap || nv_term > 1 || nh_term > 1 {
                rep.fail(
                    Lemma::CornerNonCorner,
                    format!("corner {} at {q:?} touches {} vertical ({nv_term} terminal), {} horizontal ({nh_term} terminal)", fam.get(n), vs.len(), hs.len()),
                );
            }
        }
    }
}

/// Peels leaves in the order of the complete-support construction and checks that
/// each leaf's ordered type-1 members form a path support of its far side.
fn path_support(poly: &SimplePolygon, rep: &mut LemmaReport) {
    let mut cur = poly.clone();
    loop {
        let tree = horizontal_rtree(&cur);
        if tree.nodes.len() == 1 {
            return;
        }
        for &leaf in &tree.leaves {
            path_support_at(&cur, &tree, leaf, rep);
        }
        cur = rest_without(&tree, tree.leaves[0]);
    }
}

fn rest_without(tree: &RTree, leaf: usize) -> SimplePolygon {
    let rest: Vec<Rect> = tree.nodes.iter().enumerate().filter(|&(i, _)| i != leaf).map(|(_, r)| *r).collect();
    polygon_from_union(&rest).expect("removing a leaf keeps the polygon simple")
}

fn path_support_at(poly: &SimplePolygon, tree: &RTree, leaf: usize, rep: &mut LemmaReport) {
    let Some(p) = tree.parent[leaf] else { return };
    let (a, b) = (tree.nodes[leaf], tree.nodes[p]);
    let rest = rest_without(tree, leaf);
    let flip = b.y1 < a.y1;
    let (pf, rf) = if flip { (poly.flip_y(), rest.flip_y()) } else { (poly.clone(), rest) };
    let (a, b) = if flip { (a.flip_y(), b.flip_y()) } else { (a, b) };
    let lf = leaf_family(&pf, &rf, a, b);
    if lf.type1.len() < 2 {
        return;
    }
    rep.tick(Lemma::PathSupport);
    let fam = RectFamily::new(&pf, lf.type1.clone()).expect("type-1 members are maximal");
    for p in witness_points(&pf, &fam, CoverTarget::Boundary).points {
        if p.y != 2 * a.y1 || p.x < 2 * a.x1 || p.x > 2 * a.x2 {
            continue;
        }
        let hit: Vec<usize> = (0..fam.len()).filter(|&i| fam.get(i).contains(p)).collect();
        if hit.windows(2).any(|w| w[1] != w[0] + 1) {
            rep.fail(Lemma::PathSupport, format!("leaf {a}: witness {p} hits path positions {hit:?}"));
        }
    }
}

/// Greedy edge deletion down to an inclusion-minimal support.
pub fn minimize_support(poly: &SimplePolygon, fam: &RectFamily, g: &SupportGraph) -> SupportGraph {
    let mut h = g.clone();
    for &(a, b) in g.edges.iter().rev() {
        h.remove_edge(a, b);
        if !verify_support(poly, fam, &h, CoverTarget::Boundary).is_empty() {
            h.add_edge(a, b);
        }
    }
    h
}

/// For each leaf slab, the rectangles reaching its far side are removed from a
/// minimal support; every remaining component must see exactly one of them.
fn leaf_attachment(poly: &SimplePolygon, fam: &RectFamily, minimal: &SupportGraph, rep: &mut LemmaReport) {
    let tree = horizontal_rtree(poly);
    for &leaf in &tree.leaves {
        let Some(p) = tree.parent[leaf] else { continue };
        let (a, b) = (tree.nodes[leaf], tree.nodes[p]);
        let far = if b.y1 >= a.y2 { |r: &Rect, a: &Rect| r.y1 == a.y1 } else { |r: &Rect, a: &Rect| r.y2 == a.y2 };
        let in_leaf: Vec<bool> = fam.iter().map(|r| far(r, &a) && a.x1 <= r.x1 && r.x2 <= a.x2).collect();
        let others: Vec<usize> = (0..fam.len()).filter(|&i| !in_leaf[i]).collect();
        if others.is_empty() || others.len() == fam.len() {
            continue;
        }
        rep.tick(Lemma::LeafAttachment);
        let adj = minimal.adjacency();
        for comp in minimal.induced_components(&others) {
            let mut nb: Vec<usize> = comp.iter().flat_map(|&v| adj[v].iter().copied()).filter(|&u| in_leaf[u]).collect();
            nb.sort_unstable();
            nb.dedup();
            if nb.len() != 1 {
                let names: Vec<String> = nb.iter().map(|&u| fam.get(u).to_string()).collect();
                rep.fail(Lemma::LeafAttachment, format!("leaf {a}: component of {} has leaf neighbors {names:?}", fam.get(comp[0])));
            }
        }
    }
}

/// Polygon-level lemmas plus the kernel lemmas on every greedy kernel family.
/// `support` is a support of the complete family, used for the attachment lemma.
pub fn check_all(poly: &SimplePolygon, support: &SupportGraph) -> LemmaReport {
    let fam = enumerate_maximal(poly);
    let mut rep = LemmaReport::default();
    opposite_blockers(poly, &fam, &mut rep);
    laminar(poly, &fam, &mut rep);
    path_support(poly, &mut rep);
    if verify_support(poly, &fam, support, CoverTarget::Boundary).is_empty() {
        leaf_attachment(poly, &fam, &minimize_support(poly, &fam, support), &mut rep);
    }
    for (f, c) in kernel_families(poly) {
        if let Ok(r) = check_kernel_lemmas(poly, &f, c) {
            rep.merge(r);
        }
    }
    rep
}

/// Shrinks a polygon by removing horizontal or vertical slab leaves while
/// `still_fails` keeps holding.
pub fn minimize_polygon(poly: &SimplePolygon, still_fails: impl Fn(&SimplePolygon) -> bool) -> SimplePolygon {
    let mut cur = poly.clone();
    'outer: loop {
        for transposed in [false, true] {
            let base = if transposed { cur.transpose() } else { cur.clone() };
            let tree = horizontal_rtree(&base);
            for &leaf in &tree.leaves {
                if tree.nodes.len() < 2 {
                    break;
                }
                let mut cand = rest_without(&tree, leaf);
                if transposed {
                    cand = cand.transpose();
                }
                if still_fails(&cand) {
                    cur = cand;
                    continue 'outer;
                }
            }
        }
        return cur;
    }
}

/// Writes `<dir>/<lemma>-<fingerprint>.json` holding the polygon and returns its path.
pub fn dump_repro(dir: &Path, lemma: Lemma, poly: &SimplePolygon) -> std::io::Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("{}-{:016x}.json", lemma.name(), poly.fingerprint()));
    std::fs::write(&path, PolygonFile::from_polygon(poly, None).to_json())?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::build_complete_support;
    use crate::geom::polygon_from_vertices;
    use crate::instances::{gen_biclique_boundary, gen_random};

    #[test]
    fn biclique_kernel_lemmas() {
        let b = gen_biclique_boundary();
        let mut rects = b.family.as_ref().unwrap().rects().to_vec();
        rects.insert(0, b.named_rect("Rc").unwrap());
        let f = RectFamily::new(&b.polygon, rects).unwrap();
        let rep = check_kernel_lemmas(&b.polygon, &f, 0).unwrap();
        assert!(rep.violations.is_empty(), "{:?}", rep.violations);
        assert!(rep.checked[&Lemma::TwoCornerOnePiercing] > 0);
    }

    #[test]
    fn random_polygons_satisfy_lemmas() {
        for seed in 0..15 {
            let p = gen_random(12, 10, seed).unwrap();
            let rep = check_all(&p, &build_complete_support(&p));
            let other: Vec<_> = rep.violations.iter().filter(|v| v.lemma != Lemma::LeafAttachment).collect();
            assert!(other.is_empty(), "seed {seed}: {other:?}");
        }
    }

    // Every minimal support of this polygon joins the lower rectangles to both
    // rectangles of the top leaf: the forced edges are [0,9]x[2,5]-[1,7]x[2,8]
    // and [2,9]x[0,5]-[2,7]x[0,8].
    #[test]
    fn leaf_attachment_counterexample() {
        let p = polygon_from_vertices(&[(0, 2), (2, 2), (2, 0), (9, 0), (9, 6), (8, 6), (8, 5), (7, 5), (7, 8), (1, 8), (1, 5), (0, 5)]).unwrap();
        let fam = enumerate_maximal(&p);
        let mut rep = LemmaReport::default();
        leaf_attachment(&p, &fam, &minimize_support(&p, &fam, &build_complete_support(&p)), &mut rep);
        assert!(rep.failed(Lemma::LeafAttachment));
    }

    // The two extreme vertical members are both terminal and both touch the
    // corner member, the left one only at the concave vertex (1,4).
    #[test]
    fn corner_touching_two_terminals() {
        let p = polygon_from_vertices(&[(0, 0), (1, 0), (1, 1), (7, 1), (7, 2), (14, 2), (14, 4), (13, 4), (13, 10), (11, 10), (11, 14), (3, 14), (3, 13), (1, 13), (1, 4), (0, 4)]).unwrap();
        let rects = [(0, 1, 7, 4), (0, 0, 1, 4), (3, 1, 7, 14), (1, 2, 13, 10)];
        let f = RectFamily::new(&p, rects.iter().map(|&(a, b, c, d)| Rect::new(a, b, c, d).unwrap()).collect()).unwrap();
        let rep = check_kernel_lemmas(&p, &f, 0).unwrap();
        assert_eq!(rep.violations.len(), 1);
        assert!(rep.failed(Lemma::CornerNonCorner));
    }

    #[test]
    fn minimize_keeps_predicate() {
        let plus = polygon_from_vertices(&[(2, 0), (4, 0), (4, 2), (6, 2), (6, 4), (4, 4), (4, 6), (2, 6), (2, 4), (0, 4), (0, 2), (2, 2)]).unwrap();
        let m = minimize_polygon(&plus, |p| p.len() >= 6);
        assert_eq!(m.len(), 6);
        let m = minimize_polygon(&plus, |_| true);
        assert_eq!(m.len(), 4);
    }
}
