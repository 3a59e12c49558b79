//! Blockers, maximality, and the complete family of maximal rectangles.

use crate::error::{Error, Result};
use crate::geom::{Dir, Point, Rect, SimplePolygon};
use std::collections::HashMap;

/// Closed intervals along one side's line where that side meets the polygon boundary.
///
/// Components that consist only of one of the rectangle's corners are dropped.
/// Intervals are maximal and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BlockerSet {
    pub top: Vec<(i64, i64)>,
    pub bottom: Vec<(i64, i64)>,
    pub left: Vec<(i64, i64)>,
    pub right: Vec<(i64, i64)>,
}

impl BlockerSet {
    pub fn side(&self, d: Dir) -> &[(i64, i64)] {
        match d {
            Dir::Top => &self.top,
            Dir::Bottom => &self.bottom,
            Dir::Left => &self.left,
            Dir::Right => &self.right,
        }
    }

    pub fn all_nonempty(&self) -> bool {
        Dir::ALL.iter().all(|&d| !self.side(d).is_empty())
    }
}

/// Merges closed intervals that overlap or touch.
pub(crate) fn merge_intervals(mut v: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    v.sort();
    let mut out: Vec<(i64, i64)> = Vec::new();
    for (lo, hi) in v {
        match out.last_mut() {
            Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
            _ => out.push((lo, hi)),
        }
    }
    out
}

/// Closed intervals of `[lo, hi]` along the given line that lie on the boundary.
/// `horizontal` selects a horizontal line `y = line` (intervals in x) or a vertical one.
pub(crate) fn boundary_on_line(poly: &SimplePolygon, horizontal: bool, line: i64, lo: i64, hi: i64) -> Vec<(i64, i64)> {
    let mut parts = Vec::new();
    for s in poly.sides() {
        let (a, b) = s.span();
        if s.is_horizontal() == horizontal {
            if s.line() == line && a <= hi && lo <= b {
                parts.push((a.max(lo), b.min(hi)));
            }
        } else if a <= line && line <= b && lo <= s.line() && s.line() <= hi {
            parts.push((s.line(), s.line()));
        }
    }
    merge_intervals(parts)
}

pub(crate) fn intersect_intervals(a: &[(i64, i64)], b: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for &(a0, a1) in a {
        for &(b0, b1) in b {
            let (lo, hi) = (a0.max(b0), a1.min(b1));
            if lo <= hi {
                out.push((lo, hi));
            }
        }
    }
    merge_intervals(out)
}

fn check_contained(poly: &SimplePolygon, r: &Rect) -> Result<()> {
    if poly.contains_rect(r) {
        Ok(())
    } else {
        Err(Error::NotContained(*r))
    }
}

fn side_blockers(poly: &SimplePolygon, r: &Rect, d: Dir) -> Vec<(i64, i64)> {
    let horizontal = matches!(d, Dir::Top | Dir::Bottom);
    let (lo, hi) = r.side_span(d);
    boundary_on_line(poly, horizontal, r.side_coord(d), lo, hi)
        .into_iter()
        .filter(|&(a, b)| !(a == b && (a == lo || a == hi)))
        .collect()
}

pub fn blockers(poly: &SimplePolygon, r: &Rect) -> Result<BlockerSet> {
    check_contained(poly, r)?;
    Ok(BlockerSet {
        top: side_blockers(poly, r, Dir::Top),
        bottom: side_blockers(poly, r, Dir::Bottom),
        left: side_blockers(poly, r, Dir::Left),
        right: side_blockers(poly, r, Dir::Right),
    })
}

fn grow(r: &Rect, d: Dir, step: i64) -> Rect {
    let mut g = *r;
    match d {
        Dir::Top => g.y2 += step,
        Dir::Bottom => g.y1 -= step,
        Dir::Left => g.x1 -= step,
        Dir::Right => g.x2 += step,
    }
    g
}

fn maximal_unchecked(poly: &SimplePolygon, r: &Rect) -> bool {
    Dir::ALL.iter().all(|&d| !poly.contains_rect(&grow(r, d, 1)))
}

/// No single side can move outward by one grid unit while staying inside.
pub fn is_maximal(poly: &SimplePolygon, r: &Rect) -> Result<bool> {
    check_contained(poly, r)?;
    Ok(maximal_unchecked(poly, r))
}

/// Maximal rectangles in canonical `(x1, y1, x2, y2)` order.
///
/// Every side of a maximal rectangle touches a polygon side, so only pairs of
/// vertex coordinates need to be swept.
pub fn enumerate_maximal(poly: &SimplePolygon) -> RectFamily {
    let g = poly.grid();
    let (xs, ys) = (&g.xs, &g.ys);
    let mut out = Vec::new();
    for a in 0..xs.len() {
        for b in a + 1..xs.len() {
            for c in 0..ys.len() {
                for d in c + 1..ys.len() {
                    let r = Rect::raw(xs[a], ys[c], xs[b], ys[d]);
                    if !poly.contains_rect(&r) {
                        // taller strips over the same columns are not contained either
                        break;
                    }
                    if maximal_unchecked(poly, &r) {
                        out.push(r);
                    }
                }
            }
        }
    }
    out.sort();
    RectFamily::from_sorted(poly, out)
}

/// Grows one side of `r` until further growth leaves the polygon.
pub fn extension(poly: &SimplePolygon, r: &Rect, dir: Dir) -> Result<Rect> {
    check_contained(poly, r)?;
    let g = poly.grid();
    let mut cur = *r;
    loop {
        let next_line = match dir {
            Dir::Top => g.ys.iter().find(|&&y| y > cur.y2).copied(),
            Dir::Bottom => g.ys.iter().rev().find(|&&y| y < cur.y1).copied(),
            Dir::Left => g.xs.iter().rev().find(|&&x| x < cur.x1).copied(),
            Dir::Right => g.xs.iter().find(|&&x| x > cur.x2).copied(),
        };
        let Some(l) = next_line else { return Ok(cur) };
        let mut cand = cur;
        match dir {
            Dir::Top => cand.y2 = l,
            Dir::Bottom => cand.y1 = l,
            Dir::Left => cand.x1 = l,
            Dir::Right => cand.x2 = l,
        }
        if !poly.contains_rect(&cand) {
            return Ok(cur);
        }
        cur = cand;
    }
}

/// Maximal closed x-intervals of `[x1, x2]` where both the top and the bottom
/// side of `r` lie on the boundary.
pub fn vertical_blocker_lines(poly: &SimplePolygon, r: &Rect) -> Vec<(i64, i64)> {
    let top = boundary_on_line(poly, true, r.y2, r.x1, r.x2);
    let bottom = boundary_on_line(poly, true, r.y1, r.x1, r.x2);
    intersect_intervals(&top, &bottom)
}

/// Components of the vertical blocker set that avoid the rectangle's corners.
fn proper_vertical_blockers(poly: &SimplePolygon, r: &Rect) -> Vec<(i64, i64)> {
    vertical_blocker_lines(poly, r)
        .into_iter()
        .filter(|&(a, b)| a < b || (r.x1 < a && a < r.x2))
        .collect()
}

/// Some x strictly between the vertical sides has a top and a bottom blocker.
pub fn is_vertically_blocked(poly: &SimplePolygon, r: &Rect) -> bool {
    !proper_vertical_blockers(poly, r).is_empty()
}

/// Two vertical blockers with a non-blocked x between them.
pub fn has_two_vertical_blockers(poly: &SimplePolygon, r: &Rect) -> bool {
    proper_vertical_blockers(poly, r).len() >= 2
}

/// Whether two blocker interval lists on the same line share a point that is
/// not a corner of either rectangle. `ends_a`/`ends_b` are the side spans.
pub fn share_blocker_point(a: &[(i64, i64)], ends_a: (i64, i64), b: &[(i64, i64)], ends_b: (i64, i64)) -> bool {
    let corner = |x: i64| x == ends_a.0 || x == ends_a.1 || x == ends_b.0 || x == ends_b.1;
    intersect_intervals(a, b).iter().any(|&(lo, hi)| lo < hi || !corner(lo))
}

/// Two rectangles have a common blocker in direction `d`: their sides in that
/// direction lie on the same line and share a non-corner boundary point.
pub fn common_blocker(poly: &SimplePolygon, a: &Rect, b: &Rect, d: Dir) -> bool {
    if a.side_coord(d) != b.side_coord(d) {
        return false;
    }
    let (Ok(ba), Ok(bb)) = (blockers(poly, a), blockers(poly, b)) else {
        return false;
    };
    share_blocker_point(ba.side(d), a.side_span(d), bb.side(d), b.side_span(d))
}

/// Ordered set of rectangles inside one polygon with index lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectFamily {
    rects: Vec<Rect>,
    index: HashMap<Rect, usize>,
    owner: u64,
}

impl RectFamily {
    /// Family in the given order; rejects duplicates and rectangles outside the polygon.
    pub fn new(poly: &SimplePolygon, rects: Vec<Rect>) -> Result<RectFamily> {
        let mut index = HashMap::new();
        for (i, r) in rects.iter().enumerate() {
            check_contained(poly, r)?;
            if index.insert(*r, i).is_some() {
                return Err(Error::BadParameter(format!("duplicate rectangle {r}")));
            }
        }
        Ok(RectFamily { rects, index, owner: poly.fingerprint() })
    }

    fn from_sorted(poly: &SimplePolygon, rects: Vec<Rect>) -> RectFamily {
        let index = rects.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        RectFamily { rects, index, owner: poly.fingerprint() }
    }

    /// Sub-family in the order of `indices`.
    pub fn select(&self, indices: &[usize]) -> RectFamily {
        let rects: Vec<Rect> = indices.iter().map(|&i| self.rects[i]).collect();
        let index = rects.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        RectFamily { rects, index, owner: self.owner }
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn get(&self, i: usize) -> Rect {
        self.rects[i]
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rect> {
        self.rects.iter()
    }

    pub fn index_of(&self, r: &Rect) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Rect) -> bool {
        self.index.contains_key(r)
    }

    /// Fingerprint of the polygon this family was built against.
    pub fn owner(&self) -> u64 {
        self.owner
    }

    /// Indices of members containing `p`.
    pub fn members_at(&self, p: Point) -> Vec<usize> {
        (0..self.rects.len()).filter(|&i| self.rects[i].contains(p)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::polygon_from_vertices;

    fn r(x1: i64, y1: i64, x2: i64, y2: i64) -> Rect {
        Rect::new(x1, y1, x2, y2).unwrap()
    }

    fn boxp() -> SimplePolygon {
        polygon_from_vertices(&[(0, 0), (10, 0), (10, 5), (0, 5)]).unwrap()
    }

    fn lpoly() -> SimplePolygon {
        polygon_from_vertices(&[(0, 0), (4, 0), (4, 1), (2, 1), (2, 2), (0, 2)]).unwrap()
    }

    fn plus() -> SimplePolygon {
        crate::geom::polygon_from_union(&[r(2, 0, 4, 6), r(0, 2, 6, 4)]).unwrap()
    }

    #[test]
    fn blockers_examples() {
        let b = blockers(&boxp(), &r(0, 0, 10, 5)).unwrap();
        assert_eq!(b.top, vec![(0, 10)]);
        assert_eq!(b.left, vec![(0, 5)]);
        let l = lpoly();
        let b = blockers(&l, &r(0, 0, 2, 2)).unwrap();
        assert_eq!(b.right, vec![(1, 2)]);
        assert_eq!(b.bottom, vec![(0, 2)]);
        let b = blockers(&l, &r(0, 0, 2, 1)).unwrap();
        assert!(b.top.is_empty());
        assert!(matches!(blockers(&l, &r(0, 0, 4, 2)), Err(Error::NotContained(_))));
    }

    #[test]
    fn maximality_examples() {
        assert!(is_maximal(&boxp(), &r(0, 0, 10, 5)).unwrap());
        assert!(!is_maximal(&boxp(), &r(1, 0, 9, 5)).unwrap());
        assert!(is_maximal(&lpoly(), &r(0, 0, 4, 1)).unwrap());
        assert!(is_maximal(&lpoly(), &r(0, 0, 2, 2)).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_maximal(&boxp()).rects(), &[r(0, 0, 10, 5)]);
        assert_eq!(enumerate_maximal(&lpoly()).rects(), &[r(0, 0, 2, 2), r(0, 0, 4, 1)]);
        assert_eq!(enumerate_maximal(&plus()).rects(), &[r(0, 2, 6, 4), r(2, 0, 4, 6)]);
    }

    #[test]
    fn extension_examples() {
        assert_eq!(extension(&boxp(), &r(1, 0, 9, 5), Dir::Right).unwrap(), r(1, 0, 10, 5));
        assert_eq!(extension(&lpoly(), &r(0, 0, 2, 1), Dir::Top).unwrap(), r(0, 0, 2, 2));
        assert_eq!(extension(&lpoly(), &r(0, 0, 2, 1), Dir::Right).unwrap(), r(0, 0, 4, 1));
    }

    #[test]
    fn vertical_blocker_examples() {
        assert_eq!(vertical_blocker_lines(&boxp(), &r(0, 0, 10, 5)), vec![(0, 10)]);
        let p = plus();
        assert_eq!(vertical_blocker_lines(&p, &r(2, 0, 4, 6)), vec![(2, 4)]);
        assert_eq!(vertical_blocker_lines(&p, &r(0, 2, 6, 4)), vec![(0, 2), (4, 6)]);
        assert!(has_two_vertical_blockers(&p, &r(0, 2, 6, 4)));
        assert!(!has_two_vertical_blockers(&p, &r(2, 0, 4, 6)));
        assert!(is_vertically_blocked(&p, &r(2, 0, 4, 6)));
    }

    #[test]
    fn family_rejects_duplicates_and_outsiders() {
        let l = lpoly();
        assert!(RectFamily::new(&l, vec![r(0, 0, 2, 2), r(0, 0, 2, 2)]).is_err());
        assert!(RectFamily::new(&l, vec![r(0, 0, 3, 2)]).is_err());
        let f = RectFamily::new(&l, vec![r(0, 0, 4, 1), r(0, 0, 2, 2)]).unwrap();
        assert_eq!(f.index_of(&r(0, 0, 2, 2)), Some(1));
    }
}
