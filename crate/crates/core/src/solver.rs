//! Covering with maximal rectangles: local search, exact branch and bound,
//! and maximum antirectangles.

use crate::error::{Error, Incumbent, Result};
use crate::geom::{Point, SimplePolygon};
use crate::hypergraph::{witness_points, CoverTarget};
use crate::maxrect::{enumerate_maximal, RectFamily};

/// Chosen indices into the complete family of maximal rectangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    pub chosen: Vec<usize>,
    pub target: CoverTarget,
    /// Accepted swaps (local search) or search nodes (exact).
    pub iterations: usize,
    pub k: usize,
}

impl CoverSolution {
    pub fn size(&self) -> usize {
        self.chosen.len()
    }
}

/// Witness-by-rectangle incidence.
struct Incidence {
    /// Rectangles covering each witness.
    by_witness: Vec<Vec<usize>>,
    /// Witnesses covered by each rectangle.
    by_rect: Vec<Vec<usize>>,
}

impl Incidence {
    fn new(poly: &SimplePolygon, fam: &RectFamily, target: CoverTarget) -> Incidence {
        let ws = witness_points(poly, fam, target);
        let by_witness: Vec<Vec<usize>> = ws.points.iter().map(|&p| fam.members_at(p)).collect();
        let mut by_rect = vec![Vec::new(); fam.len()];
        for (w, rs) in by_witness.iter().enumerate() {
            for &r in rs {
                by_rect[r].push(w);
            }
        }
        Incidence { by_witness, by_rect }
    }

    fn covers(&self, chosen: &[usize]) -> bool {
        let mut hit = vec![false; self.by_witness.len()];
        for &r in chosen {
            for &w in &self.by_rect[r] {
                hit[w] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }
}

/// Every witness of the target lies in some chosen rectangle.
pub fn coverage_check(poly: &SimplePolygon, fam: &RectFamily, chosen: &[usize], target: CoverTarget) -> bool {
    Incidence::new(poly, fam, target).covers(chosen)
}

/// Lexicographic k-subsets of `items`, visited until `f` returns true.
fn first_combination<F: FnMut(&[usize]) -> bool>(items: &[usize], k: usize, mut f: F) -> Option<Vec<usize>> {
    if k > items.len() {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf = vec![0; k];
    loop {
        for (b, &i) in buf.iter_mut().zip(&idx) {
            *b = items[i];
        }
        if f(&buf) {
            return Some(buf);
        }
        let n = items.len();
        let i = (0..k).rev().find(|&i| idx[i] < i + n - k)?;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// First improving swap `(X, Y)` with `X ⊆ S`, `Y ⊆ S^c`, `|X| <= k`, `|Y| < |X|`.
fn find_swap(inc: &Incidence, in_s: &[bool], k: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let nw = inc.by_witness.len();
    let mut count = vec![0usize; nw];
    for (r, &on) in in_s.iter().enumerate() {
        if on {
            for &w in &inc.by_rect[r] {
                count[w] += 1;
            }
        }
    }
    let members: Vec<usize> = (0..in_s.len()).filter(|&r| in_s[r]).collect();
    let others: Vec<usize> = (0..in_s.len()).filter(|&r| !in_s[r]).collect();
    for x in 1..=k.min(members.len()) {
        let mut found_y = None;
        let found_x = first_combination(&members, x, |xs| {
            for &r in xs {
                for &w in &inc.by_rect[r] {
                    count[w] -= 1;
                }
            }
            let uncovered: Vec<usize> = inc.by_rect_union(xs).into_iter().filter(|&w| count[w] == 0).collect();
            for &r in xs {
                for &w in &inc.by_rect[r] {
                    count[w] += 1;
                }
            }
            if uncovered.is_empty() {
                found_y = Some(Vec::new());
                return true;
            }
            if uncovered.iter().any(|&w| !inc.by_witness[w].iter().any(|r| !in_s[*r])) {
                return false;
            }
            let useful: Vec<usize> = others
                .iter()
                .copied()
                .filter(|&r| inc.by_rect[r].iter().any(|w| uncovered.binary_search(w).is_ok()))
                .collect();
            for y in 1..x {
                let hit = first_combination(&useful, y, |ys| {
                    uncovered.iter().all(|&w| inc.by_witness[w].iter().any(|r| ys.contains(r)))
                });
                if hit.is_some() {
                    found_y = hit;
                    return true;
                }
            }
            false
        });
        if let Some(xs) = found_x {
            return Some((xs, found_y.unwrap()));
        }
    }
    None
}

impl Incidence {
    fn by_rect_union(&self, rs: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = rs.iter().flat_map(|&r| self.by_rect[r].iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Local search from the whole complete family, applying the first improving
/// swap until none exists.
pub fn local_search_cover(poly: &SimplePolygon, target: CoverTarget, k: usize) -> CoverSolution {
    let fam = enumerate_maximal(poly);
    local_search_on(poly, &fam, target, k)
}

pub(crate) fn local_search_on(poly: &SimplePolygon, fam: &RectFamily, target: CoverTarget, k: usize) -> CoverSolution {
    let k = k.max(1);
    let inc = Incidence::new(poly, fam, target);
    let mut in_s = vec![true; fam.len()];
    let mut iterations = 0;
    while let Some((xs, ys)) = find_swap(&inc, &in_s, k) {
        for r in xs {
            in_s[r] = false;
        }
        for r in ys {
            in_s[r] = true;
        }
        iterations += 1;
    }
    let chosen = (0..fam.len()).filter(|&r| in_s[r]).collect();
    CoverSolution { chosen, target, iterations, k }
}

struct Bnb<'a> {
    by_witness: &'a [Vec<usize>],
    by_rect: Vec<Vec<usize>>,
    covered: Vec<usize>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: usize,
    limit: usize,
}

impl Bnb<'_> {
    fn lower_bound(&self) -> usize {
        // witnesses with pairwise disjoint option lists each need their own rectangle
        let mut open: Vec<usize> = (0..self.by_witness.len()).filter(|&w| self.covered[w] == 0).collect();
        open.sort_by_key(|&w| (self.by_witness[w].len(), w));
        let mut used = vec![false; self.by_rect.len()];
        let mut lb = 0;
        for w in open {
            if self.by_witness[w].iter().all(|&r| !used[r]) {
                lb += 1;
                for &r in &self.by_witness[w] {
                    used[r] = true;
                }
            }
        }
        lb
    }

    fn search(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limit {
            return false;
        }
        let pick = (0..self.by_witness.len()).filter(|&w| self.covered[w] == 0).min_by_key(|&w| (self.by_witness[w].len(), w));
        let Some(w) = pick else {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return true;
        };
        if self.chosen.len() + self.lower_bound() >= self.best.len() {
            return true;
        }
        for &r in self.by_witness[w].clone().iter() {
            self.chosen.push(r);
            for &x in &self.by_rect[r] {
                self.covered[x] += 1;
            }
            let ok = self.search();
            for &x in &self.by_rect[r] {
                self.covered[x] -= 1;
            }
            self.chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

fn greedy_cover(by_witness: &[Vec<usize>], by_rect: &[Vec<usize>]) -> Vec<usize> {
    let mut covered = vec![false; by_witness.len()];
    let mut chosen = Vec::new();
    while covered.iter().any(|c| !c) {
        let best = (0..by_rect.len())
            .max_by_key(|&r| (by_rect[r].iter().filter(|&&w| !covered[w]).count(), std::cmp::Reverse(r)))
            .unwrap();
        chosen.push(best);
        for &w in &by_rect[best] {
            covered[w] = true;
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Minimum cover by branch and bound; `LimitExceeded` carries the best cover found.
pub fn exact_cover(poly: &SimplePolygon, target: CoverTarget, node_limit: usize) -> Result<CoverSolution> {
    let fam = enumerate_maximal(poly);
    exact_cover_on(poly, &fam, target, node_limit)
}

pub(crate) fn exact_cover_on(poly: &SimplePolygon, fam: &RectFamily, target: CoverTarget, node_limit: usize) -> Result<CoverSolution> {
    let inc = Incidence::new(poly, fam, target);
    // keep one witness per distinct option list, and drop lists implied by a subset
    let mut lists: Vec<Vec<usize>> = inc.by_witness.clone();
    lists.sort();
    lists.dedup();
    let keep: Vec<Vec<usize>> = lists
        .iter()
        .filter(|l| !lists.iter().any(|o| o != *l && o.len() < l.len() && o.iter().all(|r| l.binary_search(r).is_ok())))
        .cloned()
        .collect();
    let mut by_rect = vec![Vec::new(); fam.len()];
    for (w, rs) in keep.iter().enumerate() {
        for &r in rs {
            by_rect[r].push(w);
        }
    }
    let greedy = greedy_cover(&keep, &by_rect);
    let mut b = Bnb {
        by_witness: &keep,
        by_rect,
        covered: vec![0; keep.len()],
        chosen: Vec::new(),
        best: greedy.clone(),
        nodes: 0,
        limit: node_limit,
    };
    // the greedy incumbent is a valid upper bound; search for strictly smaller
    let finished = b.search();
    let mut best = b.best.clone();
    best.sort_unstable();
    let sol = CoverSolution { chosen: best, target, iterations: b.nodes, k: 0 };
    if finished {
        Ok(sol)
    } else {
        Err(Error::LimitExceeded(Box::new(Incumbent::Cover(sol))))
    }
}

/// Convex corners plus centers of the polygon's grid cells.
pub fn antirectangle_candidates(poly: &SimplePolygon) -> Vec<Point> {
    let mut pts: Vec<Point> = poly.convex_corners().into_iter().map(|(x, y)| Point::grid(x, y)).collect();
    let g = poly.grid();
    for j in 0..g.ny() {
        for i in 0..g.nx() {
            if g.cell(i, j) {
                pts.push(Point::half(g.xs[i] + g.xs[i + 1], g.ys[j] + g.ys[j + 1]));
            }
        }
    }
    pts.sort();
    pts.dedup();
    pts
}

/// Some rectangle inside the polygon holds both points, i.e. their bounding box is inside.
pub fn mutually_visible(poly: &SimplePolygon, p: Point, q: Point) -> bool {
    poly.grid().contains_box(p.x.min(q.x), p.y.min(q.y), p.x.max(q.x), p.y.max(q.y))
}

/// Maximum independent set of the visibility graph on the candidate points.
pub fn max_antirectangle(poly: &SimplePolygon, node_limit: usize) -> Result<Vec<Point>> {
    let pts = antirectangle_candidates(poly);
    let n = pts.len();
    // compatibility graph: an edge when the two points do not see each other
    let mut compat = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let c = !mutually_visible(poly, pts[i], pts[j]);
            compat[i][j] = c;
            compat[j][i] = c;
        }
    }
    struct Clique<'a> {
        adj: &'a [Vec<bool>],
        best: Vec<usize>,
        cur: Vec<usize>,
        nodes: usize,
        limit: usize,
    }
    impl Clique<'_> {
        fn expand(&mut self, cand: Vec<usize>) -> bool {
            self.nodes += 1;
            if self.nodes > self.limit {
                return false;
            }
            if cand.is_empty() {
                if self.cur.len() > self.best.len() {
                    self.best = self.cur.clone();
                }
                return true;
            }
            // greedy coloring bound
            let mut colors: Vec<Vec<usize>> = Vec::new();
            let mut order = Vec::with_capacity(cand.len());
            for &v in &cand {
                let slot = colors.iter().position(|c| c.iter().all(|&u| !self.adj[u][v]));
                match slot {
                    Some(s) => colors[s].push(v),
                    None => colors.push(vec![v]),
                }
            }
            for (ci, c) in colors.iter().enumerate() {
                for &v in c {
                    order.push((v, ci + 1));
                }
            }
            let mut remaining: Vec<usize> = cand.clone();
            for &(v, bound) in order.iter().rev() {
                if self.cur.len() + bound <= self.best.len() {
                    return true;
                }
                self.cur.push(v);
                let next: Vec<usize> = remaining.iter().copied().filter(|&u| u != v && self.adj[v][u]).collect();
                let ok = self.expand(next);
                self.cur.pop();
                if !ok {
                    return false;
                }
                remaining.retain(|&u| u != v);
            }
            true
        }
    }
    let mut c = Clique { adj: &compat, best: Vec::new(), cur: Vec::new(), nodes: 0, limit: node_limit };
    let finished = c.expand((0..n).collect());
    let mut best: Vec<Point> = c.best.iter().map(|&i| pts[i]).collect();
    best.sort();
    if finished {
        Ok(best)
    } else {
        Err(Error::LimitExceeded(Box::new(Incumbent::Points(best))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::polygon_from_vertices;

    fn boxp() -> SimplePolygon {
        polygon_from_vertices(&[(0, 0), (10, 0), (10, 5), (0, 5)]).unwrap()
    }

    fn lpoly() -> SimplePolygon {
        polygon_from_vertices(&[(0, 0), (4, 0), (4, 1), (2, 1), (2, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut seen = Vec::new();
        first_combination(&[3, 5, 7, 9], 2, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![3, 5], vec![3, 7], vec![3, 9], vec![5, 7], vec![5, 9], vec![7, 9]]);
        assert_eq!(first_combination(&[1, 2], 0, |_| true), Some(vec![]));
        assert_eq!(first_combination(&[1, 2], 3, |_| true), None);
    }

    #[test]
    fn box_covers() {
        let p = boxp();
        let fam = enumerate_maximal(&p);
        for t in [CoverTarget::Boundary, CoverTarget::Corner, CoverTarget::Interior] {
            assert!(coverage_check(&p, &fam, &[0], t));
            assert!(!coverage_check(&p, &fam, &[], t));
            assert_eq!(local_search_cover(&p, t, 1).size(), 1);
            assert_eq!(exact_cover(&p, t, 1000).unwrap().size(), 1);
        }
        assert_eq!(max_antirectangle(&p, 10_000).unwrap().len(), 1);
    }

    #[test]
    fn l_polygon_covers() {
        let p = lpoly();
        assert_eq!(local_search_cover(&p, CoverTarget::Boundary, 1).size(), 2);
        assert_eq!(exact_cover(&p, CoverTarget::Boundary, 1000).unwrap().size(), 2);
        assert_eq!(max_antirectangle(&p, 10_000).unwrap().len(), 2);
    }

    #[test]
    fn limit_reports_incumbent() {
        let p = lpoly();
        match exact_cover(&p, CoverTarget::Boundary, 0) {
            Err(Error::LimitExceeded(b)) => match *b {
                Incumbent::Cover(s) => assert!(coverage_check(&p, &enumerate_maximal(&p), &s.chosen, CoverTarget::Boundary)),
                other => panic!("{other:?}"),
            },
            other => panic!("{other:?}"),
        }
    }
}
