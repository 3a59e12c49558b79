//! Brute-force oracles shared by the integration tests. They only look at raw
//! vertex lists and edge lists, never at library internals.
#![allow(dead_code)]

use rectcover::instances::gen_random;
use rectcover::SimplePolygon;
use std::collections::BTreeSet;

pub type Quad = (i64, i64, i64, i64);

/// Random polygon of the main corpus: 6..=16 vertices on a 14-grid.
pub fn corpus_polygon(seed: u64) -> SimplePolygon {
    gen_random(6 + 2 * (seed as usize % 6), 14, seed).unwrap()
}

/// Random polygon of the small corpus: 4..=12 vertices on a 12-grid.
pub fn small_polygon(seed: u64) -> SimplePolygon {
    gen_random(4 + 2 * (seed as usize % 5), 12, seed).unwrap()
}

/// Unit cells of the bounding box inside the polygon, by ray casting from each cell center.
pub struct CellMask {
    pub x0: i64,
    pub y0: i64,
    pub w: usize,
    pub h: usize,
    inside: Vec<bool>,
    // prefix[(j)*(w+1)+i] = inside cells in [0,i)x[0,j)
    prefix: Vec<usize>,
}

impl CellMask {
    pub fn new(vertices: &[(i64, i64)]) -> CellMask {
        let x0 = vertices.iter().map(|v| v.0).min().unwrap();
        let x1 = vertices.iter().map(|v| v.0).max().unwrap();
        let y0 = vertices.iter().map(|v| v.1).min().unwrap();
        let y1 = vertices.iter().map(|v| v.1).max().unwrap();
        let (w, h) = ((x1 - x0) as usize, (y1 - y0) as usize);
        let mut inside = vec![false; w * h];
        for j in 0..h {
            for i in 0..w {
                // doubled coordinates: the center never lies on a grid line
                let (cx, cy) = (2 * (x0 + i as i64) + 1, 2 * (y0 + j as i64) + 1);
                let mut crossings = 0;
                for k in 0..vertices.len() {
                    let (a, b) = (vertices[k], vertices[(k + 1) % vertices.len()]);
                    if a.0 == b.0 && 2 * a.0 > cx {
                        let (lo, hi) = (2 * a.1.min(b.1), 2 * a.1.max(b.1));
                        if lo < cy && cy < hi {
                            crossings += 1;
                        }
                    }
                }
                inside[j * w + i] = crossings % 2 == 1;
            }
        }
        let mut prefix = vec![0; (w + 1) * (h + 1)];
        for j in 0..h {
            for i in 0..w {
                prefix[(j + 1) * (w + 1) + i + 1] =
                    inside[j * w + i] as usize + prefix[j * (w + 1) + i + 1] + prefix[(j + 1) * (w + 1) + i] - prefix[j * (w + 1) + i];
            }
        }
        CellMask { x0, y0, w, h, inside, prefix }
    }

    pub fn cell(&self, x: i64, y: i64) -> bool {
        let (i, j) = (x - self.x0, y - self.y0);
        i >= 0 && j >= 0 && (i as usize) < self.w && (j as usize) < self.h && self.inside[j as usize * self.w + i as usize]
    }

    /// Integer rectangle fully inside.
    pub fn holds(&self, r: Quad) -> bool {
        let (x1, y1, x2, y2) = r;
        if x1 >= x2 || y1 >= y2 || x1 < self.x0 || y1 < self.y0 {
            return false;
        }
        let (i1, j1, i2, j2) = ((x1 - self.x0) as usize, (y1 - self.y0) as usize, (x2 - self.x0) as usize, (y2 - self.y0) as usize);
        if i2 > self.w || j2 > self.h {
            return false;
        }
        let p = |i: usize, j: usize| self.prefix[j * (self.w + 1) + i];
        p(i2, j2) + p(i1, j1) - p(i1, j2) - p(i2, j1) == (i2 - i1) * (j2 - j1)
    }

    pub fn cells(&self) -> Vec<(i64, i64)> {
        let mut v = Vec::new();
        for j in 0..self.h {
            for i in 0..self.w {
                if self.inside[j * self.w + i] {
                    v.push((self.x0 + i as i64, self.y0 + j as i64));
                }
            }
        }
        v
    }
}

/// All inside integer rectangles that cannot grow by one unit in any direction.
pub fn brute_maximal(vertices: &[(i64, i64)]) -> BTreeSet<Quad> {
    let m = CellMask::new(vertices);
    let mut out = BTreeSet::new();
    let (xa, ya) = (m.x0, m.y0);
    let (xb, yb) = (m.x0 + m.w as i64, m.y0 + m.h as i64);
    for x1 in xa..xb {
        for x2 in x1 + 1..=xb {
            for y1 in ya..yb {
                for y2 in y1 + 1..=yb {
                    let r = (x1, y1, x2, y2);
                    if m.holds(r)
                        && !m.holds((x1 - 1, y1, x2, y2))
                        && !m.holds((x1, y1 - 1, x2, y2))
                        && !m.holds((x1, y1, x2 + 1, y2))
                        && !m.holds((x1, y1, x2, y2 + 1))
                    {
                        out.insert(r);
                    }
                }
            }
        }
    }
    out
}

/// Boundary points at half-unit spacing, in doubled coordinates.
pub fn boundary_samples(vertices: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts = BTreeSet::new();
    for k in 0..vertices.len() {
        let (a, b) = (vertices[k], vertices[(k + 1) % vertices.len()]);
        let (ax, ay, bx, by) = (2 * a.0, 2 * a.1, 2 * b.0, 2 * b.1);
        let steps = (bx - ax).abs().max((by - ay).abs());
        for t in 0..=steps {
            pts.insert((ax + (bx - ax).signum() * t, ay + (by - ay).signum() * t));
        }
    }
    pts.into_iter().collect()
}

/// Closed containment of a doubled point.
pub fn holds_point(r: Quad, p: (i64, i64)) -> bool {
    2 * r.0 <= p.0 && p.0 <= 2 * r.2 && 2 * r.1 <= p.1 && p.1 <= 2 * r.3
}

/// Members inducing a connected subgraph of `edges`.
pub fn connected_in(members: &[usize], edges: &BTreeSet<(usize, usize)>) -> bool {
    if members.len() <= 1 {
        return true;
    }
    let mut seen = vec![members[0]];
    let mut stack = vec![members[0]];
    while let Some(v) = stack.pop() {
        for &u in members {
            if !seen.contains(&u) && (edges.contains(&(u.min(v), u.max(v)))) {
                seen.push(u);
                stack.push(u);
            }
        }
    }
    seen.len() == members.len()
}

/// Boundary points whose rectangle set is not connected in the graph.
pub fn unsupported_boundary_points(vertices: &[(i64, i64)], rects: &[Quad], edges: &BTreeSet<(usize, usize)>) -> Vec<(i64, i64)> {
    boundary_samples(vertices)
        .into_iter()
        .filter(|&p| {
            let members: Vec<usize> = (0..rects.len()).filter(|&i| holds_point(rects[i], p)).collect();
            !connected_in(&members, edges)
        })
        .collect()
}

/// Minimum number of sets covering every element, by iterative deepening.
/// `by_elem[e]` lists the sets containing element `e`.
pub fn brute_min_cover(by_elem: &[Vec<usize>], n_sets: usize) -> usize {
    fn go(by_elem: &[Vec<usize>], covered: &mut Vec<bool>, sets: &[Vec<usize>], depth: usize) -> bool {
        let Some(e) = (0..by_elem.len()).filter(|&e| !covered[e]).min_by_key(|&e| by_elem[e].len()) else {
            return true;
        };
        if depth == 0 {
            return false;
        }
        for &s in &by_elem[e] {
            let newly: Vec<usize> = sets[s].iter().copied().filter(|&x| !covered[x]).collect();
            for &x in &newly {
                covered[x] = true;
            }
            let ok = go(by_elem, covered, sets, depth - 1);
            for &x in &newly {
                covered[x] = false;
            }
            if ok {
                return true;
            }
        }
        false
    }
    let mut sets = vec![Vec::new(); n_sets];
    for (e, ss) in by_elem.iter().enumerate() {
        for &s in ss {
            sets[s].push(e);
        }
    }
    (0..=n_sets).find(|&d| go(by_elem, &mut vec![false; by_elem.len()], &sets, d)).expect("every element has a set")
}

/// Boundary cover number from scratch: brute-force maximal rectangles against boundary samples.
pub fn brute_boundary_cover(vertices: &[(i64, i64)]) -> usize {
    let rects: Vec<Quad> = brute_maximal(vertices).into_iter().collect();
    let by_elem: Vec<Vec<usize>> = boundary_samples(vertices)
        .into_iter()
        .map(|p| (0..rects.len()).filter(|&i| holds_point(rects[i], p)).collect())
        .collect();
    brute_min_cover(&by_elem, rects.len())
}

/// Interior cover number from scratch: brute-force maximal rectangles against unit cells.
pub fn brute_interior_cover(vertices: &[(i64, i64)]) -> usize {
    let rects: Vec<Quad> = brute_maximal(vertices).into_iter().collect();
    let by_elem: Vec<Vec<usize>> = CellMask::new(vertices)
        .cells()
        .into_iter()
        .map(|(x, y)| (0..rects.len()).filter(|&i| rects[i].0 <= x && x < rects[i].2 && rects[i].1 <= y && y < rects[i].3).collect())
        .collect();
    brute_min_cover(&by_elem, rects.len())
}

/// Pairs of rectangles that are the only two containing some cell of their
/// coordinate arrangement.
pub fn brute_forced_interior_pairs(rects: &[Quad]) -> BTreeSet<(usize, usize)> {
    let mut xs: Vec<i64> = rects.iter().flat_map(|r| [r.0, r.2]).collect();
    let mut ys: Vec<i64> = rects.iter().flat_map(|r| [r.1, r.3]).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    let mut out = BTreeSet::new();
    for wx in xs.windows(2) {
        for wy in ys.windows(2) {
            let (cx, cy) = (wx[0] + wx[1], wy[0] + wy[1]);
            let hit: Vec<usize> =
                (0..rects.len()).filter(|&i| 2 * rects[i].0 < cx && cx < 2 * rects[i].2 && 2 * rects[i].1 < cy && cy < 2 * rects[i].3).collect();
            if let [a, b] = hit[..] {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Exhaustive planarity over rotation systems. Edges are inserted one at a
/// time at every possible position in both endpoint rotations; a branch dies
/// as soon as its partial rotation system has positive genus, which no later
/// insertion can undo.
pub fn planar_by_rotations(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut es: Vec<(usize, usize)> = edges.iter().filter(|e| e.0 != e.1).map(|&(a, b)| (a.min(b), a.max(b))).collect();
    es.sort_unstable();
    es.dedup();
    if es.len() > 3 * n.max(3) - 6 {
        return false;
    }
    // breadth-first vertex order; an edge comes as soon as both ends are placed
    let mut rank = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if rank[s] != usize::MAX {
            continue;
        }
        rank[s] = next;
        next += 1;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(a, b) in &es {
                let u = if a == v { b } else if b == v { a } else { continue };
                if rank[u] == usize::MAX {
                    rank[u] = next;
                    next += 1;
                    queue.push_back(u);
                }
            }
        }
    }
    es.sort_by_key(|&(a, b)| (rank[a].max(rank[b]), rank[a].min(rank[b])));
    let mut rot = vec![Vec::new(); n];
    insert(&es, 0, &mut rot)
}

fn genus_zero(rot: &[Vec<usize>]) -> bool {
    let n = rot.len();
    let mut seen: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    let mut faces = 0;
    let mut e2 = 0;
    for u in 0..n {
        for &w in &rot[u] {
            e2 += 1;
            if !seen.insert((u, w)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (u, w);
            loop {
                let i = rot[b].iter().position(|&x| x == a).unwrap();
                let c = rot[b][(i + 1) % rot[b].len()];
                (a, b) = (b, c);
                if !seen.insert((a, b)) {
                    break;
                }
            }
        }
    }
    // components, isolated vertices included
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = c;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &rot[v] {
                if comp[u] == usize::MAX {
                    comp[u] = c;
                    stack.push(u);
                }
            }
        }
        c += 1;
    }
    let isolated = (0..n).filter(|&v| rot[v].is_empty()).count();
    n + faces + isolated == e2 / 2 + 2 * c
}

fn insert(es: &[(usize, usize)], k: usize, rot: &mut Vec<Vec<usize>>) -> bool {
    if !genus_zero(rot) {
        return false;
    }
    let Some(&(a, b)) = es.get(k) else {
        return true;
    };
    for i in 0..rot[a].len().max(1) {
        rot[a].insert(i, b);
        for j in 0..rot[b].len().max(1) {
            rot[b].insert(j, a);
            if insert(es, k + 1, rot) {
                return true;
            }
            rot[b].remove(j);
        }
        rot[a].remove(i);
    }
    false
}

/// Random maximal planar graph: stacked insertions followed by edge flips.
pub fn random_triangulation(n: usize, rng: &mut impl rand::Rng) -> Vec<(usize, usize)> {
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let f = faces.swap_remove(rng.gen_range(0..faces.len()));
        let [a, b, c] = f;
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    let edge_set = |faces: &[[usize; 3]]| {
        let mut s = BTreeSet::new();
        for f in faces {
            for i in 0..3 {
                let (a, b) = (f[i], f[(i + 1) % 3]);
                s.insert((a.min(b), a.max(b)));
            }
        }
        s
    };
    for _ in 0..3 * n {
        let i = rng.gen_range(0..faces.len());
        let side = rng.gen_range(0..3);
        let (a, b, c) = (faces[i][side], faces[i][(side + 1) % 3], faces[i][(side + 2) % 3]);
        // the other face holding the dart b->a
        let Some(j) = (0..faces.len()).find(|&j| j != i && (0..3).any(|s| faces[j][s] == b && faces[j][(s + 1) % 3] == a)) else {
            continue;
        };
        let s = (0..3).find(|&s| faces[j][s] == b).unwrap();
        let d = faces[j][(s + 2) % 3];
        if c == d || edge_set(&faces).contains(&(c.min(d), c.max(d))) {
            continue;
        }
        faces[i] = [c, a, d];
        faces[j] = [d, b, c];
    }
    edge_set(&faces).into_iter().collect()
}

/// Erdos-Renyi graph.
pub fn random_graph(n: usize, p: f64, rng: &mut impl rand::Rng) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                e.push((a, b));
            }
        }
    }
    e
}

pub fn complete(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

pub fn k33() -> Vec<(usize, usize)> {
    (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect()
}

pub fn petersen() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    e
}
