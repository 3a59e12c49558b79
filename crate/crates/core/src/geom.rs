//! Integer geometry for orthogonal polygons and axis-parallel rectangles.
//!
//! Polygon vertices and rectangle sides live on the integer grid. Points used
//! as probes (midpoints, cell centers) live on the doubled grid so that every
//! midpoint is still an integer.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Largest accepted absolute grid coordinate; doubling and summing two
/// coordinates must not overflow.
pub const COORD_LIMIT: i64 = 1 << 60;

/// A point on the doubled grid: `x` and `y` are twice the geometric coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    /// Point at integer grid coordinates.
    pub fn grid(x: i64, y: i64) -> Point {
        Point { x: 2 * x, y: 2 * y }
    }

    /// Point given directly in doubled coordinates.
    pub fn half(x: i64, y: i64) -> Point {
        Point { x, y }
    }

    pub fn to_f64(self) -> (f64, f64) {
        (self.x as f64 / 2.0, self.y as f64 / 2.0)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn half(v: i64) -> String {
            if v % 2 == 0 {
                format!("{}", v / 2)
            } else {
                format!("{}.5", if v < 0 { format!("-{}", (-v) / 2) } else { format!("{}", v / 2) })
            }
        }
        write!(f, "({}, {})", half(self.x), half(self.y))
    }
}

/// Closed axis-parallel rectangle `[x1,x2] x [y1,y2]` with positive width and height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rect {
    pub x1: i64,
    pub y1: i64,
    pub x2: i64,
    pub y2: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    Top,
    Bottom,
    Left,
    Right,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::Top, Dir::Bottom, Dir::Left, Dir::Right];

    pub fn opposite(self) -> Dir {
        match self {
            Dir::Top => Dir::Bottom,
            Dir::Bottom => Dir::Top,
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
        }
    }
}

impl Rect {
    pub fn new(x1: i64, y1: i64, x2: i64, y2: i64) -> Result<Rect> {
        if x1 >= x2 || y1 >= y2 {
            return Err(Error::Degenerate(x1, y1, x2, y2));
        }
        for v in [x1, y1, x2, y2] {
            if v.abs() > COORD_LIMIT {
                return Err(Error::CoordinateOutOfRange(v));
            }
        }
        Ok(Rect { x1, y1, x2, y2 })
    }

    /// Constructor for coordinates already known to be valid.
    pub(crate) fn raw(x1: i64, y1: i64, x2: i64, y2: i64) -> Rect {
        debug_assert!(x1 < x2 && y1 < y2);
        Rect { x1, y1, x2, y2 }
    }

    pub fn is_valid(&self) -> bool {
        self.x1 < self.x2 && self.y1 < self.y2
    }

    pub fn width(&self) -> i64 {
        self.x2 - self.x1
    }

    pub fn height(&self) -> i64 {
        self.y2 - self.y1
    }

    pub fn area(&self) -> i64 {
        self.width() * self.height()
    }

    /// Closed containment of a doubled-grid point.
    pub fn contains(&self, p: Point) -> bool {
        2 * self.x1 <= p.x && p.x <= 2 * self.x2 && 2 * self.y1 <= p.y && p.y <= 2 * self.y2
    }

    pub fn contains_rect(&self, o: &Rect) -> bool {
        self.x1 <= o.x1 && o.x2 <= self.x2 && self.y1 <= o.y1 && o.y2 <= self.y2
    }

    /// Closed regions share at least one point.
    pub fn intersects(&self, o: &Rect) -> bool {
        self.x1 <= o.x2 && o.x1 <= self.x2 && self.y1 <= o.y2 && o.y1 <= self.y2
    }

    pub fn is_corner(&self, p: Point) -> bool {
        (p.x == 2 * self.x1 || p.x == 2 * self.x2) && (p.y == 2 * self.y1 || p.y == 2 * self.y2)
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            Point::grid(self.x1, self.y1),
            Point::grid(self.x2, self.y1),
            Point::grid(self.x2, self.y2),
            Point::grid(self.x1, self.y2),
        ]
    }

    pub fn center(&self) -> Point {
        Point::half(self.x1 + self.x2, self.y1 + self.y2)
    }

    /// Coordinate of the line carrying side `d`.
    pub fn side_coord(&self, d: Dir) -> i64 {
        match d {
            Dir::Top => self.y2,
            Dir::Bottom => self.y1,
            Dir::Left => self.x1,
            Dir::Right => self.x2,
        }
    }

    /// Extent of side `d` along its own line.
    pub fn side_span(&self, d: Dir) -> (i64, i64) {
        match d {
            Dir::Top | Dir::Bottom => (self.x1, self.x2),
            Dir::Left | Dir::Right => (self.y1, self.y2),
        }
    }

    pub fn x_span(&self) -> (i64, i64) {
        (self.x1, self.x2)
    }

    pub fn y_span(&self) -> (i64, i64) {
        (self.y1, self.y2)
    }

    /// Mirror image under `y -> -y`.
    pub fn flip_y(&self) -> Rect {
        Rect::raw(self.x1, -self.y2, self.x2, -self.y1)
    }

    pub fn transpose(&self) -> Rect {
        Rect::raw(self.y1, self.x1, self.y2, self.x2)
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Rect {
        Rect::raw(self.x1 + dx, self.y1 + dy, self.x2 + dx, self.y2 + dy)
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]x[{},{}]", self.x1, self.x2, self.y1, self.y2)
    }
}

/// Closed interval containment `a ⊆ b`.
pub fn span_within(a: (i64, i64), b: (i64, i64)) -> bool {
    b.0 <= a.0 && a.1 <= b.1
}

/// Which argument of a pairwise query plays a role.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntersectionKind {
    Disjoint,
    Corner,
    /// `vertical` is the rectangle whose vertical sides cross the other's horizontal sides.
    Piercing { vertical: Which, aligned: bool },
}

fn pierces(v: &Rect, h: &Rect) -> bool {
    span_within(v.x_span(), h.x_span()) && span_within(h.y_span(), v.y_span())
}

fn aligned(v: &Rect, h: &Rect) -> bool {
    v.y1 == h.y1 || v.y2 == h.y2 || v.x1 == h.x1 || v.x2 == h.x2
}

/// Pairwise intersection pattern of two rectangles under closed semantics.
///
/// Piercing means one rectangle's x-span lies within the other's while the
/// other's y-span lies within its own. Every other overlapping pair,
/// including pairs touching along an edge or at a point, is a Corner.
pub fn classify_intersection(a: &Rect, b: &Rect) -> Result<IntersectionKind> {
    for r in [a, b] {
        if !r.is_valid() {
            return Err(Error::Degenerate(r.x1, r.y1, r.x2, r.y2));
        }
    }
    if !a.intersects(b) {
        return Ok(IntersectionKind::Disjoint);
    }
    if a == b {
        return Ok(IntersectionKind::Corner);
    }
    if pierces(a, b) {
        return Ok(IntersectionKind::Piercing { vertical: Which::First, aligned: aligned(a, b) });
    }
    if pierces(b, a) {
        return Ok(IntersectionKind::Piercing { vertical: Which::Second, aligned: aligned(b, a) });
    }
    Ok(IntersectionKind::Corner)
}

/// `a ≺ b`: the two rectangles pierce and `a` is the narrow, vertical one.
pub fn pierce_less(a: &Rect, b: &Rect) -> bool {
    a != b && a.is_valid() && b.is_valid() && pierces(a, b)
}

/// Closed point-in-rectangle test.
pub fn rect_contains(p: Point, r: &Rect) -> bool {
    r.contains(p)
}

/// Closed point-on-boundary test.
pub fn boundary_contains(p: Point, poly: &SimplePolygon) -> bool {
    poly.sides().any(|s| s.contains(p))
}

/// Axis-parallel polygon side between two grid vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Side {
    pub a: (i64, i64),
    pub b: (i64, i64),
}

impl Side {
    pub fn is_horizontal(&self) -> bool {
        self.a.1 == self.b.1
    }

    /// Constant coordinate of the side's line.
    pub fn line(&self) -> i64 {
        if self.is_horizontal() {
            self.a.1
        } else {
            self.a.0
        }
    }

    /// Sorted extent along the line.
    pub fn span(&self) -> (i64, i64) {
        if self.is_horizontal() {
            (self.a.0.min(self.b.0), self.a.0.max(self.b.0))
        } else {
            (self.a.1.min(self.b.1), self.a.1.max(self.b.1))
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        let (lo, hi) = self.span();
        if self.is_horizontal() {
            p.y == 2 * self.a.1 && 2 * lo <= p.x && p.x <= 2 * hi
        } else {
            p.x == 2 * self.a.0 && 2 * lo <= p.y && p.y <= 2 * hi
        }
    }

    fn intersects(&self, o: &Side) -> bool {
        let bx = |s: &Side| (s.a.0.min(s.b.0), s.a.0.max(s.b.0), s.a.1.min(s.b.1), s.a.1.max(s.b.1));
        let (ax1, ax2, ay1, ay2) = bx(self);
        let (bx1, bx2, by1, by2) = bx(o);
        ax1 <= bx2 && bx1 <= ax2 && ay1 <= by2 && by1 <= ay2
    }
}

/// Compressed-coordinate cell grid of a polygon, used for exact containment queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub xs: Vec<i64>,
    pub ys: Vec<i64>,
    inside: Vec<bool>,
    prefix: Vec<u32>,
}

impl Grid {
    fn build(vertices: &[(i64, i64)]) -> Grid {
        let xs: Vec<i64> = vertices.iter().map(|v| v.0).collect::<BTreeSet<_>>().into_iter().collect();
        let ys: Vec<i64> = vertices.iter().map(|v| v.1).collect::<BTreeSet<_>>().into_iter().collect();
        let (nx, ny) = (xs.len() - 1, ys.len() - 1);
        let mut inside = vec![false; nx * ny];
        for j in 0..ny {
            let cy = ys[j] + ys[j + 1];
            for i in 0..nx {
                let cx = xs[i] + xs[i + 1];
                inside[j * nx + i] = ray_inside(vertices, cx, cy);
            }
        }
        let mut prefix = vec![0u32; (nx + 1) * (ny + 1)];
        for j in 0..ny {
            for i in 0..nx {
                prefix[(j + 1) * (nx + 1) + i + 1] = inside[j * nx + i] as u32
                    + prefix[j * (nx + 1) + i + 1]
                    + prefix[(j + 1) * (nx + 1) + i]
                    - prefix[j * (nx + 1) + i];
            }
        }
        Grid { xs, ys, inside, prefix }
    }

    pub fn nx(&self) -> usize {
        self.xs.len() - 1
    }

    pub fn ny(&self) -> usize {
        self.ys.len() - 1
    }

    /// Whether cell `(i, j)` (column, row) lies inside the polygon.
    pub fn cell(&self, i: usize, j: usize) -> bool {
        self.inside[j * self.nx() + i]
    }

    fn cell_opt(&self, i: isize, j: isize) -> bool {
        i >= 0 && j >= 0 && (i as usize) < self.nx() && (j as usize) < self.ny() && self.cell(i as usize, j as usize)
    }

    fn count(&self, i0: usize, i1: usize, j0: usize, j1: usize) -> u32 {
        let w = self.nx() + 1;
        self.prefix[j1 * w + i1] + self.prefix[j0 * w + i0] - self.prefix[j0 * w + i1] - self.prefix[j1 * w + i0]
    }

    /// Closed containment of a positive-area rectangle.
    pub fn contains_rect(&self, r: &Rect) -> bool {
        if r.x1 < self.xs[0] || r.x2 > *self.xs.last().unwrap() || r.y1 < self.ys[0] || r.y2 > *self.ys.last().unwrap() {
            return false;
        }
        let i0 = self.xs.partition_point(|&x| x <= r.x1) - 1;
        let i1 = self.xs.partition_point(|&x| x < r.x2);
        let j0 = self.ys.partition_point(|&y| y <= r.y1) - 1;
        let j1 = self.ys.partition_point(|&y| y < r.y2);
        let total = ((i1 - i0) * (j1 - j0)) as u32;
        self.count(i0, i1, j0, j1) == total
    }

    /// Faces of the compressed arrangement met by the closed doubled interval `[lo, hi]`.
    /// `Ok(i)` is grid line `i`, `Err(i)` the open gap between lines `i` and `i + 1`.
    fn faces(lines: &[i64], lo: i64, hi: i64) -> Option<Vec<std::result::Result<usize, usize>>> {
        if lo < 2 * lines[0] || hi > 2 * lines[lines.len() - 1] {
            return None;
        }
        let mut out = Vec::new();
        for (i, &l) in lines.iter().enumerate() {
            if lo <= 2 * l && 2 * l <= hi {
                out.push(Ok(i));
            }
            if i + 1 < lines.len() && 2 * l < hi && lo < 2 * lines[i + 1] {
                out.push(Err(i));
            }
        }
        Some(out)
    }

    /// Closed containment of a possibly degenerate box given in doubled coordinates.
    pub fn contains_box(&self, x1: i64, y1: i64, x2: i64, y2: i64) -> bool {
        let (Some(fx), Some(fy)) = (Self::faces(&self.xs, x1, x2), Self::faces(&self.ys, y1, y2)) else {
            return false;
        };
        for fxi in &fx {
            for fyj in &fy {
                let (ci, cj): (Vec<isize>, Vec<isize>) = (
                    match *fxi {
                        Ok(i) => vec![i as isize - 1, i as isize],
                        Err(i) => vec![i as isize],
                    },
                    match *fyj {
                        Ok(j) => vec![j as isize - 1, j as isize],
                        Err(j) => vec![j as isize],
                    },
                );
                if !ci.iter().any(|&i| cj.iter().any(|&j| self.cell_opt(i, j))) {
                    return false;
                }
            }
        }
        true
    }

    pub fn contains_point(&self, p: Point) -> bool {
        self.contains_box(p.x, p.y, p.x, p.y)
    }
}

/// Even-odd test for a doubled-grid point strictly off every vertex line.
fn ray_inside(vertices: &[(i64, i64)], px: i64, py: i64) -> bool {
    let n = vertices.len();
    let mut inside = false;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        if a.0 == b.0 {
            let (lo, hi) = (2 * a.1.min(b.1), 2 * a.1.max(b.1));
            if 2 * a.0 > px && lo < py && py < hi {
                inside = !inside;
            }
        }
    }
    inside
}

/// Simple orthogonal polygon, counterclockwise, starting at its lexicographically smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplePolygon {
    vertices: Vec<(i64, i64)>,
    convex: Vec<bool>,
    grid: Grid,
}

impl SimplePolygon {
    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn sides(&self) -> impl Iterator<Item = Side> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Side { a: self.vertices[i], b: self.vertices[(i + 1) % n] })
    }

    /// Convexity flag per vertex, aligned with `vertices()`.
    pub fn convex_flags(&self) -> &[bool] {
        &self.convex
    }

    pub fn convex_corners(&self) -> Vec<(i64, i64)> {
        self.vertices.iter().zip(&self.convex).filter(|(_, &c)| c).map(|(v, _)| *v).collect()
    }

    pub fn concave_corners(&self) -> Vec<(i64, i64)> {
        self.vertices.iter().zip(&self.convex).filter(|(_, &c)| !c).map(|(v, _)| *v).collect()
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn contains_rect(&self, r: &Rect) -> bool {
        self.grid.contains_rect(r)
    }

    pub fn contains_point(&self, p: Point) -> bool {
        self.grid.contains_point(p)
    }

    pub fn bbox(&self) -> Rect {
        Rect::raw(self.grid.xs[0], self.grid.ys[0], *self.grid.xs.last().unwrap(), *self.grid.ys.last().unwrap())
    }

    /// Stable fingerprint of the vertex list.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        for &(x, y) in &self.vertices {
            for v in [x, y] {
                for b in v.to_le_bytes() {
                    h ^= b as u64;
                    h = h.wrapping_mul(0x100000001b3);
                }
            }
        }
        h
    }

    pub fn flip_y(&self) -> SimplePolygon {
        let v: Vec<(i64, i64)> = self.vertices.iter().map(|&(x, y)| (x, -y)).collect();
        polygon_from_vertices(&v).expect("mirror of a valid polygon")
    }

    pub fn transpose(&self) -> SimplePolygon {
        let v: Vec<(i64, i64)> = self.vertices.iter().map(|&(x, y)| (y, x)).collect();
        polygon_from_vertices(&v).expect("transpose of a valid polygon")
    }
}

/// Validates and normalizes a vertex cycle given in grid coordinates.
pub fn polygon_from_vertices(vertices: &[(i64, i64)]) -> Result<SimplePolygon> {
    let n = vertices.len();
    if n < 4 {
        return Err(Error::TooFewVertices);
    }
    for &(x, y) in vertices {
        for v in [x, y] {
            if v.abs() > COORD_LIMIT {
                return Err(Error::CoordinateOutOfRange(v));
            }
        }
    }
    let distinct: BTreeSet<_> = vertices.iter().collect();
    if distinct.len() != n {
        return Err(Error::SelfIntersecting);
    }
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        if a.0 != b.0 && a.1 != b.1 {
            return Err(Error::NotOrthogonal);
        }
    }
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let c = vertices[(i + 2) % n];
        if (a.0 == b.0) == (b.0 == c.0) {
            return Err(Error::CollinearRedundantVertex);
        }
    }
    let sides: Vec<Side> = (0..n).map(|i| Side { a: vertices[i], b: vertices[(i + 1) % n] }).collect();
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if !adjacent && sides[i].intersects(&sides[j]) {
                return Err(Error::SelfIntersecting);
            }
        }
    }
    let mut area2: i128 = 0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        area2 += a.0 as i128 * b.1 as i128 - b.0 as i128 * a.1 as i128;
    }
    let mut v: Vec<(i64, i64)> = vertices.to_vec();
    if area2 < 0 {
        v.reverse();
    }
    let start = (0..n).min_by_key(|&i| v[i]).unwrap();
    v.rotate_left(start);
    let convex = (0..n)
        .map(|i| {
            let p = v[(i + n - 1) % n];
            let c = v[i];
            let q = v[(i + 1) % n];
            let cross = (c.0 - p.0) as i128 * (q.1 - c.1) as i128 - (c.1 - p.1) as i128 * (q.0 - c.0) as i128;
            cross > 0
        })
        .collect();
    let grid = Grid::build(&v);
    Ok(SimplePolygon { vertices: v, convex, grid })
}

/// Boundary of a union of rectangles, traced into a simple polygon.
///
/// Fails with `SelfIntersecting` when the union is disconnected, has a hole,
/// or is pinched at a point.
pub fn polygon_from_union(rects: &[Rect]) -> Result<SimplePolygon> {
    if rects.is_empty() {
        return Err(Error::TooFewVertices);
    }
    let xs: Vec<i64> = rects.iter().flat_map(|r| [r.x1, r.x2]).collect::<BTreeSet<_>>().into_iter().collect();
    let ys: Vec<i64> = rects.iter().flat_map(|r| [r.y1, r.y2]).collect::<BTreeSet<_>>().into_iter().collect();
    let (nx, ny) = (xs.len() - 1, ys.len() - 1);
    let mut cells = vec![false; nx * ny];
    for r in rects {
        let i0 = xs.binary_search(&r.x1).unwrap();
        let i1 = xs.binary_search(&r.x2).unwrap();
        let j0 = ys.binary_search(&r.y1).unwrap();
        let j1 = ys.binary_search(&r.y2).unwrap();
        for j in j0..j1 {
            for i in i0..i1 {
                cells[j * nx + i] = true;
            }
        }
    }
    polygon_from_cells(&xs, &ys, &cells)
}

/// Traces the boundary of a set of cells of a compressed grid.
/// `cells[j * (xs.len() - 1) + i]` marks the cell `[xs[i], xs[i+1]] x [ys[j], ys[j+1]]`.
pub fn polygon_from_cells(xs: &[i64], ys: &[i64], cells: &[bool]) -> Result<SimplePolygon> {
    let (nx, ny) = (xs.len() - 1, ys.len() - 1);
    let at = |i: isize, j: isize| i >= 0 && j >= 0 && (i as usize) < nx && (j as usize) < ny && cells[j as usize * nx + i as usize];
    // pinch points
    for j in 0..=ny as isize {
        for i in 0..=nx as isize {
            let (ll, lr, ul, ur) = (at(i - 1, j - 1), at(i, j - 1), at(i - 1, j), at(i, j));
            if (ll && ur && !lr && !ul) || (lr && ul && !ll && !ur) {
                return Err(Error::SelfIntersecting);
            }
        }
    }
    // directed boundary edges with the region on the left, keyed by start grid index
    let mut next: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    let mut count = 0usize;
    for j in 0..ny {
        for i in 0..nx {
            if !cells[j * nx + i] {
                continue;
            }
            let (ii, jj) = (i as isize, j as isize);
            let mut add = |a: (usize, usize), b: (usize, usize)| {
                next.insert(a, b);
                count += 1;
            };
            if !at(ii, jj - 1) {
                add((i, j), (i + 1, j));
            }
            if !at(ii + 1, jj) {
                add((i + 1, j), (i + 1, j + 1));
            }
            if !at(ii, jj + 1) {
                add((i + 1, j + 1), (i, j + 1));
            }
            if !at(ii - 1, jj) {
                add((i, j + 1), (i, j));
            }
        }
    }
    if count == 0 || next.len() != count {
        return Err(Error::SelfIntersecting);
    }
    let start = *next.keys().next().unwrap();
    let mut cycle = vec![start];
    let mut cur = next[&start];
    while cur != start {
        cycle.push(cur);
        cur = next[&cur];
        if cycle.len() > count {
            return Err(Error::SelfIntersecting);
        }
    }
    if cycle.len() != count {
        return Err(Error::SelfIntersecting);
    }
    let m = cycle.len();
    let mut verts = Vec::new();
    for k in 0..m {
        let p = cycle[(k + m - 1) % m];
        let c = cycle[k];
        let q = cycle[(k + 1) % m];
        let straight = (p.0 == c.0 && c.0 == q.0) || (p.1 == c.1 && c.1 == q.1);
        if !straight {
            verts.push((xs[c.0], ys[c.1]));
        }
    }
    polygon_from_vertices(&verts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x1: i64, y1: i64, x2: i64, y2: i64) -> Rect {
        Rect::new(x1, y1, x2, y2).unwrap()
    }

    #[test]
    fn box_polygon() {
        let p = polygon_from_vertices(&[(0, 0), (10, 0), (10, 5), (0, 5)]).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.convex_flags().iter().all(|&c| c));
    }

    #[test]
    fn l_polygon_concave_corner() {
        let p = polygon_from_vertices(&[(0, 0), (4, 0), (4, 1), (2, 1), (2, 2), (0, 2)]).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.concave_corners(), vec![(2, 1)]);
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        let p = polygon_from_vertices(&[(0, 2), (2, 2), (2, 1), (4, 1), (4, 0), (0, 0)]).unwrap();
        assert_eq!(p.vertices(), &[(0, 0), (4, 0), (4, 1), (2, 1), (2, 2), (0, 2)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(polygon_from_vertices(&[(0, 0), (2, 0), (2, 2), (4, 2), (4, 0), (6, 0), (6, 3), (0, 3)]).is_ok());
        assert_eq!(
            polygon_from_vertices(&[(0, 0), (2, 0), (2, 2), (2, 0), (4, 0), (4, 3), (0, 3)]),
            Err(Error::SelfIntersecting)
        );
        assert_eq!(polygon_from_vertices(&[(0, 0), (1, 0), (1, 1)]), Err(Error::TooFewVertices));
        assert_eq!(polygon_from_vertices(&[(0, 0), (2, 0), (3, 3), (0, 2)]), Err(Error::NotOrthogonal));
        assert_eq!(
            polygon_from_vertices(&[(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)]),
            Err(Error::CollinearRedundantVertex)
        );
        // bow tie made of two boxes meeting at a point
        assert_eq!(
            polygon_from_vertices(&[(0, 0), (2, 0), (2, 2), (4, 2), (4, 4), (2, 4), (2, 2), (0, 2)]),
            Err(Error::SelfIntersecting)
        );
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_intersection(&r(1, 1, 4, 11), &r(0, 7, 10, 10)).unwrap(),
            IntersectionKind::Piercing { vertical: Which::First, aligned: false }
        );
        assert_eq!(classify_intersection(&r(0, 0, 2, 2), &r(1, 1, 3, 3)).unwrap(), IntersectionKind::Corner);
        assert_eq!(classify_intersection(&r(0, 0, 1, 1), &r(5, 5, 6, 6)).unwrap(), IntersectionKind::Disjoint);
        assert_eq!(
            classify_intersection(&r(0, 1, 4, 2), &r(1, 1, 3, 3)).unwrap(),
            IntersectionKind::Piercing { vertical: Which::Second, aligned: true }
        );
        assert!(matches!(
            classify_intersection(&Rect { x1: 0, y1: 0, x2: 0, y2: 1 }, &r(0, 0, 1, 1)),
            Err(Error::Degenerate(..))
        ));
    }

    #[test]
    fn pierce_order_examples() {
        assert!(pierce_less(&r(1, 1, 4, 11), &r(0, 7, 10, 10)));
        assert!(!pierce_less(&r(0, 7, 10, 10), &r(1, 1, 4, 11)));
        assert!(!pierce_less(&r(0, 0, 2, 2), &r(1, 1, 3, 3)));
    }

    #[test]
    fn membership() {
        let p = polygon_from_vertices(&[(0, 0), (10, 0), (10, 5), (0, 5)]).unwrap();
        assert!(rect_contains(Point::grid(0, 0), &r(0, 0, 1, 1)));
        assert!(boundary_contains(Point::grid(5, 0), &p));
        assert!(!boundary_contains(Point::grid(5, 1), &p));
        assert!(p.contains_point(Point::grid(10, 5)));
        assert!(!p.contains_point(Point::half(21, 5)));
    }

    #[test]
    fn box_containment_handles_degenerate_boxes() {
        let l = polygon_from_vertices(&[(0, 0), (4, 0), (4, 1), (2, 1), (2, 2), (0, 2)]).unwrap();
        let g = l.grid();
        assert!(g.contains_box(0, 2, 8, 2));
        assert!(!g.contains_box(0, 2, 8, 3));
        assert!(g.contains_box(4, 4, 4, 4));
        assert!(!g.contains_box(2, 2, 8, 4));
        assert!(g.contains_box(0, 0, 4, 4));
    }

    #[test]
    fn union_tracing() {
        let p = polygon_from_union(&[r(2, 0, 4, 6), r(0, 2, 6, 4)]).unwrap();
        assert_eq!(p.len(), 12);
        assert_eq!(p.vertices()[0], (0, 2));
        assert_eq!(polygon_from_union(&[r(0, 0, 1, 1), r(1, 1, 2, 2)]), Err(Error::SelfIntersecting));
        assert_eq!(polygon_from_union(&[r(0, 0, 1, 1), r(3, 0, 4, 1)]), Err(Error::SelfIntersecting));
        // ring with a hole
        let ring = [r(0, 0, 3, 1), r(0, 2, 3, 3), r(0, 0, 1, 3), r(2, 0, 3, 3)];
        assert_eq!(polygon_from_union(&ring), Err(Error::SelfIntersecting));
    }
}
