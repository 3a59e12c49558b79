//! Instance generators: fixed fixtures, lower-bound families and random polygons.

use crate::error::{Error, Result};
use crate::geom::{polygon_from_cells, polygon_from_union, Point, Rect, SimplePolygon};
use crate::maxrect::RectFamily;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct InstanceBundle {
    pub polygon: SimplePolygon,
    pub family: Option<RectFamily>,
    /// Metric name to expected value, e.g. `theta_b`.
    pub expected: BTreeMap<String, i64>,
    /// Extra named rectangles that are not family members.
    pub named: Vec<(String, Rect)>,
    /// Named point groups.
    pub marked: Vec<(String, Vec<Point>)>,
}

impl InstanceBundle {
    fn new(polygon: SimplePolygon) -> InstanceBundle {
        InstanceBundle { polygon, family: None, expected: BTreeMap::new(), named: Vec::new(), marked: Vec::new() }
    }

    pub fn named_rect(&self, name: &str) -> Option<Rect> {
        self.named.iter().find(|(n, _)| n == name).map(|(_, r)| *r)
    }

    pub fn marked_points(&self, name: &str) -> Option<&[Point]> {
        self.marked.iter().find(|(n, _)| n == name).map(|(_, p)| p.as_slice())
    }
}

/// Eight rectangles forming a boundary biclique around the center `[1,10]x[1,10]`:
/// four vertical ones `A..D` followed by four horizontal ones `P..S` (top to bottom).
pub fn gen_biclique_boundary() -> InstanceBundle {
    let rects = vec![
        Rect::raw(1, 1, 4, 11),
        Rect::raw(3, 0, 6, 10),
        Rect::raw(5, 1, 8, 11),
        Rect::raw(7, 0, 10, 10),
        Rect::raw(0, 7, 10, 10),
        Rect::raw(1, 5, 11, 8),
        Rect::raw(0, 3, 10, 6),
        Rect::raw(1, 1, 11, 4),
    ];
    let polygon = polygon_from_union(&rects).expect("biclique union is simple");
    let family = RectFamily::new(&polygon, rects).expect("members inside the union");
    let mut b = InstanceBundle::new(polygon);
    b.family = Some(family);
    b.named.push(("Rc".into(), Rect::raw(1, 1, 10, 10)));
    b
}

/// `r` overlapping vertical rectangles and their transposes, alternately
/// shifted by one unit. Vertical ones come first in the family.
pub fn gen_interior_biclique(r: usize) -> Result<InstanceBundle> {
    if r < 3 {
        return Err(Error::BadParameter(format!("r = {r} < 3")));
    }
    let ri = r as i64;
    let mut v = Vec::new();
    for i in 1..=ri {
        let (lo, hi) = if i % 2 == 1 { (1, 2 * ri + 3) } else { (0, 2 * ri + 2) };
        v.push(Rect::raw(2 * i - 1, lo, 2 * i + 2, hi));
    }
    let h: Vec<Rect> = v.iter().map(|x| x.transpose()).collect();
    let rects: Vec<Rect> = v.into_iter().chain(h).collect();
    let polygon = polygon_from_union(&rects)?;
    let family = RectFamily::new(&polygon, rects)?;
    let mut b = InstanceBundle::new(polygon);
    b.family = Some(family);
    Ok(b)
}

/// Two staircases facing each other: `r` convex corners toward the top right and
/// `s` toward the bottom left. Each top-right corner sees each bottom-left one,
/// and corners on the same staircase see no other.
pub fn gen_antirectangle(r: usize, s: usize) -> Result<InstanceBundle> {
    if r < 3 || s < 3 {
        return Err(Error::BadParameter(format!("r = {r}, s = {s}; both must be >= 3")));
    }
    let (ri, si) = (r as i64, s as i64);
    let off = 2 * si + 2;
    let tr: Vec<(i64, i64)> = (1..=ri).map(|i| (2 * i + off, 2 * (ri + 1 - i) + off)).collect();
    let bl: Vec<(i64, i64)> = (1..=si).map(|j| (-2 * (si + 1 - j) + off, -2 * j + off)).collect();
    let mut rects = Vec::new();
    for &(a, b) in &tr {
        for &(c, d) in &bl {
            rects.push(Rect::raw(c, d, a, b));
        }
    }
    let polygon = polygon_from_union(&rects)?;
    let mut b = InstanceBundle::new(polygon);
    b.marked.push(("top_right".into(), tr.iter().map(|&(x, y)| Point::grid(x, y)).collect()));
    b.marked.push(("bottom_left".into(), bl.iter().map(|&(x, y)| Point::grid(x, y)).collect()));
    b.expected.insert("alpha".into(), ri.max(si));
    Ok(b)
}

/// Diagonal chain of `kb` unit windows, each framed by two vertical and two
/// horizontal bars whose ends stick out as teeth. The `kb + 1` vertical and
/// `kb + 1` horizontal bars form the family.
pub fn gen_beta(kb: usize) -> Result<InstanceBundle> {
    if kb < 2 {
        return Err(Error::BadParameter(format!("kb = {kb} < 2")));
    }
    let k = kb as i64;
    // bar width 1, window 2, tooth 1; shifted so all coordinates are >= 0
    let (step, tooth) = (3, 1);
    let mut verticals = Vec::new();
    for i in 0..=k {
        let x = step * i + tooth;
        let lo = if i > 0 { step * (i - 1) } else { 0 };
        let hi = if i < k { step * (i + 1) + 1 + 2 * tooth } else { step * i + 1 + 2 * tooth };
        verticals.push(Rect::raw(x, lo, x + 1, hi));
    }
    let horizontals: Vec<Rect> = verticals.iter().map(|r| r.transpose()).collect();
    let windows: Vec<Rect> =
        (0..k).map(|i| Rect::raw(step * i + tooth + 1, step * i + tooth + 1, step * (i + 1) + tooth, step * (i + 1) + tooth)).collect();
    let all: Vec<Rect> = verticals.iter().chain(&horizontals).chain(&windows).copied().collect();
    let polygon = polygon_from_union(&all)?;
    let family = RectFamily::new(&polygon, verticals.into_iter().chain(horizontals).collect())?;
    let mut b = InstanceBundle::new(polygon);
    b.family = Some(family);
    b.expected.insert("theta_b".into(), 2 * k + 2);
    b.expected.insert("theta".into(), 3 * k + 2);
    Ok(b)
}

const RANDOM_ATTEMPTS: usize = 200;
const GROWTH_STEPS: usize = 60;

/// Random simple orthogonal polygon with exactly `n_vertices` vertices inside
/// `[0, grid]^2`, grown as a union of random rectangles. Deterministic per seed.
pub fn gen_random(n_vertices: usize, grid: i64, seed: u64) -> Result<SimplePolygon> {
    if n_vertices < 4 || n_vertices % 2 == 1 {
        return Err(Error::BadParameter(format!("n_vertices = {n_vertices} must be even and >= 4")));
    }
    if grid < 2 {
        return Err(Error::BadParameter(format!("grid = {grid} < 2")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = grid as usize;
    let lines: Vec<i64> = (0..=grid).collect();
    // a mix of free rectangles and thin bars, so that crossings and notches appear
    let rand_rect = |rng: &mut ChaCha8Rng| {
        let span = |rng: &mut ChaCha8Rng, thin: bool| {
            if thin {
                let w = rng.gen_range(1..=g.min(3));
                let a = rng.gen_range(0..=g - w);
                (a, a + w)
            } else {
                let (a, b) = (rng.gen_range(0..g), rng.gen_range(0..g));
                (a.min(b), a.max(b) + 1)
            }
        };
        let kind = rng.gen_range(0..3);
        let (x1, x2) = span(rng, kind == 1);
        let (y1, y2) = span(rng, kind == 2);
        (x1, x2, y1, y2)
    };
    for _ in 0..RANDOM_ATTEMPTS {
        let mut cells = vec![false; g * g];
        let (x1, x2, y1, y2) = rand_rect(&mut rng);
        for y in y1..y2 {
            for x in x1..x2 {
                cells[y * g + x] = true;
            }
        }
        let mut poly = polygon_from_cells(&lines, &lines, &cells)?;
        if poly.len() == n_vertices {
            return Ok(poly);
        }
        for _ in 0..GROWTH_STEPS {
            let (x1, x2, y1, y2) = rand_rect(&mut rng);
            let mut next = cells.clone();
            let mut grew = false;
            for y in y1..y2 {
                for x in x1..x2 {
                    grew |= !next[y * g + x];
                    next[y * g + x] = true;
                }
            }
            if !grew {
                continue;
            }
            if let Ok(p) = polygon_from_cells(&lines, &lines, &next) {
                if p.len() <= n_vertices {
                    cells = next;
                    poly = p;
                    if poly.len() == n_vertices {
                        return Ok(poly);
                    }
                }
            }
        }
    }
    Err(Error::GenerationFailed { seed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::polygon_from_vertices;
    use crate::maxrect::is_maximal;

    #[test]
    fn biclique_fixture() {
        let b = gen_biclique_boundary();
        let f = b.family.as_ref().unwrap();
        assert_eq!(f.get(0), Rect::raw(1, 1, 4, 11));
        assert_eq!(f.get(7), Rect::raw(1, 1, 11, 4));
        for r in f.iter() {
            assert!(is_maximal(&b.polygon, r).unwrap());
        }
        assert!(is_maximal(&b.polygon, &b.named_rect("Rc").unwrap()).unwrap());
    }

    #[test]
    fn interior_biclique_r4_is_the_biclique_polygon() {
        let a = gen_interior_biclique(4).unwrap();
        let b = gen_biclique_boundary();
        assert_eq!(a.polygon, b.polygon);
        let mut x: Vec<Rect> = a.family.unwrap().rects().to_vec();
        let mut y: Vec<Rect> = b.family.unwrap().rects().to_vec();
        x.sort();
        y.sort();
        assert_eq!(x, y);
        assert!(gen_interior_biclique(2).is_err());
    }

    #[test]
    fn beta_family_members_are_maximal() {
        for kb in 2..=5 {
            let b = gen_beta(kb).unwrap();
            for r in b.family.as_ref().unwrap().iter() {
                assert!(is_maximal(&b.polygon, r).unwrap(), "kb={kb} {r}");
            }
        }
        assert!(gen_beta(1).is_err());
    }

    #[test]
    fn random_polygons() {
        let p = gen_random(4, 6, 3).unwrap();
        assert_eq!(p.len(), 4);
        let a = gen_random(8, 6, 1).unwrap();
        let b = gen_random(8, 6, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 8);
        assert_eq!(polygon_from_vertices(a.vertices()).unwrap(), a);
        for seed in 0..30 {
            for n in [6, 10, 12, 16] {
                assert_eq!(gen_random(n, 12, seed).unwrap().len(), n);
            }
        }
    }
}
