//! The brute-force oracles against hand-checked values, then the library against the oracles.

mod common;

use common::*;
use rectcover::geom::polygon_from_vertices;
use rectcover::instances::{gen_beta, gen_biclique_boundary};
use rectcover::maxrect::enumerate_maximal;
use std::collections::BTreeSet;

const L_SHAPE: [(i64, i64); 6] = [(0, 0), (4, 0), (4, 1), (2, 1), (2, 2), (0, 2)];
const PLUS: [(i64, i64); 12] = [(2, 0), (4, 0), (4, 2), (6, 2), (6, 4), (4, 4), (4, 6), (2, 6), (2, 4), (0, 4), (0, 2), (2, 2)];

#[test]
fn cell_mask_by_hand() {
    let m = CellMask::new(&L_SHAPE);
    assert_eq!(m.cells(), vec![(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1)]);
    assert!(m.holds((0, 0, 4, 1)));
    assert!(!m.holds((0, 0, 3, 2)));
    assert!(!m.cell(2, 1));
}

#[test]
fn maximal_by_hand() {
    let want: BTreeSet<Quad> = [(0, 0, 4, 1), (0, 0, 2, 2)].into_iter().collect();
    assert_eq!(brute_maximal(&L_SHAPE), want);
    let want: BTreeSet<Quad> = [(2, 0, 4, 6), (0, 2, 6, 4)].into_iter().collect();
    assert_eq!(brute_maximal(&PLUS), want);
    assert_eq!(brute_maximal(&[(0, 0), (3, 0), (3, 2), (0, 2)]).len(), 1);
}

#[test]
fn maximal_matches_library_on_fixtures() {
    for poly in [polygon_from_vertices(&L_SHAPE).unwrap(), polygon_from_vertices(&PLUS).unwrap(), gen_biclique_boundary().polygon] {
        let lib: BTreeSet<Quad> = enumerate_maximal(&poly).iter().map(|r| (r.x1, r.y1, r.x2, r.y2)).collect();
        assert_eq!(lib, brute_maximal(poly.vertices()));
    }
    // the biclique fixture's named members and center are all maximal
    let b = gen_biclique_boundary();
    let all = brute_maximal(b.polygon.vertices());
    for r in b.family.as_ref().unwrap().iter().chain([b.named_rect("Rc").unwrap()].iter()) {
        assert!(all.contains(&(r.x1, r.y1, r.x2, r.y2)), "{r}");
    }
}

#[test]
fn boundary_samples_by_hand() {
    // perimeter 8 sampled every half unit
    assert_eq!(boundary_samples(&[(0, 0), (1, 0), (1, 1), (0, 1)]).len(), 8);
    assert_eq!(boundary_samples(&L_SHAPE).len(), 24);
}

#[test]
fn cover_numbers_by_hand() {
    assert_eq!(brute_boundary_cover(&L_SHAPE), 2);
    assert_eq!(brute_interior_cover(&PLUS), 2);
    // a 2-step staircase needs 3 rectangles for its interior and its boundary
    let stair = [(0, 0), (3, 0), (3, 1), (2, 1), (2, 2), (1, 2), (1, 3), (0, 3)];
    assert_eq!(brute_interior_cover(&stair), 3);
    assert_eq!(brute_boundary_cover(&stair), 3);
    let b = gen_beta(2).unwrap().polygon;
    assert_eq!(brute_boundary_cover(b.vertices()), 6);
    assert_eq!(brute_interior_cover(b.vertices()), 8);
}

#[test]
fn min_cover_by_hand() {
    // elements 0..4, sets {0,1}, {2,3}, {1,2}, {0}, {3}
    let by_elem = vec![vec![0, 3], vec![0, 2], vec![1, 2], vec![1, 4]];
    assert_eq!(brute_min_cover(&by_elem, 5), 2);
    assert_eq!(brute_min_cover(&[], 0), 0);
}

#[test]
fn forced_pairs_by_hand() {
    // a cross: the two bars meet in the middle, each arm cell holds one bar
    let f = brute_forced_interior_pairs(&[(1, 0, 2, 3), (0, 1, 3, 2)]);
    assert_eq!(f, [(0, 1)].into_iter().collect());
    let f = brute_forced_interior_pairs(&[(0, 0, 2, 1), (2, 0, 4, 1)]);
    assert!(f.is_empty());
}

#[test]
fn rotation_oracle_by_hand() {
    assert!(planar_by_rotations(4, &complete(4)));
    assert!(!planar_by_rotations(5, &complete(5)));
    assert!(!planar_by_rotations(6, &k33()));
    assert!(!planar_by_rotations(10, &petersen()));
    let mut k5e = complete(5);
    k5e.retain(|&e| e != (0, 1));
    assert!(planar_by_rotations(5, &k5e));
    let mut k33e = k33();
    k33e.pop();
    assert!(planar_by_rotations(6, &k33e));
    // cube and a disjoint triangle
    let mut cube = vec![(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)];
    cube.extend([(8, 9), (9, 10), (10, 8)]);
    assert!(planar_by_rotations(12, &cube));
    // K3,3 subdivided on one edge passes Euler but not the search
    let mut sub = k33();
    sub.retain(|&e| e != (0, 3));
    sub.extend([(0, 6), (6, 3)]);
    assert!(!planar_by_rotations(7, &sub));
    assert!(planar_by_rotations(3, &[]));
}

#[test]
fn triangulations_are_maximal_planar() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    for n in 3..=8 {
        let e = random_triangulation(n, &mut rng);
        assert_eq!(e.len(), 3 * n - 6);
        assert!(planar_by_rotations(n, &e));
        let mut more = e.clone();
        if let Some(extra) = complete(n).into_iter().find(|x| !e.contains(x)) {
            more.push(extra);
            assert!(!planar_by_rotations(n, &more));
        }
    }
}
