//! Property-based invariants of the exact predicates and the enumerators.

use proptest::prelude::*;

use multiplicity_core::enumeration::{count, enumerate, GraphClass, Limits};
use multiplicity_core::geometry::{
    convex_hull, orientation, segments_cross, validate_general_position, Edge, Point, PointSet,
};

fn grid_point() -> impl Strategy<Value = Point> {
    (-50i64..50, -50i64..50).prop_map(|(x, y)| Point::from_ints(x, y))
}

fn distinct_points(n: usize) -> impl Strategy<Value = Vec<Point>> {
    proptest::collection::vec(grid_point(), n).prop_filter("pairwise distinct", |pts| {
        pts.iter()
            .enumerate()
            .all(|(i, p)| pts.iter().skip(i + 1).all(|q| p != q))
    })
}

proptest! {
    #[test]
    fn orientation_is_antisymmetric(p in grid_point(), q in grid_point(), r in grid_point()) {
        prop_assert_eq!(orientation(&p, &q, &r), -orientation(&p, &r, &q));
    }

    #[test]
    fn crossing_is_symmetric_on_8_points(pts in distinct_points(8)) {
        let ps = PointSet::Exact(pts);
        for a in 0..8usize {
            for b in (a + 1)..8 {
                for c in 0..8usize {
                    for d in (c + 1)..8 {
                        let e1 = Edge::new(a, b);
                        let e2 = Edge::new(c, d);
                        prop_assert_eq!(
                            segments_cross(e1, e2, &ps).unwrap(),
                            segments_cross(e2, e1, &ps).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hull_is_permutation_invariant(pts in distinct_points(7), rot in 0usize..7) {
        let base = PointSet::Exact(pts.clone());
        if validate_general_position(&base).is_err() {
            return Ok(());
        }
        let hull = convex_hull(&base).unwrap();
        let mut shifted = pts.clone();
        shifted.rotate_left(rot);
        let hull2: Vec<usize> = convex_hull(&PointSet::Exact(shifted))
            .unwrap()
            .iter()
            .map(|&i| (i + rot) % pts.len())
            .collect();
        // Same cyclic sequence.
        let pos = hull2.iter().position(|&v| v == hull[0]).unwrap();
        let mut aligned = hull2.clone();
        aligned.rotate_left(pos);
        prop_assert_eq!(aligned, hull);
    }

    #[test]
    fn count_equals_stream_length_on_random_sets(pts in distinct_points(6)) {
        let ps = PointSet::Exact(pts);
        if validate_general_position(&ps).is_err() {
            return Ok(());
        }
        for class in [GraphClass::Forest, GraphClass::SpanningTree, GraphClass::Triangulation] {
            let c = count(&ps, class, Limits::default()).unwrap();
            let e = enumerate(&ps, class, Limits::default()).unwrap();
            prop_assert_eq!(c, num_bigint::BigUint::from(e.len()));
        }
    }

    #[test]
    fn enumerated_cycles_are_cycles(pts in distinct_points(6)) {
        let ps = PointSet::Exact(pts);
        if validate_general_position(&ps).is_err() {
            return Ok(());
        }
        for g in enumerate(&ps, GraphClass::SpanningCycle, Limits::default()).unwrap() {
            prop_assert_eq!(g.edge_count(), 6);
            for v in 0..6 {
                prop_assert_eq!(g.degree(v), 2);
            }
            let edges = g.edges();
            for (x, &a) in edges.iter().enumerate() {
                for &b in edges.iter().skip(x + 1) {
                    prop_assert!(!segments_cross(a, b, &ps).unwrap());
                }
            }
        }
    }
}
