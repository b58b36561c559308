//! Independent triangulation counter: breadth-first traversal of the flip
//! graph from one greedily-built seed triangulation. Guards the
//! backtracking enumerator against systematic bugs; the two methods share
//! only the crossing predicate.

use alloc::collections::{BTreeSet, VecDeque};
use num_bigint::BigUint;

use super::{edge_at, num_edges, CrossingTable, EnumerationError};
use crate::geometry::{orientation, segments_cross, Edge, GeometryError, Point, PointSet};

/// Count triangulations of an exact-mode point set in general position by
/// flip-graph traversal.
pub fn count_triangulations_flip(ps: &PointSet) -> Result<BigUint, EnumerationError> {
    let pts = ps
        .points()
        .ok_or(EnumerationError::Geometry(GeometryError::NeedsExactMode))?;
    let n = pts.len();
    if n < 3 {
        return Err(EnumerationError::Geometry(GeometryError::TooFewPoints {
            need: 3,
            have: n,
        }));
    }
    let table = CrossingTable::build(ps)?;
    let m = num_edges(n);

    // Greedy seed: scan candidate edges in canonical order, keep whatever
    // does not cross. The result is maximal, hence a triangulation.
    let mut seed = 0u128;
    for idx in 0..m {
        if table.mask(idx) & seed == 0 {
            seed |= 1u128 << idx;
        }
    }

    let mut seen: BTreeSet<u128> = BTreeSet::new();
    let mut queue: VecDeque<u128> = VecDeque::new();
    seen.insert(seed);
    queue.push_back(seed);
    while let Some(t) = queue.pop_front() {
        let mut edges = t;
        while edges != 0 {
            let idx = edges.trailing_zeros() as usize;
            edges &= edges - 1;
            let e = edge_at(n, idx);
            let (left, right) = face_apexes(pts, n, t, e);
            let (Some(c), Some(d)) = (left, right) else {
                continue; // hull edge
            };
            let diag = Edge::new(c, d);
            if segments_cross(diag, e, ps)? {
                let flipped = (t & !(1u128 << idx)) | (1u128 << super::edge_index(n, diag));
                if seen.insert(flipped) {
                    queue.push_back(flipped);
                }
            }
        }
    }
    Ok(BigUint::from(seen.len()))
}

/// The apex of the triangle of `t` on each side of edge `e`, if any.
fn face_apexes(pts: &[Point], n: usize, t: u128, e: Edge) -> (Option<usize>, Option<usize>) {
    let has = |a: usize, b: usize| t >> super::edge_index(n, Edge::new(a, b)) & 1 == 1;
    let mut left = None;
    let mut right = None;
    for c in 0..n {
        if c == e.i || c == e.j || !has(e.i, c) || !has(e.j, c) {
            continue;
        }
        if !triangle_empty(pts, e.i, e.j, c) {
            continue;
        }
        match orientation(&pts[e.i], &pts[e.j], &pts[c]) {
            1 => left = Some(c),
            -1 => right = Some(c),
            _ => {}
        }
    }
    (left, right)
}

/// No other point strictly inside triangle `abc`.
fn triangle_empty(pts: &[Point], a: usize, b: usize, c: usize) -> bool {
    let orient = orientation(&pts[a], &pts[b], &pts[c]);
    for (p, pt) in pts.iter().enumerate() {
        if p == a || p == b || p == c {
            continue;
        }
        if orientation(&pts[a], &pts[b], pt) == orient
            && orientation(&pts[b], &pts[c], pt) == orient
            && orientation(&pts[c], &pts[a], pt) == orient
        {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{count, GraphClass, Limits};
    use alloc::vec;
    use alloc::vec::Vec;

    #[test]
    fn flip_count_agrees_with_backtracking() {
        let sets = [
            // Square plus center.
            vec![(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)],
            // Random-ish general position, one interior point.
            vec![(0, 0), (9, 1), (7, 8), (2, 7), (5, 4), (3, 2)],
            // Two interior points.
            vec![(0, 0), (10, 1), (8, 9), (1, 8), (4, 4), (6, 5), (3, 6)],
        ];
        for coords in sets {
            let pts = coords
                .iter()
                .map(|&(x, y)| Point::from_ints(x, y))
                .collect::<Vec<_>>();
            let ps = PointSet::Exact(pts);
            let back = count(&ps, GraphClass::Triangulation, Limits::default()).unwrap();
            let flip = count_triangulations_flip(&ps).unwrap();
            assert_eq!(back, flip);
        }
    }

    #[test]
    fn needs_exact_mode() {
        assert!(matches!(
            count_triangulations_flip(&PointSet::AbstractConvex(5)),
            Err(EnumerationError::Geometry(GeometryError::NeedsExactMode))
        ));
    }
}
