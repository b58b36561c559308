//! Exact planar predicates over arbitrary-precision rationals, plus the
//! combinatorial "abstract convex" mode where a point set is identified with
//! the vertices of a convex polygon in cyclic index order.
//!
//! Every predicate is exact: there is no floating point anywhere in this
//! module, so crossing and collinearity decisions are never corrupted by
//! rounding. Constructions that are naturally irrational are realized
//! elsewhere with rational coordinates and re-validated through these
//! predicates.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact rational coordinate. Kept in lowest terms with a positive
/// denominator by `num_rational`.
pub type Coord = BigRational;

/// Parse a decimal-free rational string `"p/q"` (or a plain integer `"p"`).
pub fn parse_coord(s: &str) -> Result<Coord, GeometryError> {
    let bad = || GeometryError::BadCoordinate(String::from(s));
    let mut parts = s.splitn(2, '/');
    let num: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(BigRational::from_integer(num)),
        Some(d) => {
            let den: BigInt = d.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Render a coordinate as a decimal-free rational string, omitting the
/// denominator when it is 1.
pub fn coord_to_string(c: &Coord) -> String {
    if c.denom() == &BigInt::from(1) {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Point { x, y }
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }

    pub fn dist_sq(&self, other: &Point) -> BigRational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", coord_to_string(&self.x), coord_to_string(&self.y))
    }
}

/// Undirected candidate edge, stored with `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "an edge needs two distinct vertices");
        if a < b {
            Edge { i: a, j: b }
        } else {
            Edge { i: b, j: a }
        }
    }

    pub fn touches(&self, e: Edge) -> bool {
        self.i == e.i || self.i == e.j || self.j == e.i || self.j == e.j
    }
}

/// A finite planar point set, either with exact coordinates or as the
/// abstract vertex set of a convex polygon (only the cyclic order is known).
#[derive(Clone, Debug)]
pub enum PointSet {
    Exact(Vec<Point>),
    AbstractConvex(usize),
}

impl PointSet {
    pub fn len(&self) -> usize {
        match self {
            PointSet::Exact(pts) => pts.len(),
            PointSet::AbstractConvex(n) => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Option<&[Point]> {
        match self {
            PointSet::Exact(pts) => Some(pts),
            PointSet::AbstractConvex(_) => None,
        }
    }

    pub fn point(&self, i: usize) -> &Point {
        match self {
            PointSet::Exact(pts) => &pts[i],
            PointSet::AbstractConvex(_) => panic!("abstract point set has no coordinates"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GeometryError {
    BadCoordinate(String),
    /// Two point indices coincide geometrically.
    CoincidentPoints(usize, usize),
    /// Three point indices are collinear.
    CollinearTriple(usize, usize, usize),
    /// An edge of zero length (its endpoints coincide).
    DegenerateEdge(usize, usize),
    TooFewPoints { need: usize, have: usize },
    /// Operation requires exact coordinates.
    NeedsExactMode,
    /// Operation requires all points in convex position.
    NotConvexPosition,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::BadCoordinate(s) => write!(f, "cannot parse rational coordinate {s:?}"),
            GeometryError::CoincidentPoints(i, j) => {
                write!(f, "points {i} and {j} coincide")
            }
            GeometryError::CollinearTriple(i, j, k) => {
                write!(f, "points {i}, {j}, {k} are collinear")
            }
            GeometryError::DegenerateEdge(i, j) => {
                write!(f, "edge ({i}, {j}) has zero length")
            }
            GeometryError::TooFewPoints { need, have } => {
                write!(f, "need at least {need} points, have {have}")
            }
            GeometryError::NeedsExactMode => write!(f, "operation requires exact coordinates"),
            GeometryError::NotConvexPosition => {
                write!(f, "points are not in convex position")
            }
        }
    }
}

/// Sign of the signed area of triangle `pqr`: `+1` counterclockwise,
/// `0` collinear, `-1` clockwise. Exact.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> i8 {
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    if det.is_zero() {
        0
    } else if det.is_positive() {
        1
    } else {
        -1
    }
}

/// Is `r` strictly inside the closed segment `pq`? Assumes `p != q`.
fn strictly_between(p: &Point, q: &Point, r: &Point) -> bool {
    if orientation(p, q, r) != 0 {
        return false;
    }
    // Collinear: compare along the dominant axis.
    let cmp = |a: &Coord, b: &Coord, c: &Coord| -> bool {
        (a < c && c < b) || (b < c && c < a)
    };
    if p.x != q.x {
        cmp(&p.x, &q.x, &r.x)
    } else {
        cmp(&p.y, &q.y, &r.y)
    }
}

/// Do the open segments of edges `a` and `b` intersect?
///
/// Shared endpoints do not count as crossings; interiors touching at a
/// single point do. In abstract convex mode the test is strict cyclic
/// interleaving of the index pairs.
pub fn segments_cross(a: Edge, b: Edge, ps: &PointSet) -> Result<bool, GeometryError> {
    if a == b {
        return Ok(false);
    }
    match ps {
        PointSet::AbstractConvex(_) => Ok(chords_interleave(a, b)),
        PointSet::Exact(pts) => {
            if pts[a.i] == pts[a.j] {
                return Err(GeometryError::DegenerateEdge(a.i, a.j));
            }
            if pts[b.i] == pts[b.j] {
                return Err(GeometryError::DegenerateEdge(b.i, b.j));
            }
            if a.touches(b) {
                // A shared endpoint is never a crossing; under general
                // position the others cannot overlap, but handle the
                // collinear-overlap case for raw inputs.
                let (shared, ta, tb) = shared_vertex(a, b);
                return Ok(strictly_between(&pts[shared], &pts[ta], &pts[tb])
                    || strictly_between(&pts[shared], &pts[tb], &pts[ta]));
            }
            let (p1, p2) = (&pts[a.i], &pts[a.j]);
            let (q1, q2) = (&pts[b.i], &pts[b.j]);
            let o1 = orientation(p1, p2, q1);
            let o2 = orientation(p1, p2, q2);
            let o3 = orientation(q1, q2, p1);
            let o4 = orientation(q1, q2, p2);
            if o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
                return Ok(true);
            }
            // Touching cases: an endpoint of one edge in the open interior
            // of the other counts as a crossing of open segments.
            Ok(strictly_between(p1, p2, q1)
                || strictly_between(p1, p2, q2)
                || strictly_between(q1, q2, p1)
                || strictly_between(q1, q2, p2))
        }
    }
}

fn shared_vertex(a: Edge, b: Edge) -> (usize, usize, usize) {
    let shared = if a.i == b.i || a.i == b.j { a.i } else { a.j };
    let ta = if a.i == shared { a.j } else { a.i };
    let tb = if b.i == shared { b.j } else { b.i };
    (shared, ta, tb)
}

/// Strict cyclic interleaving of two chords of a convex polygon.
pub fn chords_interleave(a: Edge, b: Edge) -> bool {
    if a.touches(b) {
        return false;
    }
    let inside = |x: usize| a.i < x && x < a.j;
    inside(b.i) != inside(b.j)
}

/// Validate pairwise distinctness and general position (no three points
/// collinear). Reports the first violation found, scanning indices in
/// lexicographic order.
pub fn validate_general_position(ps: &PointSet) -> Result<(), GeometryError> {
    let pts = ps.points().ok_or(GeometryError::NeedsExactMode)?;
    let n = pts.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if pts[i] == pts[j] {
                return Err(GeometryError::CoincidentPoints(i, j));
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if orientation(&pts[i], &pts[j], &pts[k]) == 0 {
                    return Err(GeometryError::CollinearTriple(i, j, k));
                }
            }
        }
    }
    Ok(())
}

/// Span of a chord of a convex polygon with `n` vertices in cyclic order:
/// the hull-edge distance `min(|i-j|, n-|i-j|)`, in `1..=n/2`.
pub fn edge_span(n: usize, e: Edge) -> usize {
    let d = e.j - e.i;
    d.min(n - d)
}

/// Indices of the convex hull in counterclockwise order, starting from the
/// lexicographically smallest point. Exact arithmetic throughout.
pub fn convex_hull(ps: &PointSet) -> Result<Vec<usize>, GeometryError> {
    let pts = ps.points().ok_or(GeometryError::NeedsExactMode)?;
    let n = pts.len();
    if n < 3 {
        return Err(GeometryError::TooFewPoints { need: 3, have: n });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        pts[a]
            .x
            .cmp(&pts[b].x)
            .then_with(|| pts[a].y.cmp(&pts[b].y))
    });

    // Andrew's monotone chain. Collinear hull points are rejected because
    // general position is a precondition everywhere this is used.
    let build = |iter: &mut dyn Iterator<Item = usize>| -> Result<Vec<usize>, GeometryError> {
        let mut chain: Vec<usize> = Vec::new();
        for idx in iter {
            while chain.len() >= 2 {
                let a = chain[chain.len() - 2];
                let b = chain[chain.len() - 1];
                match orientation(&pts[a], &pts[b], &pts[idx]) {
                    1 => break,
                    0 => return Err(GeometryError::CollinearTriple(a, b, idx)),
                    _ => {
                        chain.pop();
                    }
                }
            }
            chain.push(idx);
        }
        Ok(chain)
    };

    let lower = build(&mut order.iter().copied())?;
    let upper = build(&mut order.iter().rev().copied())?;
    let mut hull = lower;
    hull.pop();
    hull.extend(upper.iter().take(upper.len().saturating_sub(1)));
    Ok(hull)
}

/// Are all points of the set in convex position?
pub fn is_convex_position(ps: &PointSet) -> Result<bool, GeometryError> {
    match ps {
        PointSet::AbstractConvex(_) => Ok(true),
        PointSet::Exact(_) => Ok(convex_hull(ps)?.len() == ps.len()),
    }
}

/// Sort the indices of a convex-position point set into counterclockwise
/// cyclic order around the centroid, starting from the hull point with the
/// lexicographically smallest coordinates.
pub fn convex_cyclic_order(ps: &PointSet) -> Result<Vec<usize>, GeometryError> {
    match ps {
        PointSet::AbstractConvex(n) => Ok((0..*n).collect()),
        PointSet::Exact(pts) => {
            let hull = convex_hull(ps)?;
            if hull.len() != pts.len() {
                return Err(GeometryError::NotConvexPosition);
            }
            Ok(hull)
        }
    }
}

/// Total order on points by angle around `center` (counterclockwise from
/// the positive x direction), using exact half-plane splitting. Ties by
/// distance cannot occur for points in general position around an interior
/// center, but are broken by squared distance for robustness.
pub fn angular_cmp(center: &Point, a: &Point, b: &Point) -> Ordering {
    fn half(center: &Point, p: &Point) -> u8 {
        // 0 for the upper half plane (y > cy, or y == cy and x > cx).
        let dy = (&p.y - &center.y).cmp(&BigRational::zero());
        match dy {
            Ordering::Greater => 0,
            Ordering::Less => 1,
            Ordering::Equal => {
                if p.x > center.x {
                    0
                } else {
                    1
                }
            }
        }
    }
    let (ha, hb) = (half(center, a), half(center, b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    match orientation(center, a, b) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => center.dist_sq(a).cmp(&center.dist_sq(b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn orientation_signs() {
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(0, 1)), 1);
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(2, 0)), 0);
        assert_eq!(orientation(&pt(0, 0), &pt(0, 1), &pt(1, 0)), -1);
    }

    #[test]
    fn orientation_antisymmetry() {
        let pts = [pt(3, 1), pt(-2, 5), pt(7, -4), pt(0, 0), pt(1, 8)];
        for p in &pts {
            for q in &pts {
                for r in &pts {
                    assert_eq!(orientation(p, q, r), -orientation(p, r, q));
                }
            }
        }
    }

    #[test]
    fn crossing_quadrilateral_diagonals() {
        let ps = PointSet::Exact(vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)]);
        assert!(segments_cross(Edge::new(0, 2), Edge::new(1, 3), &ps).unwrap());
        assert!(!segments_cross(Edge::new(0, 1), Edge::new(1, 2), &ps).unwrap());
        assert!(!segments_cross(Edge::new(0, 1), Edge::new(2, 3), &ps).unwrap());
    }

    #[test]
    fn crossing_interior_touch_counts() {
        // Endpoint of one edge in the open interior of the other.
        let ps = PointSet::Exact(vec![pt(0, 0), pt(4, 0), pt(2, 0), pt(2, 3)]);
        assert!(segments_cross(Edge::new(0, 1), Edge::new(2, 3), &ps).unwrap());
    }

    #[test]
    fn crossing_rejects_degenerate() {
        let ps = PointSet::Exact(vec![pt(0, 0), pt(0, 0), pt(1, 1), pt(2, 5)]);
        assert_eq!(
            segments_cross(Edge::new(0, 1), Edge::new(2, 3), &ps),
            Err(GeometryError::DegenerateEdge(0, 1))
        );
    }

    #[test]
    fn abstract_convex_interleaving() {
        let ps = PointSet::AbstractConvex(6);
        assert!(segments_cross(Edge::new(0, 2), Edge::new(1, 3), &ps).unwrap());
        // Nested chords do not cross.
        assert!(!segments_cross(Edge::new(0, 3), Edge::new(1, 2), &ps).unwrap());
        assert!(!segments_cross(Edge::new(0, 1), Edge::new(1, 2), &ps).unwrap());
    }

    #[test]
    fn general_position_detects_collinear() {
        let ps = PointSet::Exact(vec![pt(0, 0), pt(1, 1), pt(2, 2), pt(0, 1)]);
        assert_eq!(
            validate_general_position(&ps),
            Err(GeometryError::CollinearTriple(0, 1, 2))
        );
        let ok = PointSet::Exact(vec![pt(0, 0), pt(3, 1), pt(2, 4), pt(-1, 2)]);
        assert!(validate_general_position(&ok).is_ok());
    }

    #[test]
    fn general_position_detects_coincident() {
        let ps = PointSet::Exact(vec![pt(0, 0), pt(5, 2), pt(5, 2)]);
        assert_eq!(
            validate_general_position(&ps),
            Err(GeometryError::CoincidentPoints(1, 2))
        );
    }

    #[test]
    fn spans() {
        assert_eq!(edge_span(10, Edge::new(0, 5)), 5);
        assert_eq!(edge_span(10, Edge::new(0, 9)), 1);
        assert_eq!(edge_span(7, Edge::new(1, 4)), 3);
    }

    #[test]
    fn hull_of_square_with_center() {
        let ps = PointSet::Exact(vec![pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4), pt(2, 1)]);
        let hull = convex_hull(&ps).unwrap();
        assert_eq!(hull, vec![0, 1, 2, 3]);
    }

    #[test]
    fn hull_requires_three_points() {
        let ps = PointSet::Exact(vec![pt(0, 0), pt(1, 0)]);
        assert!(matches!(
            convex_hull(&ps),
            Err(GeometryError::TooFewPoints { .. })
        ));
    }

    #[test]
    fn hull_invariant_under_permutation() {
        let pts = vec![pt(0, 0), pt(5, 1), pt(6, 4), pt(2, 6), pt(-1, 3), pt(2, 2)];
        let base = convex_hull(&PointSet::Exact(pts.clone())).unwrap();
        // Rotate the input list; hull should be the same cyclic sequence.
        let mut rotated = pts.clone();
        rotated.rotate_left(2);
        let perm = convex_hull(&PointSet::Exact(rotated)).unwrap();
        let relabeled: Vec<usize> = perm.iter().map(|&i| (i + 2) % pts.len()).collect();
        let pos = relabeled.iter().position(|&v| v == base[0]).unwrap();
        let mut cyc = relabeled.clone();
        cyc.rotate_left(pos);
        assert_eq!(cyc, base);
    }

    #[test]
    fn parse_and_print_coords() {
        assert_eq!(parse_coord("3/2").unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(parse_coord("-1/5").unwrap(), BigRational::new((-1).into(), 5.into()));
        assert_eq!(parse_coord("7").unwrap(), BigRational::from_integer(7.into()));
        assert!(parse_coord("1/0").is_err());
        assert!(parse_coord("x").is_err());
        assert_eq!(coord_to_string(&BigRational::new(6.into(), 4.into())), "3/2");
        assert_eq!(coord_to_string(&BigRational::from_integer(4.into())), "4");
    }
}
