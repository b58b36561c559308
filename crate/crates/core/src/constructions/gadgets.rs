//! Gadget point sets for the extremal-weight multiplicity bounds. Each
//! gadget engineers its weight ties exactly (congruent edges via rational
//! rotations and reflective symmetry) and validates its strict separation
//! inequalities with exact arithmetic.

use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Signed;

use super::{rat, rotate_around, snap, BuildError};
use crate::geometry::{
    convex_hull, orientation, segments_cross, validate_general_position, Edge, Point, PointSet,
};

/// Parameter record for the gadget families (used by callers that dispatch
/// generically, e.g. a CLI).
#[derive(Clone, Debug)]
pub enum GadgetSpec {
    S4Matching { n: usize },
    DeltoidTour { k: usize, delta: BigRational },
    HexagonTour { k: usize, delta: BigRational },
    RotatedTriangles { n: usize, eps: BigRational },
    RegularNGonRational { n: usize },
}

impl GadgetSpec {
    pub fn default_delta(k: usize) -> BigRational {
        rat(1, 50 * (k * k) as i64)
    }

    pub fn default_eps(n: usize) -> BigRational {
        let groups = n.div_ceil(3) as i64;
        rat(1, 9 * groups * groups)
    }
}

// ---------------------------------------------------------------------------
// S4 matching gadget
// ---------------------------------------------------------------------------

/// Stacked translated copies of the 4-point set whose two maximum matchings
/// tie exactly, plus (for `n = 4c + 2`) one far horizontal pair.
#[derive(Clone, Debug)]
pub struct S4Gadget {
    pub points: PointSet,
    pub copies: usize,
    /// Indices of the extra pair, present when `n % 4 == 2`.
    pub extra_pair: Option<(usize, usize)>,
}

impl S4Gadget {
    /// Copy `t` occupies indices `(a, b, c, d) = (4t, 4t+1, 4t+2, 4t+3)`.
    pub fn copy(&self, t: usize) -> (usize, usize, usize, usize) {
        (4 * t, 4 * t + 1, 4 * t + 2, 4 * t + 3)
    }

    /// The left cluster: all copies of `a` and `b` (plus the extra pair's
    /// left point).
    pub fn left(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.copies).flat_map(|t| [4 * t, 4 * t + 1]).collect();
        if let Some((e, _)) = self.extra_pair {
            v.push(e);
        }
        v
    }

    pub fn right(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.copies).flat_map(|t| [4 * t + 2, 4 * t + 3]).collect();
        if let Some((_, f)) = self.extra_pair {
            v.push(f);
        }
        v
    }
}

pub fn s4_matching_gadget(n: usize) -> Result<S4Gadget, BuildError> {
    if n < 4 || n % 2 == 1 {
        return Err(BuildError::BadParameter(String::from(
            "the matching gadget needs an even n >= 4",
        )));
    }
    let copies = n / 4;
    let ni = n as i64;
    let eps = rat(1, ni * ni * ni);
    let half = rat(1, 2 * ni); // |ab|/2 = 1/(2n)
    let ystep = rat(2, ni);
    let gap = rat(1, ni); // |cd| = 1/n
    let far = rat(4 * ni + 1, 2); // 2n + 1/2

    let mut pts = Vec::with_capacity(n);
    for t in 0..copies {
        let t2 = rat((t * t) as i64, 1);
        let sx = &t2 * &eps;
        let y = rat(t as i64, 1) * &ystep;
        pts.push(Point::new(sx.clone(), &y + &half)); // a
        pts.push(Point::new(sx.clone(), &y - &half)); // b
        pts.push(Point::new(&far + &sx, y.clone())); // c
        pts.push(Point::new(&far + &sx + &gap, y)); // d
    }
    let extra_pair = if n % 4 == 2 {
        let c2 = rat((copies * copies) as i64, 1);
        let sx = &c2 * &eps;
        let y = rat(copies as i64, 1) * &ystep + &half;
        pts.push(Point::new(sx.clone(), y.clone()));
        pts.push(Point::new(&far + &sx + &eps, &y + &eps));
        Some((n - 2, n - 1))
    } else {
        None
    };

    let gadget = S4Gadget { points: PointSet::Exact(pts), copies, extra_pair };
    validate_s4(&gadget, n)?;
    Ok(gadget)
}

fn validate_s4(g: &S4Gadget, n: usize) -> Result<(), BuildError> {
    validate_general_position(&g.points)?;
    let pts = g.points.points().unwrap();
    // The exact within-copy ties the matching count relies on.
    for t in 0..g.copies {
        let (a, b, c, d) = g.copy(t);
        assert_eq!(pts[a].dist_sq(&pts[c]), pts[b].dist_sq(&pts[c]));
        assert_eq!(pts[a].dist_sq(&pts[d]), pts[b].dist_sq(&pts[d]));
    }
    let one = rat(1, 1);
    let lo = rat(4 * (n * n) as i64, 1); // (2n)^2
    let hi = rat(((2 * n + 1) * (2 * n + 1)) as i64, 1);
    let (left, right) = (g.left(), g.right());
    for side in [&left, &right] {
        for (x, &i) in side.iter().enumerate() {
            for &j in side.iter().skip(x + 1) {
                if pts[i].dist_sq(&pts[j]) > one {
                    return Err(BuildError::DistanceBoundViolation { i, j, bound: "unit cluster diameter" });
                }
            }
        }
    }
    for &i in &left {
        for &j in &right {
            let d = pts[i].dist_sq(&pts[j]);
            if d < lo || d > hi {
                return Err(BuildError::DistanceBoundViolation { i, j, bound: "cross distance in [2n, 2n+1]" });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Auxiliary skeleton for the tour gadgets
// ---------------------------------------------------------------------------

/// Float staging of the spiral skeleton `{c_i, x_i}`: every `x_i` has `c_i`
/// as its unique farthest point among the `c_j`. Coordinates are snapped to
/// rationals afterwards and all consequences re-validated exactly.
fn aux_skeleton(k: usize) -> Result<(Vec<[f64; 2]>, Vec<[f64; 2]>), BuildError> {
    if k < 1 {
        return Err(BuildError::BadParameter(String::from("need k >= 1 groups")));
    }
    let alpha = core::f64::consts::PI / (3.0 * k as f64);
    let mut c = alloc::vec![[0.0f64; 2]; k];
    let mut x = alloc::vec![[0.0f64; 2]; k];
    c[0] = [0.0, 0.0];
    x[0] = [2.0, 0.0];
    if k >= 2 {
        x[1] = [2.0 - 1.0 / k as f64, 0.0];
    }
    let dist = |p: [f64; 2], q: [f64; 2]| ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();
    let mut dir_angle = core::f64::consts::PI; // ray x_0 -> c_0
    for i in 0..k.saturating_sub(1) {
        dir_angle -= alpha;
        let dir = [dir_angle.cos(), dir_angle.sin()];
        // Exit parameter of the ray from x[i+1] out of the circle around
        // x[i] through c[i] (x[i+1] starts inside it).
        let ox = [x[i + 1][0] - x[i][0], x[i + 1][1] - x[i][1]];
        let b = ox[0] * dir[0] + ox[1] * dir[1];
        let cc = ox[0] * ox[0] + ox[1] * ox[1] - dist(x[i], c[i]).powi(2);
        let s_outer = -b + (b * b - cc).sqrt();
        let s_inner = dist(x[i + 1], c[i]);
        assert!(
            s_inner < s_outer,
            "skeleton step {i}: circle order violated; k too large for this staging"
        );
        let s = 0.5 * (s_inner + s_outer);
        c[i + 1] = [x[i + 1][0] + s * dir[0], x[i + 1][1] + s * dir[1]];
        if i + 2 < k {
            // Walk from x[i+1] toward c[i+1] by at most 1/k, shrinking the
            // step until c[i+1] stays the strict farthest center.
            let toward = [
                (c[i + 1][0] - x[i + 1][0]) / s,
                (c[i + 1][1] - x[i + 1][1]) / s,
            ];
            let mut step = (1.0 / k as f64).min(s / 2.0) * 0.6;
            loop {
                let cand = [x[i + 1][0] + step * toward[0], x[i + 1][1] + step * toward[1]];
                let dc = dist(cand, c[i + 1]);
                if (0..=i).all(|j| dist(cand, c[j]) < dc) {
                    x[i + 2] = cand;
                    break;
                }
                step *= 0.5;
                assert!(step > 1e-12, "skeleton step {i}: no viable x position");
            }
        }
    }
    Ok((c, x))
}

fn snap_point(p: [f64; 2]) -> Point {
    Point::new(snap(p[0], 12), snap(p[1], 12))
}

// ---------------------------------------------------------------------------
// Deltoid tour gadget
// ---------------------------------------------------------------------------

/// One deltoid: apex `a` inside the hull, ring `b, c, d` at exactly equal
/// distance from `a`.
#[derive(Clone, Copy, Debug)]
pub struct DeltoidGroup {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

#[derive(Clone, Debug)]
pub struct DeltoidGadget {
    pub points: PointSet,
    pub k: usize,
    pub groups: Vec<DeltoidGroup>,
    /// Index of the lone non-deltoid hull vertex.
    pub x1: usize,
}

impl DeltoidGadget {
    pub fn n(&self) -> usize {
        4 * self.k + 1
    }

    /// Declared hull: the deltoid rings in order, then `x1`.
    pub fn declared_hull(&self) -> Vec<usize> {
        let mut h: Vec<usize> = self.groups.iter().flat_map(|g| [g.b, g.c, g.d]).collect();
        h.push(self.x1);
        h
    }
}

pub fn deltoid_tour_gadget(k: usize, delta: &BigRational) -> Result<DeltoidGadget, BuildError> {
    if !delta.is_positive() {
        return Err(BuildError::BadParameter(String::from("delta must be positive")));
    }
    let (c_f, x_f) = aux_skeleton(k)?;
    let delta_f = rational_to_f64(delta);
    let dist_f = |p: [f64; 2], q: [f64; 2]| ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();

    let mut pts: Vec<Point> = Vec::with_capacity(4 * k + 1);
    let mut groups = Vec::with_capacity(k);
    for i in 0..k {
        let c_r = snap_point(c_f[i]);
        let x_r = snap_point(x_f[i]);
        // a_i on the segment x_i -> c_i, at distance ~delta from x_i; the
        // first one is nudged off the segment because x_1 stays in the set.
        let rho = snap(delta_f / dist_f(c_f[i], x_f[i]), 12);
        let mut a = Point::new(
            &x_r.x + &rho * (&c_r.x - &x_r.x),
            &x_r.y + &rho * (&c_r.y - &x_r.y),
        );
        if i == 0 {
            let eta = snap(delta_f * delta_f / 64.0, 15);
            a = Point::new(&a.x - &eta * (&c_r.y - &x_r.y), &a.y + &eta * (&c_r.x - &x_r.x));
        }
        // Ring: rotate c_i around a_i by +/- a small rational rotation; the
        // three radii tie exactly and |bc| = |cd| by reflective symmetry.
        let t = snap(delta_f / (2.0 * dist_f(c_f[i], x_f[i])), 12);
        let b = rotate_around(&c_r, &a, &t);
        let d = rotate_around(&c_r, &a, &(-&t));
        let base = pts.len();
        pts.push(a);
        pts.push(b);
        pts.push(c_r);
        pts.push(d);
        groups.push(DeltoidGroup { a: base, b: base + 1, c: base + 2, d: base + 3 });
    }
    let x1 = pts.len();
    pts.push(snap_point(x_f[0]));

    let gadget = DeltoidGadget { points: PointSet::Exact(pts), k, groups, x1 };
    validate_rings(
        &gadget.points,
        &gadget
            .groups
            .iter()
            .map(|g| (g.a, alloc::vec![g.b, g.c, g.d]))
            .collect::<Vec<_>>(),
        &gadget.declared_hull(),
    )?;
    Ok(gadget)
}

// ---------------------------------------------------------------------------
// Hexagon tour gadget (best effort)
// ---------------------------------------------------------------------------

/// One skinny hexagon: apex `a` plus five ring vertices at exactly equal
/// distance from `a` and exactly equal consecutive gaps.
#[derive(Clone, Debug)]
pub struct HexagonGroup {
    pub a: usize,
    /// The five ring vertices in hull order; the middle one sits on the
    /// skeleton spoke.
    pub ring: [usize; 5],
}

#[derive(Clone, Debug)]
pub struct HexagonGadget {
    pub points: PointSet,
    pub k: usize,
    pub groups: Vec<HexagonGroup>,
    pub x1: usize,
}

impl HexagonGadget {
    pub fn n(&self) -> usize {
        6 * self.k + 1
    }

    pub fn declared_hull(&self) -> Vec<usize> {
        let mut h: Vec<usize> = self.groups.iter().flat_map(|g| g.ring).collect();
        h.push(self.x1);
        h
    }
}

pub fn hexagon_tour_gadget(k: usize, delta: &BigRational) -> Result<HexagonGadget, BuildError> {
    if !delta.is_positive() {
        return Err(BuildError::BadParameter(String::from("delta must be positive")));
    }
    let (c_f, x_f) = aux_skeleton(k)?;
    let delta_f = rational_to_f64(delta);
    let dist_f = |p: [f64; 2], q: [f64; 2]| ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();

    let mut pts: Vec<Point> = Vec::with_capacity(6 * k + 1);
    let mut groups = Vec::with_capacity(k);
    for i in 0..k {
        let c_r = snap_point(c_f[i]);
        let x_r = snap_point(x_f[i]);
        let rho = snap(delta_f / dist_f(c_f[i], x_f[i]), 12);
        let mut a = Point::new(
            &x_r.x + &rho * (&c_r.x - &x_r.x),
            &x_r.y + &rho * (&c_r.y - &x_r.y),
        );
        if i == 0 {
            let eta = snap(delta_f * delta_f / 64.0, 15);
            a = Point::new(&a.x - &eta * (&c_r.y - &x_r.y), &a.y + &eta * (&c_r.x - &x_r.x));
        }
        let t = snap(delta_f / (4.0 * dist_f(c_f[i], x_f[i])), 12);
        // Five equidistant ring vertices: repeated images of c_i under the
        // same exact rotation, two on each side.
        let p1 = rotate_around(&c_r, &a, &t);
        let p2 = rotate_around(&p1, &a, &t);
        let m1 = rotate_around(&c_r, &a, &(-&t));
        let m2 = rotate_around(&m1, &a, &(-&t));
        let base = pts.len();
        pts.push(a);
        pts.push(p2);
        pts.push(p1);
        pts.push(c_r);
        pts.push(m1);
        pts.push(m2);
        groups.push(HexagonGroup { a: base, ring: [base + 1, base + 2, base + 3, base + 4, base + 5] });
    }
    let x1 = pts.len();
    pts.push(snap_point(x_f[0]));

    let gadget = HexagonGadget { points: PointSet::Exact(pts), k, groups, x1 };
    validate_rings(
        &gadget.points,
        &gadget
            .groups
            .iter()
            .map(|g| (g.a, g.ring.to_vec()))
            .collect::<Vec<_>>(),
        &gadget.declared_hull(),
    )?;
    // The equal-gap ties the 4-way insertion relies on.
    let pts = gadget.points.points().unwrap();
    for g in &gadget.groups {
        let gaps: Vec<BigRational> = g
            .ring
            .windows(2)
            .map(|w| pts[w[0]].dist_sq(&pts[w[1]]))
            .collect();
        for gap in &gaps[1..] {
            assert_eq!(gap, &gaps[0], "ring gaps are congruent by construction");
        }
    }
    Ok(gadget)
}

/// Shared validation for the ring gadgets: general position, exact ring
/// radii, strict farthest-point separation, declared hull, and pairwise
/// interior-disjoint group polygons.
fn validate_rings(
    ps: &PointSet,
    groups: &[(usize, Vec<usize>)],
    declared_hull: &[usize],
) -> Result<(), BuildError> {
    validate_general_position(ps)?;
    let pts = ps.points().unwrap();
    let n = ps.len();
    for (a, ring) in groups {
        let radius = pts[*a].dist_sq(&pts[ring[0]]);
        for r in ring {
            assert_eq!(pts[*a].dist_sq(&pts[*r]), radius, "ring radii tie by construction");
        }
        for q in 0..n {
            if q == *a || ring.contains(&q) {
                continue;
            }
            if pts[*a].dist_sq(&pts[q]) >= radius {
                return Err(BuildError::FarthestPointViolation { center: *a, offender: q });
            }
        }
    }
    let hull = convex_hull(ps)?;
    if !cyclic_equal(&hull, declared_hull) {
        return Err(BuildError::HullMismatch);
    }
    // Interior disjointness of the group polygons (apex + ring, convex).
    let polys: Vec<Vec<usize>> = groups
        .iter()
        .map(|(a, ring)| {
            let mut p = alloc::vec![*a];
            p.extend(ring.iter().copied());
            p
        })
        .collect();
    for i in 0..polys.len() {
        for j in (i + 1)..polys.len() {
            if polygons_overlap(ps, &polys[i], &polys[j])? {
                return Err(BuildError::InteriorsOverlap { first: i, second: j });
            }
        }
    }
    Ok(())
}

fn polygons_overlap(ps: &PointSet, p1: &[usize], p2: &[usize]) -> Result<bool, BuildError> {
    let edges = |p: &[usize]| -> Vec<Edge> {
        (0..p.len()).map(|i| Edge::new(p[i], p[(i + 1) % p.len()])).collect()
    };
    for e1 in edges(p1) {
        for e2 in edges(p2) {
            if !e1.touches(e2) && segments_cross(e1, e2, ps).map_err(BuildError::from)? {
                return Ok(true);
            }
        }
    }
    let pts = ps.points().unwrap();
    let inside = |poly: &[usize], q: usize| -> bool {
        let sign = orientation(&pts[poly[0]], &pts[poly[1]], &pts[poly[2]]);
        (0..poly.len()).all(|i| {
            orientation(&pts[poly[i]], &pts[poly[(i + 1) % poly.len()]], &pts[q]) == sign
        })
    };
    Ok(p2.iter().any(|&q| inside(p1, q)) || p1.iter().any(|&q| inside(p2, q)))
}

/// Equality of cyclic sequences up to rotation and reversal.
pub(crate) fn cyclic_equal(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let Some(start) = b.iter().position(|&v| v == a[0]) else {
        return false;
    };
    let fwd = (0..n).all(|i| a[i] == b[(start + i) % n]);
    let rev = (0..n).all(|i| a[i] == b[(start + n - i) % n]);
    fwd || rev
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("parameter fits in f64")
}

// ---------------------------------------------------------------------------
// Rotated triangle gadget
// ---------------------------------------------------------------------------

/// One group: anchor `a` and (when present) the close pair `b, c` placed
/// symmetrically across the chord toward the next anchor, so both group
/// traversals tie exactly.
#[derive(Clone, Copy, Debug)]
pub struct TriangleGroup {
    pub a: usize,
    pub b: Option<usize>,
    pub c: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct RotatedTriangleGadget {
    pub points: PointSet,
    pub groups: Vec<TriangleGroup>,
}

impl RotatedTriangleGadget {
    pub fn full_groups(&self) -> usize {
        self.groups.iter().filter(|g| g.c.is_some()).count()
    }
}

pub fn rotated_triangle_gadget(n: usize, eps: &BigRational) -> Result<RotatedTriangleGadget, BuildError> {
    if n < 3 {
        return Err(BuildError::BadParameter(String::from("need at least 3 points")));
    }
    if !eps.is_positive() {
        return Err(BuildError::BadParameter(String::from("eps must be positive")));
    }
    let g_count = n.div_ceil(3);
    let removed = 3 * g_count - n;
    let eps_f = rational_to_f64(eps);

    let anchors: Vec<Point> = (0..g_count).map(|g| super::polygon::unit_circle_point(g, g_count)).collect();
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    let mut groups = Vec::with_capacity(g_count);
    for g in 0..g_count {
        let keep = if g == g_count - 1 { 3 - removed } else { 3 };
        let a = anchors[g].clone();
        let base = pts.len();
        pts.push(a.clone());
        if keep == 1 {
            groups.push(TriangleGroup { a: base, b: None, c: None });
            continue;
        }
        // Chord toward the next anchor; for a single group fall back to a
        // fixed direction since there is no next anchor.
        let (dx, dy) = if g_count == 1 {
            (rat(1, 1), rat(0, 1))
        } else {
            let nx = &anchors[(g + 1) % g_count];
            (&nx.x - &a.x, &nx.y - &a.y)
        };
        let chord_len = rational_to_f64(&(&dx * &dx + &dy * &dy)).sqrt();
        let rho = snap(eps_f * 0.99215 / chord_len, 12); // sqrt(63)/8 of eps
        let h = snap(eps_f / (8.0 * chord_len), 12);
        let mx = &a.x + &rho * &dx;
        let my = &a.y + &rho * &dy;
        let b = Point::new(&mx - &h * &dy, &my + &h * &dx);
        let c = Point::new(&mx + &h * &dy, &my - &h * &dx);
        pts.push(b);
        groups.push(TriangleGroup {
            a: base,
            b: Some(base + 1),
            c: if keep == 3 { Some(base + 2) } else { None },
        });
        if keep == 3 {
            pts.push(c);
        }
    }

    let gadget = RotatedTriangleGadget { points: PointSet::Exact(pts), groups };
    validate_triangles(&gadget, g_count)?;
    Ok(gadget)
}

fn validate_triangles(g: &RotatedTriangleGadget, g_count: usize) -> Result<(), BuildError> {
    validate_general_position(&g.points)?;
    let pts = g.points.points().unwrap();
    // Exact ties for every full group: isosceles at the own anchor and
    // equidistance from the next anchor.
    for (gi, group) in g.groups.iter().enumerate() {
        let (Some(b), Some(c)) = (group.b, group.c) else { continue };
        let a = group.a;
        assert_eq!(pts[a].dist_sq(&pts[b]), pts[a].dist_sq(&pts[c]));
        if g_count > 1 {
            let next_a = g.groups[(gi + 1) % g_count].a;
            assert_eq!(pts[next_a].dist_sq(&pts[b]), pts[next_a].dist_sq(&pts[c]));
        }
    }
    if g_count == 1 {
        return Ok(());
    }
    // Group diameter must be well under the group separation.
    let group_members = |gi: usize| -> Vec<usize> {
        let gr = &g.groups[gi];
        let mut v = alloc::vec![gr.a];
        v.extend(gr.b);
        v.extend(gr.c);
        v
    };
    let mut max_diam = rat(0, 1);
    let mut widest = 0;
    let mut min_gap: Option<BigRational> = None;
    for gi in 0..g_count {
        let members = group_members(gi);
        for (x, &i) in members.iter().enumerate() {
            for &j in members.iter().skip(x + 1) {
                let d = pts[i].dist_sq(&pts[j]);
                if d > max_diam {
                    max_diam = d;
                    widest = gi;
                }
            }
        }
        for gj in (gi + 1)..g_count {
            for &i in &members {
                for &j in &group_members(gj) {
                    let d = pts[i].dist_sq(&pts[j]);
                    if min_gap.as_ref().is_none_or(|m| d < *m) {
                        min_gap = Some(d);
                    }
                }
            }
        }
    }
    let min_gap = min_gap.expect("at least two groups");
    // Squared distances: diam^2 * 16 <= gap^2 means diam * 4 <= gap.
    if &max_diam * rat(16, 1) > min_gap {
        return Err(BuildError::GroupsTooWide { group: widest });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_sizes_and_structure() {
        let g = s4_matching_gadget(8).unwrap();
        assert_eq!(g.points.len(), 8);
        assert_eq!(g.copies, 2);
        assert!(g.extra_pair.is_none());

        let g = s4_matching_gadget(4).unwrap();
        assert_eq!(g.points.len(), 4);
        assert_eq!(g.copies, 1);

        let g = s4_matching_gadget(6).unwrap();
        assert_eq!(g.points.len(), 6);
        assert_eq!(g.copies, 1);
        assert_eq!(g.extra_pair, Some((4, 5)));
    }

    #[test]
    fn s4_rejects_odd_or_tiny() {
        assert!(s4_matching_gadget(5).is_err());
        assert!(s4_matching_gadget(2).is_err());
    }

    #[test]
    fn deltoid_sizes() {
        for k in 1..=3 {
            let g = deltoid_tour_gadget(k, &GadgetSpec::default_delta(k)).unwrap();
            assert_eq!(g.points.len(), 4 * k + 1);
        }
    }

    #[test]
    fn deltoid_rejects_huge_delta() {
        match deltoid_tour_gadget(2, &rat(1, 2)) {
            Err(
                BuildError::FarthestPointViolation { .. }
                | BuildError::HullMismatch
                | BuildError::InteriorsOverlap { .. }
                | BuildError::Geometry(_),
            ) => {}
            other => panic!("expected a validation failure, got {other:?}"),
        }
    }

    #[test]
    fn hexagon_sizes() {
        for k in 1..=2 {
            let g = hexagon_tour_gadget(k, &GadgetSpec::default_delta(k)).unwrap();
            assert_eq!(g.points.len(), 6 * k + 1);
        }
    }

    #[test]
    fn triangle_group_shapes() {
        let g = rotated_triangle_gadget(9, &GadgetSpec::default_eps(9)).unwrap();
        assert_eq!(g.points.len(), 9);
        assert_eq!(g.full_groups(), 3);

        let g = rotated_triangle_gadget(10, &GadgetSpec::default_eps(10)).unwrap();
        assert_eq!(g.points.len(), 10);
        assert_eq!(g.full_groups(), 3);
        assert_eq!(g.groups.len(), 4);

        let g = rotated_triangle_gadget(3, &GadgetSpec::default_eps(3)).unwrap();
        assert_eq!(g.points.len(), 3);

        let g = rotated_triangle_gadget(5, &GadgetSpec::default_eps(5)).unwrap();
        assert_eq!(g.points.len(), 5);
        assert_eq!(g.full_groups(), 1);
    }

    #[test]
    fn triangle_rejects_huge_eps() {
        assert!(matches!(
            rotated_triangle_gadget(9, &rat(2, 1)),
            Err(BuildError::GroupsTooWide { .. } | BuildError::Geometry(_))
        ));
    }

    #[test]
    fn cyclic_equality() {
        assert!(cyclic_equal(&[1, 2, 3, 4], &[3, 4, 1, 2]));
        assert!(cyclic_equal(&[1, 2, 3, 4], &[2, 1, 4, 3]));
        assert!(!cyclic_equal(&[1, 2, 3, 4], &[1, 3, 2, 4]));
    }
}
