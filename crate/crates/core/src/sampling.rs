//! Deterministic seeded sample point sets for the verification suites:
//! general-position sets on an integer grid and random convex polygons on
//! the unit circle. Same seed, same set, on every platform.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::snap;
use crate::geometry::{convex_hull, validate_general_position, Point, PointSet};

/// `n` grid points in general position, resampled until valid.
pub fn random_general_position(n: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side = (n as i64 * n as i64 * 4).max(64);
    loop {
        let pts: Vec<Point> = (0..n)
            .map(|_| Point::from_ints(rng.gen_range(0..side), rng.gen_range(0..side)))
            .collect();
        let ps = PointSet::Exact(pts);
        if validate_general_position(&ps).is_ok() {
            return ps;
        }
    }
}

/// `n` points in convex position: random distinct angles on the unit
/// circle, in counterclockwise order (exact rational circle points).
pub fn random_convex_polygon(n: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'outer: loop {
        let mut halves: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(0.0..core::f64::consts::PI))
            .collect();
        halves.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut pts = Vec::with_capacity(n);
        for h in halves {
            let t = h.tan();
            if t.abs() > 1e6 {
                continue 'outer; // too close to the leftmost point; resample
            }
            pts.push(circle_point(&snap(t, 9)));
        }
        let ps = PointSet::Exact(pts);
        if validate_general_position(&ps).is_ok() && convex_hull(&ps).map(|h| h.len()) == Ok(n) {
            return ps;
        }
    }
}

/// Exact unit-circle point with `tan(theta/2) = t`.
fn circle_point(t: &BigRational) -> Point {
    let one = BigRational::one();
    let t2 = t * t;
    let den = &one + &t2;
    Point::new((&one - &t2) / &den, (t + t) / &den)
}
