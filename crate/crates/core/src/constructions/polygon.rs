//! Rational stand-in for the regular n-gon: vertices exactly on the unit
//! circle (so convex position and general position come for free), within
//! 1e-6 relative error of the regular vertex angles. Chord lengths of the
//! ideal regular polygon ship separately as high-precision decimals for
//! weight reasoning.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::One;

use super::{snap, BuildError};
use crate::decimal::{regular_chord_lengths, Dec};
use crate::geometry::{convex_hull, Point, PointSet};

/// Exact rational point on the unit circle near angle `2*pi*j/n`, via the
/// tangent half-angle parameterization.
pub fn unit_circle_point(j: usize, n: usize) -> Point {
    assert!(j < n);
    if 2 * j == n {
        return Point::from_ints(-1, 0);
    }
    let half_angle = core::f64::consts::PI * j as f64 / n as f64;
    let t = snap(half_angle.tan(), 9);
    let one = BigRational::one();
    let t2 = &t * &t;
    let den = &one + &t2;
    Point::new((&one - &t2) / &den, (&t + &t) / &den)
}

#[derive(Clone, Debug)]
pub struct RegularPolygon {
    pub points: PointSet,
    pub n: usize,
}

impl RegularPolygon {
    /// Chord lengths of the ideal regular n-gon inscribed in the unit
    /// circle, by span: `table[i-1] = 2 sin(i*pi/n)`.
    pub fn chord_lengths(&self, scale: u32) -> Vec<Dec> {
        regular_chord_lengths(self.n, scale)
    }
}

/// Rational convex polygon approximating the regular `n`-gon, vertices in
/// counterclockwise cyclic order.
pub fn convex_polygon(n: usize) -> Result<RegularPolygon, BuildError> {
    if n < 3 {
        return Err(BuildError::BadParameter(alloc::string::String::from(
            "a polygon needs at least 3 vertices",
        )));
    }
    let pts: Vec<Point> = (0..n).map(|j| unit_circle_point(j, n)).collect();
    let ps = PointSet::Exact(pts);
    // All vertices must be hull vertices, in index order, counterclockwise.
    let hull = convex_hull(&ps)?;
    if hull.len() != n {
        return Err(BuildError::HullMismatch);
    }
    let start = hull.iter().position(|&v| v == 0).expect("vertex 0 on hull");
    if !(0..n).all(|i| hull[(start + i) % n] == i) {
        return Err(BuildError::HullMismatch);
    }
    Ok(RegularPolygon { points: ps, n })
}
