//! Point-set constructions underlying the extremal examples, each paired
//! with a validator that checks, in exact arithmetic, the structural
//! properties the construction is used for. Irrational placements are
//! realized with rational approximations; the validators assert the strict
//! inequalities that matter, so approximation quality is checked rather
//! than assumed.

mod chains;
mod gadgets;
mod polygon;

pub use chains::{
    almost_convex_chain, generalized_double_chain, middle_region_brute_count, AlmostConvexChain,
    ChainSpec, DoubleChain,
};
pub use gadgets::{
    deltoid_tour_gadget, hexagon_tour_gadget, rotated_triangle_gadget, s4_matching_gadget,
    DeltoidGadget, GadgetSpec, HexagonGadget, RotatedTriangleGadget, S4Gadget, TriangleGroup,
};
pub use polygon::{convex_polygon, unit_circle_point, RegularPolygon};

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::geometry::{GeometryError, Point};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BuildError {
    Geometry(GeometryError),
    BadParameter(String),
    /// A pair that must (or must not) be connectable above the chain.
    VisibilityViolation { i: usize, j: usize, expected_visible: bool },
    /// A lower-chain / upper-chain pair that cannot see each other.
    MutualVisibilityViolation { lower: usize, upper: usize },
    /// Some point other than the declared ones is at least as far from the
    /// center as the declared farthest set.
    FarthestPointViolation { center: usize, offender: usize },
    /// The convex hull disagrees with the declared hull sequence.
    HullMismatch,
    /// Two gadget polygons overlap.
    InteriorsOverlap { first: usize, second: usize },
    /// Group diameter too large relative to group separation.
    GroupsTooWide { group: usize },
    /// A distance bound of the construction fails.
    DistanceBoundViolation { i: usize, j: usize, bound: &'static str },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Geometry(e) => write!(f, "{e}"),
            BuildError::BadParameter(s) => write!(f, "bad parameter: {s}"),
            BuildError::VisibilityViolation { i, j, expected_visible: true } => {
                write!(f, "vertices {i} and {j} should be connectable above the chain but are not")
            }
            BuildError::VisibilityViolation { i, j, expected_visible: false } => {
                write!(f, "vertices {i} and {j} are on the same reflex chain but see each other")
            }
            BuildError::MutualVisibilityViolation { lower, upper } => {
                write!(f, "lower vertex {lower} and upper vertex {upper} are not mutually visible")
            }
            BuildError::FarthestPointViolation { center, offender } => {
                write!(f, "point {offender} ties or beats the declared farthest points of {center}")
            }
            BuildError::HullMismatch => write!(f, "convex hull differs from the declared hull"),
            BuildError::InteriorsOverlap { first, second } => {
                write!(f, "gadget polygons {first} and {second} are not interior-disjoint")
            }
            BuildError::GroupsTooWide { group } => {
                write!(f, "group {group} is too wide for its separation (epsilon too large)")
            }
            BuildError::DistanceBoundViolation { i, j, bound } => {
                write!(f, "points {i}, {j} violate the distance bound {bound}")
            }
        }
    }
}

impl From<GeometryError> for BuildError {
    fn from(e: GeometryError) -> Self {
        BuildError::Geometry(e)
    }
}

/// Rational of the form `round(x * 10^digits) / 10^digits`.
pub(crate) fn snap(x: f64, digits: u32) -> BigRational {
    let scale = 10f64.powi(digits as i32);
    let scaled = (x * scale).round();
    assert!(
        scaled.abs() < 9.0e15,
        "coordinate too large to snap at this precision"
    );
    BigRational::new(BigInt::from(scaled as i64), BigInt::from(10u32).pow(digits))
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rotate `v` (a vector) by the rational rotation with `tan(theta/2) = t`:
/// `cos = (1-t^2)/(1+t^2)`, `sin = 2t/(1+t^2)`. Exact, length-preserving.
pub(crate) fn rotate_vec(v: (BigRational, BigRational), t: &BigRational) -> (BigRational, BigRational) {
    let one = BigRational::from_integer(1.into());
    let t2 = t * t;
    let den = &one + &t2;
    let cos = (&one - &t2) / &den;
    let sin = (t + t) / &den;
    (
        &cos * &v.0 - &sin * &v.1,
        &sin * &v.0 + &cos * &v.1,
    )
}

/// Rotate point `p` around `center`, same parameterization as [`rotate_vec`].
pub(crate) fn rotate_around(p: &Point, center: &Point, t: &BigRational) -> Point {
    let v = (&p.x - &center.x, &p.y - &center.y);
    let (rx, ry) = rotate_vec(v, t);
    Point::new(&center.x + rx, &center.y + ry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn rational_rotation_preserves_length() {
        let p = Point::new(rat(7, 2), rat(-3, 5));
        let c = Point::new(rat(1, 3), rat(2, 1));
        for (n, d) in [(1i64, 10i64), (-3, 7), (12, 5)] {
            let t = rat(n, d);
            let q = rotate_around(&p, &c, &t);
            assert_eq!(c.dist_sq(&p), c.dist_sq(&q));
            assert_ne!(p, q);
        }
    }

    #[test]
    fn snapping_hits_nearby_rational() {
        let r = snap(0.1234567, 4);
        assert_eq!(r, rat(1235, 10000));
        assert!(snap(0.0, 6).is_zero());
    }
}
