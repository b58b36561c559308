//! Support of spanning cycles: for every non-crossing spanning cycle `C`,
//! the number of triangulations whose edge set contains `C`. Doubly
//! exponential, so capped at 10 points.

use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{enumerate, EdgeGraph, EnumerationError, GraphClass, Limits};
use crate::geometry::PointSet;

pub const SUPPORT_LIMIT: usize = 10;

#[derive(Clone, Debug)]
pub struct SupportTable {
    pub n: usize,
    /// Every non-crossing spanning cycle paired with its support.
    pub entries: Vec<(EdgeGraph, BigUint)>,
}

impl SupportTable {
    /// Sum of supports, used by the containment identity.
    pub fn total_support(&self) -> BigUint {
        self.entries.iter().map(|(_, s)| s).sum()
    }
}

pub fn support_table(ps: &PointSet, limits: Limits) -> Result<SupportTable, EnumerationError> {
    let n = ps.len();
    if n > SUPPORT_LIMIT {
        return Err(EnumerationError::LimitExceeded { n, limit: SUPPORT_LIMIT });
    }
    let cycles = enumerate(ps, GraphClass::SpanningCycle, limits)?;
    let tris = enumerate(ps, GraphClass::Triangulation, limits)?;
    let entries = cycles
        .into_iter()
        .map(|c| {
            let supp = tris.iter().filter(|t| t.contains_all(&c)).count();
            debug_assert!(supp >= 1, "every non-crossing cycle extends to a triangulation");
            (c, BigUint::from(supp))
        })
        .collect();
    Ok(SupportTable { n, entries })
}

/// Evaluate the double sum over triangulations `T` and cycles `C` contained
/// in `T` of `1 / supp(C)`, in exact rational arithmetic. By double
/// counting this equals the number of non-crossing spanning cycles; the
/// point of computing it the long way is to exercise the containment
/// machinery from both directions.
pub fn support_identity_sum(ps: &PointSet, limits: Limits) -> Result<BigRational, EnumerationError> {
    let table = support_table(ps, limits)?;
    let tris = enumerate(ps, GraphClass::Triangulation, limits)?;
    let mut sum = BigRational::zero();
    for t in &tris {
        for (c, supp) in &table.entries {
            if t.contains_all(c) {
                sum += BigRational::new(BigInt::one(), BigInt::from(supp.clone()));
            }
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convex4_hull_cycle_support() {
        let table = support_table(&PointSet::AbstractConvex(4), Limits::default()).unwrap();
        // The unique non-crossing cycle is the hull, contained in both
        // triangulations of the quadrilateral.
        assert_eq!(table.entries.len(), 1);
        assert_eq!(table.entries[0].1, BigUint::from(2u32));
    }

    #[test]
    fn convex5_hull_cycle_support() {
        let table = support_table(&PointSet::AbstractConvex(5), Limits::default()).unwrap();
        assert_eq!(table.entries.len(), 1);
        assert_eq!(table.entries[0].1, BigUint::from(5u32));
    }

    #[test]
    fn limit_is_ten() {
        assert!(matches!(
            support_table(&PointSet::AbstractConvex(11), Limits::uniform(16)),
            Err(EnumerationError::LimitExceeded { limit: SUPPORT_LIMIT, .. })
        ));
    }
}
