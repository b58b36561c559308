//! Closed-form counts that pair with the exhaustive enumerators: the
//! triangulation count of the region between two mutually visible chains,
//! the number of combinatorial bridge types, and the reduction counts for
//! convex sub-chains.

use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinat::{binomial, catalan_table};

/// Triangulations of the region between two mutually visible flat chains
/// with `m` vertices each: `C(2m-2, m-1)`. Every triangle of the region has
/// an edge on one of the chains, `m-1` per side.
pub fn middle_region_triangulation_count(m: usize) -> BigUint {
    assert!(m >= 2, "need at least two vertices per chain");
    binomial(2 * m as u64 - 2, m as u64 - 1)
}

/// Number of combinatorial types of `(i,j)`-bridges: trees on `i` lower and
/// `j` upper vertices whose edges all run between the rows. Equals
/// `C(i+j-2, i-1)` via the bijection with the triangulations of the
/// two-row polygon.
pub fn bridge_type_count(i: usize, j: usize) -> BigUint {
    assert!(i >= 1 && j >= 1, "bridge sides need at least one vertex");
    binomial((i + j - 2) as u64, (i - 1) as u64)
}

/// Reduction counts for a convex chain with `k` interior vertices
/// (`k + 2` vertices in total): `a[i]` is the number of ways to add edges
/// above the chain so that its upper envelope loses exactly `i` vertices
/// and every pocket below the envelope is fully triangulated.
///
/// Choosing which `i` interior vertices leave the envelope splits them into
/// maximal runs; a run of length `L` sits under one pocket, a convex
/// `(L+2)`-gon with Catalan-many triangulations. Hence `a[i]` is a sum of
/// Catalan products over the `i`-subsets of interior vertices.
pub fn chain_reduction_counts(k: usize) -> Vec<BigUint> {
    assert!(k <= 30, "reduction counts are meant for short chains");
    let cat = catalan_table(k + 1);
    let mut counts = alloc::vec![BigUint::zero(); k + 1];
    for mask in 0u64..(1u64 << k) {
        let mut product = BigUint::one();
        let mut run = 0usize;
        for v in 0..k {
            if mask >> v & 1 == 1 {
                run += 1;
            } else if run > 0 {
                product *= &cat[run];
                run = 0;
            }
        }
        if run > 0 {
            product *= &cat[run];
        }
        counts[mask.count_ones() as usize] += product;
    }
    counts
}
