//! The rate functions themselves: triangulation counts of generalized
//! double chains, spanning-tree/forest counts of the double chain, the
//! spanning-cycle upper-bound rate, and the double-chain upper bound.

use num_bigint::BigUint;

use super::{entropy_of_parts, h, AlphaMatrix, AlphaVector, BoundError};
use crate::combinat::binomial;
use crate::enumeration::{bridge_type_count, chain_reduction_counts};

/// Per-point base of the number of triangulations of an almost convex
/// polygon with reflex chains of `k` interior vertices:
/// `2 * (k+2)^(1/(k+1))`.
pub fn tri_growth_rate(k: usize) -> f64 {
    2.0 * ((k + 2) as f64).powf(1.0 / (k + 1) as f64)
}

/// Per-point base `2^(27/4)`-style count of non-crossing spanning trees on
/// points in convex position.
pub const CHAIN_TREE_BASE: f64 = 27.0 / 4.0;
/// Per-point base of the number of non-crossing forests on points in
/// convex position.
pub const CHAIN_FOREST_BASE: f64 = 8.22469;

/// Triangulation count rate of the generalized double chain with reflex
/// chains of `k` interior vertices, as a function of the reduction-type
/// fractions `alpha_0..alpha_k`:
///
/// `a = [(k+2) * 2^(2(k+1) - sum i*alpha_i + H_{k+1}(alpha)) * prod a_i^alpha_i]^(1/(k+1))`
///
/// with `a_i` the chain reduction counts. Supported for `1 <= k <= 4`.
pub fn tri_lower_objective(k: usize, alpha: &AlphaVector) -> Result<f64, BoundError> {
    if !(1..=4).contains(&k) {
        return Err(BoundError::Order { got: k, max: 4 });
    }
    if alpha.len() != k + 1 {
        return Err(BoundError::Constraint("alpha must have k+1 entries"));
    }
    Ok(tri_rate_free(k, &alpha.values()[1..]))
}

/// Same rate over the free coordinates `alpha_1..alpha_k` (with `alpha_0`
/// implied); no validation, used by the optimizer with penalties.
pub(crate) fn tri_rate_free(k: usize, tail: &[f64]) -> f64 {
    let tail_sum: f64 = tail.iter().sum();
    let alpha0 = 1.0 - tail_sum;
    if alpha0 < -1e-12 || tail.iter().any(|&v| v < 0.0) {
        return f64::NEG_INFINITY;
    }
    let counts = chain_reduction_counts(k);
    let hk = entropy_of_parts(core::iter::once(alpha0).chain(tail.iter().copied()));
    let mut log2a = ((k + 2) as f64).log2() + 2.0 * (k + 1) as f64 + hk;
    for (i, &a_i) in tail.iter().enumerate() {
        let reductions = biguint_to_f64(&counts[i + 1]);
        log2a += a_i * (reductions.log2() - (i + 1) as f64);
    }
    exp2(log2a / (k + 1) as f64)
}

fn biguint_to_f64(v: &BigUint) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().expect("reduction counts stay small")
}

fn exp2(x: f64) -> f64 {
    2.0f64.powf(x)
}

/// Spanning-tree count rate of the double chain, per point, for a given
/// symmetric bridge distribution.
pub fn st_lower_objective(m: &AlphaMatrix) -> f64 {
    chain_rate(m.z(), m.upper(), CHAIN_TREE_BASE.log2(), true)
        .expect("validated matrix evaluates")
}

/// Forest (cycle-free graph) count rate of the double chain: same as the
/// spanning-tree rate without the linking factor and with the convex
/// forest base in place of the tree base.
pub fn cf_lower_objective(m: &AlphaMatrix) -> f64 {
    chain_rate(m.z(), m.upper(), CHAIN_FOREST_BASE.log2(), false)
        .expect("validated matrix evaluates")
}

/// Shared rate: the product of the bridge-placement, bridge-shape,
/// bridge-linking and chain-tree counts, per chain vertex `m = n/2`,
/// halved into a per-point base.
///
/// `None` when outside the feasible region (used as the optimizer penalty).
pub(crate) fn chain_rate(
    z: usize,
    upper: &[f64],
    chain_base_log2: f64,
    with_links: bool,
) -> Option<f64> {
    debug_assert_eq!(upper.len(), z * (z + 1) / 2);
    if upper.iter().any(|&v| v < 0.0) {
        return None;
    }
    let at = |i: usize, j: usize| -> f64 {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        upper[(i - 1) * (z + 1) - i * (i - 1) / 2 + (j - i)]
    };
    let mut total = 0.0; // alpha_**
    let mut load = 0.0; // alpha_L = alpha_U
    let mut kept = 0.0; // sum (2k-1)/2 alpha_{k*}
    for i in 1..=z {
        for j in 1..=z {
            let a = at(i, j);
            total += a;
            load += i as f64 * a;
            kept += (2 * i - 1) as f64 / 2.0 * a;
        }
    }
    let tree_fraction = 1.0 - kept; // n_L/m = n_U/m
    if !(load > 0.0 && load < 1.0) || tree_fraction < 0.0 || total <= 0.0 {
        return None;
    }
    // Bridge-vertex placements on both chains, and the left-to-right type
    // sequence (a multinomial over all z^2 ordered types).
    let mut rho = 2.0 * h(load);
    let mut fractions = alloc::vec::Vec::with_capacity(z * z);
    for i in 1..=z {
        for j in 1..=z {
            fractions.push(at(i, j) / total);
        }
    }
    rho += total * entropy_of_parts(fractions.into_iter());
    // Shapes, links, and the trees inside the chains.
    for i in 1..=z {
        for j in 1..=z {
            let a = at(i, j);
            if a == 0.0 {
                continue;
            }
            let b_ij = biguint_to_f64(&bridge_type_count(i, j));
            rho += a * b_ij.log2();
            if with_links {
                rho += a / 2.0 * ((i * j) as f64).log2();
            }
        }
    }
    if with_links {
        rho += total;
    }
    rho += 2.0 * tree_fraction * chain_base_log2;
    Some(exp2(rho / 2.0))
}

/// Per-point log2 growth of the spanning-cycle count of one triangulation,
/// as bounded by the two-branch argument with threshold `a`: below `a` the
/// flat per-triangulation bound applies, above it the matching-pair count.
/// The inner maximization over `beta = k/n` runs a scan plus golden-section
/// refinement on each branch.
pub fn sc_upper_rate(a: f64) -> Result<f64, BoundError> {
    if !(a > 0.0 && a < 0.5) {
        return Err(BoundError::Domain("threshold a must lie in (0, 1/2)"));
    }
    let b1 = scan_golden_max(sc_branch1, 0.0, a);
    let b2 = scan_golden_max(sc_branch2, a, 0.5);
    Ok(b1.max(b2))
}

fn sc_branch1(beta: f64) -> f64 {
    0.25 * 30.0f64.log2() - (0.5 - beta)
}

fn sc_branch2(beta: f64) -> f64 {
    0.5 * h(2.0 * beta)
        + (1.0 - beta) / 4.0 * ((4.0 + beta) / (1.0 - beta)).log2()
        + 0.25 * (5.0 + 2.0 * beta).log2()
        - (0.5 - beta)
}

const GOLDEN_TOL: f64 = 1e-9;

/// Coarse scan (guards against plateaus) followed by golden-section
/// refinement of a maximum.
fn scan_golden_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    if hi <= lo {
        return f(lo);
    }
    const SAMPLES: usize = 200;
    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for i in 0..=SAMPLES {
        let x = lo + (hi - lo) * i as f64 / SAMPLES as f64;
        let v = f(x);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let bl = lo + (hi - lo) * best_i.saturating_sub(1) as f64 / SAMPLES as f64;
    let bh = lo + (hi - lo) * (best_i + 1).min(SAMPLES) as f64 / SAMPLES as f64;
    golden_max(&f, bl, bh).1.max(best)
}

pub(crate) fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let inv_phi = 0.618_033_988_749_894_9;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > GOLDEN_TOL {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    let mid = 0.5 * (lo + hi);
    (mid, f(mid))
}

/// Result of minimizing [`sc_upper_rate`] over the branch threshold.
#[derive(Clone, Copy, Debug)]
pub struct ScUpperBoundReport {
    /// Optimal branch threshold.
    pub a: f64,
    /// Per-point factor `2^rate` at the optimum.
    pub factor: f64,
    /// The factor combined with the `30^n` triangulation bound.
    pub base: f64,
}

/// Minimize the spanning-cycle rate over the branch threshold `a` (scan
/// plus golden-section, like the inner problems) and combine with the
/// triangulation bound.
pub fn sc_optimum() -> ScUpperBoundReport {
    let neg = |a: f64| -sc_upper_rate(a).expect("scan stays inside (0, 1/2)");
    const SAMPLES: usize = 400;
    let (lo, hi) = (1e-4, 0.5 - 1e-4);
    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for i in 0..=SAMPLES {
        let x = lo + (hi - lo) * i as f64 / SAMPLES as f64;
        let v = neg(x);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let bl = lo + (hi - lo) * best_i.saturating_sub(1) as f64 / SAMPLES as f64;
    let bh = lo + (hi - lo) * (best_i + 1).min(SAMPLES) as f64 / SAMPLES as f64;
    let (a, neg_rate) = golden_max(&neg, bl, bh);
    let factor = exp2(-neg_rate);
    ScUpperBoundReport { a, factor, base: 30.0 * factor }
}

/// Upper bound for spanning trees and forests on the double chain:
/// `3 * 8.225 = 24.675` per point.
#[derive(Clone, Copy, Debug)]
pub struct DcUpperBoundReport {
    pub base: f64,
    /// The convex forest factor used.
    pub forest_factor: f64,
    /// The bridge-graph factor `3` (from `max_k C(m,k)^2 4^k < 9^m`).
    pub bridge_factor: f64,
    /// Largest `m` for which the dominating-summand inequality was checked
    /// exactly.
    pub checked_m: usize,
}

/// Compute the double-chain upper bound, verifying the dominating-summand
/// inequalities `C(m,k) 2^k < 3^m` and `C(m,k)^2 4^k < 9^m` exactly for
/// all `m <= 30`.
pub fn dc_upper_bound() -> DcUpperBoundReport {
    let checked_m = 30usize;
    for m in 1..=checked_m {
        let three_m = BigUint::from(3u32).pow(m as u32);
        let nine_m = &three_m * &three_m;
        for k in 0..=m {
            let c = binomial(m as u64, k as u64);
            let lhs = &c * BigUint::from(2u32).pow(k as u32);
            assert!(lhs < three_m, "C({m},{k}) 2^{k} must stay below 3^{m}");
            let lhs_sq = &c * &c * BigUint::from(4u32).pow(k as u32);
            assert!(lhs_sq < nine_m, "C({m},{k})^2 4^{k} must stay below 9^{m}");
        }
    }
    DcUpperBoundReport {
        base: 3.0 * 8.225,
        forest_factor: 8.225,
        bridge_factor: 3.0,
        checked_m,
    }
}
