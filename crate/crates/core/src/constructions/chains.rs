//! Almost convex chains and generalized double chains.
//!
//! The canonical chain is x-monotone with its hull vertices on the convex
//! parabola `y = x(x - W)` and each reflex chain lifted slightly above the
//! chord of its hull edge, so segments between vertices of different reflex
//! chains pass strictly above the chain while vertices of the same reflex
//! chain are blocked by it. The double chain stacks a vertically mirrored
//! copy below an offset copy, forming the lens whose middle region admits
//! only chain-to-chain diagonals.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::BuildError;
use crate::geometry::{
    orientation, segments_cross, validate_general_position, Edge, Point, PointSet,
};

#[derive(Clone, Debug)]
pub struct ChainSpec {
    /// Number of hull edges (each replaced by a reflex chain).
    pub r: usize,
    /// Interior vertices per reflex chain.
    pub k: usize,
    /// Height of a reflex chain above its chord, at the chord midpoint
    /// scale. Must be small enough for the visibility validator to pass.
    pub flatness: BigRational,
}

impl ChainSpec {
    /// `1/n^3`-scale default flatness for a chain of `n = r(k+1)+1` points.
    pub fn new(r: usize, k: usize) -> Self {
        let n = (r * (k + 1) + 1) as i64;
        ChainSpec { r, k, flatness: super::rat(1, n * n * n) }
    }

    pub fn with_flatness(r: usize, k: usize, flatness: BigRational) -> Self {
        ChainSpec { r, k, flatness }
    }

    pub fn chain_len(&self) -> usize {
        self.r * (self.k + 1) + 1
    }
}

/// An x-monotone almost convex chain; points are in x order.
#[derive(Clone, Debug)]
pub struct AlmostConvexChain {
    pub points: PointSet,
    pub r: usize,
    pub k: usize,
}

impl AlmostConvexChain {
    /// Is position `p` a hull vertex (as opposed to a reflex interior one)?
    pub fn is_hull(&self, p: usize) -> bool {
        p % (self.k + 1) == 0
    }

    /// Are the two positions incident to a common reflex chain? Flanking
    /// hull vertices count as incident to the chain they bound.
    pub fn same_reflex_chain(&self, p: usize, q: usize) -> bool {
        let w = self.k + 1;
        let (lo, hi) = if p < q { (p, q) } else { (q, p) };
        // Some window [c*w, (c+1)*w] contains both.
        hi.div_ceil(w).saturating_sub(1) <= lo / w && hi - lo <= w
    }
}

/// Build and validate an almost convex chain.
///
/// Fails with the violating pair if the flatness does not satisfy the
/// visibility conditions.
pub fn almost_convex_chain(spec: &ChainSpec) -> Result<AlmostConvexChain, BuildError> {
    if spec.r < 1 {
        return Err(BuildError::BadParameter(alloc::string::String::from(
            "need at least one hull edge (r >= 1)",
        )));
    }
    if !spec.flatness.is_positive() {
        return Err(BuildError::BadParameter(alloc::string::String::from(
            "flatness must be positive",
        )));
    }
    let points = chain_points(spec);
    let chain = AlmostConvexChain { points: PointSet::Exact(points), r: spec.r, k: spec.k };
    validate_almost_convex(&chain)?;
    Ok(chain)
}

fn chain_points(spec: &ChainSpec) -> Vec<Point> {
    let w = spec.k + 1;
    let width = BigRational::from_integer(BigInt::from((spec.r * w) as i64));
    let n = spec.chain_len();
    let mut pts = Vec::with_capacity(n);
    let hull_y = |x: &BigRational| x * (x - &width);
    for p in 0..n {
        let x = BigRational::from_integer(BigInt::from(p as i64));
        if p % w == 0 {
            pts.push(Point::new(x.clone(), hull_y(&x)));
        } else {
            let a = BigRational::from_integer(BigInt::from((p - p % w) as i64));
            let b = BigRational::from_integer(BigInt::from((p - p % w + w) as i64));
            let ya = hull_y(&a);
            let yb = hull_y(&b);
            let chord = &ya + (&yb - &ya) * (&x - &a) / (&b - &a);
            let lift = &spec.flatness * (&x - &a) * (&b - &x);
            pts.push(Point::new(x, chord + lift));
        }
    }
    pts
}

/// Exhaustive visibility check: every non-adjacent pair must be connectable
/// by a segment strictly above the chain, except pairs incident to the same
/// reflex chain, which must not be.
pub fn validate_almost_convex(chain: &AlmostConvexChain) -> Result<(), BuildError> {
    let pts = chain.points.points().expect("chains are exact");
    if pts.len() > 2 {
        validate_general_position(&chain.points)?;
    }
    for p in 0..pts.len() {
        for q in (p + 2)..pts.len() {
            let visible = (p + 1..q)
                .all(|m| orientation(&pts[p], &pts[q], &pts[m]) == -1);
            let expected = !chain.same_reflex_chain(p, q);
            if visible != expected {
                return Err(BuildError::VisibilityViolation { i: p, j: q, expected_visible: expected });
            }
        }
    }
    Ok(())
}

/// A generalized double chain: a lower chain arching up toward the middle
/// and an upper chain arching down, mutually visible.
#[derive(Clone, Debug)]
pub struct DoubleChain {
    pub points: PointSet,
    pub r: usize,
    pub k: usize,
    /// Points per chain.
    pub half: usize,
}

impl DoubleChain {
    pub fn n(&self) -> usize {
        2 * self.half
    }

    /// Lower-chain indices in x order.
    pub fn lower(&self) -> impl Iterator<Item = usize> {
        0..self.half
    }

    /// Upper-chain indices in x order.
    pub fn upper(&self) -> impl Iterator<Item = usize> + '_ {
        self.half..2 * self.half
    }

    /// The chain edges (consecutive along each chain).
    pub fn chain_edges(&self) -> Vec<Edge> {
        let mut edges = Vec::with_capacity(2 * (self.half - 1));
        for i in 0..self.half - 1 {
            edges.push(Edge::new(i, i + 1));
            edges.push(Edge::new(self.half + i, self.half + i + 1));
        }
        edges
    }

    /// Candidate diagonals of the middle region: all lower-upper pairs
    /// except the two closing boundary edges.
    pub fn middle_diagonals(&self) -> Vec<Edge> {
        let h = self.half;
        let mut out = Vec::new();
        for l in 0..h {
            for u in 0..h {
                if (l, u) == (0, 0) || (l, u) == (h - 1, h - 1) {
                    continue;
                }
                out.push(Edge::new(l, h + u));
            }
        }
        out
    }
}

/// Build and validate `D(n, k^r)` with `n = 2(r(k+1)+1)` points.
pub fn generalized_double_chain(spec: &ChainSpec) -> Result<DoubleChain, BuildError> {
    let base = almost_convex_chain(spec)?;
    let base_pts = base.points.points().expect("chains are exact");
    let h = base_pts.len();
    let w = (spec.r * (spec.k + 1)) as i64;
    // Chains span heights in [-W^2/4, ~0]; a gap above W^2 keeps every
    // cross segment steeper than any chain slope.
    let sep = BigRational::from_integer(BigInt::from(2 * w * w + 2));

    let mut pts = Vec::with_capacity(2 * h);
    for p in base_pts {
        pts.push(Point::new(p.x.clone(), -&p.y));
    }
    for p in base_pts {
        pts.push(Point::new(p.x.clone(), &p.y + &sep));
    }
    let dc = DoubleChain { points: PointSet::Exact(pts), r: spec.r, k: spec.k, half: h };
    validate_double_chain(&dc)?;
    Ok(dc)
}

fn validate_double_chain(dc: &DoubleChain) -> Result<(), BuildError> {
    validate_general_position(&dc.points)?;
    let chain_edges = dc.chain_edges();
    for l in dc.lower() {
        for u in dc.upper() {
            let seg = Edge::new(l, u);
            for &ce in &chain_edges {
                if seg.touches(ce) {
                    continue;
                }
                if segments_cross(seg, ce, &dc.points).map_err(BuildError::from)? {
                    return Err(BuildError::MutualVisibilityViolation { lower: l, upper: u });
                }
            }
        }
    }
    Ok(())
}

/// Triangulations of the forced middle region of a double chain, counted by
/// brute force: maximal sets of pairwise non-crossing middle diagonals,
/// with all chain edges present. Checks that every maximal set triangulates
/// the region (exactly `2m-3` diagonals, hence `2m-2` triangles).
pub fn middle_region_brute_count(dc: &DoubleChain) -> Result<u64, BuildError> {
    let cands = dc.middle_diagonals();
    let m = cands.len();
    assert!(m <= 127, "middle region brute force limited to small chains");
    let mut cross = alloc::vec![0u128; m];
    for a in 0..m {
        for b in (a + 1)..m {
            if segments_cross(cands[a], cands[b], &dc.points).map_err(BuildError::from)? {
                cross[a] |= 1u128 << b;
                cross[b] |= 1u128 << a;
            }
        }
    }
    let want_edges = 2 * dc.half - 3;
    let mut count = 0u64;
    let mut stack: Vec<(usize, u128, u128)> = alloc::vec![(0, 0, 0)];
    while let Some((idx, chosen, blocked)) = stack.pop() {
        if idx == m {
            // Keep only maximal sets: every unchosen diagonal is crossed.
            let maximal = (0..m).all(|d| chosen >> d & 1 == 1 || cross[d] & chosen != 0);
            if maximal {
                let sz = chosen.count_ones() as usize;
                assert_eq!(sz, want_edges, "maximal middle set must triangulate the region");
                count += 1;
            }
            continue;
        }
        let bit = 1u128 << idx;
        if blocked & bit != 0 {
            stack.push((idx + 1, chosen, blocked));
            continue;
        }
        // Include.
        stack.push((idx + 1, chosen | bit, blocked | cross[idx]));
        // Exclude: only if some later diagonal can still cross it.
        let future = if idx + 1 >= 128 { 0 } else { !0u128 << (idx + 1) };
        if cross[idx] & future & !blocked != 0 {
            stack.push((idx + 1, chosen, blocked));
        }
    }
    Ok(count)
}
