//! Longest and shortest tours on points in convex position (crossings
//! allowed). Longest tours have a rigid combinatorial shape: for odd `n`
//! the unique tour steps by `(n-1)/2`; for even `n = 2k` there are `n/2`
//! candidates, each with two span-`k` edges and `n-2` span-`(k-1)` edges,
//! and consecutive candidates differ in just four edges, so the scan after
//! sorting into convex order is linear.

use alloc::vec::Vec;
use core::fmt;

use crate::decimal::Dec;
use crate::enumeration::EdgeGraph;
use crate::geometry::{
    convex_cyclic_order, edge_span, segments_cross, Edge, GeometryError, PointSet,
};
use crate::weighted::{WeightError, WeightModel};

#[derive(Clone, Debug)]
pub struct Tour {
    /// Cyclic vertex sequence in original point indices, canonicalized to
    /// start at its smallest vertex with the smaller neighbor second.
    pub order: Vec<usize>,
    pub weight: Dec,
    /// Sorted span multiset (spans taken in the convex cyclic order).
    pub spans: Vec<usize>,
}

impl Tour {
    pub fn edge_graph(&self) -> EdgeGraph {
        let n = self.order.len();
        let edges: Vec<Edge> = (0..n)
            .map(|i| Edge::new(self.order[i], self.order[(i + 1) % n]))
            .collect();
        EdgeGraph::from_edges(n, &edges)
    }
}

/// One entry of the even-`n` candidate table.
#[derive(Clone, Debug)]
pub struct TourCandidate {
    /// Rotation offset `s` in convex ring coordinates; the two long edges
    /// are `(s, s+k)` and `(s+1, s+k+1)`.
    pub offset: usize,
    pub weight: Dec,
    pub order: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct LongestTours {
    /// All tours tying the maximum weight (within theta).
    pub tours: Vec<Tour>,
    /// The full candidate table (a single entry for odd `n`).
    pub candidates: Vec<TourCandidate>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TourError {
    Geometry(GeometryError),
    Weight(WeightError),
    TooFewPoints { have: usize },
}

impl fmt::Display for TourError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TourError::Geometry(e) => write!(f, "{e}"),
            TourError::Weight(e) => write!(f, "{e}"),
            TourError::TooFewPoints { have } => write!(f, "a tour needs 3 points, have {have}"),
        }
    }
}

impl From<GeometryError> for TourError {
    fn from(e: GeometryError) -> Self {
        TourError::Geometry(e)
    }
}

impl From<WeightError> for TourError {
    fn from(e: WeightError) -> Self {
        TourError::Weight(e)
    }
}

/// Canonical form of a cyclic sequence: rotate to the smallest element,
/// orient so the second element is smaller than the last.
pub fn canonical_cycle(order: &[usize]) -> Vec<usize> {
    let n = order.len();
    let start = (0..n).min_by_key(|&i| order[i]).expect("nonempty cycle");
    let mut out: Vec<usize> = (0..n).map(|i| order[(start + i) % n]).collect();
    if out[1] > out[n - 1] {
        out[1..].reverse();
    }
    out
}

fn ring_weight(model: &WeightModel, ring: &[usize], seq: &[usize]) -> (Dec, Vec<usize>, Vec<usize>) {
    let n = seq.len();
    let order: Vec<usize> = seq.iter().map(|&i| ring[i]).collect();
    let mut spans: Vec<usize> = (0..n)
        .map(|i| {
            let a = seq[i];
            let b = seq[(i + 1) % n];
            edge_span(n, Edge::new(a, b))
        })
        .collect();
    spans.sort_unstable();
    let weight = model.weight_of_cycle(&order);
    (weight, canonical_cycle(&order), spans)
}

/// All longest tours (crossings allowed) of a convex-position point set,
/// plus the candidate table. `O(n log n)` including the convex sort.
pub fn longest_convex_tours(ps: &PointSet, model: &WeightModel) -> Result<LongestTours, TourError> {
    let n = ps.len();
    if n < 3 {
        return Err(TourError::TooFewPoints { have: n });
    }
    if model.n() != n {
        return Err(TourError::Weight(WeightError::ModelMismatch { model_n: model.n(), ps_n: n }));
    }
    let ring = convex_cyclic_order(ps)?;

    if n % 2 == 1 {
        // Unique longest tour: step by (n-1)/2 around the ring.
        let step = (n - 1) / 2;
        let mut seq = Vec::with_capacity(n);
        let mut at = 0;
        for _ in 0..n {
            seq.push(at);
            at = (at + step) % n;
        }
        let (weight, order, spans) = ring_weight(model, &ring, &seq);
        let candidate = TourCandidate { offset: 0, weight: weight.clone(), order: order.clone() };
        return Ok(LongestTours {
            tours: alloc::vec![Tour { order, weight, spans }],
            candidates: alloc::vec![candidate],
        });
    }

    let k = n / 2;
    // Candidate s uses all span-(k-1) edges except (s+1, s+k) and
    // (s, s+k+1), plus the span-k pair (s, s+k), (s+1, s+k+1). Its weight
    // follows from the previous candidate by a four-edge exchange; here
    // that is folded into one O(1) expression per candidate.
    let long = |a: usize| model.edge_weight(Edge::new(ring[a % n], ring[(a + k) % n])).clone();
    let short = |a: usize| {
        model
            .edge_weight(Edge::new(ring[a % n], ring[(a + k - 1) % n]))
            .clone()
    };
    let mut short_total = Dec::zero(model.scale());
    for i in 0..n {
        short_total += model.edge_weight(Edge::new(ring[i], ring[(i + k - 1) % n]));
    }

    let mut candidates = Vec::with_capacity(k);
    let mut best: Option<Dec> = None;
    for s in 0..k {
        // Dropped: the span-(k-1) edges (s+1, s+k) and (s+k+1, s).
        let weight = &(&(&short_total - &short(s + 1)) - &short(s + k + 1))
            + &(&long(s) + &long(s + 1));
        let mut seq = Vec::with_capacity(n);
        let mut a = (s + (k - 1) * (k - 1)) % n; // a_k = s + (k-1)(k-1)
        for _ in 0..k {
            seq.push(a);
            a = (a + n - (k - 1)) % n;
        }
        let mut b = (s + k) % n;
        for _ in 0..k {
            seq.push(b);
            b = (b + k - 1) % n;
        }
        debug_assert!(is_permutation(&seq));
        let order: Vec<usize> = seq.iter().map(|&i| ring[i]).collect();
        let order = canonical_cycle(&order);
        debug_assert_eq!(model.weight_of_cycle(&order), weight);
        if best.as_ref().is_none_or(|b| weight > *b) {
            best = Some(weight.clone());
        }
        candidates.push(TourCandidate { offset: s, weight, order });
    }
    let best = best.expect("at least one candidate");
    let tours = candidates
        .iter()
        .filter(|c| model.nearly_equal(&c.weight, &best))
        .map(|c| {
            let mut spans: Vec<usize> = Vec::with_capacity(n);
            let pos: Vec<usize> = {
                let mut p = alloc::vec![0usize; n];
                for (ring_pos, &orig) in ring.iter().enumerate() {
                    p[orig] = ring_pos;
                }
                p
            };
            for i in 0..n {
                let a = pos[c.order[i]];
                let b = pos[c.order[(i + 1) % n]];
                spans.push(edge_span(n, Edge::new(a, b)));
            }
            spans.sort_unstable();
            Tour { order: c.order.clone(), weight: c.weight.clone(), spans }
        })
        .collect();
    Ok(LongestTours { tours, candidates })
}

fn is_permutation(seq: &[usize]) -> bool {
    let mut seen = alloc::vec![false; seq.len()];
    for &v in seq {
        if v >= seq.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// The unique shortest tour of a convex-position point set: the hull cycle.
pub fn shortest_convex_tour(ps: &PointSet, model: &WeightModel) -> Result<Tour, TourError> {
    let n = ps.len();
    if n < 3 {
        return Err(TourError::TooFewPoints { have: n });
    }
    if model.n() != n {
        return Err(TourError::Weight(WeightError::ModelMismatch { model_n: model.n(), ps_n: n }));
    }
    let ring = convex_cyclic_order(ps)?;
    let order = canonical_cycle(&ring);
    let weight = model.weight_of_cycle(&order);
    Ok(Tour { order, weight, spans: alloc::vec![1; n] })
}

/// Is the tour a thrackle: does every pair of its edges cross or share an
/// endpoint?
pub fn is_thrackle(order: &[usize], ps: &PointSet) -> Result<bool, TourError> {
    let n = order.len();
    let edges: Vec<Edge> = (0..n)
        .map(|i| Edge::new(order[i], order[(i + 1) % n]))
        .collect();
    for (x, &a) in edges.iter().enumerate() {
        for &b in edges.iter().skip(x + 1) {
            if a.touches(b) {
                continue;
            }
            if !segments_cross(a, b, ps)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
