//! Exhaustive enumeration and counting of non-crossing graph classes on
//! small point sets, plus the closed-form counts used alongside them.
//!
//! Graphs are encoded as fixed-width bitmasks over the `C(n,2)` candidate
//! edges in lexicographic order, so the hard ceiling is `n = 16`
//! (`C(16,2) = 120 <= 128` bits). Enumeration is canonical-order
//! backtracking over candidate edges with crossing-table pruning and
//! class-specific feasibility pruning; triangulation counts can be
//! cross-checked independently through flip-graph traversal.

mod backtrack;
mod closed_forms;
mod flip;
mod support;

pub use backtrack::{count, count_shard, enumerate, enumerate_with, GraphClass, Limits};
pub use closed_forms::{bridge_type_count, chain_reduction_counts, middle_region_triangulation_count};
pub use flip::count_triangulations_flip;
pub use support::{support_identity_sum, support_table, SupportTable, SUPPORT_LIMIT};

use alloc::vec::Vec;
use core::fmt;

use crate::geometry::{segments_cross, Edge, GeometryError, PointSet};

/// Hard representation limit: `C(16,2) = 120` candidate edges fit a `u128`.
pub const MAX_POINTS: usize = 16;

/// Lexicographic index of edge `(i, j)`, `i < j`, among all `C(n,2)` pairs.
pub fn edge_index(n: usize, e: Edge) -> usize {
    e.i * n - e.i * (e.i + 1) / 2 + (e.j - e.i - 1)
}

/// Inverse of [`edge_index`].
pub fn edge_at(n: usize, mut idx: usize) -> Edge {
    for i in 0..n {
        let row = n - i - 1;
        if idx < row {
            return Edge { i, j: i + 1 + idx };
        }
        idx -= row;
    }
    panic!("edge index out of range");
}

pub fn num_edges(n: usize) -> usize {
    n * (n - 1) / 2
}

/// A graph on a fixed point set, as a bitmask over candidate edges.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeGraph {
    n: usize,
    mask: u128,
}

impl EdgeGraph {
    pub fn new(n: usize, mask: u128) -> Self {
        EdgeGraph { n, mask }
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Self {
        let mut mask = 0u128;
        for &e in edges {
            mask |= 1u128 << edge_index(n, e);
        }
        EdgeGraph { n, mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    pub fn edge_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.mask >> edge_index(self.n, e) & 1 == 1
    }

    /// Does this graph contain every edge of `other`?
    pub fn contains_all(&self, other: &EdgeGraph) -> bool {
        self.mask & other.mask == other.mask
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        let mut m = self.mask;
        while m != 0 {
            let idx = m.trailing_zeros() as usize;
            out.push(edge_at(self.n, idx));
            m &= m - 1;
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges().iter().filter(|e| e.i == v || e.j == v).count()
    }
}

impl fmt::Debug for EdgeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeGraph(n={}, {:?})", self.n, self.edges())
    }
}

/// Precomputed pairwise crossing relation over all candidate edges.
#[derive(Clone)]
pub struct CrossingTable {
    n: usize,
    /// `cross[e]` is the mask of edges whose open segment crosses edge `e`.
    cross: Vec<u128>,
}

impl CrossingTable {
    pub fn build(ps: &PointSet) -> Result<CrossingTable, GeometryError> {
        let n = ps.len();
        assert!(n <= MAX_POINTS, "crossing table limited to {MAX_POINTS} points");
        let m = num_edges(n);
        let mut cross = alloc::vec![0u128; m];
        for a in 0..m {
            let ea = edge_at(n, a);
            for b in (a + 1)..m {
                let eb = edge_at(n, b);
                if segments_cross(ea, eb, ps)? {
                    cross[a] |= 1u128 << b;
                    cross[b] |= 1u128 << a;
                }
            }
        }
        Ok(CrossingTable { n, cross })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crosses(&self, a: Edge, b: Edge) -> bool {
        self.cross[edge_index(self.n, a)] >> edge_index(self.n, b) & 1 == 1
    }

    pub(crate) fn mask(&self, idx: usize) -> u128 {
        self.cross[idx]
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EnumerationError {
    /// Point count exceeds the configured (or hard) limit.
    LimitExceeded { n: usize, limit: usize },
    /// Perfect matchings need an even number of points.
    OddPerfectMatching { n: usize },
    Geometry(GeometryError),
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationError::LimitExceeded { n, limit } => {
                write!(f, "{n} points exceed the enumeration limit of {limit}")
            }
            EnumerationError::OddPerfectMatching { n } => {
                write!(f, "no perfect matching on an odd number of points ({n})")
            }
            EnumerationError::Geometry(e) => write!(f, "{e}"),
        }
    }
}

impl From<GeometryError> for EnumerationError {
    fn from(e: GeometryError) -> Self {
        EnumerationError::Geometry(e)
    }
}
