//! Entropy-based growth-rate objectives for counts of non-crossing graph
//! classes on the chain constructions, and the numeric optimization that
//! recovers the exponential bases from them.
//!
//! All rates are per-point exponential bases (polynomial factors dropped
//! throughout). Logarithms are base 2.

mod objectives;
mod optimize;
pub mod seeds;

pub use objectives::{
    cf_lower_objective, dc_upper_bound, sc_optimum, sc_upper_rate, st_lower_objective,
    tri_growth_rate, tri_lower_objective, DcUpperBoundReport, ScUpperBoundReport,
    CHAIN_FOREST_BASE, CHAIN_TREE_BASE,
};
pub use optimize::{optimize, BoundObjective, BoundReport};

use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Debug)]
pub enum BoundError {
    /// An argument is outside its mathematical domain.
    Domain(&'static str),
    /// The order parameter (k or z) is outside the supported range.
    Order { got: usize, max: usize },
    /// Constraint violation when building a parameter point.
    Constraint(&'static str),
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundError::Domain(s) => write!(f, "domain violation: {s}"),
            BoundError::Order { got, max } => {
                write!(f, "order parameter {got} out of range (max {max})")
            }
            BoundError::Constraint(s) => write!(f, "constraint violation: {s}"),
        }
    }
}

/// Tolerance for the simplex / positivity invariants of parameter points.
pub const CONSTRAINT_TOL: f64 = 1e-12;

/// A point on the probability simplex: entries sum to 1, all nonnegative.
#[derive(Clone, Debug)]
pub struct AlphaVector(Vec<f64>);

impl AlphaVector {
    pub fn new(values: Vec<f64>) -> Result<Self, BoundError> {
        if values.is_empty() {
            return Err(BoundError::Constraint("empty vector"));
        }
        if values.iter().any(|&v| !(v >= -CONSTRAINT_TOL)) {
            return Err(BoundError::Constraint("negative entry"));
        }
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(BoundError::Constraint("entries must sum to 1"));
        }
        Ok(AlphaVector(values))
    }

    /// Build from the free entries `alpha_1..alpha_k`, deriving
    /// `alpha_0 = 1 - sum`.
    pub fn from_tail(tail: &[f64]) -> Result<Self, BoundError> {
        let sum: f64 = tail.iter().sum();
        let mut v = Vec::with_capacity(tail.len() + 1);
        v.push(1.0 - sum);
        v.extend_from_slice(tail);
        Self::new(v)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Symmetric bridge-fraction matrix, upper-triangular storage
/// (`alpha[i][j]` for `1 <= i <= j <= z`, row-major).
#[derive(Clone, Debug)]
pub struct AlphaMatrix {
    z: usize,
    upper: Vec<f64>,
}

impl AlphaMatrix {
    pub fn new(z: usize, upper: Vec<f64>) -> Result<Self, BoundError> {
        if z == 0 {
            return Err(BoundError::Constraint("order z must be positive"));
        }
        if upper.len() != z * (z + 1) / 2 {
            return Err(BoundError::Constraint("wrong number of upper-triangular entries"));
        }
        if upper.iter().any(|&v| !(v >= -CONSTRAINT_TOL)) {
            return Err(BoundError::Constraint("negative entry"));
        }
        let m = AlphaMatrix { z, upper };
        let load = m.bridge_vertex_fraction();
        if !(load > 0.0) {
            return Err(BoundError::Constraint("no bridges: alpha_L must be positive"));
        }
        if load >= 1.0 {
            return Err(BoundError::Constraint("alpha_L must stay below 1"));
        }
        if m.tree_vertex_fraction() < 0.0 {
            return Err(BoundError::Constraint("bridges consume more vertices than the chain has"));
        }
        Ok(m)
    }

    pub fn z(&self) -> usize {
        self.z
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    fn upper_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= j && j <= self.z);
        (i - 1) * (self.z + 1) - i * (i - 1) / 2 + (j - i)
    }

    /// Full-matrix entry (mirrored below the diagonal).
    pub fn at(&self, i: usize, j: usize) -> f64 {
        if i <= j {
            self.upper[self.upper_index(i, j)]
        } else {
            self.upper[self.upper_index(j, i)]
        }
    }

    /// `alpha_L = sum_k k * alpha_{k*}` over the full matrix (equal to
    /// `alpha_U` by symmetry): fraction of chain vertices used by bridges.
    pub fn bridge_vertex_fraction(&self) -> f64 {
        let mut s = 0.0;
        for i in 1..=self.z {
            for j in 1..=self.z {
                s += i as f64 * self.at(i, j);
            }
        }
        s
    }

    /// `n_L / m = 1 - sum_k (2k-1)/2 * alpha_{k*}`: fraction of chain
    /// vertices left for the chain tree (bridges keep one representative).
    pub fn tree_vertex_fraction(&self) -> f64 {
        let mut s = 0.0;
        for i in 1..=self.z {
            for j in 1..=self.z {
                s += (2 * i - 1) as f64 / 2.0 * self.at(i, j);
            }
        }
        1.0 - s
    }
}

/// Binary entropy in bits, with `0 log 0 = 0`.
pub fn entropy(q: f64) -> Result<f64, BoundError> {
    if !(0.0..=1.0).contains(&q) {
        return Err(BoundError::Domain("entropy argument must lie in [0, 1]"));
    }
    Ok(h(q))
}

pub(crate) fn h(q: f64) -> f64 {
    plogp(q) + plogp(1.0 - q)
}

fn plogp(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        -p * p.log2()
    }
}

/// Generalized entropy `-sum alpha_i log2 alpha_i` of a simplex point.
pub fn gen_entropy(alpha: &AlphaVector) -> f64 {
    alpha.values().iter().map(|&p| plogp(p)).sum()
}

pub(crate) fn entropy_of_parts(parts: impl Iterator<Item = f64>) -> f64 {
    parts.map(plogp).sum()
}
