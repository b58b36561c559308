//! Canonical-order backtracking over candidate edges.
//!
//! Edges are decided in lexicographic index order, exclusion explored
//! before inclusion, so both `enumerate` and `count` are deterministic:
//! graphs stream in lexicographic order of their membership vector, lowest
//! edge index most significant. Counting never materializes graphs and can
//! shard the search tree on the first decision levels.

use alloc::vec::Vec;
use num_bigint::BigUint;

use super::{edge_at, num_edges, CrossingTable, EdgeGraph, EnumerationError, MAX_POINTS};
use crate::geometry::PointSet;

/// Enumeration selector for the non-crossing graph classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphClass {
    /// Every non-crossing graph, including the empty one.
    AllPlane,
    /// Cycle-free non-crossing graphs (spanning is not required).
    Forest,
    PerfectMatching,
    SpanningTree,
    SpanningCycle,
    /// Maximal non-crossing edge sets; for points in general position these
    /// are exactly the triangulations of the point set.
    Triangulation,
}

impl GraphClass {
    pub const ALL: [GraphClass; 6] = [
        GraphClass::AllPlane,
        GraphClass::Forest,
        GraphClass::PerfectMatching,
        GraphClass::SpanningTree,
        GraphClass::SpanningCycle,
        GraphClass::Triangulation,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GraphClass::AllPlane => "all-plane",
            GraphClass::Forest => "forest",
            GraphClass::PerfectMatching => "perfect-matching",
            GraphClass::SpanningTree => "spanning-tree",
            GraphClass::SpanningCycle => "spanning-cycle",
            GraphClass::Triangulation => "triangulation",
        }
    }
}

/// Size caps for exhaustive enumeration.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub general: usize,
    pub triangulation: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { general: 14, triangulation: 16 }
    }
}

impl Limits {
    /// A single cap applied to every class (still clamped to the hard
    /// representation limit).
    pub fn uniform(n: usize) -> Self {
        Limits { general: n.min(MAX_POINTS), triangulation: n.min(MAX_POINTS) }
    }

    fn check(&self, n: usize, class: GraphClass) -> Result<(), EnumerationError> {
        let limit = match class {
            GraphClass::Triangulation => self.triangulation.min(MAX_POINTS),
            _ => self.general.min(MAX_POINTS),
        };
        if n > limit {
            return Err(EnumerationError::LimitExceeded { n, limit });
        }
        Ok(())
    }
}

/// Union-find with union by size and no path compression, so that unions
/// can be rolled back in reverse order.
struct UnionFind {
    parent: [u8; MAX_POINTS],
    size: [u8; MAX_POINTS],
}

impl UnionFind {
    fn new(n: usize) -> Self {
        let mut parent = [0u8; MAX_POINTS];
        for (v, p) in parent.iter_mut().enumerate().take(n) {
            *p = v as u8;
        }
        UnionFind { parent, size: [1; MAX_POINTS] }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] as usize != v {
            v = self.parent[v] as usize;
        }
        v
    }

    /// Union the components of `a` and `b`; returns the child root that was
    /// re-parented (needed for rollback), or `None` if already joined.
    fn union(&mut self, a: usize, b: usize) -> Option<usize> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big as u8;
        self.size[big] += self.size[small];
        Some(small)
    }

    fn undo(&mut self, child: usize) {
        let big = self.parent[child] as usize;
        self.size[big] -= self.size[child];
        self.parent[child] = child as u8;
    }
}

struct Search<'a, F: FnMut(u128)> {
    table: &'a CrossingTable,
    n: usize,
    m: usize,
    class: GraphClass,
    target: Option<usize>,
    included: u128,
    included_count: usize,
    /// Union of crossing masks of all included edges.
    blocked: u128,
    /// Excluded edges not yet crossed by an included edge (triangulations).
    obligations: u128,
    degrees: [u8; MAX_POINTS],
    uf: UnionFind,
    /// Number of leading decision levels fixed by a shard, and the plan.
    shard_bits: usize,
    shard_id: u64,
    sink: F,
}

impl<'a, F: FnMut(u128)> Search<'a, F> {
    fn new(table: &'a CrossingTable, class: GraphClass, sink: F) -> Self {
        let n = table.n();
        let target = match class {
            GraphClass::PerfectMatching => Some(n / 2),
            GraphClass::SpanningTree => Some(n.saturating_sub(1)),
            GraphClass::SpanningCycle => Some(n),
            _ => None,
        };
        Search {
            table,
            n,
            m: num_edges(n),
            class,
            target,
            included: 0,
            included_count: 0,
            blocked: 0,
            obligations: 0,
            degrees: [0; MAX_POINTS],
            uf: UnionFind::new(n),
            shard_bits: 0,
            shard_id: 0,
            sink,
        }
    }

    fn future_mask(&self, idx: usize) -> u128 {
        if idx + 1 >= 128 {
            0
        } else {
            !0u128 << (idx + 1)
        }
    }

    /// Required final degree of a vertex, when a class pins one.
    fn needs_degree(&self) -> Option<u8> {
        match self.class {
            GraphClass::PerfectMatching => Some(1),
            GraphClass::SpanningCycle => Some(2),
            // A spanning tree only needs degree >= 1; encoded separately.
            _ => None,
        }
    }

    fn complete(&self) -> bool {
        match self.class {
            GraphClass::AllPlane | GraphClass::Forest => true,
            GraphClass::Triangulation => self.obligations == 0,
            _ => self.included_count == self.target.unwrap(),
        }
    }

    fn rec(&mut self, idx: usize) {
        if idx == self.m {
            if self.complete() {
                (self.sink)(self.included);
            }
            return;
        }

        // Vertex-finalization prune: once the search moves to edge row `i`,
        // every edge incident to vertices < i has been decided.
        let e = edge_at(self.n, idx);
        if e.j == e.i + 1 && e.i > 0 {
            let v = e.i - 1;
            let d = self.degrees[v];
            if let Some(need) = self.needs_degree() {
                if d != need {
                    return;
                }
            }
            if self.class == GraphClass::SpanningTree && d == 0 {
                return;
            }
        }

        // Not enough candidates left to reach the target size.
        if let Some(t) = self.target {
            if t - self.included_count > self.m - idx {
                return;
            }
        }

        let bit = 1u128 << idx;
        let crossed = self.blocked & bit != 0;

        // Exclusion branch (canonical order: exclusion first). An edge
        // already crossed by the included set is excluded for free.
        if crossed {
            self.rec(idx + 1);
        } else if self.class == GraphClass::Triangulation {
            // Excluding a compatible edge creates the obligation that some
            // future compatible edge crosses it.
            if self.table.mask(idx) & self.future_mask(idx) & !self.blocked != 0 {
                self.obligations |= bit;
                self.rec(idx + 1);
                self.obligations &= !bit;
            }
        } else {
            self.rec(idx + 1);
        }

        // Inclusion branch.
        if !crossed && self.can_include(idx, e) {
            let saved_obligations = self.obligations;
            let saved_blocked = self.blocked;
            self.included |= bit;
            self.included_count += 1;
            self.blocked |= self.table.mask(idx);
            self.degrees[e.i] += 1;
            self.degrees[e.j] += 1;
            let joined = match self.class {
                GraphClass::Forest | GraphClass::SpanningTree | GraphClass::SpanningCycle => {
                    self.uf.union(e.i, e.j)
                }
                _ => None,
            };
            if self.class == GraphClass::Triangulation {
                self.obligations &= !self.table.mask(idx);
            }
            if self.include_still_viable(idx) {
                self.rec(idx + 1);
            }
            if let Some(child) = joined {
                self.uf.undo(child);
            }
            self.degrees[e.i] -= 1;
            self.degrees[e.j] -= 1;
            self.blocked = saved_blocked;
            self.included_count -= 1;
            self.included &= !bit;
            self.obligations = saved_obligations;
        }
    }

    fn can_include(&self, _idx: usize, e: crate::geometry::Edge) -> bool {
        match self.class {
            GraphClass::AllPlane | GraphClass::Triangulation => true,
            GraphClass::Forest => self.uf.find(e.i) != self.uf.find(e.j),
            GraphClass::SpanningTree => {
                self.included_count < self.target.unwrap()
                    && self.uf.find(e.i) != self.uf.find(e.j)
            }
            GraphClass::PerfectMatching => {
                self.included_count < self.target.unwrap()
                    && self.degrees[e.i] == 0
                    && self.degrees[e.j] == 0
            }
            GraphClass::SpanningCycle => {
                if self.included_count >= self.target.unwrap()
                    || self.degrees[e.i] >= 2
                    || self.degrees[e.j] >= 2
                {
                    return false;
                }
                // Joining two ends of the same path is only the final,
                // cycle-closing edge.
                self.uf.find(e.i) != self.uf.find(e.j)
                    || self.included_count == self.target.unwrap() - 1
            }
        }
    }

    /// After an inclusion, every open obligation must still have a
    /// potential future crosser compatible with the included set.
    fn include_still_viable(&self, idx: usize) -> bool {
        if self.class != GraphClass::Triangulation || self.obligations == 0 {
            return true;
        }
        let future = self.future_mask(idx) & !self.blocked;
        let mut o = self.obligations;
        while o != 0 {
            let ob = o.trailing_zeros() as usize;
            if self.table.mask(ob) & future == 0 {
                return false;
            }
            o &= o - 1;
        }
        true
    }

    /// Walk only the shard whose first `shard_bits` edge decisions follow
    /// `shard_id` (bit k of the id decides edge k: 0 exclude, 1 include).
    /// Edges forced out by a crossing only match the 0 decision.
    fn rec_sharded(&mut self, idx: usize) {
        if idx >= self.shard_bits || idx == self.m {
            self.rec(idx);
            return;
        }
        let e = edge_at(self.n, idx);
        if e.j == e.i + 1 && e.i > 0 {
            let v = e.i - 1;
            let d = self.degrees[v];
            if let Some(need) = self.needs_degree() {
                if d != need {
                    return;
                }
            }
            if self.class == GraphClass::SpanningTree && d == 0 {
                return;
            }
        }
        let bit = 1u128 << idx;
        let crossed = self.blocked & bit != 0;
        let include = self.shard_id >> idx & 1 == 1;
        if !include {
            if crossed {
                self.rec_sharded(idx + 1);
            } else if self.class == GraphClass::Triangulation {
                if self.table.mask(idx) & self.future_mask(idx) & !self.blocked != 0 {
                    self.obligations |= bit;
                    self.rec_sharded(idx + 1);
                    self.obligations &= !bit;
                }
            } else {
                self.rec_sharded(idx + 1);
            }
        } else if !crossed && self.can_include(idx, e) {
            let saved_obligations = self.obligations;
            self.included |= bit;
            self.included_count += 1;
            let saved_blocked = self.blocked;
            self.blocked |= self.table.mask(idx);
            self.degrees[e.i] += 1;
            self.degrees[e.j] += 1;
            let joined = match self.class {
                GraphClass::Forest | GraphClass::SpanningTree | GraphClass::SpanningCycle => {
                    self.uf.union(e.i, e.j)
                }
                _ => None,
            };
            if self.class == GraphClass::Triangulation {
                self.obligations &= !self.table.mask(idx);
            }
            if self.include_still_viable(idx) {
                self.rec_sharded(idx + 1);
            }
            if let Some(child) = joined {
                self.uf.undo(child);
            }
            self.degrees[e.i] -= 1;
            self.degrees[e.j] -= 1;
            self.blocked = saved_blocked;
            self.included_count -= 1;
            self.included &= !bit;
            self.obligations = saved_obligations;
        }
    }
}

fn precheck(ps: &PointSet, class: GraphClass, limits: Limits) -> Result<(), EnumerationError> {
    let n = ps.len();
    limits.check(n, class)?;
    if class == GraphClass::PerfectMatching && n % 2 == 1 {
        return Err(EnumerationError::OddPerfectMatching { n });
    }
    Ok(())
}

/// Stream every graph of the class exactly once, in canonical (ascending
/// bitmask) order.
pub fn enumerate_with(
    ps: &PointSet,
    class: GraphClass,
    limits: Limits,
    mut visit: impl FnMut(EdgeGraph),
) -> Result<(), EnumerationError> {
    precheck(ps, class, limits)?;
    let table = CrossingTable::build(ps)?;
    let n = ps.len();
    let mut search = Search::new(&table, class, |mask| visit(EdgeGraph::new(n, mask)));
    search.rec(0);
    Ok(())
}

/// Materialized variant of [`enumerate_with`], for small instances.
pub fn enumerate(
    ps: &PointSet,
    class: GraphClass,
    limits: Limits,
) -> Result<Vec<EdgeGraph>, EnumerationError> {
    let mut out = Vec::new();
    enumerate_with(ps, class, limits, |g| out.push(g))?;
    Ok(out)
}

/// Count the class without materializing graphs.
pub fn count(ps: &PointSet, class: GraphClass, limits: Limits) -> Result<BigUint, EnumerationError> {
    precheck(ps, class, limits)?;
    let table = CrossingTable::build(ps)?;
    let mut total: u128 = 0;
    let mut search = Search::new(&table, class, |_| total += 1);
    search.rec(0);
    Ok(BigUint::from(total))
}

/// Count one shard of the search tree. The `2^shard_bits` shards are
/// disjoint by construction and their counts sum to the full count, for any
/// assignment of shards to workers.
pub fn count_shard(
    ps: &PointSet,
    class: GraphClass,
    limits: Limits,
    shard_bits: usize,
    shard_id: u64,
) -> Result<BigUint, EnumerationError> {
    precheck(ps, class, limits)?;
    assert!(shard_bits < 64, "at most 63 shard bits");
    assert!(u128::from(shard_id) < 1u128 << shard_bits, "shard id out of range");
    let table = CrossingTable::build(ps)?;
    let mut total: u128 = 0;
    let mut search = Search::new(&table, class, |_| total += 1);
    search.shard_bits = shard_bits.min(search.m);
    search.shard_id = shard_id;
    search.rec_sharded(0);
    Ok(BigUint::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Edge, Point};
    use alloc::vec;

    fn convex(n: usize) -> PointSet {
        PointSet::AbstractConvex(n)
    }

    #[test]
    fn convex4_matchings() {
        let graphs = enumerate(&convex(4), GraphClass::PerfectMatching, Limits::default()).unwrap();
        assert_eq!(graphs.len(), 2);
        for g in &graphs {
            assert_eq!(g.edge_count(), 2);
        }
        // The two hull pairings; the diagonal pairing crosses. Exclusion is
        // explored first, so the pairing avoiding edge (0,1) streams first.
        assert!(graphs[0].contains(Edge::new(0, 3)) && graphs[0].contains(Edge::new(1, 2)));
        assert!(graphs[1].contains(Edge::new(0, 1)) && graphs[1].contains(Edge::new(2, 3)));
    }

    #[test]
    fn odd_matching_rejected() {
        assert_eq!(
            count(&convex(5), GraphClass::PerfectMatching, Limits::default()),
            Err(EnumerationError::OddPerfectMatching { n: 5 })
        );
    }

    #[test]
    fn limit_enforced() {
        let err = count(&convex(15), GraphClass::SpanningTree, Limits::default());
        assert_eq!(err, Err(EnumerationError::LimitExceeded { n: 15, limit: 14 }));
        assert!(count(&convex(15), GraphClass::Triangulation, Limits::default()).is_ok());
    }

    #[test]
    fn convex4_spanning_trees() {
        // 16 labeled trees on 4 vertices, minus the 4 that use both diagonals.
        let graphs = enumerate(&convex(4), GraphClass::SpanningTree, Limits::default()).unwrap();
        assert_eq!(graphs.len(), 12);
    }

    #[test]
    fn convex5_triangulations() {
        let graphs = enumerate(&convex(5), GraphClass::Triangulation, Limits::default()).unwrap();
        assert_eq!(graphs.len(), 5);
        for g in &graphs {
            // 2n - 3 edges for a convex polygon triangulation.
            assert_eq!(g.edge_count(), 7);
        }
    }

    #[test]
    fn spanning_cycle_on_convex_is_hull() {
        for n in 3..=8 {
            let graphs = enumerate(&convex(n), GraphClass::SpanningCycle, Limits::default()).unwrap();
            assert_eq!(graphs.len(), 1, "n={n}");
            let hull: Vec<Edge> = (0..n).map(|i| Edge::new(i, (i + 1) % n)).collect();
            assert_eq!(graphs[0], EdgeGraph::from_edges(n, &hull));
        }
    }

    #[test]
    fn count_matches_enumerate_stream_length() {
        let pts = vec![
            Point::from_ints(0, 0),
            Point::from_ints(9, 2),
            Point::from_ints(7, 8),
            Point::from_ints(2, 7),
            Point::from_ints(4, 3),
            Point::from_ints(6, 5),
            Point::from_ints(1, 4),
        ];
        let ps = PointSet::Exact(pts);
        for class in GraphClass::ALL {
            if class == GraphClass::PerfectMatching {
                continue; // odd n
            }
            let c = count(&ps, class, Limits::default()).unwrap();
            let e = enumerate(&ps, class, Limits::default()).unwrap();
            assert_eq!(c, BigUint::from(e.len()), "{class:?}");
            // Deterministic stream without duplicates.
            let distinct: alloc::collections::BTreeSet<u128> =
                e.iter().map(|g| g.mask()).collect();
            assert_eq!(distinct.len(), e.len(), "{class:?}");
            assert_eq!(enumerate(&ps, class, Limits::default()).unwrap(), e);
        }
    }

    #[test]
    fn brute_force_subset_oracle() {
        // Independent check of every class on small sets: filter all 2^C(n,2)
        // edge subsets by the definitions directly.
        let sets = [
            PointSet::AbstractConvex(5),
            PointSet::Exact(vec![
                Point::from_ints(0, 0),
                Point::from_ints(6, 1),
                Point::from_ints(5, 5),
                Point::from_ints(1, 6),
                Point::from_ints(3, 3),
            ]),
            PointSet::Exact(vec![
                Point::from_ints(0, 0),
                Point::from_ints(8, 1),
                Point::from_ints(7, 7),
                Point::from_ints(2, 6),
                Point::from_ints(4, 2),
                Point::from_ints(5, 4),
            ]),
        ];
        for ps in &sets {
            let n = ps.len();
            let m = num_edges(n);
            let table = CrossingTable::build(ps).unwrap();
            let mut by_class: [Vec<u128>; 6] = Default::default();
            for mask in 0u128..(1u128 << m) {
                if !noncrossing(&table, n, mask) {
                    continue;
                }
                let g = EdgeGraph::new(n, mask);
                by_class[0].push(mask);
                if is_acyclic(n, &g) {
                    by_class[1].push(mask);
                    if g.edge_count() == n - 1 && is_connected(n, &g) {
                        by_class[3].push(mask);
                    }
                }
                if n % 2 == 0 && g.edge_count() == n / 2 && (0..n).all(|v| g.degree(v) == 1) {
                    by_class[2].push(mask);
                }
                if g.edge_count() == n
                    && (0..n).all(|v| g.degree(v) == 2)
                    && is_connected(n, &g)
                {
                    by_class[4].push(mask);
                }
                if maximal(&table, m, mask) {
                    by_class[5].push(mask);
                }
            }
            for (ci, class) in GraphClass::ALL.into_iter().enumerate() {
                if class == GraphClass::PerfectMatching && n % 2 == 1 {
                    continue;
                }
                let mut got: Vec<u128> = enumerate(ps, class, Limits::default())
                    .unwrap()
                    .iter()
                    .map(|g| g.mask())
                    .collect();
                got.sort_unstable();
                assert_eq!(got, by_class[ci], "class {class:?} on n={n}");
            }
        }
    }

    fn noncrossing(table: &CrossingTable, n: usize, mask: u128) -> bool {
        let mut m = mask;
        while m != 0 {
            let idx = m.trailing_zeros() as usize;
            if table.mask(idx) & mask != 0 {
                return false;
            }
            m &= m - 1;
        }
        let _ = n;
        true
    }

    fn is_acyclic(n: usize, g: &EdgeGraph) -> bool {
        let mut uf = UnionFind::new(n);
        for e in g.edges() {
            if uf.union(e.i, e.j).is_none() {
                return false;
            }
        }
        true
    }

    fn is_connected(n: usize, g: &EdgeGraph) -> bool {
        let mut uf = UnionFind::new(n);
        for e in g.edges() {
            uf.union(e.i, e.j);
        }
        (1..n).all(|v| uf.find(v) == uf.find(0))
    }

    fn maximal(table: &CrossingTable, m: usize, mask: u128) -> bool {
        for idx in 0..m {
            if mask >> idx & 1 == 0 && table.mask(idx) & mask == 0 {
                return false;
            }
        }
        true
    }

    #[test]
    fn shards_partition_the_count() {
        let ps = convex(8);
        for class in [GraphClass::SpanningTree, GraphClass::Triangulation, GraphClass::Forest] {
            let full = count(&ps, class, Limits::default()).unwrap();
            for bits in [0usize, 1, 3, 5] {
                let mut sum = BigUint::from(0u32);
                for id in 0..(1u64 << bits) {
                    sum += count_shard(&ps, class, Limits::default(), bits, id).unwrap();
                }
                assert_eq!(sum, full, "class {class:?} bits {bits}");
            }
        }
    }
}
