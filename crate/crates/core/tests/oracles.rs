//! Cross-module oracles: independent routes to the same quantity must
//! agree exactly.

use num_bigint::BigUint;

use multiplicity_core::combinat::catalan;
use multiplicity_core::constructions::{
    convex_polygon, deltoid_tour_gadget, generalized_double_chain, hexagon_tour_gadget,
    middle_region_brute_count, rotated_triangle_gadget, s4_matching_gadget, ChainSpec, GadgetSpec,
};
use multiplicity_core::decimal::Dec;
use multiplicity_core::enumeration::{
    count, count_triangulations_flip, enumerate, middle_region_triangulation_count, CrossingTable,
    EdgeGraph, GraphClass, Limits,
};
use multiplicity_core::geometry::{convex_hull, segments_cross, Edge, PointSet};
use multiplicity_core::sampling::{random_convex_polygon, random_general_position};
use multiplicity_core::weighted::{
    all_matchings, all_tours, extremal_multiplicity, verify_star_tree_weight, CrossingPolicy,
    Objective, WeightModel,
};

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn double_chain_triangulations_factor_exactly() {
    // Every chain edge is uncrossable, so triangulations decompose into
    // the two convex pockets times the middle region:
    // t(D(2m, 0^(m-1))) = C_{m-2}^2 * C(2m-2, m-1).
    for m in 3..=5usize {
        let dc = generalized_double_chain(&ChainSpec::new(m - 1, 0)).unwrap();
        let total = count(&dc.points, GraphClass::Triangulation, limits()).unwrap();
        let pocket = catalan(m as u64 - 2);
        let want = &pocket * &pocket * middle_region_triangulation_count(m);
        assert_eq!(total, want, "m={m}");
        // And the flip-graph traversal agrees with the backtracking count.
        let flip = count_triangulations_flip(&dc.points).unwrap();
        assert_eq!(flip, total, "m={m}");
    }
}

#[test]
fn middle_region_matches_formula_up_to_m8() {
    for m in 2..=8usize {
        let dc = generalized_double_chain(&ChainSpec::new(m - 1, 0)).unwrap();
        let brute = middle_region_brute_count(&dc).unwrap();
        assert_eq!(BigUint::from(brute), middle_region_triangulation_count(m), "m={m}");
    }
}

#[test]
fn generalized_double_chain_enumerations_are_consistent() {
    // Count vs materialized stream on D(10, 0^4) and D(10, 1^2).
    for (r, k) in [(4usize, 0usize), (2, 1)] {
        let dc = generalized_double_chain(&ChainSpec::new(r, k)).unwrap();
        for class in [GraphClass::SpanningCycle, GraphClass::PerfectMatching] {
            let c = count(&dc.points, class, limits()).unwrap();
            let e = enumerate(&dc.points, class, limits()).unwrap();
            assert_eq!(c, BigUint::from(e.len()), "{class:?} r={r} k={k}");
        }
    }
}

#[test]
fn triangulation_edge_counts_follow_the_hull() {
    // 3n - 3 - h edges for every triangulation (hence 2n - 2 - h bounded
    // triangles by Euler).
    for seed in [7u64, 8, 9] {
        let ps = random_general_position(7, seed);
        let h = convex_hull(&ps).unwrap().len();
        let tris = enumerate(&ps, GraphClass::Triangulation, limits()).unwrap();
        assert!(!tris.is_empty());
        for t in &tris {
            assert_eq!(t.edge_count(), 3 * 7 - 3 - h);
        }
    }
}

#[test]
fn flip_graph_agrees_on_random_sets() {
    for seed in 20..26u64 {
        let ps = random_general_position(7, seed);
        let a = count(&ps, GraphClass::Triangulation, limits()).unwrap();
        let b = count_triangulations_flip(&ps).unwrap();
        assert_eq!(a, b, "seed {seed}");
    }
}

#[test]
fn s4_maximum_matching_is_bipartite_and_noncrossing() {
    // Over all matchings, crossings allowed: the maximum is attained only
    // by within-copy cross pairings, all of which are crossing-free.
    for n in [4usize, 6, 8, 10, 12] {
        let g = s4_matching_gadget(n).unwrap();
        let model = WeightModel::euclidean(&g.points).unwrap();
        let table = CrossingTable::build(&g.points).unwrap();
        let left = g.left();
        let rep = extremal_multiplicity(
            &g.points,
            GraphClass::PerfectMatching,
            Objective::Max,
            CrossingPolicy::Allowed,
            &model,
            limits(),
        )
        .unwrap();
        assert_eq!(rep.multiplicity, 1 << (n / 4), "n={n}");
        assert_eq!(rep.near_tie_warnings, 0, "n={n}");
        for witness in &rep.witnesses {
            for e in witness.edges() {
                // Bipartite between the two clusters.
                assert_ne!(left.contains(&e.i), left.contains(&e.j), "n={n}");
            }
            // Crossing-free even though crossings were allowed.
            let edges = witness.edges();
            for (x, &a) in edges.iter().enumerate() {
                for &b in edges.iter().skip(x + 1) {
                    assert!(!table.crosses(a, b), "n={n}");
                }
            }
        }
    }
}

#[test]
fn deltoid_declared_tours_tie_exactly() {
    let k = 2usize;
    let g = deltoid_tour_gadget(k, &GadgetSpec::default_delta(k)).unwrap();
    let model = WeightModel::euclidean(&g.points).unwrap();
    // Build the 2^k declared tours: walk the hull, detouring through a_i
    // inside either the (b_i, c_i) or the (c_i, d_i) hull edge.
    let mut weights: Vec<Dec> = Vec::new();
    for choice in 0..(1u32 << k) {
        let mut order: Vec<usize> = Vec::new();
        for (i, group) in g.groups.iter().enumerate() {
            if choice >> i & 1 == 0 {
                order.extend([group.b, group.a, group.c, group.d]);
            } else {
                order.extend([group.b, group.c, group.a, group.d]);
            }
        }
        order.push(g.x1);
        weights.push(model.weight_of_cycle(&order));
    }
    for w in &weights[1..] {
        assert_eq!(w, &weights[0], "declared tours share the same exact weight");
    }
    // And they are exactly the longest non-crossing tours.
    let rep = extremal_multiplicity(
        &g.points,
        GraphClass::SpanningCycle,
        Objective::Max,
        CrossingPolicy::Forbidden,
        &model,
        limits(),
    )
    .unwrap();
    assert_eq!(rep.multiplicity as u32, 1 << k);
    assert_eq!(&rep.weight, &weights[0]);
}

#[test]
fn deltoid_k1_has_two_longest_tours() {
    let g = deltoid_tour_gadget(1, &GadgetSpec::default_delta(1)).unwrap();
    let model = WeightModel::euclidean(&g.points).unwrap();
    let rep = extremal_multiplicity(
        &g.points,
        GraphClass::SpanningCycle,
        Objective::Max,
        CrossingPolicy::Forbidden,
        &model,
        limits(),
    )
    .unwrap();
    assert_eq!(rep.multiplicity, 2);
    assert_eq!(rep.near_tie_warnings, 0);
}

#[test]
fn hexagon_k1_has_four_longest_tours() {
    let g = hexagon_tour_gadget(1, &GadgetSpec::default_delta(1)).unwrap();
    let model = WeightModel::euclidean(&g.points).unwrap();
    let rep = extremal_multiplicity(
        &g.points,
        GraphClass::SpanningCycle,
        Objective::Max,
        CrossingPolicy::Forbidden,
        &model,
        limits(),
    )
    .unwrap();
    assert_eq!(rep.multiplicity, 4);
}

#[test]
fn rotated_triangles_from_n3_to_n10() {
    // Shortest-tour multiplicity is 2^(full groups) across the remainder
    // cases; brute force over all tours (crossings allowed).
    for n in [3usize, 5, 6, 9] {
        let g = rotated_triangle_gadget(n, &GadgetSpec::default_eps(n)).unwrap();
        let model = WeightModel::euclidean(&g.points).unwrap();
        let rep = extremal_multiplicity(
            &g.points,
            GraphClass::SpanningCycle,
            Objective::Min,
            CrossingPolicy::Allowed,
            &model,
            limits(),
        )
        .unwrap();
        let expected = if n == 3 { 1 } else { 1u64 << g.full_groups() };
        assert_eq!(rep.multiplicity, expected, "n={n}");
        assert_eq!(rep.near_tie_warnings, 0, "n={n}");
    }
}

#[test]
fn theta_perturbation_does_not_change_multiplicities() {
    // The gadgets engineer large weight gaps: scaling theta by 10 either
    // way must not change any reported multiplicity.
    let s4 = s4_matching_gadget(8).unwrap();
    let tri = rotated_triangle_gadget(9, &GadgetSpec::default_eps(9)).unwrap();
    let runs: [(&PointSet, GraphClass, Objective, CrossingPolicy); 2] = [
        (&s4.points, GraphClass::PerfectMatching, Objective::Max, CrossingPolicy::Forbidden),
        (&tri.points, GraphClass::SpanningCycle, Objective::Min, CrossingPolicy::Allowed),
    ];
    for (ps, class, objective, crossings) in runs {
        let base = WeightModel::euclidean(ps).unwrap();
        let mut seen = Vec::new();
        for theta_exp in [29u32, 30, 31] {
            let model = base.with_theta_exp(theta_exp);
            let rep = extremal_multiplicity(ps, class, objective, crossings, &model, limits()).unwrap();
            seen.push(rep.multiplicity);
        }
        assert_eq!(seen[0], seen[1]);
        assert_eq!(seen[1], seen[2]);
    }
}

#[test]
fn star_weight_matches_longest_tree_for_all_small_n() {
    for n in 3..=9usize {
        assert!(verify_star_tree_weight(n, limits()).unwrap(), "n={n}");
    }
}

#[test]
fn regular_polygon_longest_tree_multiplicity_grows_like_2_to_n() {
    // At least 2^(n-2) longest non-crossing spanning trees.
    for n in [5usize, 6, 7] {
        let model = WeightModel::regular_spans(n);
        let rep = extremal_multiplicity(
            &PointSet::AbstractConvex(n),
            GraphClass::SpanningTree,
            Objective::Max,
            CrossingPolicy::Forbidden,
            &model,
            limits(),
        )
        .unwrap();
        assert!(rep.multiplicity >= 1 << (n - 2), "n={n}: {}", rep.multiplicity);
    }
}

#[test]
fn longest_tours_have_no_antiparallel_disjoint_pair() {
    // Directed tour edges x->y and u->v with disjoint endpoints are
    // parallel when segments xu and yv are disjoint; a longest tour never
    // contains an anti-parallel pair.
    let check = |ps: &PointSet, model: &WeightModel| {
        let n = ps.len();
        let mut best: Option<Dec> = None;
        let mut tours: Vec<Vec<usize>> = Vec::new();
        let mut order: Vec<usize> = (0..n).collect();
        permute_tours(&mut order, 1, &mut |seq| {
            let w = model.weight_of_cycle(seq);
            match &best {
                Some(b) if &w < b => {}
                Some(b) if &w == b => tours.push(seq.to_vec()),
                _ => {
                    best = Some(w);
                    tours = vec![seq.to_vec()];
                }
            }
        });
        for tour in &tours {
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let (x, y) = (tour[i], tour[(i + 1) % n]);
                    let (u, v) = (tour[j], tour[(j + 1) % n]);
                    if x == u || x == v || y == u || y == v {
                        continue;
                    }
                    let tails = Edge::new(x, u);
                    let heads = Edge::new(y, v);
                    let disjoint = !tails.touches(heads)
                        && !segments_cross(tails, heads, ps).unwrap();
                    assert!(disjoint, "anti-parallel pair in a longest tour");
                }
            }
        }
    };
    for n in [5usize, 6, 7, 8] {
        let poly = convex_polygon(n).unwrap();
        let model = WeightModel::euclidean(&poly.points).unwrap();
        check(&poly.points, &model);
    }
    for seed in [500u64, 501] {
        let ps = random_convex_polygon(7, seed);
        let model = WeightModel::euclidean(&ps).unwrap();
        check(&ps, &model);
    }
}

fn permute_tours(order: &mut Vec<usize>, pos: usize, visit: &mut impl FnMut(&[usize])) {
    let n = order.len();
    if pos == n {
        if order[1] < order[n - 1] {
            visit(order);
        }
        return;
    }
    for i in pos..n {
        order.swap(pos, i);
        permute_tours(order, pos + 1, visit);
        order.swap(pos, i);
    }
}

#[test]
fn matchings_brute_force_agrees_with_noncrossing_enumerator() {
    // On convex position, non-crossing perfect matchings number Catalan
    // C_{n/2}; the all-matchings generator filtered by crossings agrees.
    for n in [4usize, 6, 8] {
        let ps = PointSet::AbstractConvex(n);
        let table = CrossingTable::build(&ps).unwrap();
        let mut brute = 0u64;
        all_matchings(n, &mut |g| {
            let edges = g.edges();
            let crossing = edges.iter().enumerate().any(|(x, &a)| {
                edges.iter().skip(x + 1).any(|&b| table.crosses(a, b))
            });
            if !crossing {
                brute += 1;
            }
        });
        let counted = count(&ps, GraphClass::PerfectMatching, limits()).unwrap();
        assert_eq!(counted, BigUint::from(brute));
        assert_eq!(counted, catalan(n as u64 / 2));
    }
}

#[test]
fn all_tours_generator_is_exhaustive_and_duplicate_free() {
    let mut masks = std::collections::BTreeSet::new();
    let mut count9 = 0u64;
    all_tours(7, &mut |g: EdgeGraph| {
        assert!(masks.insert(g.mask()));
        count9 += 1;
    });
    assert_eq!(count9, 360); // 6!/2
}
