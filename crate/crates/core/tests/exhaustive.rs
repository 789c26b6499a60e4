//! Invariants checked on every isomorphism class up to a small size.

use std::collections::HashMap;

use lincolor_core::classes::{
    chordality, find_chordless_cycle, is_chordal, is_perfect_elimination_ordering, is_quasi_threshold,
    is_quasi_threshold_by_actual_edges, is_simple, is_strongly_chordal, is_p6_free, strong_chordality,
    verify_strong_peo, Chordality, StrongChordality,
};
use lincolor_core::linear_coloring::{
    verify_linear_coloring, verify_linear_coloring_cliquesets,
};
use lincolor_core::oracles::{
    brute_chromatic, brute_lambda, clique_number, independence_number, is_colinear, is_linear,
    is_linear_via_complement,
};
use lincolor_core::patterns::{
    canonical_code, enumerate_graphs, enumerate_up_to, find_k_sun, gen_random, k_sun,
};
use lincolor_core::strong_ordering::{kappa_coloring, strong_elimination_ordering};
use lincolor_core::verify::{linear_classes, non_simple_close_to_simple};
use lincolor_core::{linear_chromatic_number, linear_color, min_path_cover, Graph, NeighborhoodDag, VertexSet};

fn classes(max_n: usize) -> Vec<Graph> {
    let mut all = vec![Graph::empty(0)];
    all.extend(enumerate_up_to(max_n).unwrap());
    all
}

#[test]
fn complement_closed_neighborhoods() {
    for g in classes(6) {
        let c = g.complement();
        for v in 0..g.n() {
            assert_eq!(*c.closed(v), g.vertices().difference(g.neighbors(v)));
        }
    }
}

#[test]
fn induced_subgraph_commutes_with_complement() {
    for g in classes(6) {
        let c = g.complement();
        for mask in 0u64..1 << g.n() {
            assert_eq!(c.induced_by_mask(mask), g.induced_by_mask(mask).complement());
        }
    }
}

#[test]
fn dag_is_transitive_antisymmetric_and_complete_on_comparable_pairs() {
    for g in classes(7) {
        let d = NeighborhoodDag::build(&g);
        let n = g.n();
        for u in 0..n {
            assert!(!d.has_arc(u, u));
            for v in 0..n {
                if u == v {
                    continue;
                }
                assert!(!(d.has_arc(u, v) && d.has_arc(v, u)));
                assert_eq!(
                    d.has_arc(u, v) || d.has_arc(v, u),
                    g.closed(u).comparable(g.closed(v))
                );
                if d.has_arc(u, v) {
                    assert!(g.closed(u).is_subset(g.closed(v)));
                    assert!(d.level(u) < d.level(v));
                    for w in d.successors(v) {
                        assert!(d.has_arc(u, w), "missing {u}->{w} in {g:?}");
                    }
                }
            }
        }
        // level 1 is exactly the set of sources
        for v in 0..n {
            let indegree = (0..n).filter(|&u| d.has_arc(u, v)).count();
            assert_eq!(d.level(v) == 1, indegree == 0);
        }
    }
}

/// Smallest number of vertex-disjoint directed paths covering the DAG,
/// by subset dynamic programming independent of matchings.
fn exhaustive_path_cover(d: &NeighborhoodDag) -> usize {
    let n = d.n();
    let full = (1usize << n) - 1;
    // ends[mask] = set of possible last vertices of a path through exactly mask
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] |= 1 << v;
    }
    for mask in 1..=full {
        for last in 0..n {
            if ends[mask] >> last & 1 == 0 {
                continue;
            }
            for next in d.successors(last) {
                if mask >> next & 1 == 0 {
                    ends[mask | 1 << next] |= 1 << next;
                }
            }
        }
    }
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let mut sub = mask;
        while sub > 0 {
            if sub & low != 0 && ends[sub] != 0 && best[mask ^ sub] != usize::MAX {
                best[mask] = best[mask].min(best[mask ^ sub] + 1);
            }
            sub = (sub - 1) & mask;
        }
    }
    best[full]
}

#[test]
fn path_cover_is_minimum_and_valid() {
    for g in classes(7) {
        let d = NeighborhoodDag::build(&g);
        let cover = min_path_cover(&d);
        assert!(cover.is_valid_for(&d));
        assert_eq!(cover.rho(), exhaustive_path_cover(&d), "{g:?}");
    }
}

#[test]
fn pipeline_lambda_matches_partition_search() {
    for g in classes(7) {
        let c = linear_color(&g);
        assert_eq!(c.k(), brute_lambda(&g), "{g:?}");
        assert!(verify_linear_coloring(&g, c.colors()).unwrap().is_linear());
        // surjective onto 1..=k
        let mut used: Vec<usize> = c.colors().to_vec();
        used.sort();
        used.dedup();
        assert_eq!(used, (1..=c.k()).collect::<Vec<_>>());
    }
}

#[test]
fn verifiers_agree_on_every_coloring_of_small_graphs() {
    for g in classes(4) {
        let n = g.n();
        if n == 0 {
            continue;
        }
        let total = n.pow(n as u32);
        for code in 0..total {
            let mut x = code;
            let coloring: Vec<usize> = (0..n)
                .map(|_| {
                    let c = x % n + 1;
                    x /= n;
                    c
                })
                .collect();
            assert_eq!(
                verify_linear_coloring(&g, &coloring),
                verify_linear_coloring_cliquesets(&g, &coloring)
            );
        }
    }
}

#[test]
fn complement_linear_coloring_is_proper() {
    for g in classes(7) {
        let c = linear_color(&g.complement());
        for (u, v) in g.edges() {
            assert_ne!(c.color(u), c.color(v));
        }
        assert!(brute_chromatic(&g) <= c.k());
    }
}

#[test]
fn number_inequalities() {
    for g in classes(7) {
        let (chi, omega, alpha) = (brute_chromatic(&g), clique_number(&g), independence_number(&g));
        assert!(omega <= chi);
        assert!(chi <= linear_chromatic_number(&g.complement()));
        assert!(alpha <= linear_chromatic_number(&g));
    }
}

#[test]
fn linear_routes_agree() {
    for g in classes(6) {
        let direct = is_linear(&g).holds;
        assert_eq!(direct, is_linear_via_complement(&g), "{g:?}");
    }
}

#[test]
fn bottom_up_linearity_matches_definition() {
    let memo = linear_classes(6).unwrap();
    for g in classes(6) {
        assert_eq!(memo[&(g.n(), canonical_code(&g))], is_linear(&g).holds, "{g:?}");
    }
}

#[test]
fn colinear_implies_structure() {
    for g in classes(6) {
        if is_colinear(&g).holds {
            assert!(is_chordal(&g.complement()));
        }
        if is_linear(&g).holds {
            assert!(is_chordal(&g));
        }
    }
}

#[test]
fn quasi_threshold_routes_agree() {
    for g in classes(7) {
        assert_eq!(is_quasi_threshold(&g), is_quasi_threshold_by_actual_edges(&g), "{g:?}");
    }
}

#[test]
fn chordality_certificates() {
    for g in classes(7) {
        match chordality(&g) {
            Chordality::Chordal(peo) => {
                assert!(is_perfect_elimination_ordering(&g, &peo));
                assert!(find_chordless_cycle(&g).is_none());
            }
            Chordality::Hole(cycle) => {
                let k = cycle.len();
                assert!(k >= 4);
                for i in 0..k {
                    for j in i + 1..k {
                        let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                        assert_eq!(g.has_edge(cycle[i], cycle[j]), consecutive, "{g:?} {cycle:?}");
                    }
                }
            }
        }
    }
}

/// Whether some elimination order of simple vertices empties `s`.
fn eliminable(g: &Graph, s: u64, memo: &mut HashMap<u64, bool>) -> bool {
    if s == 0 {
        return true;
    }
    if let Some(&r) = memo.get(&s) {
        return r;
    }
    let list = VertexSet::from_mask(s).to_vec();
    let sub = g.induced_by_mask(s);
    let r = (0..sub.n()).any(|i| is_simple(&sub, i) && eliminable(g, s & !(1 << list[i]), memo));
    memo.insert(s, r);
    r
}

#[test]
fn greedy_simple_elimination_matches_exhaustive_order_search() {
    for g in classes(7) {
        let full = (1u64 << g.n()) - 1;
        let exhaustive = eliminable(&g, full, &mut HashMap::new());
        assert_eq!(is_strongly_chordal(&g), exhaustive, "{g:?}");
        if let StrongChordality::StronglyChordal(seq) = strong_chordality(&g) {
            let mut sorted = seq.clone();
            sorted.sort();
            assert_eq!(sorted, (0..g.n()).collect::<Vec<_>>());
        }
    }
}

fn sun_characterization_holds(g: &Graph) -> bool {
    is_strongly_chordal(g) == (is_chordal(g) && find_k_sun(g, g.n() / 2).is_none())
}

#[test]
fn strongly_chordal_iff_chordal_and_sun_free() {
    for g in classes(7) {
        assert!(sun_characterization_holds(&g), "{g:?}");
    }
    for seed in 0..300 {
        let g = gen_random(8, 0.6, seed);
        assert!(sun_characterization_holds(&g), "{g:?}");
    }
}

#[test]
fn suns_are_chordal_but_not_strongly_chordal() {
    for k in 3..=8 {
        let s = k_sun(k).unwrap();
        assert!(is_chordal(&s), "{k}-sun");
        assert!(!is_strongly_chordal(&s), "{k}-sun");
    }
}

#[test]
fn ordering_on_every_strongly_chordal_class() {
    for g in classes(7) {
        if !is_strongly_chordal(&g) {
            continue;
        }
        let ord = strong_elimination_ordering(&g).unwrap();
        assert_eq!(verify_strong_peo(&g, &ord.sigma), Ok(true), "{g:?} {:?}", ord.sigma);
        assert!(ord.simple_vertices_lead(&g));
        assert!(g.is_independent(&ord.independent));
        assert_eq!(ord.independent.len(), independence_number(&g), "{g:?}");
        if is_p6_free(&g) {
            assert!(ord.independent_set_dominates_forward(&g), "{g:?}");
            let kappa = kappa_coloring(&g, &ord).unwrap();
            assert!(verify_linear_coloring(&g, kappa.colors()).unwrap().is_linear(), "{g:?}");
            assert_eq!(kappa.k(), independence_number(&g));
            assert_eq!(linear_chromatic_number(&g), kappa.k());
            if g.n() >= 2 {
                assert!(non_simple_close_to_simple(&g), "{g:?}");
            }
        }
    }
}

#[test]
fn enumeration_is_canonical_and_duplicate_free() {
    for n in 0..=6 {
        let gs = enumerate_graphs(n).unwrap();
        let mut codes: Vec<u64> = gs.iter().map(canonical_code).collect();
        for (g, &c) in gs.iter().zip(&codes) {
            // each representative is already in canonical form
            assert_eq!(lincolor_core::patterns::graph_from_code(n, c), *g);
        }
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), gs.len());
    }
}

#[test]
fn class_counts() {
    let counts: Vec<usize> = (0..=8).map(|n| enumerate_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156, 1044, 12346]);
}
