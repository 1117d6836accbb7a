mod common;

use std::collections::BTreeSet;

use dompoly::algorithms::{dp_product_of_components, AlgoConfig, Algorithm};
use dompoly::formats::{
    from_graph6, generate_family, parse_edge_list, render_edge_list, to_graph6, FamilySpec,
};
use dompoly::{EdgeSet, Graph, VertexSet};
use num_bigint::BigInt;
use proptest::prelude::*;

use common::{adjacency, binomial, components_of, dominates, has_odd_closed_walk, oracle_coeffs};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<_> = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Raw edge lists with repeats and both orientations.
fn edge_list_strategy() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2usize..=10).prop_flat_map(|n| {
        let pair = (0..n, 1..n).prop_map(move |(u, d)| (u, (u + d) % n));
        (Just(n), proptest::collection::vec(pair, 0..30))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adjacency_is_symmetric_and_loop_free((n, edges) in edge_list_strategy()) {
        let g = Graph::new(n, edges.iter().copied()).unwrap();
        for v in 0..n {
            prop_assert!(!g.neighbors(v).contains(v));
            for u in g.neighbors(v) {
                prop_assert!(g.neighbors(u).contains(v));
            }
        }
        let want: BTreeSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let got: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn domination_only_sees_boundary_edges(g in graph_strategy(8), w in any::<u64>(), f in any::<u64>()) {
        let w = VertexSet(w & g.vertices().bits());
        let f = EdgeSet::from_mask(if g.m() == 0 { 0 } else { f & (u64::MAX >> (64 - g.m())) });
        let restricted = f.intersection(&g.boundary_edges(w));
        prop_assert_eq!(
            g.spanning_subgraph(&f).is_dominating(w),
            g.spanning_subgraph(&restricted).is_dominating(w)
        );
    }

    #[test]
    fn bipartition_is_sound(g in graph_strategy(8)) {
        match g.bipartition() {
            Some(bip) => {
                prop_assert!(!has_odd_closed_walk(&g));
                for &(u, v) in g.edges() {
                    let c = bip.components.iter().find(|c| c.vertices.contains(u)).unwrap();
                    prop_assert!(c.vertices.contains(v));
                    prop_assert!(c.y.contains(u) != c.y.contains(v));
                    prop_assert!(c.z.contains(u) != c.z.contains(v));
                }
                let covered: u64 = bip.components.iter().map(|c| c.vertices.bits()).fold(0, |a, b| a | b);
                let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
                prop_assert_eq!(bip.isolated_count, isolated);
                prop_assert_eq!(covered.count_ones() as usize + isolated, g.n());
                prop_assert!(g.odd_cycle().is_none());
            }
            None => {
                prop_assert!(has_odd_closed_walk(&g));
                let cycle = g.odd_cycle().unwrap();
                prop_assert!(cycle.len() % 2 == 1 && cycle.len() >= 3);
                let distinct: BTreeSet<_> = cycle.iter().collect();
                prop_assert_eq!(distinct.len(), cycle.len());
                for i in 0..cycle.len() {
                    prop_assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
        }
    }

    #[test]
    fn components_partition_the_vertices(g in graph_strategy(10)) {
        let comps = g.components();
        let adj = adjacency(&g);
        let mut union = 0u64;
        for c in &comps {
            prop_assert_eq!(union & c.bits(), 0);
            union |= c.bits();
            prop_assert!(g.is_connected_within(*c));
        }
        prop_assert_eq!(union, g.vertices().bits());
        for &(u, v) in g.edges() {
            prop_assert!(comps.iter().any(|c| c.contains(u) && c.contains(v)));
        }
        let mut want = components_of(&adj, g.vertices().bits());
        want.sort_unstable();
        let mut got: Vec<u64> = comps.iter().map(|c| c.bits()).collect();
        got.sort_unstable();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn conformal_stream_equals_filter(g in graph_strategy(8)) {
        let adj = adjacency(&g);
        let want: BTreeSet<(u64, usize)> = (0..1u64 << g.n())
            .filter_map(|w| {
                let comps = components_of(&adj, w);
                comps.iter().all(|c| c.count_ones() % 2 == 0).then_some((w, comps.len()))
            })
            .collect();
        let stream: Vec<(u64, usize)> = g.conformal_sets().map(|(w, k)| (w.bits(), k)).collect();
        let got: BTreeSet<(u64, usize)> = stream.iter().copied().collect();
        prop_assert_eq!(got.len(), stream.len(), "duplicates in stream");
        prop_assert_eq!(got, want);
    }

    #[test]
    fn connected_sets_equal_filter(g in graph_strategy(8), root in 0usize..8) {
        prop_assume!(root < g.n());
        let adj = adjacency(&g);
        let want: BTreeSet<u64> = (0..1u64 << g.n())
            .filter(|&w| w >> root & 1 == 1 && components_of(&adj, w).len() == 1)
            .collect();
        let stream: Vec<u64> = g.connected_sets_containing(root).map(|w| w.bits()).collect();
        let got: BTreeSet<u64> = stream.iter().copied().collect();
        prop_assert_eq!(got.len(), stream.len());
        prop_assert_eq!(got, want);
    }

    #[test]
    fn type_length_is_bounded_by_independence_number(g in graph_strategy(8)) {
        let alpha = g.independence_number_brute(8).unwrap();
        let adj = adjacency(&g);
        let independent = |w: u64| g.edges().iter().all(|&(u, v)| w >> u & 1 == 0 || w >> v & 1 == 0);
        let alpha_oracle = (0..1u64 << g.n()).filter(|&w| independent(w)).map(u64::count_ones).max().unwrap_or(0);
        prop_assert_eq!(alpha, alpha_oracle as usize);
        for w in 0..1u64 << g.n() {
            let ty = g.type_partition_within(VertexSet(w));
            prop_assert!(ty.len() <= alpha);
            let mut want: Vec<usize> = components_of(&adj, w).iter().map(|c| c.count_ones() as usize).collect();
            want.sort_unstable_by(|a, b| b.cmp(a));
            prop_assert_eq!(ty.parts(), &want[..]);
        }
    }

    #[test]
    fn coefficients_are_bounded(g in graph_strategy(9)) {
        let d = dp_product_of_components(&g, Algorithm::InclExcl, &AlgoConfig::sequential()).unwrap();
        let n = g.n();
        for k in 0..=n {
            let c = d.coeff(k);
            prop_assert!(c >= BigInt::from(0));
            prop_assert!(c <= BigInt::from(binomial(n, k)));
        }
        prop_assert_eq!(d.coeff(n), BigInt::from(1));
        prop_assert_eq!(d.degree(), Some(n));
    }

    #[test]
    fn parallel_equals_sequential(g in graph_strategy(12)) {
        let par = AlgoConfig::default();
        let seq = AlgoConfig::sequential();
        for algo in Algorithm::ALL {
            if algo == Algorithm::BipartiteSpanning && g.m() > 16 {
                continue;
            }
            prop_assert_eq!(
                dp_product_of_components(&g, algo, &par).unwrap(),
                dp_product_of_components(&g, algo, &seq).unwrap(),
                "{}", algo
            );
        }
    }

    #[test]
    fn formats_round_trip(g in graph_strategy(20)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&render_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn random_family_is_deterministic(n in 0u64..30, num in 0u64..=8, seed in any::<u64>()) {
        let spec = FamilySpec::random(n, num, 8, seed);
        prop_assert_eq!(generate_family(&spec).unwrap(), generate_family(&spec).unwrap());
    }
}

#[test]
fn dominating_sets_of_spanning_subgraphs_match_oracle() {
    // The library's is_dominating against the matrix oracle on every
    // spanning subgraph of K4 and every vertex subset.
    let k4 = Graph::new(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)))).unwrap();
    for f in 0..1u64 << k4.m() {
        let h = k4.spanning_subgraph(&EdgeSet::from_mask(f));
        let adj = adjacency(&h);
        for w in 0..16u64 {
            assert_eq!(h.is_dominating(VertexSet(w)), dominates(&adj, w));
        }
        let total: i64 = oracle_coeffs(&h).iter().sum();
        assert_eq!(total % 2, 1);
    }
}
