mod common;

use cobound::format::{parse_dimacs, parse_graph6, read_graphs, to_dimacs, to_graph6};
use cobound::solve;
use cobound::{Budget, Graph, VertexSet};
use proptest::collection::vec;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| common::from_bits(n, &bits)))
}

fn graph_and_subset(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), vec(any::<bool>(), n).prop_map(|keep| keep.iter().enumerate().filter(|(_, &k)| k).map(|(v, _)| v).collect()))
    })
}

fn bipartite(max_side: usize) -> impl Strategy<Value = Graph> {
    (0..=max_side, 0..=max_side).prop_flat_map(|(a, b)| {
        vec(any::<bool>(), a * b).prop_map(move |bits| {
            let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
            Graph::from_edges(a + b, edges.zip(bits).filter(|&(_, x)| x).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_and_dimacs_round_trip(g in graph(32)) {
        prop_assert_eq!(&parse_graph6(&to_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_dimacs(&to_dimacs(&g)).unwrap(), &g);
        prop_assert_eq!(read_graphs(&to_dimacs(&g)).unwrap(), vec![g.clone()]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution_and_commutes_with_induction((g, s) in graph_and_subset(20)) {
        prop_assert_eq!(&g.complement().complement(), &g);
        prop_assert_eq!(
            g.induced_subgraph(&s).unwrap().complement(),
            g.complement().induced_subgraph(&s).unwrap()
        );
        let n = g.order();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn theta_is_chi_of_the_complement(g in graph(12)) {
        let b = Budget::default();
        let theta = solve::clique_cover_number(&g, &b).unwrap();
        theta.check(&g).unwrap();
        prop_assert_eq!(theta.value, solve::chromatic_number(&g.complement(), &b).unwrap().value);
        prop_assert_eq!(
            solve::max_stable_set(&g, &b).unwrap().value,
            solve::max_clique(&g.complement(), &b).unwrap().value
        );
    }

    #[test]
    fn invariants_are_additive_over_components(a in graph(8), c in graph(8)) {
        let b = Budget::default();
        let u = a.disjoint_union(&c).unwrap();
        let val = |f: fn(&Graph, &Budget) -> Result<cobound::SolveResult, cobound::SolveError>, g: &Graph| f(g, &b).unwrap().value;
        prop_assert_eq!(val(solve::max_stable_set, &u), val(solve::max_stable_set, &a) + val(solve::max_stable_set, &c));
        prop_assert_eq!(val(solve::clique_cover_number, &u), val(solve::clique_cover_number, &a) + val(solve::clique_cover_number, &c));
        prop_assert_eq!(val(solve::max_clique, &u), val(solve::max_clique, &a).max(val(solve::max_clique, &c)));
        prop_assert_eq!(val(solve::chromatic_number, &u), val(solve::chromatic_number, &a).max(val(solve::chromatic_number, &c)));
        prop_assert_eq!(solve::matching_number(&u), solve::matching_number(&a) + solve::matching_number(&c));
    }

    #[test]
    fn triangle_free_theta_is_n_minus_nu(g in graph(14)) {
        prop_assume!(!g.has_triangle());
        let b = Budget::default();
        let theta = solve::clique_cover_number(&g, &b).unwrap().value;
        prop_assert_eq!(theta + solve::matching_number(&g), g.order());
        let cover = solve::triangle_free_cover(&g).unwrap();
        prop_assert_eq!(cover.check(&g, theta), Ok(()));
    }

    #[test]
    fn bipartite_theta_equals_alpha(g in bipartite(8)) {
        let b = Budget::default();
        prop_assert_eq!(
            solve::clique_cover_number(&g, &b).unwrap().value,
            solve::max_stable_set(&g, &b).unwrap().value
        );
        prop_assert_eq!(solve::max_deficiency(&g, &b).unwrap().value, 0);
    }

    #[test]
    fn alpha_theta_sandwich(g in graph(14)) {
        let b = Budget::default();
        let alpha = solve::max_stable_set(&g, &b).unwrap().value;
        let theta = solve::clique_cover_number(&g, &b).unwrap().value;
        let omega = solve::max_clique(&g, &b).unwrap().value;
        let chi = solve::chromatic_number(&g, &b).unwrap().value;
        prop_assert!(alpha <= theta);
        prop_assert!(omega <= chi);
        prop_assert!(alpha * chi >= g.order());
        prop_assert!(omega * theta >= g.order());
    }
}
