use extremal_core::bounds::{check_bound, turan_bound};
use extremal_core::construct::{blow_up, complete_multipartite, named_graph, turan_graph, NamedGraph};
use extremal_core::detect::{
    binomial, chromatic_number, contains_subgraph, count_stars, has_clique, has_complete_bipartite, max_clique,
    max_independent_set,
};
use extremal_core::lemma::{dense_core, DenseCoreConfig, DensityParams};
use extremal_core::{Graph, Rational};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges: Vec<_> = pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn handshake(g in graph(64)) {
        let total: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn degree_square_double_count(g in graph(64)) {
        let by_edges: usize = g.edges().map(|(u, v)| g.degree(u) + g.degree(v)).sum();
        let squares: usize = (0..g.order()).map(|v| g.degree(v).pow(2)).sum();
        prop_assert_eq!(by_edges, squares);
    }

    #[test]
    fn induced_on_all_vertices_is_identity(g in graph(64)) {
        prop_assert_eq!(g.induced_subgraph(g.vertices()).unwrap(), g);
    }

    #[test]
    fn triangle_free_edges_bounded_by_independent_set(g in graph(12)) {
        if !has_clique(&g, 3) {
            let a = max_independent_set(&g).len();
            prop_assert!(g.edge_count() <= a * (g.order() - a));
        }
    }

    #[test]
    fn coloring_is_proper_and_above_clique_number(g in graph(12)) {
        let c = chromatic_number(&g).unwrap();
        prop_assert!(c.is_proper_for(&g));
        prop_assert!(c.chi >= max_clique(&g).len());
        prop_assert!(c.colors.iter().all(|&x| x < c.chi.max(1)));
    }

    #[test]
    fn blow_up_keeps_chromatic_number(h in graph(5), t in 1usize..=3) {
        let b = blow_up(&h, t).unwrap();
        prop_assert_eq!(b.edge_count(), t * t * h.edge_count());
        prop_assert_eq!(chromatic_number(&b).unwrap().chi, chromatic_number(&h).unwrap().chi);
    }

    #[test]
    fn complete_bipartite_detection_matches_subgraph_search(g in graph(9), r in 1usize..=3, t in 1usize..=3) {
        let (r, t) = (r.min(t), r.max(t));
        let k = named_graph(NamedGraph::CompleteBipartite(r, t)).unwrap();
        prop_assert_eq!(has_complete_bipartite(&g, r, t), contains_subgraph(&g, &k).unwrap());
    }

    #[test]
    fn kst_star_count_on_free_graphs(g in graph(16), r in 2usize..=3, t in 2usize..=3) {
        let (r, t) = (r.min(t), r.max(t));
        if !has_complete_bipartite(&g, r, t) {
            let n = g.order() as u128;
            prop_assert!(count_stars(&g, r) <= (t as u128 - 1) * binomial(n, r as u128));
        }
    }

    #[test]
    fn dense_core_invariant_holds_on_any_graph(g in graph(40), r in 1usize..=4, q in 2i128..40) {
        let eps = Rational::new(1, q * r as i128 + 1);
        let res = dense_core(&g, DensityParams::new(r, eps).unwrap(), DenseCoreConfig::default());
        prop_assert!(res.degree_invariant_holds());
        prop_assert_eq!(res.p + res.removal_trace.len(), g.order());
        // every removal was below the threshold of its step
        let factor = Rational::from_integer(1) - Rational::new(1, r as i128) + eps / 2;
        for step in &res.removal_trace {
            prop_assert!(Rational::from_integer(step.degree as i128) < factor * Rational::from_integer(step.size as i128));
        }
    }
}

#[test]
fn turan_graph_meets_bound_exactly_when_r_divides_n() {
    for n in 1..=40 {
        for r in 1..=n.min(8) {
            let m = turan_graph(n, r).unwrap().edge_count();
            let bound = turan_bound(n, r).unwrap();
            assert!(check_bound(m as u128, &bound));
            let equal = bound.as_rational() == Some(Rational::from_integer(m as i128));
            assert_eq!(equal, n % r == 0, "n={n} r={r}");
        }
    }
}

#[test]
fn multipartite_graphs_are_their_own_turan_witnesses() {
    let g = complete_multipartite(&[3, 3, 3]).unwrap();
    assert!(!has_clique(&g, 4));
    assert_eq!(chromatic_number(&g).unwrap().chi, 3);
}
