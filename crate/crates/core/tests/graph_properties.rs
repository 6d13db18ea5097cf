use mixcage::graph::{
    directed_girth, girth_oracle, is_mixed_cycle, mixed_girth, mixed_girth_parallel,
    random_mixed_graph, shortest_cycle, Connection, Girth, GraphDocument, GraphError, MixedGraph,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_graph(seed: u64, n: usize, density: f64) -> MixedGraph<usize> {
    random_mixed_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, density)
}

fn graph_params() -> impl Strategy<Value = (u64, usize, f64)> {
    (any::<u64>(), 2usize..=24, 0.02f64..0.4)
}

#[test]
fn edge_then_arc_on_same_pair_is_rejected() {
    let mut g = MixedGraph::with_vertices(["a", "b"]).unwrap();
    g.add_edge(&"a", &"b").unwrap();
    let err = g.add_arc(&"a", &"b").unwrap_err();
    assert!(matches!(
        err,
        GraphError::SimplicityViolation {
            existing: Connection::Edge,
            ..
        }
    ));
    assert!(g.add_arc(&"b", &"a").is_err());
    assert!(g.add_edge(&"b", &"a").is_err());
}

#[test]
fn four_arc_cycle_and_hexagon() {
    let square = MixedGraph::from_parts(0..4, [], (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
    assert_eq!(mixed_girth(&square, None), Girth::Finite(4));
    assert_eq!(directed_girth(&square), Girth::Finite(4));
    let hexagon = MixedGraph::from_parts(0..6, (0..6).map(|i| (i, (i + 1) % 6)), []).unwrap();
    assert_eq!(mixed_girth(&hexagon, None), Girth::Finite(6));
    assert_eq!(directed_girth(&hexagon), Girth::Acyclic);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bfs_girth_matches_exhaustive_oracle((seed, n, density) in graph_params()) {
        let g = random_graph(seed, n, density);
        prop_assert_eq!(mixed_girth(&g, None), girth_oracle(&g).unwrap());
    }

    #[test]
    fn girth_is_at_least_three_and_witnessed((seed, n, density) in graph_params()) {
        let g = random_graph(seed, n, density);
        match mixed_girth(&g, None) {
            Girth::Finite(len) => {
                prop_assert!(len >= 3);
                let cycle = shortest_cycle(&g, None).unwrap();
                prop_assert_eq!(cycle.len(), len);
                prop_assert!(is_mixed_cycle(&g, &cycle));
            }
            Girth::Acyclic => prop_assert!(shortest_cycle(&g, None).is_none()),
        }
    }

    #[test]
    fn directed_girth_never_below_mixed_girth((seed, n, density) in graph_params()) {
        let g = random_graph(seed, n, density);
        let mixed = mixed_girth(&g, None);
        let directed = directed_girth(&g);
        match (mixed, directed) {
            (Girth::Finite(m), Girth::Finite(d)) => prop_assert!(d >= m),
            (Girth::Acyclic, d) => prop_assert_eq!(d, Girth::Acyclic),
            (Girth::Finite(_), Girth::Acyclic) => {}
        }
    }

    #[test]
    fn girth_survives_relabelling((seed, n, density) in graph_params(), shuffle in any::<u64>()) {
        let g = random_graph(seed, n, density);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(shuffle));
        let relabelled = g.map_vertices(|&v| perm[v]).unwrap();
        prop_assert_eq!(mixed_girth(&g, None), mixed_girth(&relabelled, None));
        prop_assert_eq!(directed_girth(&g), directed_girth(&relabelled));
    }

    #[test]
    fn depth_bound_truncates_exactly((seed, n, density) in graph_params(), bound in 3usize..8) {
        let g = random_graph(seed, n, density);
        let full = mixed_girth(&g, None);
        let bounded = mixed_girth(&g, Some(bound));
        match full {
            Girth::Finite(len) if len <= bound => prop_assert_eq!(bounded, full),
            _ => prop_assert_eq!(bounded, Girth::Acyclic),
        }
    }

    #[test]
    fn parallel_search_matches_sequential((seed, n, density) in graph_params()) {
        let g = random_graph(seed, n, density);
        prop_assert_eq!(mixed_girth(&g, None), mixed_girth_parallel(&g, None));
    }

    #[test]
    fn json_round_trip_preserves_the_graph((seed, n, density) in graph_params()) {
        let g = random_graph(seed, n, density);
        let doc = GraphDocument::new(&g, |v| format!("v{v}"));
        let back = GraphDocument::from_json(&doc.to_json()).unwrap().to_graph().unwrap();
        let expected = g.map_vertices(|v| format!("v{v}")).unwrap();
        prop_assert_eq!(back, expected);
    }

    #[test]
    fn induced_subgraph_keeps_only_inner_connections(
        (seed, n, density) in graph_params(),
        mask in any::<u32>(),
    ) {
        let g = random_graph(seed, n, density);
        let keep: Vec<usize> = (0..n).filter(|i| mask >> (i % 32) & 1 == 1).collect();
        let sub = g.induced_subgraph(keep.iter()).unwrap();
        let inside = |u: &usize, v: &usize| keep.contains(u) && keep.contains(v);
        prop_assert_eq!(sub.edge_count(), g.edges().filter(|(u, v)| inside(u, v)).count());
        prop_assert_eq!(sub.arc_count(), g.arcs().filter(|(u, v)| inside(u, v)).count());
    }
}
