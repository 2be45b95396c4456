use gpn_core::cograph::{build_cotree, cotree_invariants, graph_of};
use gpn_core::construct::{cartesian_product, complement, induced_subgraph};
use gpn_core::exact::{gp_exact, max_clique, SearchBudget};
use gpn_core::family::{generate, FamilySpec};
use gpn_core::formulas::solve;
use gpn_core::io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use gpn_core::verify::{check_characterized, check_definitional, distant_edges_bound};
use gpn_core::{Graph, VertexSet};
use proptest::prelude::*;

/// Graph on `1..=max_n` vertices with each pair present independently.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn graph_with_subset(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(any::<bool>(), n))
            .prop_map(|(g, keep)| {
                let s = keep.iter().enumerate().filter(|(_, k)| **k).map(|(v, _)| v).collect();
                (g, s)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        prop_assert_eq!(complement(&complement(&g)), g.clone());
        prop_assert_eq!(complement(&g).edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn distances_are_a_metric(g in graph(10)) {
        let d = g.distances();
        for u in g.vertices() {
            prop_assert_eq!(d.finite(u, u), Some(0));
            for v in g.vertices() {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                for w in g.vertices() {
                    prop_assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }

    #[test]
    fn convex_closure_is_a_closure_operator((g, s) in graph_with_subset(9), extra in 0usize..9) {
        let cl = g.convex_closure(&s).unwrap();
        prop_assert!(s.iter().all(|v| cl.contains(v)));
        prop_assert_eq!(g.convex_closure(&cl).unwrap(), cl.clone());
        let bigger = s.union(&[extra % g.n()].into_iter().collect());
        let cl_bigger = g.convex_closure(&bigger).unwrap();
        prop_assert!(cl.iter().all(|v| cl_bigger.contains(v)));
    }

    #[test]
    fn grid_is_a_product_of_paths(n in 1usize..6, m in 1usize..6) {
        let grid = generate(&FamilySpec::Grid(n, m)).unwrap();
        let product = cartesian_product(&generate(&FamilySpec::Path(n)).unwrap(), &generate(&FamilySpec::Path(m)).unwrap());
        prop_assert_eq!(grid, product);
    }

    #[test]
    fn graph6_round_trip(g in graph(62)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
    }

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g.clone());
    }

    #[test]
    fn both_checks_agree((g, s) in graph_with_subset(9)) {
        let definitional = check_definitional(&g, &s).unwrap();
        let characterized = check_characterized(&g, &s).unwrap();
        prop_assert_eq!(definitional.is_ok(), characterized.is_ok());
        if let Err(v) = definitional {
            prop_assert!(v.recheck(&g), "{:?}", v);
        }
        if let Err(v) = characterized {
            let (sub, _) = induced_subgraph(&g, &s).unwrap();
            // clique-component violations live in G[S]; the metric ones in G
            prop_assert!(v.recheck(&g) || v.recheck(&sub), "{:?}", v);
        }
    }

    #[test]
    fn general_position_is_hereditary((g, mask) in graph_with_subset(9)) {
        let gp = gp_exact(&g, &SearchBudget::default()).unwrap();
        let sub: VertexSet = gp.witness.iter().filter(|&v| mask.contains(v)).collect();
        prop_assert_eq!(check_definitional(&g, &sub).unwrap(), Ok(()));
    }

    #[test]
    fn gp_bounds(g in graph(10)) {
        let gp = gp_exact(&g, &SearchBudget::default()).unwrap().value;
        prop_assert!(max_clique(&g).0 <= gp && gp <= g.n());
        prop_assert!(g.simplicial_vertices().len() <= gp);
        if let Ok((bound, _)) = distant_edges_bound(&g) {
            prop_assert!(bound <= gp);
        }
        let solved = solve(&g, &SearchBudget::default()).unwrap();
        prop_assert_eq!(solved.value, gp);
        prop_assert!(solved.verified);
    }

    #[test]
    fn cotrees_rebuild_their_graph(g in graph(9)) {
        match build_cotree(&g) {
            Ok(tree) => {
                prop_assert_eq!(graph_of(&tree).unwrap(), g.clone());
                prop_assert!(cotree_invariants(&tree).is_ok());
            }
            Err(p4) => {
                let [a, b, c, d] = p4.0;
                prop_assert!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d));
                prop_assert!(!g.has_edge(a, c) && !g.has_edge(b, d) && !g.has_edge(a, d));
            }
        }
    }
}
