use proptest::prelude::*;
use rydberg_mis::{Graph, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |keep| {
            let all = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<_> = all.zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

fn brute_force_sets(g: &Graph) -> Vec<VertexSet> {
    (0..1u64 << g.n())
        .map(VertexSet::from_mask)
        .filter(|&s| g.edges().iter().all(|&(i, j)| !(s.contains(i) && s.contains(j))))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn baselines_are_maximal_and_ordered(g in arb_graph(14)) {
        let greedy = g.greedy_mis();
        let exact = g.exact_mis().unwrap();
        prop_assert!(g.is_maximal_independent(greedy));
        prop_assert!(g.is_maximal_independent(exact));
        prop_assert!(exact.len() >= greedy.len());
    }

    #[test]
    fn enumeration_matches_brute_force(g in arb_graph(12)) {
        let sets = g.enumerate_independent_sets().unwrap();
        prop_assert_eq!(&sets, &brute_force_sets(&g));
        for s in (0..1u64 << g.n()).map(VertexSet::from_mask) {
            prop_assert_eq!(g.violated_edges(s) == 0, g.is_independent(s));
        }
    }

    #[test]
    fn exact_is_maximum_and_lexicographically_first(g in arb_graph(11)) {
        let sets = brute_force_sets(&g);
        let alpha = sets.iter().map(|s| s.len()).max().unwrap();
        let exact = g.exact_mis().unwrap();
        prop_assert_eq!(exact.len(), alpha);
        let first = sets
            .iter()
            .filter(|s| s.len() == alpha)
            .map(|s| s.vertices().collect::<Vec<_>>())
            .min()
            .unwrap();
        prop_assert_eq!(exact.vertices().collect::<Vec<_>>(), first);
    }

    #[test]
    fn full_set_violates_every_edge(g in arb_graph(20)) {
        prop_assert_eq!(g.violated_edges(g.all_vertices()), g.edge_count());
    }

    #[test]
    fn neighbor_masks_are_symmetric(g in arb_graph(20)) {
        for i in 0..g.n() {
            for j in 0..g.n() {
                prop_assert_eq!(g.neighbors(i) >> j & 1, g.neighbors(j) >> i & 1);
            }
            prop_assert_eq!(g.neighbors(i) >> i & 1, 0);
        }
    }

    #[test]
    fn text_round_trip(g in arb_graph(16)) {
        let back: Graph = g.to_text().parse().unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.n(), g.n());
    }
}

#[test]
fn exact_mis_on_dense_er_matches_exhaustive_search() {
    let g = Graph::erdos_renyi(12, 0.8, 7).unwrap();
    let alpha = brute_force_sets(&g).iter().map(|s| s.len()).max().unwrap();
    assert_eq!(g.exact_mis().unwrap().len(), alpha);
}

#[test]
fn exact_mis_handles_forty_vertices() {
    let g = Graph::erdos_renyi(40, 0.3, 5).unwrap();
    let s = g.exact_mis().unwrap();
    assert!(g.is_maximal_independent(s));
    assert!(s.len() >= g.greedy_mis().len());
    assert!(Graph::erdos_renyi(41, 0.3, 5).unwrap().exact_mis().is_err());
}

#[test]
fn greedy_trace_on_example() {
    // Degrees 2,4,1,3,2: vertex 2 first, which removes 1; then 0 (degree 1,
    // tie with 4 broken by label) removes 3; then 4.
    let g = Graph::new(5, [(0, 1), (1, 2), (0, 3), (3, 4), (1, 3), (1, 4)]).unwrap();
    assert_eq!(g.greedy_mis(), VertexSet::from_vertices([0, 2, 4]));
    assert_eq!(Graph::complete(6).unwrap().greedy_mis(), VertexSet::from_vertices([0]));
    assert_eq!(Graph::empty(4).unwrap().greedy_mis(), VertexSet::full(4));
}

#[test]
fn parse_errors_name_the_line() {
    let err = "3 2\n0 1\n1 x\n".parse::<Graph>().unwrap_err();
    assert!(err.to_string().contains("line 3"), "{err}");
    let err = "3 2\n0 1\n".parse::<Graph>().unwrap_err();
    assert!(matches!(err, rydberg_mis::Error::Parse { .. }));
}
