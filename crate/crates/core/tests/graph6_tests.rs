mod common;

use adrg_core::corpus::{generate, FamilySpec};
use adrg_core::graph::Graph;
use adrg_core::graph6::{encode_graph6, parse_graph6};
use common::graph6_oracle;
use proptest::prelude::*;

#[test]
fn c5_fixed_bytes() {
    let g = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
    let rec = encode_graph6(&g).unwrap();
    assert_eq!(rec, b"Dhc", "hand-encoded C5 record");
    let oracle = graph6_oracle::encode(5, |u, v| g.has_edge(u, v));
    assert_eq!(rec, oracle);
}

#[test]
fn named_corpus_matches_oracle_codec() {
    for (name, g) in common::named_corpus() {
        let rec = encode_graph6(&g).unwrap();
        let oracle = graph6_oracle::encode(g.n(), |u, v| g.has_edge(u, v));
        assert_eq!(rec, oracle, "{name}: encoder disagrees with oracle");
        let (n, edges) = graph6_oracle::decode(&rec);
        let oracle_graph = Graph::build(n, edges).unwrap();
        let parsed = parse_graph6(&rec).unwrap();
        assert_eq!(parsed, oracle_graph, "{name}: parser disagrees with oracle");
    }
}

#[test]
fn distance_table_matches_floyd_warshall() {
    for spec in common::random_specs(12) {
        let g = generate(&spec).unwrap();
        let oracle = common::floyd_warshall(g.n(), g.edges());
        for u in 0..g.n() {
            for v in 0..g.n() {
                assert_eq!(g.dist(u, v), oracle[u][v], "dist({u},{v}) in {spec:?}");
            }
        }
    }
}

proptest! {
    #[test]
    fn roundtrip_random_graphs(n in 1usize..40, edge_bits in proptest::collection::vec(any::<bool>(), 0..800)) {
        let mut edges = Vec::new();
        let mut idx = 0;
        'outer: for v in 1..n {
            for u in 0..v {
                if idx >= edge_bits.len() {
                    break 'outer;
                }
                if edge_bits[idx] {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        let g = Graph::build(n, edges).unwrap();
        let rec = encode_graph6(&g).unwrap();
        let back = parse_graph6(&rec).unwrap();
        prop_assert_eq!(&back, &g);
        let rec2 = encode_graph6(&back).unwrap();
        prop_assert_eq!(rec, rec2);
    }

    #[test]
    fn distance_matrices_partition(seed in 0u64..500) {
        let g = generate(&FamilySpec::RandomRegular { n: 16, degree: 3, seed }).unwrap();
        let dm = g.distance_matrices();
        // Σ_i A_i = J entrywise, and the A_i have disjoint supports
        let mut total = adrg_core::mat::Mat::zeros(g.n());
        for i in 0..dm.len() {
            total.add_scaled(1.0, dm.get(i));
        }
        prop_assert_eq!(total.max_abs_diff(&adrg_core::mat::Mat::ones(g.n())), 0.0);
        for i in 0..dm.len() {
            for j in (i + 1)..dm.len() {
                prop_assert_eq!(dm.get(i).hadamard(dm.get(j)).max_abs(), 0.0);
            }
        }
    }
}
