use congestion_core::contraction::{congestion, hsc, ContractionTree};
use congestion_core::Graph;
use congestion_lab::{parse_edge_list, parse_tree_for, serialize_edge_list, serialize_tree};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..10).prop_flat_map(|n| {
        let pairs = proptest::collection::vec((0..n, 0..n, 1u32..8), 0..20);
        pairs.prop_map(move |es| {
            let mut g = Graph::new(n).unwrap();
            for (u, v, w) in es {
                if u != v {
                    g.add_edge(u, v, w as f64 / 4.0).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn edge_lists_round_trip(g in arb_graph()) {
        let text = serialize_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(serialize_edge_list(&back), text);
    }

    #[test]
    fn trees_round_trip(g in arb_graph(), seed in 0u64..50) {
        let t = hsc(&g, seed, false).unwrap();
        let back: ContractionTree = parse_tree_for(&serialize_tree(&t), g.n()).unwrap();
        prop_assert_eq!(back.shape(), t.shape());
        prop_assert_eq!(congestion(&g, &back).unwrap().congestion, congestion(&g, &t).unwrap().congestion);
    }

    #[test]
    fn parser_never_panics(s in "[0-9 #\\n.x-]{0,60}") {
        let _ = parse_edge_list(&s);
    }
}
