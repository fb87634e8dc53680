mod common;

use burnkit::generators::random_connected;
use burnkit::graph::{parse_edge_list, write_edge_list};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = burnkit::Graph> {
    (1usize..50, 0usize..60, any::<u64>()).prop_map(|(n, extra, seed)| {
        let cap = n * (n - 1) / 2 - (n - 1);
        random_connected(n, extra.min(cap), seed).unwrap()
    })
}

proptest! {
    #[test]
    fn bfs_matches_relaxation(g in arb_graph(), picks in prop::collection::vec(any::<usize>(), 1..4)) {
        let n = g.vertex_count();
        let sources: Vec<usize> = picks.iter().map(|p| p % n).collect();
        let bfs = g.multi_source_bfs(&sources).unwrap();
        prop_assert_eq!(bfs.as_vec(), common::relaxed_distances(&g, &sources));
        for (u, v) in g.edges() {
            let (a, b) = (bfs.get(u).unwrap(), bfs.get(v).unwrap());
            prop_assert!(a.abs_diff(b) <= 1);
        }
        for v in g.vertices() {
            prop_assert_eq!(bfs.get(v) == Some(0), sources.contains(&v));
        }
    }

    #[test]
    fn ball_is_bfs_sublevel(g in arb_graph(), pick in any::<usize>()) {
        let v = pick % g.vertex_count();
        let dist = g.multi_source_bfs(&[v]).unwrap();
        let diameter = dist.max_distance().unwrap();
        for r in 0..=diameter {
            let expected: Vec<usize> =
                g.vertices().filter(|&u| dist.get(u).unwrap() <= r).collect();
            prop_assert_eq!(g.ball(v, r).unwrap(), expected);
        }
    }

    #[test]
    fn induced_subgraph_relabels_back(g in arb_graph(), mask in any::<u64>()) {
        let subset: Vec<usize> = g.vertices().filter(|&v| mask >> (v % 64) & 1 == 1).collect();
        prop_assume!(!subset.is_empty());
        let (h, map) = g.induced_subgraph(&subset).unwrap();
        let back: Vec<(usize, usize)> =
            h.edges().map(|(a, b)| (map.to_old(a), map.to_old(b))).collect();
        let inside: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(a, b)| subset.contains(&a) && subset.contains(&b))
            .collect();
        prop_assert_eq!(back, inside);
        prop_assert_eq!(h.vertex_count(), subset.len());
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        let text = write_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn adjacency_is_symmetric(g in arb_graph()) {
        let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        for v in g.vertices() {
            for &w in g.neighbors(v) {
                prop_assert!(g.has_edge(w, v));
                prop_assert_ne!(v, w);
            }
        }
    }
}
