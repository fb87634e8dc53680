mod common;

use burnkit::domination::{greedy_cds, verify_hop_domination, HopDomWitness};
use burnkit::generators::{
    complete, cycle, necklace, path, random_connected, random_regular, spider, star,
};
use burnkit::reduction::{
    graph_value, lift_cds, reduce_to_core, replay, simplify, value_monotone_check, MultiGraph,
};
use burnkit::Graph;
use proptest::prelude::*;

/// Smoothing with simple-graph semantics: the replacement edge is dropped if
/// it already exists.
fn smooth_simple(g: &Graph, v: usize) -> Graph {
    let (x, y) = (g.neighbors(v)[0], g.neighbors(v)[1]);
    let mut edges: Vec<(usize, usize)> = g.edges().filter(|&(a, b)| a != v && b != v).collect();
    if !g.has_edge(x, y) {
        edges.push((x.min(y), x.max(y)));
    }
    Graph::from_edges(g.vertex_count(), edges).unwrap()
}

fn simple_value(g: &Graph) -> i64 {
    // vertex v is isolated after smoothing and contributes 0
    graph_value(&MultiGraph::from(g))
}

#[test]
fn simple_semantics_can_lose_value() {
    // triangle v=0, x=1, y=2 with pendants 3 on x and 4 on y
    let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap();
    assert_eq!(simple_value(&g), 0);
    assert_eq!(simple_value(&smooth_simple(&g, 0)), -2);
    // the multigraph reduction of the same graph never loses value
    assert!(value_monotone_check(&MultiGraph::from(&g)).unwrap());
}

#[test]
fn named_families_are_monotone() {
    let mut family: Vec<Graph> = Vec::new();
    for n in 1..12 {
        family.push(path(n).unwrap());
        family.push(complete(n).unwrap());
        family.push(star(n).unwrap());
    }
    for n in 3..12 {
        family.push(cycle(n).unwrap());
    }
    for legs in 1..5 {
        for len in 1..4 {
            family.push(spider(legs, len).unwrap());
        }
    }
    for m in 3..6 {
        family.push(necklace(4, m).unwrap());
        family.push(necklace(6, m).unwrap());
    }
    family.push(random_regular(30, 3, 1).unwrap());
    family.push(common::petersen());
    for g in family {
        assert!(value_monotone_check(&MultiGraph::from(&g)).unwrap());
    }
}

#[test]
fn one_step_costs_at_most_one_cds_vertex() {
    let mut checked = 0;
    for seed in 0..200u64 {
        let g = common::random_graph(3 + seed as usize % 8, seed);
        let m = MultiGraph::from(&g);
        let (_, trace) = reduce_to_core(&m).unwrap();
        let Some(first) = trace.steps.first() else {
            continue;
        };
        let one = burnkit::reduction::ReductionTrace {
            steps: vec![*first],
        };
        let reduced = replay(&m, &one).unwrap();
        let before = common::min_cds_size(&g);
        let after = common::min_cds_size(&reduced.simple_graph());
        assert!(before <= after + 1, "seed {seed}: {before} > {after} + 1");
        checked += 1;
    }
    assert!(checked >= 50);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reduction_invariants(n in 1usize..100, extra in 0usize..60, seed in any::<u64>()) {
        let cap = n * (n - 1) / 2 - (n - 1);
        let g = random_connected(n, extra.min(cap), seed).unwrap();
        let m = MultiGraph::from(&g);
        prop_assert!(value_monotone_check(&m).unwrap());

        let (core, trace) = reduce_to_core(&m).unwrap();
        prop_assert_eq!(&replay(&m, &trace).unwrap(), &core);
        let min_deg = (0..core.len()).map(|v| core.graph.degree(v)).min().unwrap();
        prop_assert!(core.len() <= 2 || min_deg >= 3);
        prop_assert!(simplify(&core.graph).is_connected().unwrap());

        let core_cds: Vec<usize> = greedy_cds(&core.simple_graph()).unwrap()
            .vertices().iter().map(|&i| core.labels[i]).collect();
        let lifted = lift_cds(&trace, &core_cds, &m).unwrap();
        prop_assert!(lifted.len() <= core_cds.len() + trace.len());
        let w = HopDomWitness::new(lifted, 1).unwrap();
        prop_assert!(verify_hop_domination(&g, &w).unwrap());
    }

    #[test]
    fn multigraph_degree_sum(n in 1usize..30, raw in prop::collection::vec((0usize..30, 0usize..30), 0..60)) {
        let edges: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (a % n, b % n)).collect();
        let m = MultiGraph::from_edges(n, edges.clone()).unwrap();
        let total: usize = (0..n).map(|v| m.degree(v)).sum();
        prop_assert_eq!(total, 2 * edges.len());
    }
}
