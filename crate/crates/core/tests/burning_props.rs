mod common;

use burnkit::burning::{
    burning_number_exact, burning_number_oracle, coverage_lower_bound, greedy_burning,
    lift_schedule, verify_schedule,
};
use burnkit::generators::{cycle, path, random_connected};
use burnkit::witness::{to_json, ScheduleWitness};
use proptest::prelude::*;

#[test]
fn exact_matches_oracle_on_random_small_graphs() {
    for seed in 0..120u64 {
        let n = 2 + (seed as usize % 8);
        let g = common::random_graph(n, seed);
        let (exact, w) = burning_number_exact(&g).unwrap();
        let (oracle, _) = burning_number_oracle(&g, n).unwrap();
        assert_eq!(exact, oracle, "seed {seed}");
        assert!(verify_schedule(&g, &w).unwrap());
    }
}

#[test]
fn cycle_sixteen_by_enumeration() {
    let g = cycle(16).unwrap();
    let (oracle, _) = burning_number_oracle(&g, 4).unwrap();
    assert_eq!(oracle, 4);
    assert_eq!(burning_number_exact(&g).unwrap().0, 4);
}

#[test]
fn greedy_on_p9_agrees_with_oracle() {
    let g = path(9).unwrap();
    let (oracle, _) = burning_number_oracle(&g, 9).unwrap();
    assert_eq!(greedy_burning(&g).unwrap().len(), oracle);
}

#[test]
fn paths_up_to_thirty_six() {
    for n in 1..=36usize {
        let (len, w) = burning_number_exact(&path(n).unwrap()).unwrap();
        let expected = (1..).find(|k: &usize| k * k >= n).unwrap();
        assert_eq!(len, expected, "P_{n}");
        assert!(verify_schedule(&path(n).unwrap(), &w).unwrap());
    }
}

#[test]
fn solvers_are_deterministic() {
    let g = random_connected(14, 6, 99).unwrap();
    let a = to_json(&ScheduleWitness::checked(&g, &burning_number_exact(&g).unwrap().1).unwrap());
    let b = to_json(&ScheduleWitness::checked(&g, &burning_number_exact(&g).unwrap().1).unwrap());
    assert_eq!(a, b);
    let a = to_json(&ScheduleWitness::checked(&g, &greedy_burning(&g).unwrap()).unwrap());
    let b = to_json(&ScheduleWitness::checked(&g, &greedy_burning(&g).unwrap()).unwrap());
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bounds_sandwich_exact(n in 1usize..14, extra in 0usize..12, seed in any::<u64>()) {
        let cap = n * (n - 1) / 2 - (n - 1);
        let g = random_connected(n, extra.min(cap), seed).unwrap();
        let lb = coverage_lower_bound(&g).unwrap();
        let (exact, w) = burning_number_exact(&g).unwrap();
        let greedy = greedy_burning(&g).unwrap();
        prop_assert!(lb <= exact);
        prop_assert!(exact <= greedy.len());
        prop_assert!(verify_schedule(&g, &w).unwrap());
        prop_assert!(verify_schedule(&g, &greedy).unwrap());
    }

    #[test]
    fn lift_adds_exactly_hops(n in 3usize..40, extra in 0usize..20, seed in any::<u64>(), hops in 0usize..4) {
        let cap = n * (n - 1) / 2 - (n - 1);
        let g = random_connected(n, extra.min(cap), seed).unwrap();
        // H = all vertices within hops of... take a BFS ball around vertex 0 and
        // the minimal hop count that reaches the rest
        let h_vertices = g.ball(0, 1).unwrap();
        let reach = g.multi_source_bfs(&h_vertices).unwrap().max_distance().unwrap();
        let hops = reach + hops;
        let (h, map) = g.induced_subgraph(&h_vertices).unwrap();
        let s = greedy_burning(&h).unwrap();
        let lifted = lift_schedule(&g, &map, &s, hops).unwrap();
        prop_assert_eq!(lifted.len(), s.len() + hops);
        prop_assert!(verify_schedule(&g, &lifted).unwrap());
    }
}
