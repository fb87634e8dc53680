#![allow(dead_code)]

use burnkit::generators::random_connected;
use burnkit::Graph;

/// Distances by repeated edge relaxation, O(n * m) rounds. `None` = unreachable.
pub fn relaxed_distances(g: &Graph, sources: &[usize]) -> Vec<Option<usize>> {
    let mut dist: Vec<Option<usize>> = vec![None; g.vertex_count()];
    for &s in sources {
        dist[s] = Some(0);
    }
    loop {
        let mut changed = false;
        for (u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                if let Some(da) = dist[a] {
                    if dist[b].is_none_or(|db| db > da + 1) {
                        dist[b] = Some(da + 1);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return dist;
        }
    }
}

fn connected_within(g: &Graph, mask: u32) -> bool {
    let first = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << first;
    let mut stack = vec![first];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if mask & (1 << w) != 0 && seen & (1 << w) == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen == mask
}

fn dominates(g: &Graph, mask: u32) -> bool {
    g.vertices()
        .all(|v| mask & (1 << v) != 0 || g.neighbors(v).iter().any(|&w| mask & (1 << w) != 0))
}

/// Minimum connected dominating set size by subset enumeration (n <= 20).
pub fn min_cds_size(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!((1..=20).contains(&n));
    let mut best = n;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < best && dominates(g, mask) && connected_within(g, mask) {
            best = size;
        }
    }
    best
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
}

/// Random connected graph with a seed-derived edge density.
pub fn random_graph(n: usize, seed: u64) -> Graph {
    let capacity = n * (n - 1) / 2 - (n - 1);
    let extra = if capacity == 0 {
        0
    } else {
        (seed as usize * 7919) % (capacity.min(2 * n) + 1)
    };
    random_connected(n, extra, seed).unwrap()
}
