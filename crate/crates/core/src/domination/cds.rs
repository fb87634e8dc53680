use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use super::HopDomWitness;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// All vertices of degree at least 2. On a connected graph with three or more
/// vertices this is a connected dominating set: deleting leaves keeps the
/// rest connected, and no leaf is adjacent to another leaf.
pub fn nonleaf_cds(g: &Graph) -> Result<HopDomWitness> {
    if g.vertex_count() <= 2 {
        return Err(Error::GraphTooSmall);
    }
    g.require_connected()?;
    let inner = g.vertices().filter(|&v| g.degree(v) >= 2).collect();
    HopDomWitness::new(inner, 1)
}

/// BFS spanning tree from the first maximum-degree vertex, pruned leaf by
/// leaf (smallest index first) while the kept vertices still dominate.
///
/// Graphs with at most two vertices get their full vertex set.
pub fn greedy_cds(g: &Graph) -> Result<HopDomWitness> {
    g.require_connected()?;
    let n = g.vertex_count();
    if n <= 2 {
        return HopDomWitness::new(g.vertices().collect(), 1);
    }

    let root = g.max_degree_vertex()?;
    let mut tree_adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                tree_adj[u].push(w);
                tree_adj[w].push(u);
                queue.push_back(w);
            }
        }
    }

    let mut kept = vec![true; n];
    let mut tree_deg: Vec<usize> = tree_adj.iter().map(Vec::len).collect();
    // |N[v] ∩ kept|
    let mut dominators: Vec<usize> = g.vertices().map(|v| g.degree(v) + 1).collect();
    let mut leaves: BinaryHeap<Reverse<Vertex>> = g
        .vertices()
        .filter(|&v| tree_deg[v] == 1)
        .map(Reverse)
        .collect();

    // Dominator counts only fall, so a leaf rejected once stays rejected and
    // popping in index order matches a full rescan after every deletion.
    while let Some(Reverse(x)) = leaves.pop() {
        if !kept[x] || tree_deg[x] != 1 {
            continue;
        }
        let removable = dominators[x] >= 2 && g.neighbors(x).iter().all(|&y| dominators[y] >= 2);
        if !removable {
            continue;
        }
        kept[x] = false;
        dominators[x] -= 1;
        for &y in g.neighbors(x) {
            dominators[y] -= 1;
        }
        tree_deg[x] = 0;
        let parent = *tree_adj[x].iter().find(|&&p| kept[p]).unwrap();
        tree_deg[parent] -= 1;
        if tree_deg[parent] == 1 {
            leaves.push(Reverse(parent));
        }
    }
    HopDomWitness::new(g.vertices().filter(|&v| kept[v]).collect(), 1)
}
