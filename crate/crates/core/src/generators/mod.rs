//! Deterministic graph families and seeded random families.

mod random;

pub use random::{random_connected, random_regular, random_tree, Rng, Seed};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "complete graph needs n >= 1".into(),
        ));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves < 1 {
        return Err(Error::InvalidParameter(
            "star needs at least one leaf".into(),
        ));
    }
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Center 0 with `legs` disjoint paths of `leg_len` vertices attached.
/// Leg `j` occupies vertices `1 + j*leg_len ..= (j+1)*leg_len`, innermost first.
pub fn spider(legs: usize, leg_len: usize) -> Result<Graph> {
    if legs < 1 || leg_len < 1 {
        return Err(Error::InvalidParameter(
            "spider needs legs >= 1 and leg_len >= 1".into(),
        ));
    }
    let n = 1 + legs * leg_len;
    let mut edges = Vec::with_capacity(n - 1);
    for j in 0..legs {
        let first = 1 + j * leg_len;
        edges.push((0, first));
        for i in 1..leg_len {
            edges.push((first + i - 1, first + i));
        }
    }
    Graph::from_edges(n, edges)
}

/// Cyclic chain of `blocks` copies of `K_{block_order}` minus an edge.
///
/// Block `i` uses vertices `i*block_order .. (i+1)*block_order`; the missing
/// edge joins its first and last vertex, and the last vertex of block `i`
/// links to the first vertex of block `i+1 (mod blocks)`. Every vertex ends up
/// with degree `block_order - 1`.
pub fn necklace(block_order: usize, blocks: usize) -> Result<Graph> {
    if block_order < 4 || blocks < 3 {
        return Err(Error::InvalidParameter(
            "necklace needs block_order >= 4 and blocks >= 3".into(),
        ));
    }
    let mut edges = Vec::new();
    for i in 0..blocks {
        let base = i * block_order;
        let (first, last) = (base, base + block_order - 1);
        for u in base..=last {
            for v in u + 1..=last {
                if (u, v) != (first, last) {
                    edges.push((u, v));
                }
            }
        }
        let next_first = ((i + 1) % blocks) * block_order;
        edges.push((last.min(next_first), last.max(next_first)));
    }
    let g = Graph::from_edges(blocks * block_order, edges)?;
    debug_assert!(g.vertices().all(|v| g.degree(v) == block_order - 1));
    Ok(g)
}
