//! Seeded random families.
//!
//! All randomness comes from SplitMix64 whose initial state is the seed
//! itself (the standard `0x9e3779b97f4a7c15` increment and finalizer).
//! Bounded integers are drawn by rejection: with `zone = u64::MAX - (u64::MAX % bound)`, draw `x` until
//! `x < zone`, then return `x % bound`. Shuffles are Fisher-Yates from the
//! back (`i = len-1 .. 1`, swap `i` with `below(i+1)`). These three rules are
//! the whole contract, so any implementation of them reproduces the same
//! graphs from the same seed.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub type Seed = u64;

const REGULAR_RESTARTS: usize = 1000;

pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: Seed) -> Self {
        Rng(SplitMix64::from_seed(seed.to_le_bytes()))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..bound`. Panics if `bound == 0`.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0);
        let bound = bound as u64;
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let x = self.next_u64();
            if x < zone {
                return (x % bound) as usize;
            }
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

/// Simple connected `k`-regular graph on `n` vertices.
///
/// Stubs are paired from a shuffled list; pairs that would form a loop or a
/// repeated edge go back into the pool and are re-paired in the next round.
/// The attempt restarts when no admissible pair remains in the pool, and also
/// when the finished graph is disconnected.
pub fn random_regular(n: usize, k: usize, seed: Seed) -> Result<Graph> {
    if k >= n {
        return Err(Error::InvalidParameter(format!(
            "random_regular needs k < n (k = {k}, n = {n})"
        )));
    }
    if (n * k) % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "random_regular needs n*k even (n = {n}, k = {k})"
        )));
    }
    let mut rng = Rng::new(seed);
    for _ in 0..REGULAR_RESTARTS {
        if let Some(edges) = try_pairing(n, k, &mut rng) {
            let g = Graph::from_edges(n, edges)?;
            if g.is_connected()? {
                return Ok(g);
            }
        }
    }
    Err(Error::RetryBudgetExhausted(REGULAR_RESTARTS))
}

fn try_pairing(n: usize, k: usize, rng: &mut Rng) -> Option<Vec<(Vertex, Vertex)>> {
    let mut edges = BTreeSet::new();
    let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    while !stubs.is_empty() {
        let mut leftover: BTreeMap<Vertex, usize> = BTreeMap::new();
        rng.shuffle(&mut stubs);
        for pair in stubs.chunks_exact(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a != b && !edges.contains(&(a, b)) {
                edges.insert((a, b));
            } else {
                *leftover.entry(a).or_default() += 1;
                *leftover.entry(b).or_default() += 1;
            }
        }
        if !pairable(&edges, &leftover) {
            return None;
        }
        stubs = leftover
            .iter()
            .flat_map(|(&v, &c)| std::iter::repeat_n(v, c))
            .collect();
    }
    Some(edges.into_iter().collect())
}

fn pairable(edges: &BTreeSet<(Vertex, Vertex)>, leftover: &BTreeMap<Vertex, usize>) -> bool {
    if leftover.is_empty() {
        return true;
    }
    let vs: Vec<Vertex> = leftover.keys().copied().collect();
    vs.iter()
        .enumerate()
        .any(|(i, &a)| vs[i + 1..].iter().any(|&b| !edges.contains(&(a, b))))
}

/// Uniform random labeled tree via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: Seed) -> Result<Graph> {
    random_connected(n, 0, seed)
}

/// Random spanning tree (Prüfer) plus `extra_edges` distinct non-tree edges.
pub fn random_connected(n: usize, extra_edges: usize, seed: Seed) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "random_connected needs n >= 1".into(),
        ));
    }
    let capacity = n * (n - 1) / 2 - (n - 1);
    if extra_edges > capacity {
        return Err(Error::InvalidParameter(format!(
            "{extra_edges} extra edges requested, only {capacity} non-tree pairs exist"
        )));
    }
    let mut rng = Rng::new(seed);
    let mut edges: Vec<(Vertex, Vertex)> = prufer_tree(n, &mut rng);
    let mut present: HashSet<(Vertex, Vertex)> = edges.iter().copied().collect();

    if extra_edges * 2 <= capacity {
        while present.len() < n - 1 + extra_edges {
            let (a, b) = (rng.below(n), rng.below(n));
            if a == b {
                continue;
            }
            let e = (a.min(b), a.max(b));
            if present.insert(e) {
                edges.push(e);
            }
        }
    } else {
        let mut candidates: Vec<(Vertex, Vertex)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !present.contains(e))
            .collect();
        rng.shuffle(&mut candidates);
        edges.extend_from_slice(&candidates[..extra_edges]);
    }
    Graph::from_edges(n, edges)
}

fn prufer_tree(n: usize, rng: &mut Rng) -> Vec<(Vertex, Vertex)> {
    if n == 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<Vertex> = (0..n - 2).map(|_| rng.below(n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().unwrap();
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let a = leaves.pop_first().unwrap();
    let b = leaves.pop_first().unwrap();
    edges.push((a, b));
    edges
}
