use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Distances from a source set. `None` marks an unreachable vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMap {
    sources: Vec<Vertex>,
    dist: Vec<Option<usize>>,
}

impl DistanceMap {
    pub(super) fn new(sources: Vec<Vertex>, dist: Vec<Option<usize>>) -> Self {
        DistanceMap { sources, dist }
    }

    pub fn sources(&self) -> &[Vertex] {
        &self.sources
    }

    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.dist[v]
    }

    pub fn as_vec(&self) -> Vec<Option<usize>> {
        self.dist.clone()
    }

    pub fn all_reachable(&self) -> bool {
        self.dist.iter().all(Option::is_some)
    }

    /// Largest distance over all vertices, `None` if some vertex is unreachable.
    pub fn max_distance(&self) -> Option<usize> {
        self.dist.iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// Number of vertices at distance at most `radius`.
    pub fn count_within(&self, radius: usize) -> usize {
        self.dist
            .iter()
            .filter(|d| matches!(d, Some(d) if *d <= radius))
            .count()
    }
}

/// All-pairs distances of a connected graph, row-major.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut dist = vec![u32::MAX; n * n];
        let mut queue = Vec::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let du = row[u];
                for &w in g.neighbors(u) {
                    if row[w] == u32::MAX {
                        row[w] = du + 1;
                        queue.push(w);
                    }
                }
            }
            if queue.len() != n {
                return Err(Error::Disconnected);
            }
        }
        Ok(DistanceMatrix { n, dist })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> usize {
        self.dist[u * self.n + v] as usize
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// `max_ball[r]` is the largest `|ball(v, r)|` over all `v`, for `r < limit`.
    pub fn max_ball_sizes(&self, limit: usize) -> Vec<usize> {
        let mut best = vec![0usize; limit];
        let mut hist = vec![0usize; limit];
        for u in 0..self.n {
            hist.iter_mut().for_each(|h| *h = 0);
            for &d in self.row(u) {
                if (d as usize) < limit {
                    hist[d as usize] += 1;
                }
            }
            let mut acc = 0;
            for r in 0..limit {
                acc += hist[r];
                best[r] = best[r].max(acc);
            }
        }
        best
    }
}
