//! Immutable simple undirected graphs over dense vertex indices `0..n`.

mod distance;
mod edgelist;

pub use distance::{DistanceMap, DistanceMatrix};
pub use edgelist::{parse_edge_list, write_edge_list};

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

/// Bijection between a vertex subset of a graph and the vertices of the
/// induced subgraph built from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    to_old: Vec<Vertex>,
    to_new: Vec<Option<Vertex>>,
}

impl Relabeling {
    pub fn to_old(&self, new: Vertex) -> Vertex {
        self.to_old[new]
    }

    pub fn to_new(&self, old: Vertex) -> Option<Vertex> {
        self.to_new.get(old).copied().flatten()
    }

    /// The subset, in increasing order of original index.
    pub fn original_vertices(&self) -> &[Vertex] {
        &self.to_old
    }

    pub fn len(&self) -> usize {
        self.to_old.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_old.is_empty()
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        check_vertex(v, self.vertex_count())
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).min().ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).max().ok_or(Error::EmptyGraph)
    }

    /// Smallest-index vertex among those of maximum degree.
    pub fn max_degree_vertex(&self) -> Result<Vertex> {
        let max = self.max_degree()?;
        Ok(self.vertices().find(|&v| self.degree(v) == max).unwrap())
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let dist = self.multi_source_bfs(&[0])?;
        Ok(dist.all_reachable())
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected()? {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Shortest-path distances from every vertex to its nearest source.
    pub fn multi_source_bfs(&self, sources: &[Vertex]) -> Result<DistanceMap> {
        if sources.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            self.check_vertex(s)?;
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        let mut source_set = sources.to_vec();
        source_set.sort_unstable();
        source_set.dedup();
        Ok(DistanceMap::new(source_set, dist))
    }

    /// All vertices within `radius` of `center`, sorted.
    pub fn ball(&self, center: Vertex, radius: usize) -> Result<Vec<Vertex>> {
        self.check_vertex(center)?;
        let mut seen = vec![false; self.vertex_count()];
        seen[center] = true;
        let mut frontier = vec![center];
        let mut out = vec![center];
        for _ in 0..radius {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend_from_slice(&next);
            frontier = next;
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Subgraph induced by `subset` (duplicates ignored), relabeled to
    /// `0..|subset|` in increasing order of original index.
    pub fn induced_subgraph(&self, subset: &[Vertex]) -> Result<(Graph, Relabeling)> {
        if subset.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut to_old = subset.to_vec();
        for &v in &to_old {
            self.check_vertex(v)?;
        }
        to_old.sort_unstable();
        to_old.dedup();
        let mut to_new = vec![None; self.vertex_count()];
        for (i, &v) in to_old.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let mut adj = Vec::with_capacity(to_old.len());
        let mut edge_count = 0;
        for &v in &to_old {
            // neighbor lists stay sorted because relabeling is monotone
            let list: Vec<Vertex> = self.adj[v].iter().filter_map(|&w| to_new[w]).collect();
            edge_count += list.len();
            adj.push(list);
        }
        let g = Graph {
            adj,
            edge_count: edge_count / 2,
        };
        Ok((g, Relabeling { to_old, to_new }))
    }
}

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}
