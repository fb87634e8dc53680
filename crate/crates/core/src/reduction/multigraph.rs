use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Undirected multigraph. Parallel edges and loops are kept; a loop adds 2 to
/// its endpoint's degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    // adj[v][w] = multiplicity of {v, w}; adj[v][v] counts loops at v
    adj: Vec<BTreeMap<Vertex, usize>>,
}

impl MultiGraph {
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![BTreeMap::new(); n];
        for (u, v) in edges {
            if let Some(&bad) = [u, v].iter().find(|&&x| x >= n) {
                return Err(Error::VertexOutOfRange { vertex: bad, n });
            }
            *adj[u].entry(v).or_insert(0) += 1;
            if u != v {
                *adj[v].entry(u).or_insert(0) += 1;
            }
        }
        Ok(MultiGraph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        degree_of(v, &self.adj[v])
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.adj[u].get(&v).copied().unwrap_or(0)
    }

    /// Edge multiset as `(u, v)` with `u <= v`, repeated per copy, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (u, row) in self.adj.iter().enumerate() {
            for (&v, &m) in row.range(u..) {
                out.extend(std::iter::repeat_n((u, v), m));
            }
        }
        out
    }

    pub(crate) fn rows(&self) -> &[BTreeMap<Vertex, usize>] {
        &self.adj
    }

    pub(crate) fn from_rows(adj: Vec<BTreeMap<Vertex, usize>>) -> Self {
        MultiGraph { adj }
    }
}

impl From<&Graph> for MultiGraph {
    fn from(g: &Graph) -> Self {
        let adj = g
            .vertices()
            .map(|v| g.neighbors(v).iter().map(|&w| (w, 1)).collect())
            .collect();
        MultiGraph { adj }
    }
}

pub(crate) fn degree_of(v: Vertex, row: &BTreeMap<Vertex, usize>) -> usize {
    row.iter()
        .map(|(&w, &m)| if w == v { 2 * m } else { m })
        .sum()
}

/// Vertices of degree at least 3 minus vertices of degree 1.
pub fn graph_value(g: &MultiGraph) -> i64 {
    (0..g.vertex_count())
        .map(|v| match g.degree(v) {
            1 => -1,
            d if d >= 3 => 1,
            _ => 0,
        })
        .sum()
}

/// Drops loops and collapses parallel edges.
pub fn simplify(m: &MultiGraph) -> Graph {
    let edges = m
        .adj
        .iter()
        .enumerate()
        .flat_map(|(u, row)| row.range(u + 1..).map(move |(&v, _)| (u, v)));
    Graph::from_edges(m.vertex_count(), edges).expect("simple edges")
}
