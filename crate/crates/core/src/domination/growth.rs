use std::fmt::Write;

use super::HopDomWitness;
use crate::error::Result;
use crate::graph::{Graph, Vertex};

/// One extension of the growing set: `path` runs from a vertex already in
/// `H_t` to `vertex`, which sat at distance exactly 3 from `H_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthStep {
    pub t: usize,
    pub vertex: Vertex,
    pub path: [Vertex; 4],
    /// `|H_{t+1}|`
    pub size_after: usize,
    /// Number of vertices within distance 1 of `H_t`.
    pub closed_reach: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTrace {
    pub start: Vertex,
    pub min_degree: usize,
    pub steps: Vec<GrowthStep>,
    /// Number of vertices within distance 1 of the final set.
    pub final_closed_reach: usize,
}

impl GrowthTrace {
    /// CSV with columns `t,v_t,path,size_after,a_t`; the path is written as
    /// dash-separated vertices.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,v_t,path,size_after,a_t\n");
        for s in &self.steps {
            let path = s.path.map(|v| v.to_string()).join("-");
            writeln!(
                out,
                "{},{},{},{},{}",
                s.t, s.vertex, path, s.size_after, s.closed_reach
            )
            .unwrap();
        }
        out
    }

    /// `3 * floor(n / (k + 1)) - 2` for the traced graph.
    pub fn size_bound(&self, n: usize) -> i64 {
        3 * (n / (self.min_degree + 1)) as i64 - 2
    }
}

/// Grows a connected set `H` from `start` until every vertex is within
/// distance 2 of it.
///
/// While some vertex lies at distance exactly 3 from `H`, the smallest such
/// vertex is attached by a shortest path, traced back with the smallest
/// closer neighbor at each hop. On a connected graph any vertex farther out
/// has a vertex at distance 3 on its shortest path, so stopping means
/// everything is within 2. Each step adds 3 vertices and at least `k + 1`
/// newly reached ones, which caps `|H|` at `3 * floor(n / (k + 1)) - 2`.
pub fn connected_2hop_dominating(g: &Graph, start: Vertex) -> Result<(HopDomWitness, GrowthTrace)> {
    g.check_vertex(start)?;
    g.require_connected()?;
    let mut members = vec![start];
    let mut steps = Vec::new();
    loop {
        let dist = g.multi_source_bfs(&members)?;
        let closed_reach = dist.count_within(1);
        let Some(far) = g.vertices().find(|&v| dist.get(v) == Some(3)) else {
            debug_assert!(dist.max_distance().is_some_and(|d| d <= 2));
            let trace = GrowthTrace {
                start,
                min_degree: g.min_degree()?,
                steps,
                final_closed_reach: closed_reach,
            };
            return Ok((HopDomWitness::new(members, 2)?, trace));
        };

        let mut path = [far; 4];
        for i in (0..3).rev() {
            let cur = path[i + 1];
            let want = dist.get(cur).unwrap() - 1;
            path[i] = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| dist.get(w) == Some(want))
                .expect("BFS predecessor");
        }
        members.extend_from_slice(&path[1..]);
        steps.push(GrowthStep {
            t: steps.len(),
            vertex: far,
            path,
            size_after: members.len(),
            closed_reach,
        });
    }
}
