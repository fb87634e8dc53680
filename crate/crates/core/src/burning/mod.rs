//! Burning schedules and the solvers that produce them.
//!
//! A schedule `v_1 .. v_L` burns `g` when the balls `ball(v_i, L - i)` cover
//! every vertex. The smallest such `L` is the burning number.

mod bounds;
mod exact;
mod greedy;
mod lift;
mod oracle;

pub use bounds::{reference_bounds, BoundsReport};
pub use exact::{burning_number_exact, coverage_lower_bound};
pub use greedy::greedy_burning;
pub use lift::lift_schedule;
pub use oracle::burning_number_oracle;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Ordered burn centers. Position `i` (0-indexed) has radius `len - 1 - i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct BurningSchedule {
    centers: Vec<Vertex>,
}

impl BurningSchedule {
    pub fn new(centers: Vec<Vertex>) -> Result<Self> {
        if centers.is_empty() {
            return Err(Error::EmptySchedule);
        }
        Ok(BurningSchedule { centers })
    }

    pub fn centers(&self) -> &[Vertex] {
        &self.centers
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn radius(&self, position: usize) -> usize {
        self.centers.len() - 1 - position
    }

    /// `(center, radius)` pairs, largest radius first.
    pub fn balls(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.centers
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, self.radius(i)))
    }

    fn has_repeated_center(&self) -> bool {
        let mut sorted = self.centers.clone();
        sorted.sort_unstable();
        sorted.windows(2).any(|w| w[0] == w[1])
    }
}

impl TryFrom<Vec<Vertex>> for BurningSchedule {
    type Error = Error;

    fn try_from(centers: Vec<Vertex>) -> Result<Self> {
        BurningSchedule::new(centers)
    }
}

impl From<BurningSchedule> for Vec<Vertex> {
    fn from(s: BurningSchedule) -> Self {
        s.centers
    }
}

/// True iff the schedule's balls cover `g`. When the schedule is no longer
/// than `g` has vertices, its centers must also be pairwise distinct.
pub fn verify_schedule(g: &Graph, s: &BurningSchedule) -> Result<bool> {
    let uncovered = uncovered_vertices(g, s)?;
    if !uncovered.is_empty() {
        return Ok(false);
    }
    Ok(s.len() > g.vertex_count() || !s.has_repeated_center())
}

/// Vertices not reached by any ball of the schedule, sorted.
pub fn uncovered_vertices(g: &Graph, s: &BurningSchedule) -> Result<Vec<Vertex>> {
    for &c in s.centers() {
        g.check_vertex(c)?;
    }
    let slack = burn_slack(g, s.balls());
    Ok(g.vertices().filter(|&v| slack[v] < 0).collect())
}

/// For each vertex, `max_i (r_i - dist(c_i, v))`, or -1 when no ball reaches it.
/// Bucketed by remaining slack so every vertex is expanded at most once.
pub(crate) fn burn_slack<I>(g: &Graph, balls: I) -> Vec<i64>
where
    I: IntoIterator<Item = (Vertex, usize)>,
{
    let mut slack = vec![-1i64; g.vertex_count()];
    let mut buckets: Vec<Vec<Vertex>> = Vec::new();
    for (c, r) in balls {
        if (r as i64) > slack[c] {
            slack[c] = r as i64;
            if buckets.len() <= r {
                buckets.resize(r + 1, Vec::new());
            }
            buckets[r].push(c);
        }
    }
    for level in (1..buckets.len()).rev() {
        let frontier = std::mem::take(&mut buckets[level]);
        for u in frontier {
            if slack[u] != level as i64 {
                continue;
            }
            for &w in g.neighbors(u) {
                if slack[w] < level as i64 - 1 {
                    slack[w] = level as i64 - 1;
                    buckets[level - 1].push(w);
                }
            }
        }
    }
    slack
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, path};

    fn sched(c: &[Vertex]) -> BurningSchedule {
        BurningSchedule::new(c.to_vec()).unwrap()
    }

    #[test]
    fn verify_examples() {
        let p4 = path(4).unwrap();
        assert!(verify_schedule(&p4, &sched(&[1, 3])).unwrap());
        assert!(!verify_schedule(&complete(5).unwrap(), &sched(&[0])).unwrap());
        assert!(verify_schedule(&path(9).unwrap(), &sched(&[2, 6, 8])).unwrap());
        assert!(!verify_schedule(&path(9).unwrap(), &sched(&[2, 6, 7])).unwrap());
    }

    #[test]
    fn out_of_range_is_an_error_not_false() {
        let p4 = path(4).unwrap();
        assert!(matches!(
            verify_schedule(&p4, &sched(&[1, 4])),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
    }

    #[test]
    fn repeated_centers() {
        let k3 = complete(3).unwrap();
        // covers, but a repeated center is not a burning sequence when L <= n
        assert!(!verify_schedule(&k3, &sched(&[0, 0])).unwrap());
        // L > n: repetition is unavoidable, only coverage counts
        let k1 = Graph::empty(1);
        assert!(verify_schedule(&k1, &sched(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn empty_schedule_rejected() {
        assert!(matches!(
            BurningSchedule::new(vec![]),
            Err(Error::EmptySchedule)
        ));
        assert!(serde_json::from_str::<BurningSchedule>("[]").is_err());
    }

    #[test]
    fn slack_matches_ball_union() {
        let g = crate::generators::random_connected(30, 15, 4).unwrap();
        let s = sched(&[5, 17, 2, 29]);
        let slack = burn_slack(&g, s.balls());
        let mut union = [false; 30];
        for (c, r) in s.balls() {
            for v in g.ball(c, r).unwrap() {
                union[v] = true;
            }
        }
        for v in 0..30 {
            assert_eq!(slack[v] >= 0, union[v]);
        }
    }
}
