use super::BurningSchedule;
use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph, Vertex};

/// Smallest `L` such that the largest balls of radii `0..L` could together
/// hold all `n` vertices. Admissible: never exceeds the burning number.
pub fn coverage_lower_bound(g: &Graph) -> Result<usize> {
    let dm = DistanceMatrix::new(g)?;
    Ok(lower_bound(&dm, &dm.max_ball_sizes(dm.len())))
}

pub(crate) fn lower_bound(dm: &DistanceMatrix, max_ball: &[usize]) -> usize {
    let n = dm.len();
    let mut total = 0;
    for (i, &size) in max_ball.iter().enumerate() {
        total += size;
        if total >= n {
            return i + 1;
        }
    }
    n
}

/// Exact burning number with a witness.
///
/// Iterative deepening on `L` from [`coverage_lower_bound`]. For a fixed `L`
/// the search picks the uncovered vertex farthest from the centers placed so
/// far and branches over every (unused radius, unused center) pair whose ball
/// contains it, larger radii and smaller centers first. A branch is cut when
/// the largest balls of the unused radii cannot hold the uncovered vertices.
pub fn burning_number_exact(g: &Graph) -> Result<(usize, BurningSchedule)> {
    let dm = DistanceMatrix::new(g)?;
    let n = dm.len();
    let max_ball = dm.max_ball_sizes(n);
    for len in lower_bound(&dm, &max_ball)..=n {
        let mut search = Search::new(&dm, len, &max_ball);
        if search.run() {
            return Ok((len, search.into_schedule()));
        }
    }
    unreachable!("a connected graph burns within n steps")
}

struct Search<'a> {
    dm: &'a DistanceMatrix,
    max_ball: &'a [usize],
    cover: Vec<u32>,
    uncovered: usize,
    /// center assigned to each radius
    by_radius: Vec<Option<Vertex>>,
    used: Vec<bool>,
    placed: Vec<Vertex>,
}

impl<'a> Search<'a> {
    fn new(dm: &'a DistanceMatrix, len: usize, max_ball: &'a [usize]) -> Self {
        let n = dm.len();
        Search {
            dm,
            max_ball,
            cover: vec![0; n],
            uncovered: n,
            by_radius: vec![None; len],
            used: vec![false; n],
            placed: Vec::with_capacity(len),
        }
    }

    fn run(&mut self) -> bool {
        if self.uncovered == 0 {
            return true;
        }
        let capacity: usize = self
            .by_radius
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(r, _)| self.max_ball[r])
            .sum();
        if capacity < self.uncovered {
            return false;
        }
        let target = self.branch_vertex();
        for r in (0..self.by_radius.len()).rev() {
            if self.by_radius[r].is_some() {
                continue;
            }
            for c in 0..self.dm.len() {
                if self.used[c] || self.dm.get(c, target) > r {
                    continue;
                }
                self.place(c, r);
                if self.run() {
                    return true;
                }
                self.unplace(c, r);
            }
        }
        false
    }

    /// Uncovered vertex at maximum distance from the placed centers,
    /// smallest index on ties.
    fn branch_vertex(&self) -> Vertex {
        let mut best = (0, usize::MAX);
        let mut found = false;
        for u in 0..self.dm.len() {
            if self.cover[u] > 0 {
                continue;
            }
            let d = self
                .placed
                .iter()
                .map(|&c| self.dm.get(c, u))
                .min()
                .unwrap_or(usize::MAX);
            if !found || d > best.0 {
                best = (d, u);
                found = true;
            }
        }
        best.1
    }

    fn place(&mut self, c: Vertex, r: usize) {
        for (v, &d) in self.dm.row(c).iter().enumerate() {
            if d as usize <= r {
                if self.cover[v] == 0 {
                    self.uncovered -= 1;
                }
                self.cover[v] += 1;
            }
        }
        self.by_radius[r] = Some(c);
        self.used[c] = true;
        self.placed.push(c);
    }

    fn unplace(&mut self, c: Vertex, r: usize) {
        for (v, &d) in self.dm.row(c).iter().enumerate() {
            if d as usize <= r {
                self.cover[v] -= 1;
                if self.cover[v] == 0 {
                    self.uncovered += 1;
                }
            }
        }
        self.by_radius[r] = None;
        self.used[c] = false;
        self.placed.pop();
    }

    /// Radii left open once everything is covered get the smallest unused
    /// vertices, so centers stay distinct.
    fn into_schedule(mut self) -> BurningSchedule {
        let mut spare = 0;
        for r in (0..self.by_radius.len()).rev() {
            if self.by_radius[r].is_none() {
                while self.used[spare] {
                    spare += 1;
                }
                self.used[spare] = true;
                self.by_radius[r] = Some(spare);
            }
        }
        let centers = self.by_radius.iter().rev().map(|c| c.unwrap()).collect();
        BurningSchedule::new(centers).unwrap()
    }
}
