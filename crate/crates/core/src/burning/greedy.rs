use super::exact::lower_bound;
use super::BurningSchedule;
use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph, Vertex};

/// Max-coverage heuristic. For `L` from the coverage lower bound upward,
/// radii `L-1, L-2, .., 0` each take the unused center whose ball holds the
/// most uncovered vertices (smallest index on ties); the first `L` that ends
/// fully covered is returned.
pub fn greedy_burning(g: &Graph) -> Result<BurningSchedule> {
    let dm = DistanceMatrix::new(g)?;
    let n = dm.len();
    let max_ball = dm.max_ball_sizes(n);
    for len in lower_bound(&dm, &max_ball)..=n {
        if let Some(centers) = greedy_run(&dm, &max_ball, len) {
            return BurningSchedule::new(centers);
        }
    }
    unreachable!("radius n-1 covers a connected graph")
}

fn greedy_run(dm: &DistanceMatrix, max_ball: &[usize], len: usize) -> Option<Vec<Vertex>> {
    let n = dm.len();
    let mut uncovered: Vec<Vertex> = (0..n).collect();
    let mut used = vec![false; n];
    let mut centers = Vec::with_capacity(len);
    for r in (0..len).rev() {
        // the remaining radii cannot finish the job: this L fails regardless
        let capacity: usize = max_ball[..=r].iter().sum();
        if capacity < uncovered.len() {
            return None;
        }
        let mut best = (0usize, usize::MAX);
        for c in (0..n).filter(|&c| !used[c]) {
            let row = dm.row(c);
            let gain = uncovered.iter().filter(|&&v| row[v] as usize <= r).count();
            if best.1 == usize::MAX || gain > best.0 {
                best = (gain, c);
            }
        }
        let c = best.1;
        used[c] = true;
        centers.push(c);
        let row = dm.row(c);
        uncovered.retain(|&v| row[v] as usize > r);
    }
    uncovered.is_empty().then_some(centers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::verify_schedule;
    use crate::generators::{complete, path};

    #[test]
    fn examples() {
        assert_eq!(greedy_burning(&complete(6).unwrap()).unwrap().len(), 2);
        let p9 = greedy_burning(&path(9).unwrap()).unwrap();
        assert_eq!(p9.centers(), &[2, 6, 8]);
        let p2 = greedy_burning(&path(2).unwrap()).unwrap();
        assert_eq!(p2.centers(), &[0, 1]);
        assert!(verify_schedule(&path(2).unwrap(), &p2).unwrap());
    }
}
