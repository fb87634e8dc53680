use super::BurningSchedule;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Burning number by literal enumeration: every ordered tuple of distinct
/// centers of length 1, 2, .. up to `max_len`, in lexicographic order.
///
/// Exponential; meant as a reference for small graphs.
pub fn burning_number_oracle(g: &Graph, max_len: usize) -> Result<(usize, BurningSchedule)> {
    if max_len == 0 {
        return Err(Error::InvalidParameter("max_len must be at least 1".into()));
    }
    g.require_connected()?;
    let n = g.vertex_count();
    let limit = max_len.min(n);
    // balls[v][r] as membership masks over vertices
    let balls: Vec<Vec<Vec<bool>>> = g
        .vertices()
        .map(|v| {
            (0..limit)
                .map(|r| {
                    let mut mask = vec![false; n];
                    for u in g.ball(v, r).unwrap() {
                        mask[u] = true;
                    }
                    mask
                })
                .collect()
        })
        .collect();

    for len in 1..=limit {
        let mut tuple = Vec::with_capacity(len);
        let mut used = vec![false; n];
        if let Some(found) = enumerate(&balls, len, &mut tuple, &mut used) {
            return Ok((len, BurningSchedule::new(found)?));
        }
    }
    Err(Error::NoScheduleWithinLimit(max_len))
}

fn enumerate(
    balls: &[Vec<Vec<bool>>],
    len: usize,
    tuple: &mut Vec<Vertex>,
    used: &mut [bool],
) -> Option<Vec<Vertex>> {
    let n = balls.len();
    if tuple.len() == len {
        let covered = (0..n).all(|u| {
            tuple
                .iter()
                .enumerate()
                .any(|(i, &c)| balls[c][len - 1 - i][u])
        });
        return covered.then(|| tuple.clone());
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        used[v] = true;
        tuple.push(v);
        let hit = enumerate(balls, len, tuple, used);
        tuple.pop();
        used[v] = false;
        if hit.is_some() {
            return hit;
        }
    }
    None
}
