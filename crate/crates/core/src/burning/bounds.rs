use serde::Serialize;

use crate::error::{Error, Result};

/// Closed-form reference values for a graph with `n` vertices and minimum
/// degree `k_min`. `thm1_ref` is a reference value, not a guaranteed bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: u64,
    pub k_min: u64,
    /// `ceil(sqrt(n))`
    pub sqrt_ceil: u64,
    /// `3 * floor(n / (k + 1)) - 2`
    pub lemma2_size: i64,
    /// `ceil(sqrt(3n / (k + 1)))`
    pub thm1_ref: u64,
    /// `2 * ceil(sqrt(n)) + 1`
    pub bonato_upper: u64,
}

pub fn reference_bounds(n: u64, k: u64) -> Result<BoundsReport> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "reference bounds need n >= 1".into(),
        ));
    }
    if k >= n {
        return Err(Error::InvalidParameter(format!(
            "minimum degree {k} must be below n = {n}"
        )));
    }
    let sqrt_ceil = ceil_sqrt_ratio(n, 1);
    Ok(BoundsReport {
        n,
        k_min: k,
        sqrt_ceil,
        lemma2_size: 3 * (n / (k + 1)) as i64 - 2,
        thm1_ref: ceil_sqrt_ratio(3 * n, k + 1),
        bonato_upper: 2 * sqrt_ceil + 1,
    })
}

/// Smallest `x` with `x^2 * den >= num`.
fn ceil_sqrt_ratio(num: u64, den: u64) -> u64 {
    let mut x = ((num as f64 / den as f64).sqrt() as u64).saturating_sub(1);
    while (x as u128) * (x as u128) * (den as u128) < num as u128 {
        x += 1;
    }
    x
}
