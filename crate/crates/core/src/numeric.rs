//! Fixed-order reductions.
//!
//! Every sum over amplitudes goes through [`pairwise_sum_by`], which splits
//! the index range at fixed midpoints. The result depends only on the data,
//! never on how work is scheduled.

use std::ops::Add;

const LEAF: usize = 32;

/// Sums `f(i)` for `i` in `0..len` by recursive halving.
pub fn pairwise_sum_by<T, F>(len: usize, f: &F) -> T
where
    T: Copy + Default + Add<Output = T>,
    F: Fn(usize) -> T,
{
    sum_range(0, len, f)
}

fn sum_range<T, F>(lo: usize, hi: usize, f: &F) -> T
where
    T: Copy + Default + Add<Output = T>,
    F: Fn(usize) -> T,
{
    if hi - lo <= LEAF {
        let mut acc = T::default();
        for i in lo..hi {
            acc = acc + f(i);
        }
        acc
    } else {
        let mid = lo + (hi - lo) / 2;
        sum_range(lo, mid, f) + sum_range(mid, hi, f)
    }
}

pub fn pairwise_sum(values: &[f64]) -> f64 {
    pairwise_sum_by(values.len(), &|i| values[i])
}

/// `2 * sqrt(sum_{j<k} mu_j mu_k)`, evaluated without the cancellation that
/// `sqrt(2 (1 - sum mu^2))` suffers near product states.
pub fn concurrence_of_weights(weights: &[f64]) -> f64 {
    let mut sorted: Vec<f64> = weights.iter().map(|w| w.max(0.0)).collect();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let mut prefix = 0.0;
    let mut cross = 0.0;
    for w in sorted {
        cross += w * prefix;
        prefix += w;
    }
    2.0 * cross.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive_on_small_input() {
        let v: Vec<f64> = (0..1000).map(|i| i as f64).collect();
        assert_eq!(pairwise_sum(&v), 499_500.0);
    }

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(pairwise_sum(&[]), 0.0);
    }

    #[test]
    fn cross_term_concurrence() {
        assert_eq!(concurrence_of_weights(&[1.0, 0.0]), 0.0);
        assert!((concurrence_of_weights(&[0.5, 0.5]) - 1.0).abs() < 1e-15);
        // tiny weight keeps its relative precision
        let c = concurrence_of_weights(&[1.0 - 1e-30, 1e-30]);
        assert!((c - 2e-15).abs() < 1e-28);
    }
}
