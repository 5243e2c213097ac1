use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grover::{optimal_iterations, SearchParams};
use crate::numeric::pairwise_sum_by;
use crate::statevector::grover_trajectory;

/// Gap in success probability that counts as telling a target apart from
/// the oracle-free run.
pub const DISTINGUISH_EPS: f64 = 0.5;

/// Largest `n` for which every target is simulated.
const MAX_OPTIMALITY_QUBITS: u32 = 8;

/// One `(n, T)` cell of the query-lower-bound check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub n: u32,
    pub t: u64,
    /// `sum_t |A_T^{t,2} - A_T^2|`.
    pub lhs: f64,
    /// `sqrt(2) T sqrt(N)`.
    pub rhs: f64,
    pub satisfied: bool,
}

/// `T_star(n) ~ c sqrt(2^n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingFit {
    /// Constant minimising the largest relative deviation.
    pub c_minimax: f64,
    /// Least-squares constant.
    pub c_least_squares: f64,
    /// Largest `|ratio / c_minimax - 1|`.
    pub max_relative_deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimalityReport {
    pub bounds: Vec<BoundReport>,
    /// `(n, T_star)`; `None` when no `T` in range separates every target.
    pub t_star: Vec<(u32, Option<u64>)>,
    /// Fit over the `n >= 4` entries that have a `T_star`.
    pub fit: Option<ScalingFit>,
}

/// For each `n`, runs single-target search for every target `t` and compares
/// the final success probability with the oracle-free run. Between oracle
/// calls the fixed unitary is the diffusion, which leaves `|S_0>` alone, so
/// the oracle-free probability stays `1/N` (up to rounding).
///
/// `T` runs over `0..=t_max`, defaulting to `2 k*` for each `n`.
pub fn optimality_experiment(ns: &[u32], t_max: Option<u64>) -> Result<OptimalityReport> {
    let mut bounds = Vec::new();
    let mut t_star = Vec::new();
    for &n in ns {
        if n == 0 || n > MAX_OPTIMALITY_QUBITS {
            return Err(Error::InvalidQubitCount {
                n,
                min: 1,
                max: MAX_OPTIMALITY_QUBITS,
            });
        }
        let size = 1u64 << n;
        let top = match t_max {
            Some(t) => t,
            None => 2 * optimal_iterations(&SearchParams::new(n, &[0])?),
        };
        // probs[t][T] = |<t|psi_T^t>|^2
        let probs: Vec<Vec<f64>> = (0..size)
            .into_par_iter()
            .map(|target| {
                grover_trajectory(n, &[target], top)
                    .map(|traj| traj.iter().map(|s| s.probability(target as usize)).collect())
            })
            .collect::<Result<_>>()?;
        // Same interleaving without the oracle, run through the simulator so
        // that T = 0 compares identical numbers.
        let free_traj = grover_trajectory(n, &[], top)?;
        let free = |target: usize, t: u64| free_traj[t as usize].probability(target);
        let mut star = None;
        for t in 0..=top {
            let lhs = pairwise_sum_by(size as usize, &|j| (probs[j][t as usize] - free(j, t)).abs());
            let rhs = 2f64.sqrt() * t as f64 * (size as f64).sqrt();
            bounds.push(BoundReport {
                n,
                t,
                lhs,
                rhs,
                satisfied: lhs <= rhs,
            });
            let worst = probs
                .iter()
                .enumerate()
                .map(|(j, p)| p[t as usize] - free(j, t))
                .fold(f64::INFINITY, f64::min);
            if star.is_none() && worst >= DISTINGUISH_EPS {
                star = Some(t);
            }
        }
        t_star.push((n, star));
    }
    let points: Vec<(u32, u64)> = t_star
        .iter()
        .filter_map(|&(n, t)| t.filter(|_| n >= 4).map(|t| (n, t)))
        .collect();
    Ok(OptimalityReport {
        bounds,
        t_star,
        fit: fit_scaling(&points),
    })
}

/// Fits `T = c sqrt(2^n)` to `(n, T)` pairs.
pub fn fit_scaling(points: &[(u32, u64)]) -> Option<ScalingFit> {
    if points.is_empty() {
        return None;
    }
    let ratios: Vec<f64> = points
        .iter()
        .map(|&(n, t)| t as f64 / 2f64.powi(n as i32).sqrt())
        .collect();
    let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let c_minimax = 0.5 * (lo + hi);
    let (num, den) = points.iter().fold((0.0, 0.0), |(num, den), &(n, t)| {
        let root = 2f64.powi(n as i32).sqrt();
        (num + t as f64 * root, den + root * root)
    });
    let max_relative_deviation = ratios.iter().map(|r| (r / c_minimax - 1.0).abs()).fold(0.0, f64::max);
    Some(ScalingFit {
        c_minimax,
        c_least_squares: num / den,
        max_relative_deviation,
    })
}
