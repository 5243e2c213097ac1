//! Closed-form entanglement of the Grover state across a qubit bipartition.
//!
//! With a single marked item the reduced state of either block lives in a
//! two-dimensional space, so everything reduces to the amplitudes
//! `(A_k, B_k)` and one partition constant `eta`.

mod chain;
mod multi;
mod schmidt;
mod speedup;

pub use chain::{
    c5_rate_form, concurrence_chain, concurrence_post_oracle, concurrence_state,
    oracle_entanglement_gain, probability_forward_difference, probability_rate,
    reflection_entanglement_change, ChainRecord,
};
pub use multi::{
    multi_target_concurrence, ByproductForm, MultiTargetConcurrence, MultiTargetSplit,
};
pub use schmidt::{schmidt_coefficients, schmidt_vectors, SchmidtData};
pub use speedup::{first_maximum, speedup_condition_integrate, DOMAIN_ESCAPE_TOL, MAX_STEP};

use crate::error::{Error, Result};
use crate::grover::SearchParams;
use crate::numeric::concurrence_of_weights;

/// Split of `n` qubits into the first `l` and the remaining `n - l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartitionSpec {
    l: u32,
    n: u32,
}

impl PartitionSpec {
    pub fn new(l: u32, n: u32) -> Result<Self> {
        if l == 0 || l >= n || n > crate::grover::MAX_QUBITS {
            return Err(Error::InvalidPartition { l, n });
        }
        Ok(PartitionSpec { l, n })
    }

    pub fn left(&self) -> u32 {
        self.l
    }

    pub fn total(&self) -> u32 {
        self.n
    }

    pub fn right(&self) -> u32 {
        self.n - self.l
    }

    /// Same cut seen from the other side.
    pub fn swapped(&self) -> Self {
        PartitionSpec {
            l: self.n - self.l,
            n: self.n,
        }
    }

    fn left_dim(&self) -> f64 {
        2f64.powi(self.l as i32)
    }

    fn right_dim(&self) -> f64 {
        2f64.powi(self.right() as i32)
    }

    fn check_against(&self, params: &SearchParams) -> Result<()> {
        match params.qubits() {
            None => Err(Error::NoQubitStructure {
                size: params.size(),
            }),
            Some(n) if n != self.n => Err(Error::PartitionMismatch {
                partition: self.n,
                params: n,
            }),
            Some(_) => Ok(()),
        }
    }
}

/// Where the concurrence is measured.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cut {
    /// A concrete qubit bipartition; single-target only.
    Qubits(PartitionSpec),
    /// The large-`N` idealisation `eta = 1`, valid for any `r`.
    Ideal,
}

impl From<PartitionSpec> for Cut {
    fn from(spec: PartitionSpec) -> Self {
        Cut::Qubits(spec)
    }
}

impl Cut {
    /// The prefactor `eta` for this cut.
    pub fn eta(&self, params: &SearchParams) -> Result<f64> {
        match self {
            Cut::Ideal => Ok(1.0),
            Cut::Qubits(spec) => {
                spec.check_against(params)?;
                if params.targets() != 1 {
                    return Err(Error::MultipleTargets {
                        r: params.targets(),
                    });
                }
                Ok(eta(spec))
            }
        }
    }
}

/// `sqrt(2 (1 - sum mu_j^2)) = 2 sqrt(sum_{j<k} mu_j mu_k)`.
pub fn concurrence_from_spectrum(mu: &[f64]) -> Result<f64> {
    if let Some(&bad) = mu.iter().find(|&&m| m < -1e-12) {
        return Err(Error::NegativeCoefficient { value: bad });
    }
    let sum: f64 = mu.iter().sum();
    if (sum - 1.0).abs() > 1e-8 {
        return Err(Error::NotNormalized { sum });
    }
    Ok(concurrence_of_weights(mu))
}

/// `eta = sqrt((2^l - 1)(2^(n-l) - 1)/(N - 1))`; half the concurrence of the
/// non-target state across this cut.
pub fn eta(spec: &PartitionSpec) -> f64 {
    let left = spec.left_dim() - 1.0;
    let right = spec.right_dim() - 1.0;
    let total = 2f64.powi(spec.n as i32) - 1.0;
    (left / total * right).sqrt()
}

/// `eta' = sqrt((2^l - p)(2^(n-l) - q)/(N - r))`, the multi-target version.
pub fn eta_prime(spec: &PartitionSpec, p: u64, q: u64, r: u64) -> Result<f64> {
    let left = spec.left_dim();
    let right = spec.right_dim();
    let total = 2f64.powi(spec.n as i32);
    let inconsistent = p == 0
        || q == 0
        || p > r
        || q > r
        || (p as f64) > left
        || (q as f64) > right
        || (p as u128) * (q as u128) < r as u128
        || (r as f64) >= total;
    if inconsistent {
        return Err(Error::InconsistentSplit { p, q, r });
    }
    Ok(((left - p as f64) * (right - q as f64) / (total - r as f64)).sqrt())
}
