use num_complex::Complex64;
use rayon::prelude::*;

use super::DEFAULT_QUBIT_CAP;
use crate::error::{Error, Result};
use crate::numeric::pairwise_sum_by;

/// Element-wise maps switch to rayon above this length.
const PAR_THRESHOLD: usize = 1 << 14;

/// Dense amplitudes over `2^n` computational basis states. Qubit 0 is the
/// most significant bit of the basis index.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: u32,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Wraps explicit amplitudes; the norm must be 1 within `1e-10`.
    pub fn from_amplitudes(n_qubits: u32, amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = 1usize << n_qubits;
        if amplitudes.len() != dim {
            return Err(Error::DimMismatch {
                left: amplitudes.len(),
                right: dim,
            });
        }
        let state = StateVector {
            n_qubits,
            amplitudes,
        };
        let norm = state.norm_sqr();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { sum: norm });
        }
        Ok(state)
    }

    pub(crate) fn from_raw(n_qubits: u32, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1usize << n_qubits);
        StateVector {
            n_qubits,
            amplitudes,
        }
    }

    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn probability(&self, index: usize) -> f64 {
        self.amplitudes[index].norm_sqr()
    }

    pub fn norm_sqr(&self) -> f64 {
        pairwise_sum_by(self.amplitudes.len(), &|i| self.amplitudes[i].norm_sqr())
    }

    /// Total probability on the marked indices.
    pub fn marked_probability(&self, marked: &[u64]) -> f64 {
        pairwise_sum_by(marked.len(), &|i| self.amplitudes[marked[i] as usize].norm_sqr())
    }

    /// Projects onto `span{|t>, |t_perp>}` for this marked set. Returns
    /// `(<t|psi>, <t_perp|psi>, norm of the orthogonal remainder)`.
    pub fn project_2d(&self, marked: &[u64]) -> Result<(Complex64, Complex64, f64)> {
        let flags = marked_flags(self.dim(), marked)?;
        let r = marked.len();
        let rest = self.dim() - r;
        let amps = &self.amplitudes;
        let zero = Complex64::new(0.0, 0.0);
        let sum_t = pairwise_sum_by(self.dim(), &|i| if flags[i] { amps[i] } else { zero });
        let sum_n = pairwise_sum_by(self.dim(), &|i| if flags[i] { zero } else { amps[i] });
        let a = if r > 0 { sum_t / (r as f64).sqrt() } else { zero };
        let b = if rest > 0 {
            sum_n / (rest as f64).sqrt()
        } else {
            zero
        };
        let mean_t = if r > 0 { sum_t / r as f64 } else { zero };
        let mean_n = if rest > 0 { sum_n / rest as f64 } else { zero };
        let residual = pairwise_sum_by(self.dim(), &|i| {
            let m = if flags[i] { mean_t } else { mean_n };
            (amps[i] - m).norm_sqr()
        });
        Ok((a, b, residual.sqrt()))
    }

    pub(crate) fn oracle_in_place(&mut self, flags: &[bool]) {
        let apply = |(a, &f): (&mut Complex64, &bool)| {
            if f {
                *a = -*a;
            }
        };
        if self.amplitudes.len() >= PAR_THRESHOLD {
            self.amplitudes.par_iter_mut().zip(flags.par_iter()).for_each(apply);
        } else {
            self.amplitudes.iter_mut().zip(flags.iter()).for_each(apply);
        }
    }

    pub(crate) fn diffusion_in_place(&mut self) {
        let len = self.amplitudes.len();
        let amps = &self.amplitudes;
        let mean = pairwise_sum_by(len, &|i| amps[i]) / len as f64;
        let twice = mean * 2.0;
        if len >= PAR_THRESHOLD {
            self.amplitudes.par_iter_mut().for_each(|a| *a = twice - *a);
        } else {
            self.amplitudes.iter_mut().for_each(|a| *a = twice - *a);
        }
    }
}

/// Boolean membership table; rejects indices outside `0..dim`.
pub(crate) fn marked_flags(dim: usize, marked: &[u64]) -> Result<Vec<bool>> {
    let mut flags = vec![false; dim];
    for &m in marked {
        if m as usize >= dim {
            return Err(Error::IndexOutOfRange {
                index: m,
                dim: dim as u64,
            });
        }
        flags[m as usize] = true;
    }
    Ok(flags)
}

pub(crate) fn check_cap(n: u32, cap: u32) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    if n == 0 {
        return Err(Error::InvalidQubitCount { n, min: 1, max: cap });
    }
    Ok(())
}

/// `H^{(x)n} |0...0>`: every amplitude `1/sqrt(N)`.
pub fn uniform_state(n: u32) -> Result<StateVector> {
    uniform_state_capped(n, DEFAULT_QUBIT_CAP)
}

pub fn uniform_state_capped(n: u32, cap: u32) -> Result<StateVector> {
    check_cap(n, cap)?;
    let dim = 1usize << n;
    let amp = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
    Ok(StateVector::from_raw(n, vec![amp; dim]))
}

/// Flips the sign of each marked amplitude.
pub fn apply_oracle(state: &StateVector, marked: &[u64]) -> Result<StateVector> {
    let flags = marked_flags(state.dim(), marked)?;
    let mut out = state.clone();
    out.oracle_in_place(&flags);
    Ok(out)
}

/// `2|S_0><S_0| - I` through the mean amplitude: `a -> 2 mean - a`.
pub fn apply_diffusion(state: &StateVector) -> StateVector {
    let mut out = state.clone();
    out.diffusion_in_place();
    out
}

/// `k` Grover iterations (oracle then diffusion) from the uniform state.
pub fn grover_run(n: u32, marked: &[u64], k: u64) -> Result<StateVector> {
    let mut state = uniform_state(n)?;
    let flags = marked_flags(state.dim(), marked)?;
    for _ in 0..k {
        state.oracle_in_place(&flags);
        state.diffusion_in_place();
    }
    Ok(state)
}

/// Every state from `k = 0` to `k_max` inclusive.
pub fn grover_trajectory(n: u32, marked: &[u64], k_max: u64) -> Result<Vec<StateVector>> {
    let mut state = uniform_state(n)?;
    let flags = marked_flags(state.dim(), marked)?;
    let mut out = Vec::with_capacity(k_max as usize + 1);
    out.push(state.clone());
    for _ in 0..k_max {
        state.oracle_in_place(&flags);
        state.diffusion_in_place();
        out.push(state.clone());
    }
    Ok(out)
}
