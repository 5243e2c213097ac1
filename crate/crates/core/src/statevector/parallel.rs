use num_complex::Complex64;

use super::state::{check_cap, marked_flags};
use super::{QubitSubset, StateVector, TOTAL_QUBIT_CAP};
use crate::error::{Error, Result};
use crate::numeric::pairwise_sum_by;

/// Reflection used after the register-1 oracle in the multi-register run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Reflection {
    /// `2|GHZ><GHZ| - I` on all registers.
    #[default]
    Global,
    /// `R_{S_0}` on register 1, identity elsewhere.
    Local,
}

fn check_registers(n: u32, l: u32) -> Result<u32> {
    if n == 0 || l == 0 {
        return Err(Error::InvalidQubitCount {
            n: n * l,
            min: 1,
            max: TOTAL_QUBIT_CAP,
        });
    }
    let total = n.saturating_mul(l);
    check_cap(total, TOTAL_QUBIT_CAP)?;
    Ok(total)
}

/// Basis index of `|j>|j>...|j>` over `l` registers of `n` qubits.
fn repeated(j: usize, n: u32, l: u32) -> usize {
    (0..l).fold(0, |acc, _| (acc << n) | j)
}

/// `(1/sqrt(N)) sum_j |j>^{(x) l}`; register 1 holds the most significant bits.
pub fn ghz_initial(n: u32, l: u32) -> Result<StateVector> {
    let total = check_registers(n, l)?;
    let size = 1usize << n;
    let mut amps = vec![Complex64::new(0.0, 0.0); 1usize << total];
    let w = Complex64::new(1.0 / (size as f64).sqrt(), 0.0);
    for j in 0..size {
        amps[repeated(j, n, l)] = w;
    }
    Ok(StateVector::from_raw(total, amps))
}

/// Qubits of register `register` (0-based) as a subset of all `n l` qubits.
pub fn register_subset(n: u32, l: u32, register: u32) -> Result<QubitSubset> {
    let idx: Vec<u32> = (register * n..(register + 1) * n).collect();
    QubitSubset::new(&idx, n * l)
}

/// Oracle on register 1, then the chosen reflection.
pub fn parallel_step(state: &StateVector, marked: &[u64], n: u32, l: u32, reflection: Reflection) -> Result<StateVector> {
    let total = check_registers(n, l)?;
    if state.n_qubits() != total {
        return Err(Error::DimMismatch {
            left: state.n_qubits() as usize,
            right: total as usize,
        });
    }
    let flags = marked_flags(1usize << n, marked)?;
    let rest_bits = n * (l - 1);
    let mut amps = state.amplitudes().to_vec();
    for (i, a) in amps.iter_mut().enumerate() {
        if flags[i >> rest_bits] {
            *a = -*a;
        }
    }
    let size = 1usize << n;
    match reflection {
        Reflection::Global => {
            let norm = 1.0 / (size as f64).sqrt();
            let overlap = pairwise_sum_by(size, &|j| amps[repeated(j, n, l)]) * norm;
            for a in amps.iter_mut() {
                *a = -*a;
            }
            let lift = overlap * (2.0 * norm);
            for j in 0..size {
                amps[repeated(j, n, l)] += lift;
            }
        }
        Reflection::Local => {
            let stride = 1usize << rest_bits;
            for c in 0..stride {
                let mean = pairwise_sum_by(size, &|x| amps[(x << rest_bits) | c]) / size as f64;
                let twice = mean * 2.0;
                for x in 0..size {
                    let a = &mut amps[(x << rest_bits) | c];
                    *a = twice - *a;
                }
            }
        }
    }
    Ok(StateVector::from_raw(total, amps))
}
