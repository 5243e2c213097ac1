use num_complex::Complex64;

use super::{StateVector, KEPT_QUBIT_CAP};
use crate::error::{Error, Result};
use crate::linalg::hermitian_eigen;
use crate::numeric::pairwise_sum_by;

/// Sorted distinct qubit positions out of `n`; position 0 is the most
/// significant bit of the basis index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QubitSubset {
    indices: Vec<u32>,
    n: u32,
}

impl QubitSubset {
    pub fn new(indices: &[u32], n: u32) -> Result<Self> {
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let bad = sorted.len() != indices.len()
            || sorted.is_empty()
            || sorted.len() >= n as usize
            || sorted.iter().any(|&q| q >= n);
        if bad {
            return Err(Error::InvalidSubset {
                indices: indices.to_vec(),
                n,
            });
        }
        Ok(QubitSubset { indices: sorted, n })
    }

    /// The `l` most significant qubits.
    pub fn first(l: u32, n: u32) -> Result<Self> {
        Self::new(&(0..l).collect::<Vec<_>>(), n)
    }

    pub fn complement(&self) -> Self {
        let indices = (0..self.n).filter(|q| !self.indices.contains(q)).collect();
        QubitSubset { indices, n: self.n }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> u32 {
        self.indices.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn total_qubits(&self) -> u32 {
        self.n
    }

    /// Gathers this subset's bits of `index` into a compact integer, first
    /// listed qubit most significant.
    pub(crate) fn gather(&self, index: usize) -> usize {
        let mut out = 0;
        for &q in &self.indices {
            out = (out << 1) | ((index >> (self.n - 1 - q)) & 1);
        }
        out
    }
}

/// `|psi>` reshaped into a `2^|keep| x 2^(n - |keep|)` matrix.
pub(crate) fn amplitude_matrix(state: &StateVector, keep: &QubitSubset) -> Result<(Vec<Complex64>, usize, usize)> {
    if keep.total_qubits() != state.n_qubits() {
        return Err(Error::DimMismatch {
            left: keep.total_qubits() as usize,
            right: state.n_qubits() as usize,
        });
    }
    let rest = keep.complement();
    let rows = 1usize << keep.len();
    let cols = 1usize << rest.len();
    let mut m = vec![Complex64::new(0.0, 0.0); rows * cols];
    for (i, &a) in state.amplitudes().iter().enumerate() {
        m[keep.gather(i) * cols + rest.gather(i)] = a;
    }
    Ok((m, rows, cols))
}

/// Dense row-major density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DensityMatrix {
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimMismatch {
                left: entries.len(),
                right: dim * dim,
            });
        }
        Ok(DensityMatrix { dim, entries })
    }

    /// `(1/|indices|) sum_j |j><j|`.
    pub fn basis_mixture(dim: usize, indices: &[u64]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptyMarkedSet);
        }
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        let w = 1.0 / indices.len() as f64;
        for &j in indices {
            if j as usize >= dim {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    dim: dim as u64,
                });
            }
            entries[j as usize * (dim + 1)] += w;
        }
        Ok(DensityMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn trace(&self) -> Complex64 {
        pairwise_sum_by(self.dim, &|i| self.entry(i, i))
    }

    pub fn hermiticity_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self.entry(i, j) - self.entry(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Descending eigenvalues.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(hermitian_eigen(&self.entries, self.dim)?.values)
    }
}

/// `Tr_complement |psi><psi|`, as `M M^dagger` of the amplitude matrix.
pub fn reduced_density(state: &StateVector, keep: &QubitSubset) -> Result<DensityMatrix> {
    if keep.len() > KEPT_QUBIT_CAP {
        return Err(Error::SubsetTooLarge {
            requested: keep.len(),
            cap: KEPT_QUBIT_CAP,
        });
    }
    let (m, rows, cols) = amplitude_matrix(state, keep)?;
    let mut entries = vec![Complex64::new(0.0, 0.0); rows * rows];
    for i in 0..rows {
        let ri = &m[i * cols..(i + 1) * cols];
        for j in i..rows {
            let rj = &m[j * cols..(j + 1) * cols];
            let v = pairwise_sum_by(cols, &|b| ri[b] * rj[b].conj());
            entries[i * rows + j] = v;
            entries[j * rows + i] = v.conj();
        }
    }
    Ok(DensityMatrix { dim: rows, entries })
}

/// `Tr(rho^2)`, which for a Hermitian matrix is the squared Frobenius norm.
pub fn purity(rho: &DensityMatrix) -> f64 {
    pairwise_sum_by(rho.entries.len(), &|i| rho.entries[i].norm_sqr())
}

/// `(1/2) sum |eigenvalues of rho1 - rho2|`.
pub fn trace_distance(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    if rho1.dim != rho2.dim {
        return Err(Error::DimMismatch {
            left: rho1.dim,
            right: rho2.dim,
        });
    }
    let diff: Vec<Complex64> = rho1.entries.iter().zip(&rho2.entries).map(|(a, b)| a - b).collect();
    let values = hermitian_eigen(&diff, rho1.dim)?.values;
    Ok(0.5 * pairwise_sum_by(values.len(), &|i| values[i].abs()))
}
