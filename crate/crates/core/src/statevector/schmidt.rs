use num_complex::Complex64;

use super::density::amplitude_matrix;
use super::{purity, reduced_density, QubitSubset, StateVector, KEPT_QUBIT_CAP};
use crate::entanglement::SchmidtData;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, row_gram_eigenvalues};
use crate::numeric::{concurrence_of_weights, pairwise_sum_by};

const DEGENERACY_TOL: f64 = 1e-12;
/// Coefficients at or below this get no partner vector.
const NULL_WEIGHT: f64 = 1e-14;

/// The amplitude matrix oriented so its rows are the smaller block.
/// Returns `(matrix, rows, cols, transposed)`.
fn smaller_side(state: &StateVector, keep: &QubitSubset) -> Result<(Vec<Complex64>, usize, usize, bool)> {
    let small = keep.len().min(keep.complement().len());
    if small > KEPT_QUBIT_CAP {
        return Err(Error::SubsetTooLarge {
            requested: small,
            cap: KEPT_QUBIT_CAP,
        });
    }
    let (m, rows, cols) = amplitude_matrix(state, keep)?;
    if rows <= cols {
        return Ok((m, rows, cols, false));
    }
    let mut t = vec![Complex64::new(0.0, 0.0); rows * cols];
    for a in 0..rows {
        for b in 0..cols {
            t[b * rows + a] = m[a * cols + b];
        }
    }
    Ok((t, cols, rows, true))
}

/// Squared Schmidt coefficients across `keep | complement`, descending,
/// `min(d_keep, d_rest)` of them, clamped at zero.
///
/// Computed by one-sided Jacobi on the amplitude matrix, so coefficients far
/// below machine epsilon relative to the leading one are still resolved.
pub fn schmidt_spectrum(state: &StateVector, keep: &QubitSubset) -> Result<Vec<f64>> {
    let (m, rows, cols, _) = smaller_side(state, keep)?;
    let values = row_gram_eigenvalues(&m, rows, cols)?;
    Ok(values.into_iter().map(|v| v.max(0.0)).collect())
}

/// Concurrence `2 sqrt(sum_{i<j} mu_i mu_j)` from [`schmidt_spectrum`].
///
/// Equal to `sqrt(2 (1 - Tr rho^2))` in exact arithmetic, but keeps full
/// relative accuracy near product states where `1 - Tr rho^2` cancels.
pub fn concurrence_numeric(state: &StateVector, keep: &QubitSubset) -> Result<f64> {
    Ok(concurrence_of_weights(&schmidt_spectrum(state, keep)?))
}

/// `sqrt(2 (1 - Tr rho_keep^2))` with the radicand clamped at zero.
pub fn concurrence_purity(state: &StateVector, keep: &QubitSubset) -> Result<f64> {
    let p = purity(&reduced_density(state, keep)?);
    Ok((2.0 * (1.0 - p)).max(0.0).sqrt())
}

/// Full numeric Schmidt decomposition. `left` holds vectors on `keep`,
/// `right` on the complement, each indexed by the gathered bits of its
/// block; only coefficients above `1e-14` get vector pairs.
pub fn schmidt_numeric(state: &StateVector, keep: &QubitSubset) -> Result<SchmidtData> {
    let (m, rows, cols, transposed) = smaller_side(state, keep)?;
    let mut rho = vec![Complex64::new(0.0, 0.0); rows * rows];
    for i in 0..rows {
        let ri = &m[i * cols..(i + 1) * cols];
        for j in i..rows {
            let rj = &m[j * cols..(j + 1) * cols];
            let v = pairwise_sum_by(cols, &|b| ri[b] * rj[b].conj());
            rho[i * rows + j] = v;
            rho[j * rows + i] = v.conj();
        }
    }
    let eig = hermitian_eigen(&rho, rows)?;
    let coefficients: Vec<f64> = eig.values.iter().map(|v| v.max(0.0)).collect();

    let mut small_vecs = Vec::new();
    let mut large_vecs = Vec::new();
    for (mu, phi) in coefficients.iter().zip(&eig.vectors) {
        if *mu <= NULL_WEIGHT {
            break;
        }
        let scale = 1.0 / mu.sqrt();
        let partner: Vec<Complex64> = (0..cols)
            .map(|b| pairwise_sum_by(rows, &|a| phi[a].conj() * m[a * cols + b]) * scale)
            .collect();
        small_vecs.push(phi.clone());
        large_vecs.push(partner);
    }
    let degenerate = coefficients.len() > 1 && (coefficients[0] - coefficients[1]).abs() <= DEGENERACY_TOL;
    let (left, right) = if transposed {
        (large_vecs, small_vecs)
    } else {
        (small_vecs, large_vecs)
    };
    Ok(SchmidtData {
        coefficients,
        left: Some(left),
        right: Some(right),
        degenerate,
    })
}
