//! Small dense Hermitian eigensolvers.
//!
//! [`hermitian_eigen`] is a cyclic two-sided Jacobi solver for density
//! matrices (dimension at most a few hundred). [`row_gram_eigenvalues`] is the
//! one-sided (Hestenes) variant applied to the rows of a rectangular matrix;
//! it returns the eigenvalues of `M M^dagger` without forming the product, so
//! tiny eigenvalues keep their relative accuracy.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 50;
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Eigen-decomposition of a Hermitian matrix, eigenvalues descending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// `vectors[j]` is the unit eigenvector belonging to `values[j]`.
    pub vectors: Vec<Vec<Complex64>>,
}

/// One Jacobi rotation, parametrised so that `J = [[c, s], [-s conj(e), c conj(e)]]`
/// annihilates the (p, q) entry of `J^dagger A J`.
#[derive(Clone, Copy)]
struct Rotation {
    c: f64,
    s: f64,
    e: Complex64,
}

impl Rotation {
    fn annihilating(app: f64, aqq: f64, apq: Complex64) -> Self {
        let g = apq.norm();
        let e = apq / g;
        let zeta = (aqq - app) / (2.0 * g);
        let t = if zeta >= 0.0 {
            1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
        } else {
            -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
        };
        let c = 1.0 / (1.0 + t * t).sqrt();
        Rotation { c, s: t * c, e }
    }

    /// `(x, y) -> (x J_pp + y J_qp, x J_pq + y J_qq)`; column update.
    #[inline]
    fn right(&self, x: Complex64, y: Complex64) -> (Complex64, Complex64) {
        let ec = self.e.conj();
        (x * self.c - y * ec * self.s, x * self.s + y * ec * self.c)
    }

    /// `(x, y) -> J^dagger (x, y)`; row update.
    #[inline]
    fn left(&self, x: Complex64, y: Complex64) -> (Complex64, Complex64) {
        (x * self.c - y * self.e * self.s, x * self.s + y * self.e * self.c)
    }
}

fn off_diagonal_norm(a: &[Complex64], dim: usize) -> f64 {
    let mut acc = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                acc += a[i * dim + j].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Cyclic Jacobi on a row-major Hermitian matrix. Converges when the
/// off-diagonal Frobenius norm drops below [`OFF_DIAGONAL_TOL`] times
/// `max(1, ||A||_F)`.
pub fn hermitian_eigen(matrix: &[Complex64], dim: usize) -> Result<HermitianEigen> {
    if matrix.len() != dim * dim {
        return Err(Error::DimMismatch {
            left: matrix.len(),
            right: dim * dim,
        });
    }
    let mut a = matrix.to_vec();
    // Symmetrise away any rounding asymmetry in the input.
    for i in 0..dim {
        a[i * dim + i] = Complex64::new(a[i * dim + i].re, 0.0);
        for j in (i + 1)..dim {
            let m = (a[i * dim + j] + a[j * dim + i].conj()) * 0.5;
            a[i * dim + j] = m;
            a[j * dim + i] = m.conj();
        }
    }
    let scale = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1.0);
    let tol = OFF_DIAGONAL_TOL * scale;

    let mut v = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        v[i * dim + i] = Complex64::new(1.0, 0.0);
    }

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, dim);
        if off <= tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure { sweeps, off });
        }
        sweeps += 1;
        for p in 0..dim {
            for q in (p + 1)..dim {
                let apq = a[p * dim + q];
                if apq.norm() <= f64::MIN_POSITIVE {
                    continue;
                }
                let rot = Rotation::annihilating(a[p * dim + p].re, a[q * dim + q].re, apq);
                for k in 0..dim {
                    let (x, y) = rot.right(a[k * dim + p], a[k * dim + q]);
                    a[k * dim + p] = x;
                    a[k * dim + q] = y;
                    let (x, y) = rot.right(v[k * dim + p], v[k * dim + q]);
                    v[k * dim + p] = x;
                    v[k * dim + q] = y;
                }
                for k in 0..dim {
                    let (x, y) = rot.left(a[p * dim + k], a[q * dim + k]);
                    a[p * dim + k] = x;
                    a[q * dim + k] = y;
                }
                a[p * dim + q] = Complex64::new(0.0, 0.0);
                a[q * dim + p] = Complex64::new(0.0, 0.0);
                a[p * dim + p].im = 0.0;
                a[q * dim + q].im = 0.0;
            }
        }
    }

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| a[j * dim + j].re.total_cmp(&a[i * dim + i].re));
    let values = order.iter().map(|&i| a[i * dim + i].re).collect();
    let vectors = order
        .iter()
        .map(|&col| (0..dim).map(|row| v[row * dim + col]).collect())
        .collect();
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues of `M M^dagger` for a `rows x cols` row-major matrix, by
/// orthogonalising the rows with one-sided Jacobi rotations. Returned in
/// descending order; there are `rows` of them.
pub fn row_gram_eigenvalues(matrix: &[Complex64], rows: usize, cols: usize) -> Result<Vec<f64>> {
    if matrix.len() != rows * cols {
        return Err(Error::DimMismatch {
            left: matrix.len(),
            right: rows * cols,
        });
    }
    let mut m = matrix.to_vec();
    let tol = 4.0 * f64::EPSILON * (cols.max(1) as f64).sqrt();
    // Rows this small are rounding residue of rows already rotated away; the
    // cosine test alone would keep turning them forever.
    let fro_sq: f64 = m.iter().map(|z| z.norm_sqr()).sum();
    let negligible = f64::EPSILON * f64::EPSILON * fro_sq;
    let mut sweeps = 0;
    loop {
        let mut rotated = false;
        let mut worst: f64 = 0.0;
        for i in 0..rows {
            for j in (i + 1)..rows {
                let (head, tail) = m.split_at_mut(j * cols);
                let ri = &mut head[i * cols..(i + 1) * cols];
                let rj = &mut tail[..cols];
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = Complex64::new(0.0, 0.0);
                for (x, y) in ri.iter().zip(rj.iter()) {
                    alpha += x.norm_sqr();
                    beta += y.norm_sqr();
                    gamma += x * y.conj();
                }
                let g = gamma.norm();
                if g == 0.0 || alpha.min(beta) <= negligible || g <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                worst = worst.max(g / (alpha * beta).sqrt());
                rotated = true;
                let rot = Rotation::annihilating(alpha, beta, gamma);
                for (x, y) in ri.iter_mut().zip(rj.iter_mut()) {
                    let (nx, ny) = rot.left(*x, *y);
                    *x = nx;
                    *y = ny;
                }
            }
        }
        if !rotated {
            break;
        }
        sweeps += 1;
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure { sweeps, off: worst });
        }
    }
    let mut values: Vec<f64> = m
        .chunks(cols.max(1))
        .take(rows)
        .map(|r| r.iter().map(|z| z.norm_sqr()).sum())
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn mat_vec(a: &[Complex64], dim: usize, x: &[Complex64]) -> Vec<Complex64> {
        (0..dim)
            .map(|i| (0..dim).map(|j| a[i * dim + j] * x[j]).sum())
            .collect()
    }

    #[test]
    fn pauli_y_spectrum() {
        let a = vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)];
        let eig = hermitian_eigen(&a, 2).unwrap();
        assert!((eig.values[0] - 1.0).abs() < 1e-14);
        assert!((eig.values[1] + 1.0).abs() < 1e-14);
        for (val, vec) in eig.values.iter().zip(&eig.vectors) {
            let av = mat_vec(&a, 2, vec);
            for (l, r) in av.iter().zip(vec) {
                assert!((l - r * val).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn complex_hermitian_eigenpairs() {
        let dim = 5;
        let mut a = vec![c(0.0, 0.0); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let re = ((i * j) % 5) as f64 + (i + j) as f64;
                let im = if i == j { 0.0 } else { (i as f64 - j as f64) * 0.3 };
                a[i * dim + j] = c(re, im);
            }
        }
        let eig = hermitian_eigen(&a, dim).unwrap();
        let trace: f64 = (0..dim).map(|i| a[i * dim + i].re).sum();
        assert!((eig.values.iter().sum::<f64>() - trace).abs() < 1e-11);
        assert!(eig.values.windows(2).all(|w| w[0] >= w[1]));
        for (val, vec) in eig.values.iter().zip(&eig.vectors) {
            let av = mat_vec(&a, dim, vec);
            for (l, r) in av.iter().zip(vec) {
                assert!((l - r * val).norm() < 1e-10);
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                let dot: Complex64 = eig.vectors[i]
                    .iter()
                    .zip(&eig.vectors[j])
                    .map(|(x, y)| x.conj() * y)
                    .sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot - expect).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn one_sided_matches_two_sided() {
        let rows = 3;
        let cols = 4;
        let m: Vec<Complex64> = (0..rows * cols)
            .map(|i| c((i as f64 * 0.7).sin(), (i as f64 * 1.3).cos()))
            .collect();
        let mut gram = vec![c(0.0, 0.0); rows * rows];
        for i in 0..rows {
            for j in 0..rows {
                gram[i * rows + j] = (0..cols).map(|b| m[i * cols + b] * m[j * cols + b].conj()).sum();
            }
        }
        let two = hermitian_eigen(&gram, rows).unwrap().values;
        let one = row_gram_eigenvalues(&m, rows, cols).unwrap();
        for (a, b) in one.iter().zip(&two) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn identical_rows_give_exact_rank_one() {
        let s = 1.0 / 8f64.sqrt();
        let m = vec![c(s, 0.0); 8];
        let vals = row_gram_eigenvalues(&m, 2, 4).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-15);
        assert!(vals[1] < 1e-30);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        assert!(matches!(
            hermitian_eigen(&[c(1.0, 0.0)], 2),
            Err(Error::DimMismatch { .. })
        ));
    }
}
