use num_complex::Complex64;

use super::{Cut, PartitionSpec};
use crate::error::{Error, Result};
use crate::grover::{amplitude_closed_form, SearchParams};
use crate::numeric::concurrence_of_weights;

/// Radicands in `(-DISCRIMINANT_SLACK, 0)` are rounding and clamp to zero.
const DISCRIMINANT_SLACK: f64 = 1e-12;
const DEGENERACY_TOL: f64 = 1e-12;
/// Largest block (in qubits) expanded into explicit Schmidt vectors.
const MAX_VECTOR_QUBITS: u32 = 20;

/// Squared Schmidt coefficients of a pure bipartite state, descending, with
/// optional Schmidt vectors. `left[j]` pairs with `right[j]` and
/// `coefficients[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtData {
    pub coefficients: Vec<f64>,
    pub left: Option<Vec<Vec<Complex64>>>,
    pub right: Option<Vec<Vec<Complex64>>>,
    /// Set when the leading coefficients coincide and the basis is not unique.
    pub degenerate: bool,
}

impl SchmidtData {
    pub fn concurrence(&self) -> f64 {
        concurrence_of_weights(&self.coefficients)
    }

    /// Number of coefficients above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.coefficients.iter().filter(|&&m| m > tol).count()
    }

    /// `sum_j sqrt(mu_j) |left_j> (x) |right_j>`, left index most significant.
    pub fn reconstruct(&self) -> Option<Vec<Complex64>> {
        let left = self.left.as_ref()?;
        let right = self.right.as_ref()?;
        let dl = left.first()?.len();
        let dr = right.first()?.len();
        let mut out = vec![Complex64::new(0.0, 0.0); dl * dr];
        for ((mu, l), r) in self.coefficients.iter().zip(left).zip(right) {
            let w = mu.max(0.0).sqrt();
            for (i, li) in l.iter().enumerate() {
                for (j, rj) in r.iter().enumerate() {
                    out[i * dr + j] += li * rj * w;
                }
            }
        }
        Some(out)
    }
}

/// The pair `(lambda_+, lambda_-)` with
/// `lambda_pm = 1/2 +- sqrt(1/4 - eta^2 (A_k - B_k tan theta)^2 B_k^2)`.
pub fn schmidt_coefficients(k: u64, params: &SearchParams, cut: Cut) -> Result<(f64, f64)> {
    let eta = cut.eta(params)?;
    let s = amplitude_closed_form(k, params);
    let x = eta * (s.a - s.b * params.tan_theta()) * s.b;
    let product = x * x;
    let disc = 0.25 - product;
    if disc < -DISCRIMINANT_SLACK {
        return Err(Error::NegativeDiscriminant { value: disc });
    }
    if disc <= 0.0 {
        return Ok((0.5, 0.5));
    }
    let plus = 0.5 + disc.sqrt();
    // lambda_+ lambda_- = x^2 keeps the small root accurate
    Ok((plus, product / plus))
}

/// Eigenvector of the symmetric 2x2 `[[a, b], [b, d]]` for eigenvalue
/// `lambda`, built as `(b, lambda - a)` and falling back to the other row
/// when that is numerically null.
fn eigvec_2x2(a: f64, b: f64, d: f64, lambda: f64) -> [f64; 2] {
    let first = [b, lambda - a];
    let second = [lambda - d, b];
    let n1 = first[0].hypot(first[1]);
    let n2 = second[0].hypot(second[1]);
    if n1 >= n2 && n1 > 0.0 {
        [first[0] / n1, first[1] / n1]
    } else if n2 > 0.0 {
        [second[0] / n2, second[1] / n2]
    } else {
        [1.0, 0.0]
    }
}

fn expand(coords: [f64; 2], marked_pattern: u64, qubits: u32) -> Vec<Complex64> {
    let dim = 1usize << qubits;
    let rest = coords[1] / ((dim - 1) as f64).sqrt();
    (0..dim)
        .map(|i| {
            let v = if i as u64 == marked_pattern {
                coords[0]
            } else {
                rest
            };
            Complex64::new(v, 0.0)
        })
        .collect()
}

/// Schmidt decomposition of the single-target Grover state across `spec`.
///
/// Vectors are built in the bases `{|X_1>, |N>}` of each block, where
/// `|X_1>` is the block's piece of the marked index and `|N>` is the uniform
/// superposition of the remaining block states, then expanded to full length.
pub fn schmidt_vectors(k: u64, params: &SearchParams, spec: PartitionSpec) -> Result<SchmidtData> {
    let eta = Cut::Qubits(spec).eta(params)?;
    let target = params.marked().ok_or(Error::MarkedSetUnavailable)?[0];
    let largest = spec.left().max(spec.right());
    if largest > MAX_VECTOR_QUBITS {
        return Err(Error::CapExceeded {
            requested: largest,
            cap: MAX_VECTOR_QUBITS,
        });
    }
    let (plus, minus) = schmidt_coefficients(k, params, Cut::Qubits(spec))?;
    let s = amplitude_closed_form(k, params);
    let total = params.size() as f64 - 1.0;
    let left_rest = 2f64.powi(spec.left() as i32) - 1.0;
    let right_rest = 2f64.powi(spec.right() as i32) - 1.0;

    // Coefficients of |S_k> on {X1, N} x {X1, N}.
    let c = [
        [s.a, s.b * (right_rest / total).sqrt()],
        [s.b * (left_rest / total).sqrt(), eta * s.b],
    ];
    let (a, b, d) = (
        c[0][0] * c[0][0] + c[0][1] * c[0][1],
        c[0][0] * c[1][0] + c[0][1] * c[1][1],
        c[1][0] * c[1][0] + c[1][1] * c[1][1],
    );
    let (a_r, b_r, d_r) = (
        c[0][0] * c[0][0] + c[1][0] * c[1][0],
        c[0][0] * c[0][1] + c[1][0] * c[1][1],
        c[0][1] * c[0][1] + c[1][1] * c[1][1],
    );

    let degenerate = (plus - minus).abs() <= DEGENERACY_TOL;
    let left_plus = eigvec_2x2(a, b, d, plus);
    let left_minus = [-left_plus[1], left_plus[0]];
    let partner = |l: [f64; 2], lambda: f64| -> [f64; 2] {
        // C^T l points along the Schmidt partner; use it to fix the sign.
        let w = [
            c[0][0] * l[0] + c[1][0] * l[1],
            c[0][1] * l[0] + c[1][1] * l[1],
        ];
        let mut v = if degenerate {
            let n = w[0].hypot(w[1]);
            [w[0] / n, w[1] / n]
        } else {
            eigvec_2x2(a_r, b_r, d_r, lambda)
        };
        if v[0] * w[0] + v[1] * w[1] < 0.0 {
            v = [-v[0], -v[1]];
        }
        v
    };
    let right_plus = partner(left_plus, plus);
    let mut right_minus = partner(left_minus, minus);
    if minus <= DEGENERACY_TOL {
        // Weightless pair: any vector orthogonal to the leading one will do.
        right_minus = [-right_plus[1], right_plus[0]];
    }

    let shift = spec.right();
    let left_pattern = target >> shift;
    let right_pattern = target & ((1u64 << shift) - 1);
    Ok(SchmidtData {
        coefficients: vec![plus, minus],
        left: Some(vec![
            expand(left_plus, left_pattern, spec.left()),
            expand(left_minus, left_pattern, spec.left()),
        ]),
        right: Some(vec![
            expand(right_plus, right_pattern, spec.right()),
            expand(right_minus, right_pattern, spec.right()),
        ]),
        degenerate,
    })
}
