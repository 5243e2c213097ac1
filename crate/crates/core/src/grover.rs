//! The effective two-dimensional picture of Grover search.
//!
//! The state after `k` iterations is `A_k |t> + B_k |t_perp>`, where `|t>` is
//! the uniform superposition of marked states and `|t_perp>` that of the
//! rest. Everything here works on the pair `(A_k, B_k)` and never touches a
//! statevector, so database sizes up to `2^63` are fine.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::error::{Error, Result};

pub const MAX_QUBITS: u32 = 63;

/// Angles within this distance above `pi/2` still count as first quadrant.
pub const QUADRANT_SLACK: f64 = 1e-12;

/// A search problem: database size `N`, `r` marked items, and the angle
/// `theta = arcsin(sqrt(r/N))`.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchParams {
    size: u64,
    qubits: Option<u32>,
    targets: u64,
    marked: Option<Vec<u64>>,
    theta: f64,
    a0: f64,
    b0: f64,
}

impl SearchParams {
    /// `n` qubits with an explicit marked set. Indices are sorted; duplicates
    /// are rejected.
    pub fn new(n: u32, marked: &[u64]) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::InvalidQubitCount {
                n,
                min: 1,
                max: MAX_QUBITS,
            });
        }
        let size = 1u64 << n;
        if marked.is_empty() {
            return Err(Error::EmptyMarkedSet);
        }
        let mut sorted = marked.to_vec();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateIndex { index: w[0] });
            }
        }
        if let Some(&last) = sorted.last() {
            if last >= size {
                return Err(Error::IndexOutOfRange {
                    index: last,
                    dim: size,
                });
            }
        }
        let mut params = Self::analytic(size, sorted.len() as u64)?;
        params.marked = Some(sorted);
        Ok(params)
    }

    /// Analytic mode: only `N` and `r` are stored. `N` need not be a power of
    /// two (the figures use `N = 10^8`).
    pub fn analytic(size: u64, targets: u64) -> Result<Self> {
        if !(2..=1u64 << MAX_QUBITS).contains(&size) {
            return Err(Error::InvalidSize { size });
        }
        if targets == 0 {
            return Err(Error::EmptyMarkedSet);
        }
        if targets >= size {
            return Err(if targets == size {
                Error::AllMarked { size }
            } else {
                Error::IndexOutOfRange {
                    index: targets,
                    dim: size,
                }
            });
        }
        let qubits = size.is_power_of_two().then(|| size.trailing_zeros());
        let theta = (targets as f64 / size as f64).sqrt().asin();
        Ok(SearchParams {
            size,
            qubits,
            targets,
            marked: None,
            theta,
            a0: theta.sin(),
            b0: theta.cos(),
        })
    }

    /// Database size `N`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// `n` when `N = 2^n`.
    pub fn qubits(&self) -> Option<u32> {
        self.qubits
    }

    /// Number of marked items `r`.
    pub fn targets(&self) -> u64 {
        self.targets
    }

    pub fn marked(&self) -> Option<&[u64]> {
        self.marked.as_deref()
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn b0(&self) -> f64 {
        self.b0
    }

    pub fn tan_theta(&self) -> f64 {
        self.theta.tan()
    }

    /// `(2k+1) theta`, the rotation angle after `k` iterations.
    pub fn angle(&self, k: u64) -> f64 {
        (2 * k + 1) as f64 * self.theta
    }

    /// Whether `(2k+1) theta <= pi/2`, i.e. both amplitudes are nonnegative.
    pub fn in_first_quadrant(&self, k: u64) -> bool {
        self.angle(k) <= FRAC_PI_2 + QUADRANT_SLACK
    }

    pub fn check_first_quadrant(&self, k: u64) -> Result<()> {
        if self.in_first_quadrant(k) {
            Ok(())
        } else {
            Err(Error::QuadrantViolation {
                k,
                angle: self.angle(k),
            })
        }
    }

    /// Largest `k` still in the first quadrant.
    pub fn last_first_quadrant_iteration(&self) -> u64 {
        let mut k = ((FRAC_PI_2 / self.theta - 1.0) / 2.0).floor().max(0.0) as u64;
        while !self.in_first_quadrant(k) && k > 0 {
            k -= 1;
        }
        while self.in_first_quadrant(k + 1) {
            k += 1;
        }
        k
    }
}

/// `(A_k, B_k)` after `k` iterations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoDimState {
    pub k: u64,
    pub a: f64,
    pub b: f64,
}

impl TwoDimState {
    pub fn initial(params: &SearchParams) -> Self {
        TwoDimState {
            k: 0,
            a: params.a0,
            b: params.b0,
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a * self.a + self.b * self.b
    }
}

/// The oracle in the plane: `(A, B) -> (-A, B)`.
pub fn oracle_2d(state: TwoDimState) -> TwoDimState {
    TwoDimState { a: -state.a, ..state }
}

/// Reflection about the start vector `(A_0, B_0)`: `v -> 2 <s, v> s - v`.
pub fn reflect_about_start(state: TwoDimState, params: &SearchParams) -> TwoDimState {
    let overlap = params.a0 * state.a + params.b0 * state.b;
    TwoDimState {
        k: state.k,
        a: 2.0 * overlap * params.a0 - state.a,
        b: 2.0 * overlap * params.b0 - state.b,
    }
}

/// One Grover iteration via the interference recursion
/// `A' = (N-2r)/N A + 2 sqrt(r(N-r))/N B`, `B' = (N-2r)/N B - 2 sqrt(r(N-r))/N A`.
pub fn iterate(state: TwoDimState, params: &SearchParams) -> TwoDimState {
    let x = params.targets as f64 / params.size as f64;
    let keep = 1.0 - 2.0 * x;
    let mix = 2.0 * (x * (1.0 - x)).sqrt();
    TwoDimState {
        k: state.k + 1,
        a: keep * state.a + mix * state.b,
        b: keep * state.b - mix * state.a,
    }
}

/// `A_k = sin((2k+1) theta)`, `B_k = cos((2k+1) theta)`.
pub fn amplitude_closed_form(k: u64, params: &SearchParams) -> TwoDimState {
    let angle = params.angle(k);
    TwoDimState {
        k,
        a: angle.sin(),
        b: angle.cos(),
    }
}

/// Exact maximiser of `sin^2((2k+1) theta)`: `round((pi/(2 theta) - 1)/2)`.
pub fn optimal_iterations(params: &SearchParams) -> u64 {
    ((FRAC_PI_2 / params.theta - 1.0) / 2.0).round().max(0.0) as u64
}

/// The large-`N` estimate `round((pi/4) sqrt(N/r))`. Overshoots for small
/// databases; kept for comparison only.
pub fn asymptotic_iterations(params: &SearchParams) -> u64 {
    (FRAC_PI_4 * (params.size as f64 / params.targets as f64).sqrt()).round() as u64
}

/// `sin^2((2k+1) theta)`.
pub fn success_probability(k: u64, params: &SearchParams) -> f64 {
    let a = params.angle(k).sin();
    a * a
}
