use rayon::prelude::*;

use crate::entanglement::{
    concurrence_state, multi_target_concurrence, ByproductForm, Cut, MultiTargetSplit, PartitionSpec,
};
use crate::error::Result;
use crate::grover::SearchParams;
use crate::statevector::{
    concurrence_numeric, grover_trajectory, QubitSubset, StateVector, DEFAULT_QUBIT_CAP,
};

/// Largest accepted `|C_analytic - C_numeric|`.
pub const VALIDATION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum Partitions {
    /// Every `l` in `1..n`.
    All,
    List(Vec<u32>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationCell {
    pub k: u64,
    pub l: u32,
    pub c_analytic: f64,
    pub c_numeric: f64,
    pub abs_err: f64,
    /// Multi-target only: the total with the `tan theta` byproduct factor.
    pub c_literal: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub n: u32,
    pub marked: Vec<u64>,
    pub cells: Vec<ValidationCell>,
    pub max_abs_err: f64,
    pub failing: Vec<ValidationCell>,
    /// Set when the multi-target formula forced `k_max` down to the last
    /// first-quadrant step.
    pub k_clipped_to: Option<u64>,
    /// Largest `|C_literal - C_numeric|`, multi-target only.
    pub literal_max_err: Option<f64>,
    pub passed: bool,
}

/// Compares the closed form for every requested first-`l` cut and every
/// `k <= k_max` against the partial-trace concurrence of the simulated state.
///
/// One marked item uses the single-target formula at any `k`. Several use
/// the multi-target decomposition, which only holds in the first quadrant,
/// so `k` stops there.
pub fn cross_validate(n: u32, marked: &[u64], k_max: u64, partitions: &Partitions) -> Result<ValidationReport> {
    if n > DEFAULT_QUBIT_CAP {
        return Err(crate::error::Error::CapExceeded {
            requested: n,
            cap: DEFAULT_QUBIT_CAP,
        });
    }
    let params = SearchParams::new(n, marked)?;
    let single = params.targets() == 1;
    let (k_top, k_clipped_to) = if single {
        (k_max, None)
    } else {
        let last = params.last_first_quadrant_iteration();
        if k_max > last {
            (last, Some(last))
        } else {
            (k_max, None)
        }
    };
    let ls: Vec<u32> = match partitions {
        Partitions::All => (1..n).collect(),
        Partitions::List(v) => v.clone(),
    };
    let specs = ls
        .iter()
        .map(|&l| PartitionSpec::new(l, n))
        .collect::<Result<Vec<_>>>()?;
    let states = grover_trajectory(n, params.marked().unwrap_or(marked), k_top)?;

    let per_cut: Vec<Result<Vec<ValidationCell>>> = specs
        .par_iter()
        .map(|spec| validate_cut(&params, spec, &states, single))
        .collect();
    let mut cells = Vec::new();
    for block in per_cut {
        cells.extend(block?);
    }
    let max_abs_err = cells.iter().map(|c| c.abs_err).fold(0.0, f64::max);
    // NaN counts as failing.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    let failing: Vec<ValidationCell> = cells.iter().filter(|c| !(c.abs_err < VALIDATION_TOL)).copied().collect();
    let literal_max_err = if single {
        None
    } else {
        Some(
            cells
                .iter()
                .filter_map(|c| c.c_literal.map(|v| (v - c.c_numeric).abs()))
                .fold(0.0, f64::max),
        )
    };
    Ok(ValidationReport {
        n,
        marked: params.marked().unwrap_or(marked).to_vec(),
        passed: failing.is_empty(),
        cells,
        max_abs_err,
        failing,
        k_clipped_to,
        literal_max_err,
    })
}

fn validate_cut(
    params: &SearchParams,
    spec: &PartitionSpec,
    states: &[StateVector],
    single: bool,
) -> Result<Vec<ValidationCell>> {
    let n = spec.total();
    let keep = QubitSubset::first(spec.left(), n)?;
    let split = if single {
        None
    } else {
        Some(MultiTargetSplit::from_marked(params, spec)?)
    };
    let mut out = Vec::with_capacity(states.len());
    for (k, state) in states.iter().enumerate() {
        let k = k as u64;
        let (c_analytic, c_literal) = match &split {
            None => (concurrence_state(k, params, Cut::Qubits(*spec))?, None),
            Some(split) => {
                let fixed = multi_target_concurrence(k, params, split, spec, ByproductForm::Corrected)?;
                let literal = multi_target_concurrence(k, params, split, spec, ByproductForm::Literal)?;
                (fixed.total, Some(literal.total))
            }
        };
        let c_numeric = concurrence_numeric(state, &keep)?;
        out.push(ValidationCell {
            k,
            l: spec.left(),
            c_analytic,
            c_numeric,
            abs_err: (c_analytic - c_numeric).abs(),
            c_literal,
        });
    }
    Ok(out)
}
