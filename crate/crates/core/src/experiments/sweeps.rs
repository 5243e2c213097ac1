use crate::entanglement::{
    concurrence_state, oracle_entanglement_gain, reflection_entanglement_change, Cut, PartitionSpec,
};
use crate::error::Result;
use crate::grover::{success_probability, SearchParams};
use crate::statevector::{concurrence_numeric, grover_trajectory, QubitSubset, DEFAULT_QUBIT_CAP};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub k: u64,
    pub a2: f64,
    pub c_analytic: f64,
    pub c_numeric: Option<f64>,
    pub abs_err: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure1 {
    pub rows: Vec<SweepRow>,
    pub peak_k: u64,
    pub peak_c: f64,
}

/// `C(|S_k>)` for `k = 0..=k_max`. Without a partition the ideal cut
/// (`eta = 1`) is used. The numeric column is filled when a partition is
/// given, the marked set is known and `n` is within the simulation cap.
pub fn figure1_sweep(params: &SearchParams, k_max: u64, partition: Option<PartitionSpec>) -> Result<Figure1> {
    let cut = partition.map(Cut::Qubits).unwrap_or(Cut::Ideal);
    let states = match (partition, params.marked(), params.qubits()) {
        (Some(spec), Some(marked), Some(n)) if n <= DEFAULT_QUBIT_CAP => {
            Some((grover_trajectory(n, marked, k_max)?, QubitSubset::first(spec.left(), n)?))
        }
        _ => None,
    };
    let mut rows = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max {
        let c = concurrence_state(k, params, cut)?;
        let numeric = match &states {
            Some((traj, keep)) => Some(concurrence_numeric(&traj[k as usize], keep)?),
            None => None,
        };
        rows.push(SweepRow {
            k,
            a2: success_probability(k, params),
            c_analytic: c,
            c_numeric: numeric,
            abs_err: numeric.map(|v| (v - c).abs()),
        });
    }
    let peak = rows
        .iter()
        .fold(&rows[0], |best, row| if row.c_analytic > best.c_analytic { row } else { best });
    Ok(Figure1 {
        peak_k: peak.k,
        peak_c: peak.c_analytic,
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Figure2Row {
    pub k: u64,
    /// Entanglement added by the oracle at step `k`.
    pub gain: f64,
    /// Entanglement removed by the following reflection (nonnegative).
    pub drop: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure2 {
    pub rows: Vec<Figure2Row>,
    /// First `k` where the drop catches up with the gain.
    pub crossover: Option<u64>,
}

/// Oracle gain against reflection drop. `k_max` defaults to the last step
/// whose successor is still in the first quadrant.
pub fn figure2_sweep(params: &SearchParams, k_max: Option<u64>, cut: Cut) -> Result<Figure2> {
    let k_max = k_max.unwrap_or_else(|| params.last_first_quadrant_iteration().saturating_sub(1));
    let mut rows = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max {
        rows.push(Figure2Row {
            k,
            gain: oracle_entanglement_gain(k, params, cut)?,
            drop: -reflection_entanglement_change(k, params, cut)?,
        });
    }
    let crossover = rows.iter().find(|r| r.gain <= r.drop).map(|r| r.k);
    Ok(Figure2 { rows, crossover })
}
