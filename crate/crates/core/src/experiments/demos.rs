use crate::entanglement::{
    first_maximum, multi_target_concurrence, speedup_condition_integrate, ByproductForm, MultiTargetSplit,
    PartitionSpec,
};
use crate::error::{Error, Result};
use crate::grover::{optimal_iterations, SearchParams};
use crate::statevector::{
    apply_oracle, concurrence_numeric, ghz_initial, grover_run, parallel_step, reduced_density,
    register_subset, trace_distance, uniform_state, DensityMatrix, QubitSubset, Reflection,
    DEFAULT_QUBIT_CAP,
};

#[derive(Debug, Clone, PartialEq)]
pub struct ParallelOutcome {
    /// Trace distance of each register's reduced state to the uniform
    /// mixture of marked projectors, register 1 first.
    pub distances: Vec<f64>,
    pub k_used: u64,
}

/// Runs `k*` multi-register steps from the GHZ-type start state.
pub fn parallel_demo(n: u32, l: u32, marked: &[u64], reflection: Reflection) -> Result<ParallelOutcome> {
    let params = SearchParams::new(n, marked)?;
    let k_used = optimal_iterations(&params);
    let mut state = ghz_initial(n, l)?;
    for _ in 0..k_used {
        state = parallel_step(&state, marked, n, l, reflection)?;
    }
    let target = DensityMatrix::basis_mixture(1usize << n, marked)?;
    let distances = (0..l)
        .map(|reg| {
            let rho = reduced_density(&state, &register_subset(n, l, reg)?)?;
            trace_distance(&rho, &target)
        })
        .collect::<Result<_>>()?;
    Ok(ParallelOutcome { distances, k_used })
}

/// Oracle calls a classical search needs, in the worst case, to find one of
/// the `N/4` marked items.
pub const CLASSICAL_QUARTER_QUERIES: u64 = 2;

/// `2^{n-2}` indices that mark a quarter of the database and whose uniform
/// superposition is maximally entangled between the last qubit and the rest.
///
/// For `y < 2^{n-2}`, `x = 2y + parity(y)` and the index is `2x + (x & 1)`,
/// so the last qubit copies the one before it and the pair carries parity.
pub fn quarter_marked_set(n: u32) -> Result<Vec<u64>> {
    if !(2..=crate::grover::MAX_QUBITS).contains(&n) {
        return Err(Error::InvalidQubitCount {
            n,
            min: 2,
            max: crate::grover::MAX_QUBITS,
        });
    }
    Ok((0..1u64 << (n - 2))
        .map(|y| {
            let x = (y << 1) | (y.count_ones() as u64 & 1);
            (x << 1) | (x & 1)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuarterCase {
    pub n: u32,
    pub marked: Vec<u64>,
    /// Numeric concurrence of `R_O |S_0>` across the `(n-1) | 1` split.
    pub post_oracle_concurrence: f64,
    /// Probability on the marked set after one iteration.
    pub success_probability: f64,
    /// Search term of the multi-target decomposition after one iteration.
    pub search_concurrence: f64,
    /// Numeric concurrence after one iteration.
    pub final_concurrence: f64,
    /// Concurrence of the marked superposition itself.
    pub target_concurrence: f64,
    pub quantum_queries: u64,
    pub classical_queries: u64,
}

/// One-query search when a quarter of the database is marked.
pub fn quarter_case_demo(n: u32, marked: Option<&[u64]>) -> Result<QuarterCase> {
    if !(2..=DEFAULT_QUBIT_CAP).contains(&n) {
        return Err(Error::InvalidQubitCount {
            n,
            min: 2,
            max: DEFAULT_QUBIT_CAP,
        });
    }
    let marked = match marked {
        Some(m) => m.to_vec(),
        None => quarter_marked_set(n)?,
    };
    let params = SearchParams::new(n, &marked)?;
    let marked = params.marked().unwrap_or(&marked).to_vec();
    let keep = QubitSubset::first(n - 1, n)?;
    let spec = PartitionSpec::new(n - 1, n)?;

    let post_oracle = apply_oracle(&uniform_state(n)?, &marked)?;
    let after = grover_run(n, &marked, 1)?;
    let split = MultiTargetSplit::from_marked(&params, &spec)?;
    let search_concurrence = if params.in_first_quadrant(1) {
        multi_target_concurrence(1, &params, &split, &spec, ByproductForm::Corrected)?.search
    } else {
        f64::NAN
    };
    Ok(QuarterCase {
        n,
        post_oracle_concurrence: concurrence_numeric(&post_oracle, &keep)?,
        success_probability: after.marked_probability(&marked),
        search_concurrence,
        final_concurrence: concurrence_numeric(&after, &keep)?,
        target_concurrence: split.target_concurrence(),
        quantum_queries: 1,
        classical_queries: CLASSICAL_QUARTER_QUERIES,
        marked,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpeedupReport {
    pub a0: f64,
    pub k_max: u64,
    pub probabilities: Vec<f64>,
    /// `max_k |P_k - sin^2((2k+1) phi)|`.
    pub max_deviation: f64,
}

/// Integrates the speedup condition and measures it against the Grover
/// closed form. `k_max` defaults to the first maximum.
pub fn speedup_condition_check(a0: f64, k_max: Option<u64>, h: f64) -> Result<SpeedupReport> {
    let probabilities = speedup_condition_integrate(a0, k_max.unwrap_or_else(|| first_maximum(a0)), h)?;
    let phi = a0.asin();
    let max_deviation = probabilities
        .iter()
        .enumerate()
        .map(|(k, p)| (p - ((2 * k + 1) as f64 * phi).sin().powi(2)).abs())
        .fold(0.0, f64::max);
    Ok(SpeedupReport {
        a0,
        k_max: probabilities.len() as u64 - 1,
        probabilities,
        max_deviation,
    })
}
