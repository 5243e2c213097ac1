//! Sweeps, cross-checks and demonstrations built on both engines.

mod demos;
mod optimality;
mod sweeps;
mod validate;

pub use demos::{
    parallel_demo, quarter_case_demo, quarter_marked_set, speedup_condition_check, ParallelOutcome,
    QuarterCase, SpeedupReport, CLASSICAL_QUARTER_QUERIES,
};
pub use optimality::{
    fit_scaling, optimality_experiment, BoundReport, OptimalityReport, ScalingFit, DISTINGUISH_EPS,
};
pub use sweeps::{figure1_sweep, figure2_sweep, Figure1, Figure2, Figure2Row, SweepRow};
pub use validate::{cross_validate, Partitions, ValidationCell, ValidationReport, VALIDATION_TOL};
