//! Dense statevector simulation, partial traces and numeric spectra.

mod density;
mod parallel;
mod schmidt;
mod state;

pub use density::{purity, reduced_density, trace_distance, DensityMatrix, QubitSubset};
pub use parallel::{ghz_initial, parallel_step, register_subset, Reflection};
pub use schmidt::{concurrence_numeric, concurrence_purity, schmidt_numeric, schmidt_spectrum};
pub use state::{
    apply_diffusion, apply_oracle, grover_run, grover_trajectory, uniform_state,
    uniform_state_capped, StateVector,
};

/// Largest single-register simulation.
pub const DEFAULT_QUBIT_CAP: u32 = 14;
/// Largest multi-register simulation (all registers together).
pub const TOTAL_QUBIT_CAP: u32 = 20;
/// Largest kept subsystem for a reduced density matrix.
pub const KEPT_QUBIT_CAP: u32 = 8;
