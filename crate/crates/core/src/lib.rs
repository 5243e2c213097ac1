//! Entanglement dynamics of Grover search.
//!
//! Two engines are provided. The analytic one ([`grover`], [`entanglement`])
//! evaluates closed forms in the two-dimensional span of the target and its
//! complement and scales to `N` near `2^63`. The numeric one ([`statevector`])
//! simulates dense amplitudes and takes partial traces over arbitrary qubit
//! subsets. [`experiments`] compares the two and reproduces the sweeps.
//!
//! Qubit 0 is the most significant bit of a basis index throughout.

pub mod entanglement;
pub mod error;
pub mod experiments;
pub mod grover;
pub mod linalg;
pub mod numeric;
pub mod statevector;

pub use error::{Error, Result};
pub use grover::{SearchParams, TwoDimState};
