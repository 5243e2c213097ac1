use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("marked set is empty")]
    EmptyMarkedSet,
    #[error("every basis state is marked (r = N = {size}); the reflection degenerates")]
    AllMarked { size: u64 },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: u64, dim: u64 },
    #[error("index {index} appears more than once")]
    DuplicateIndex { index: u64 },
    #[error("qubit count {n} is outside the supported range {min}..={max}")]
    InvalidQubitCount { n: u32, min: u32, max: u32 },
    #[error("database size {size} is invalid")]
    InvalidSize { size: u64 },
    #[error("partition l = {l} is invalid for n = {n} (need 1 <= l <= n - 1)")]
    InvalidPartition { l: u32, n: u32 },
    #[error("partition is over {partition} qubits but the search problem has {params}")]
    PartitionMismatch { partition: u32, params: u32 },
    #[error("database size {size} is not a power of two; no qubit bipartition exists")]
    NoQubitStructure { size: u64 },
    #[error("operation needs the explicit marked set, which analytic mode does not store")]
    MarkedSetUnavailable,
    #[error("operation is single-target only but r = {r}")]
    MultipleTargets { r: u64 },
    #[error("squared Schmidt coefficients sum to {sum}, not 1")]
    NotNormalized { sum: f64 },
    #[error("squared Schmidt coefficient {value} is negative")]
    NegativeCoefficient { value: f64 },
    #[error("Schmidt discriminant {value} is negative beyond rounding")]
    NegativeDiscriminant { value: f64 },
    #[error("(2k+1)theta = {angle} exceeds pi/2 at k = {k}; use the absolute-value form")]
    QuadrantViolation { k: u64, angle: f64 },
    #[error("split p = {p}, q = {q} is inconsistent with r = {r}")]
    InconsistentSplit { p: u64, q: u64, r: u64 },
    #[error("integration step {h} must lie in (0, 0.1]")]
    StepTooLarge { h: f64 },
    #[error("initial amplitude {a0} must lie in (0, 1)")]
    InvalidAmplitude { a0: f64 },
    #[error("probability left [0, 1] at k = {k} (value {value})")]
    DomainEscape { k: f64, value: f64 },
    #[error("{requested} qubits exceeds the simulation cap of {cap}")]
    CapExceeded { requested: u32, cap: u32 },
    #[error("kept subsystem of {requested} qubits exceeds the cap of {cap}")]
    SubsetTooLarge { requested: u32, cap: u32 },
    #[error("qubit subset {indices:?} is not a nonempty proper subset of {n} qubits")]
    InvalidSubset { indices: Vec<u32>, n: u32 },
    #[error("Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal {off})")]
    ConvergenceFailure { sweeps: usize, off: f64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
}
