use thiserror::Error;

/// Failures raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix contains non-finite entries")]
    NonFinite,
    #[error("matrix is not Hermitian (off-symmetry residual {residual:.3e})")]
    NotHermitian { residual: f64 },
    #[error("eigensolver failed to converge")]
    ConvergenceFailure,
    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPsd { min_eigenvalue: f64 },
    #[error("matrix is not positive definite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPd { min_eigenvalue: f64 },
    #[error("matrix is singular to working precision (reciprocal condition {rcond:.3e})")]
    Singular { rcond: f64 },
    #[error("trailing diagonal block is singular to working precision (reciprocal condition {rcond:.3e})")]
    SingularBlock { rcond: f64 },
    #[error("matrix is not accretive-dissipative")]
    NotAccretiveDissipative,
    #[error("computed square root left the accretive-dissipative cone (residual {residual:.3e})")]
    SqrtNotInCone { residual: f64 },
    #[error("invalid block split {k} for dimension {n}")]
    InvalidPartition { k: usize, n: usize },
    #[error("hypothesis not satisfied: {0}")]
    HypothesisFail(&'static str),
    #[error("empty input")]
    EmptyInput,
    #[error("invalid tolerance configuration: {0}")]
    InvalidTolerance(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
