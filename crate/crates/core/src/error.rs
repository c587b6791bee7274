use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("matrix is not Hermitian (max |h - h†| = {0:e})")]
    NotHermitian(f64),
    #[error("qubit index {index} out of range for {qubits} qubits")]
    Index { index: usize, qubits: usize },
    #[error("matrix is not positive semidefinite (eigenvalue {0:e})")]
    NotPsd(f64),
    #[error("matrix dimension overflows usize")]
    SizeOverflow,
    #[error("Jacobi eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("non-finite matrix entry")]
    NonFinite,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("{0}")]
    Domain(String),
    #[error("invalid density matrix: {0}")]
    InvalidState(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("numeric overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
