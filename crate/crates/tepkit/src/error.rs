use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse failure category, used by callers (e.g. the CLI) to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input data (bad lengths, non-finite entries).
    Input,
    /// Caller misuse: incompatible shapes, unknown ids, infeasible specs.
    Usage,
    /// Input is valid but outside the operation's mathematical domain.
    Domain,
    /// A numerical routine failed to converge.
    Numerical,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{op}: shape mismatch, left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    ShapeMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("{op}: matrix must be square, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("matrix entries must be finite, found non-finite value at row {row}, col {col}")]
    NonFinite { row: usize, col: usize },
    #[error("field `data` has length {len}, expected rows*cols = {rows}*{cols}")]
    BadDataLength { rows: usize, cols: usize, len: usize },
    #[error("{op}: matrix must be nonempty")]
    EmptyMatrix { op: &'static str },
    #[error("invalid tolerance: {reason}")]
    BadTolerance { reason: String },
    #[error("svd did not converge within {max_iter} iterations")]
    SvdNonConvergence { max_iter: usize },
    #[error("T is not a partial isometry: residual {residual:.3e} exceeds threshold {threshold:.3e}")]
    NotPartialIsometry { residual: f64, threshold: f64 },
    #[error("(A, T) is not T-EP via {via}: residual {residual:.3e}")]
    NotTEp { via: &'static str, residual: f64 },
    #[error("rank zero has no HS form with r>0")]
    HsRankZero,
    #[error("{op}: zero matrix has rank 0 and no canonical form")]
    CanonicalRankZero { op: &'static str },
    #[error("unknown characterization id `{0}`")]
    UnknownCharacterization(String),
    #[error("unknown law id `{0}`")]
    UnknownLaw(String),
    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NonFinite { .. } | Error::BadDataLength { .. } => ErrorKind::Input,
            Error::ShapeMismatch { .. }
            | Error::EmptyMatrix { .. }
            | Error::BadTolerance { .. }
            | Error::UnknownCharacterization(_)
            | Error::UnknownLaw(_)
            | Error::InfeasibleSpec(_) => ErrorKind::Usage,
            Error::SvdNonConvergence { .. } => ErrorKind::Numerical,
            Error::NotSquare { .. }
            | Error::NotPartialIsometry { .. }
            | Error::NotTEp { .. }
            | Error::HsRankZero
            | Error::CanonicalRankZero { .. } => ErrorKind::Domain,
        }
    }
}
