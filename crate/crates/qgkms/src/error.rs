use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors across the whole crate. Numerical diagnostics (residuals,
/// per-block sums) ride along in the message so the CLI can print them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid block structure: {0}")]
    InvalidStructure(String),

    #[error("not a delta-form: {0}")]
    DeltaForm(String),

    #[error("map is not completely positive: {0}")]
    NotCompletelyPositive(String),

    #[error("not a quantum graph: {0}")]
    NotQuantumGraph(String),

    #[error("linearly dependent KMS basis: {0}")]
    RankDeficient(String),

    #[error("rank-one normalization violated: {0}")]
    RankOneNormalization(String),

    #[error("classical adjacency entries must be 0 or 1: {0}")]
    NotZeroOne(String),

    #[error("projection block defect: {0}")]
    ProjectionDefect(String),

    #[error("D-matrix routes disagree: {0}")]
    InconsistentD(String),

    #[error("no KMS state: {0}")]
    NoKms(String),

    #[error("induced-trace oracle mismatch: {0}")]
    OracleMismatch(String),

    #[error("adjacency does not commute with the modular group: {0}")]
    ModularNotCommuting(String),

    #[error("power iteration did not converge within {0} iterations")]
    NonConvergence(usize),

    #[error("word cap exceeded: {0}")]
    WordCapExceeded(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
