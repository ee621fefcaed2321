use thiserror::Error;

/// Errors raised by the geometry, dynamics and certification layers.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("operands belong to different algebras ({left} vs {right})")]
    SpecMismatch { left: String, right: String },

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("sampled rank {sampled} disagrees with closed form {closed_form} for {algebra}")]
    RankMismatch {
        algebra: String,
        sampled: usize,
        closed_form: usize,
    },

    #[error("matrix is not in {algebra} (residual {residual:.3e})")]
    NotInAlgebra { algebra: String, residual: f64 },

    #[error("matrix is not in the group {group}: {reason}")]
    NotInGroup { group: String, reason: String },

    #[error("element is not regular: {0}")]
    NotRegular(String),

    #[error("subspace is not a Cartan subalgebra: {0}")]
    NotCartan(String),

    #[error("vertical span has dimension {rank}, expected {pairs}")]
    DegenerateVertical { rank: usize, pairs: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("singular values within a decade of the rank threshold {threshold:.3e}")]
    ToleranceAmbiguity { threshold: f64 },

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
