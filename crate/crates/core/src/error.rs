use num_bigint::BigUint;

/// Errors surfaced by the exact kernels.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A square root of a negative quantity was requested. This signals a
    /// hermiticity violation upstream (some psi_n < 0).
    #[error("negative radicand: {0}")]
    NegativeRadicand(String),

    /// Addition of surds with different canonical radicands. The single-surd
    /// closure argument guarantees this never happens in well-formed
    /// computations; seeing it means a bug.
    #[error("unlike surd addition: sqrt({0}) + sqrt({1})")]
    UnlikeSurds(BigUint, BigUint),

    /// A recurrence factor 1 + beta2 * [l^2 + (2j+1) l + 2j(j+1)] vanished,
    /// leaving a projector series coefficient undefined.
    #[error("degenerate parameter: projector coefficient undefined at l = {l}")]
    DegenerateParameter { l: u32 },

    /// A generalized xi-factorial in a prefactor denominator vanished
    /// (boundary beta2 = -1/(2 j^2): the representation degenerates).
    #[error("degenerate representation: {0}")]
    DegenerateRepresentation(String),

    #[error("hermiticity violated: {0}")]
    Hermiticity(String),

    #[error("null or negative projection: {0}")]
    NullProjection(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for the two "degenerate parameter point" conditions that a
    /// verification grid records as a consistent skip rather than a failure.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Error::DegenerateParameter { .. } | Error::DegenerateRepresentation(_)
        )
    }
}
