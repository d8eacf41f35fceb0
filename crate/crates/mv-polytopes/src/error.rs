use thiserror::Error;

/// Errors surfaced by the crate's fallible entry points.
///
/// Internal invariant breaches (a reflection landing outside a cached orbit,
/// a braid component failing to cover the chamber weights) panic instead:
/// those are programmer errors, not data errors.
#[derive(Debug, Error)]
pub enum Error {
    /// The matrix is not a generalized Cartan matrix at all.
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    /// A proper generalized Cartan matrix, but not of finite type.
    #[error("not a finite-type Cartan matrix: {0}")]
    NotFiniteType(String),

    /// Finite type but outside the supported lanes (triple bonds).
    #[error("unsupported type: {0}")]
    Unsupported(String),

    /// An enumeration grew past its configured cap.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// A caller broke a documented precondition (bad word, bad index, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The BZ datum fails a defining inequality or relation.
    #[error("invalid BZ datum: {0}")]
    InvalidDatum(String),

    /// Propagation derived two different values for the same chamber weight.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    /// The datum is not a member of the required highest-weight crystal.
    #[error("not in the highest-weight crystal: {0}")]
    NotInCrystal(String),

    /// mu_{w_0} differs from the lambda the operation requires.
    #[error("top vertex mismatch: {0}")]
    TopVertexMismatch(String),

    /// Text input (classical coordinates, pretty names) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
