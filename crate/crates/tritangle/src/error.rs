use thiserror::Error;

/// Errors surfaced by the library. The CLI maps these onto process exit
/// codes: input-shaped failures exit 2, numeric failures exit 3.
#[derive(Debug, Error)]
pub enum Error {
    /// Matrix or subsystem dimensions outside the supported 2/4/8 set,
    /// or dimension bookkeeping that does not add up.
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    /// A constructor parameter outside its documented range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An input that violates an operation contract (non-Hermitian matrix,
    /// unnormalized state, materially negative spectrum, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Two numerical routes that must agree diverged beyond tolerance, or
    /// floating-point arithmetic broke down outright (overflow to inf/NaN,
    /// an iteration that failed to converge).
    #[error("numeric consistency: {0}")]
    NumericConsistency(String),

    /// A state reached that valid inputs cannot produce.
    #[error("internal consistency: {0}")]
    Internal(String),

    /// State-spec document problems: malformed JSON, unknown family,
    /// missing or malformed parameters.
    #[error("state spec: {0}")]
    Spec(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
