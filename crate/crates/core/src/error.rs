use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("mismatched {what}: {left} vs {right}")]
    Mismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal identity that the mathematics guarantees has failed.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("not in the {space}; residual leading term {leading}")]
    Membership { space: &'static str, leading: String },

    #[error("singular linear system in degree {degree} ({detail})")]
    Singular { degree: usize, detail: String },

    #[error("coefficient {0} is not in Z[beta]")]
    Integrality(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
