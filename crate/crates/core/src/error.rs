use thiserror::Error;

/// Errors raised by the numeric kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{base}^({exponent}) has no exact rational value")]
    NotExactPower { base: String, exponent: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("series did not converge after {levels} levels")]
    NonConvergence { levels: usize },
    #[error("cannot parse {input:?} as a number")]
    Parse { input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
