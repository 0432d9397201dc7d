//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(&'static str),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid ring blocks: {0}")]
    BadBlocks(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{0} requires a fully local ring")]
    NonLocalRing(&'static str),
    #[error("dimension is infinite: {0}")]
    Infinite(String),
    #[error("polynomial does not vanish at the origin: {0}")]
    NotVanishing(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("generic linear change failed after {tried} attempts: {detail}")]
    Genericity { tried: u32, detail: String },
    #[error("Samuel function did not stabilize below t = {t_max}; increase tmax")]
    NoStabilization { t_max: usize },
    #[error("kernel is not principal ({0} generators); input is degenerate or not finite")]
    KernelNotPrincipal(usize),
    #[error("{0}")]
    NotApplicable(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Parse(#[from] crate::parse::ParseError),
}

impl Error {
    /// Exit code class for the CLI: 1 for usage/parse errors, 2 for
    /// mathematical non-applicability.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::UnknownVariable(_)
            | Error::DuplicateVariable(_)
            | Error::BadBlocks(_)
            | Error::Arity(_)
            | Error::RingMismatch(_) => 1,
            _ => 2,
        }
    }
}
