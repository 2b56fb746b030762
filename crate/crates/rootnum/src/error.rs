use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singular fiber at t = {0}")]
    SingularFiber(String),
    #[error("fiber at t = {0} vanishes at a multiplicative place")]
    ZeroAtMultiplicativePlace(String),
    #[error("no local root number table row for p = {p}, valuations {key:?}")]
    Unclassified { p: u64, key: (u32, u32, u32) },
    #[error("periodicity not reached for p = {0} by k = {1}")]
    PeriodicityUndetermined(u64, u32),
    #[error("no admissible seed residue: {0}")]
    SeedNotFound(String),
    #[error("search exhausted: {0}")]
    Exhausted(String),
    #[error("no sign-variation construction applies: {0}")]
    Inapplicable(String),
    #[error("no sign change: {0}")]
    NoVariation(String),
    #[error("sign prediction failed: {0}")]
    SignPredictionFailed(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
