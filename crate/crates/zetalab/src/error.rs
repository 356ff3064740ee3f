use thiserror::Error;

/// Failure modes shared by every numeric layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("series did not converge: {0}")]
    NonConverged(String),
    #[error("quadrature did not converge: {0}")]
    NoConvergence(String),
    #[error("no closed form for p={p}, u={u}")]
    UnsupportedPair { p: u32, u: String },
    #[error("unsupported request: {0}")]
    Unsupported(String),
    #[error("unknown identity id: {0}")]
    UnknownId(String),
}

impl Error {
    /// True for the two convergence failures (series and quadrature).
    pub fn is_convergence(&self) -> bool {
        matches!(self, Error::NonConverged(_) | Error::NoConvergence(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
