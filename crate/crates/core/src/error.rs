use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("beta must lie in [0, 1], got {0}")]
    BetaOutOfRange(f64),
    #[error("beta = 1 is not allowed here: f̃(-1) diverges")]
    BetaIsOne,
    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument {
        name: &'static str,
        reason: &'static str,
    },
    #[error("series did not reach tolerance within {terms} terms (tail bound {tail:e})")]
    NotConverged { terms: usize, tail: f64 },
    #[error("adaptive quadrature did not reach tolerance (error estimate {estimate:e})")]
    QuadratureFailed { estimate: f64 },
    #[error("division by a series with zero constant term")]
    ZeroLeadingCoefficient,
    #[error("Carathéodory series must start with c_0 = 1")]
    NotNormalized,
    #[error("no sign change of the radius equation below r = {hi}")]
    NoSignChange { hi: f64 },
    #[error("root bracket did not shrink to tolerance within {iterations} iterations")]
    RootNotConverged { iterations: usize },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: &'static str) -> Self {
        Error::InvalidArgument { name, reason }
    }
}
