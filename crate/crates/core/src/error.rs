use thiserror::Error;

/// Errors raised by the series, umbral and family layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor constant term {0} is not invertible and does not divide exactly")]
    NonUnitLeadingCoefficient(String),
    #[error("inner series of a composition must have zero constant term, found {0}")]
    NonzeroInnerConstant(String),
    #[error("series is not a delta series: {0}")]
    NotDelta(String),
    #[error("series is not invertible: constant term {0} is not a unit")]
    NotInvertible(String),
    #[error("logarithm needs constant term 1, found {0}")]
    ConstantTermNotOne(String),
    #[error("exponential needs constant term 0, found {0}")]
    NonzeroConstantTerm(String),
    #[error("index {needed} exceeds working precision {precision}")]
    PrecisionExceeded { needed: usize, precision: usize },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
