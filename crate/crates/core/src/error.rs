use thiserror::Error;

use crate::Rational;

/// Errors raised by the exact algebra, the operators and the verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("division by zero: {0} vanishes")]
    VanishingDenominator(String),

    #[error("Gamma has a pole at {0}")]
    GammaPole(Rational),

    #[error("{0}")]
    Domain(String),

    #[error("window too short: need {needed} samples but have {available}")]
    WindowTooShort { needed: usize, available: usize },

    #[error("special value has a pole: {0}")]
    SpecialValuePole(String),

    #[error("denominator Pochhammer vanishes at k = {k}")]
    DenominatorPochhammerZero { k: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
