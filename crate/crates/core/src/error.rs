use thiserror::Error;

use crate::dynamics::EconState;
use crate::policy::Regime;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A parameter or initial condition outside its admissible range.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("{field} must be in {interval} (got {value})")]
    OutOfRange {
        field: &'static str,
        interval: &'static str,
        value: f64,
    },
    #[error("{field} must be finite (got {value})")]
    NonFinite { field: &'static str, value: f64 },
    #[error("unknown parameter `{0}`")]
    UnknownField(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Param(#[from] ParamError),

    #[error("non-finite {quantity} computed for period {period}")]
    NonFinite { quantity: &'static str, period: u64 },

    #[error("simulation diverged: {quantity} became non-finite after period {}", last.t)]
    Diverged {
        quantity: &'static str,
        last: Box<EconState>,
    },

    #[error("welfare undefined: {which} consumption is {value}")]
    WelfareUndefined { which: &'static str, value: f64 },

    #[error("old-age consumption is zero at tau = 1; welfare is -inf")]
    ZeroOldAgeConsumption,

    #[error(
        "gap formula applies only in regime III (tau above the output cutoff), got regime {0}"
    )]
    NotRegimeThree(Regime),

    #[error("perturbing {param}: {reason}")]
    Perturbation { param: &'static str, reason: String },

    #[error("objective returned non-finite value {value} at beta = {beta}")]
    NonFiniteObjective { beta: f64, value: f64 },

    #[error("invalid argument {name}: {reason}")]
    InvalidArgument { name: &'static str, reason: String },
}

impl Error {
    /// True for errors caused by inadmissible inputs rather than numerics.
    pub fn is_validation(&self) -> bool {
        matches!(self, Error::Param(_) | Error::InvalidArgument { .. })
    }
}
