use crate::Int;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: Int, m: Int },

    #[error("coefficients {a} and {b} are not coprime")]
    NotCoprime { a: Int, b: Int },

    #[error("coefficients are not pairwise coprime: gcd({a}, {b}) = {gcd}")]
    NotPairwiseCoprime { a: Int, b: Int, gcd: Int },

    #[error("{family} index {index} is below the supported minimum {min}")]
    UnsupportedIndex {
        family: &'static str,
        index: u64,
        min: u64,
    },

    /// A formula produced a non-integral quotient. Under the documented
    /// preconditions this cannot happen, so it always indicates a bug.
    #[error("formula integrality failure in {formula}: {numerator} is not divisible by {denominator}")]
    FormulaIntegrality {
        formula: &'static str,
        numerator: Int,
        denominator: Int,
    },

    #[error("oracle search space of {required} exceeds the budget of {budget}; use dp_count or raise the budget")]
    OracleTooLarge { required: Int, budget: u64 },

    #[error("resource limit: {0}")]
    Resource(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Process exit code for this error class: 2 for bad input, 3 for budget or
    /// resource limits, 4 for an internal integrality failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_)
            | Error::NotInvertible { .. }
            | Error::NotCoprime { .. }
            | Error::NotPairwiseCoprime { .. }
            | Error::UnsupportedIndex { .. } => 2,
            Error::OracleTooLarge { .. } | Error::Resource(_) => 3,
            Error::FormulaIntegrality { .. } => 4,
        }
    }

    /// Short machine-readable class name.
    pub fn class(&self) -> &'static str {
        match self.exit_code() {
            2 => "validation",
            3 => "resource",
            _ => "integrality",
        }
    }
}
