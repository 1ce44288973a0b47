use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Diagram string could not be parsed.
    #[error("cannot parse diagram type `{0}` (expected e.g. A7, D5, E8)")]
    Parse(String),

    /// Type A with even rank: the group is cyclic of odd order and is not a
    /// double cover of a rotation group.
    #[error("type A{0} has even rank; only A with odd rank is supported")]
    ExcludedType(usize),

    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("node index {index} out of range (valid: 0..={max})")]
    NodeOutOfRange { index: usize, max: usize },

    /// Node selector given as (mark, distance) matched zero or several nodes.
    #[error("node selector {0}")]
    NodeSelector(String),

    /// A structural check failed. This signals a bug, never a data case.
    #[error("internal check failed: {0}")]
    Check(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    /// Numerical character theory broke a tolerance.
    #[error("tolerance breach: {0}")]
    Tolerance(String),
}

impl Error {
    pub(crate) fn check(msg: impl Into<String>) -> Self {
        Error::Check(msg.into())
    }

    /// True for errors caused by user input rather than an internal failure.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::ExcludedType(_)
                | Error::InvalidRank { .. }
                | Error::NodeOutOfRange { .. }
                | Error::NodeSelector(_)
        )
    }
}

/// Returns `Err(Error::Check)` with a formatted message unless `cond` holds.
macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Check(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure;
