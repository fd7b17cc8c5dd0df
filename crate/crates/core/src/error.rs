use thiserror::Error;

/// Errors raised by constructors, generators and estimators in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter violates its documented domain.
    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The nest exponent lies outside the interval in which it still
    /// influences the total dimension.
    #[error(
        "alpha = {alpha} must lie in the open interval ({lo}, {hi}) \
         where alpha * delta < 1 for target dimension d = {d}"
    )]
    AlphaOutOfRange {
        alpha: f64,
        d: f64,
        lo: f64,
        hi: f64,
    },

    /// The base set has no planar drawing routine.
    #[error("base set {0} cannot be generated in the plane")]
    UnsupportedBase(String),

    /// An index or element count outgrew what can be represented or stored.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A grid count touched more cells than the configured cap.
    #[error("occupied cell count exceeds the cap of {cap}")]
    CellCapExceeded { cap: usize },

    /// Regression input is too short or has no spread in `-ln eps`.
    #[error("degenerate regression input: {0}")]
    DegenerateRegression(String),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// `true` for errors caused by bad input, `false` for resource failures.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            Error::ResourceLimit(_) | Error::CellCapExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
