use thiserror::Error;

/// Errors surfaced by the exact-arithmetic kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// A symbolic and a numeric value met in the same computation.
    #[error("cannot mix symbolic and numeric ring elements")]
    MixedMode,

    /// Numeric lookup of a coefficient outside the declared window.
    #[error("coefficient a_{offset}^({diag}) is outside the declared window")]
    WindowMiss { diag: u8, offset: i64 },

    /// Numeric table constructed with an incomplete assignment.
    #[error("numeric table is missing a_{offset}^({diag}) inside window")]
    IncompleteTable { diag: u8, offset: i64 },

    /// Variable substitution map is not injective on the occurring variables.
    #[error("substitution map is not injective on occurring variables")]
    NonInjectiveSubstitution,

    /// Evaluation of a symbolic quantity where a number was required,
    /// or vice versa.
    #[error("operation requires {required} mode")]
    WrongMode { required: &'static str },

    /// A family or operator parameter violates its domain.
    #[error("invalid parameter: {0}")]
    Domain(String),

    /// Series inversion needs a unit leading coefficient.
    #[error("leading coefficient at exponent {exponent} is not a unit")]
    NonUnitLeading { exponent: i64 },

    /// The series is zero on its whole known range; no leading term exists.
    #[error("series has no nonzero known coefficient")]
    ZeroSeries,

    /// Requested precision exceeds what the operand validity can support.
    #[error("insufficient validity: need coefficients to {needed}, have {have}")]
    InsufficientValidity { needed: i64, have: i64 },

    /// Two series over different coefficient modes were combined.
    #[error("series coefficient modes disagree")]
    RingMismatch,

    /// Division by a zero polynomial or series.
    #[error("division by zero")]
    DivisionByZero,

    /// Two series have no common validity range to compare on.
    #[error("no common validity range to compare (lo {lo} > hi {hi})")]
    EmptyComparisonRange { lo: i64, hi: i64 },
}

pub type Result<T> = std::result::Result<T, CoreError>;

impl CoreError {
    pub fn domain(msg: impl Into<String>) -> Self {
        CoreError::Domain(msg.into())
    }
}
