use thiserror::Error;

/// Errors raised by the exact-arithmetic and continued-fraction layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand is the square of a rational; the value is rational")]
    DegenerateRadicand,
    #[error("radicand must be positive")]
    NonPositiveRadicand,
    #[error("digit {value} at position {position} must be at least 1")]
    InvalidDigit { position: usize, value: String },
    #[error("continued fraction has no repeating block")]
    EmptyPeriod,
    #[error("continued fraction has no digits")]
    EmptyExpansion,
    #[error("fixed-point equation has rational roots")]
    RationalFixedPoint,
    #[error("no fixed point lies in the requested window")]
    NoRootInWindow,
    #[error("both fixed points lie in the requested window")]
    TwoRootsInWindow,
    #[error("Möbius map is singular (zero determinant)")]
    SingularMap,
    #[error("no period detected within {0} steps")]
    PeriodTooLong(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
