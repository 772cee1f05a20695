use std::fmt;

use surdcf::notation::NotationError;
use surdcf::Error;

/// Process exit codes. Stable; documented in the README.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Internal = 1,
    Parse = 2,
    InvalidDigit = 3,
    PeriodTooLong = 4,
    Violation = 5,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
}

impl CliError {
    pub fn new(status: ExitStatus, message: impl Into<String>) -> Self {
        CliError { status, message: message.into() }
    }

    /// Annotates notation errors with a caret under the offending span.
    pub fn from_notation(err: NotationError, input: &str) -> Self {
        let status = match err {
            NotationError::InvalidDigit { .. } => ExitStatus::InvalidDigit,
            NotationError::Parse(_) | NotationError::Value { .. } => ExitStatus::Parse,
        };
        CliError::new(status, err.annotate(input))
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let status = match err {
            Error::InvalidDigit { .. } => ExitStatus::InvalidDigit,
            Error::PeriodTooLong(_) => ExitStatus::PeriodTooLong,
            Error::EmptyPeriod
            | Error::EmptyExpansion
            | Error::DegenerateRadicand
            | Error::NonPositiveRadicand
            | Error::DivisionByZero => ExitStatus::Parse,
            _ => ExitStatus::Internal,
        };
        CliError::new(status, format!("error: {err}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}
