//! Text formats for continued fractions and quadratic irrationals.
//!
//! Continued fractions:
//!
//! ```text
//! cf     := "[" integer ( (";" | ",") body )? "]"
//! body   := terms? period?          (at least one; "," before the period)
//! terms  := integer ("," integer)*
//! period := "(" integer ("," integer)* ")"
//! ```
//!
//! Quadratic irrationals, either `rational? (("+"|"-") "sqrt" "(" rational ")")`
//! or the scaled form `"(" integer ("+"|"-") "sqrt" "(" integer ")" ")" "/" integer`.

mod lexer;
mod parser;
mod render;

use std::fmt;

use crate::error::Error;

pub use parser::{parse_cf, parse_quad};
pub use render::{render_cf, render_quad};

/// Byte range `[start, end)` into the parsed text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        SourceSpan { start, end }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub span: SourceSpan,
    pub expected: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotationError {
    Parse(ParseError),
    /// A digit after position 0 that is below 1.
    InvalidDigit { span: SourceSpan, value: String },
    /// Well-formed text naming an invalid value (rational radicand, zero denominator, ...).
    Value { span: SourceSpan, error: Error },
}

impl NotationError {
    pub fn span(&self) -> SourceSpan {
        match self {
            NotationError::Parse(e) => e.span,
            NotationError::InvalidDigit { span, .. } | NotationError::Value { span, .. } => *span,
        }
    }

    /// Byte offset where parsing stopped: the start of an unexpected token,
    /// or the end of a well-formed token whose value was rejected.
    pub fn position(&self) -> usize {
        match self {
            NotationError::Parse(e) => e.span.start,
            NotationError::InvalidDigit { span, .. } | NotationError::Value { span, .. } => span.end,
        }
    }

    /// The message followed by the input with a caret line under the span.
    pub fn annotate(&self, input: &str) -> String {
        let span = self.span();
        let lead = input[..span.start.min(input.len())].chars().count();
        let width = input.get(span.start..span.end).map_or(0, |s| s.chars().count()).max(1);
        format!("error: {self}\n  {input}\n  {}{}", " ".repeat(lead), "^".repeat(width))
    }
}

impl fmt::Display for NotationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotationError::Parse(e) => {
                write!(f, "{} at byte {}", e.message, e.span.start)?;
                if !e.expected.is_empty() {
                    write!(f, " (expected {})", e.expected.join(" or "))?;
                }
                Ok(())
            }
            NotationError::InvalidDigit { span, value } => {
                write!(f, "digit {value} at byte {} must be at least 1", span.start)
            }
            NotationError::Value { span, error } => write!(f, "{error} at byte {}", span.start),
        }
    }
}

impl std::error::Error for NotationError {}
