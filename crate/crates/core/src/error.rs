//! Shared error types.

use thiserror::Error;

/// A text-format parse failure, with the byte offset of the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> ParseError {
        ParseError { offset, message: message.into() }
    }

    /// Re-anchors the offset when the parsed text was embedded in a larger
    /// input at `base`.
    pub fn shift(self, base: usize) -> ParseError {
        ParseError { offset: self.offset + base, message: self.message }
    }
}

/// A structurally invalid value (bad bijection, non-triangular matrix,
/// mismatched ranks and leaf counts, wrong instance name, ...).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid value: {0}")]
pub struct InvalidValue(pub String);

impl InvalidValue {
    pub fn new(msg: impl Into<String>) -> InvalidValue {
        InvalidValue(msg.into())
    }
}
