//! Expression front end: a hand-written recursive-descent parser with
//! precedence climbing (^ above *, * above unary minus, unary minus above
//! binary +/-), and an evaluator over the three built-in charts.
//!
//! Juxtaposition is not multiplication; `*` is always explicit, which keeps
//! multi-character identifiers like `dth1` unambiguous.

pub mod ast;
pub mod eval;
pub mod lexer;
pub mod parser;

pub use ast::{Ast, Node};
pub use eval::{eval_str, Value, Workspace};
pub use parser::parse;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Error)]
#[error("{message} at {}:{}", span.line, span.col)]
pub struct ParseError {
    pub message: String,
    pub span: Span,
}

impl ParseError {
    pub fn new(message: impl Into<String>, span: Span) -> Self {
        ParseError {
            message: message.into(),
            span,
        }
    }
}
