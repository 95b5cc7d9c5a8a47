//! A small expression language over a fixed algebra.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' uint)*
//! atom   := 'e' | 'e' digits | 'omega' | 'w' | 'i' | number | number 'i'
//!         | '(' expr ')' | ident '(' args ')'
//! ```
//!
//! Multiplication is always explicit. `e` alone is the identity, which lets
//! the canonical text form of an element parse back to the same element.

mod eval;
mod lexer;
mod parser;

use std::fmt;

pub use eval::{evaluate, Value};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, AstKind, AstNode, BinOp, Function};

use crate::context::AlgebraContext;

/// Nesting limit for parentheses, calls and unary minus.
pub const MAX_DEPTH: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExprErrorKind {
    Lex,
    Parse,
    UnknownFunction,
    Arity,
    GeneratorRange,
    Type,
    Eval,
}

impl ExprErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExprErrorKind::Lex => "lex",
            ExprErrorKind::Parse => "parse",
            ExprErrorKind::UnknownFunction => "unknown_function",
            ExprErrorKind::Arity => "arity",
            ExprErrorKind::GeneratorRange => "generator_range",
            ExprErrorKind::Type => "type",
            ExprErrorKind::Eval => "eval",
        }
    }
}

/// An error with the byte offset in the input where it was detected.
#[derive(Debug, Clone, PartialEq)]
pub struct ExprError {
    pub kind: ExprErrorKind,
    pub position: usize,
    pub message: String,
}

impl ExprError {
    pub(crate) fn new(kind: ExprErrorKind, position: usize, message: impl Into<String>) -> Self {
        ExprError {
            kind,
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} error at {}: {}", self.kind.as_str(), self.position, self.message)
    }
}

impl std::error::Error for ExprError {}

/// Parses and evaluates `input` in `ctx`.
pub fn eval_str(input: &str, ctx: &AlgebraContext) -> Result<Value, ExprError> {
    let ast = parse(input, ctx)?;
    evaluate(&ast, ctx)
}
