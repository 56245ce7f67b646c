use pest::error::LineColLocation;
use pest::iterators::Pair;

use crate::parse::Rule;

/// Syntax or resolution error, positioned at a 1-based line and column.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(pair: &Pair<'_, Rule>, message: impl Into<String>) -> Self {
        let (line, column) = pair.as_span().start_pos().line_col();
        ParseError { line, column, message: message.into() }
    }
}

impl From<pest::error::Error<Rule>> for ParseError {
    fn from(e: pest::error::Error<Rule>) -> Self {
        let (line, column) = match e.line_col {
            LineColLocation::Pos(p) | LineColLocation::Span(p, _) => p,
        };
        let e = e.renamed_rules(|r| format!("{r:?}"));
        ParseError { line, column, message: e.variant.message().into_owned() }
    }
}

#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] mazurkit_core::Error),
    #[error("{quantity} for n = {n} does not fit in 64 bits")]
    Overflow { n: u32, quantity: &'static str },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}
