//! Text grammars, the family verification report, and the command-line
//! front end for `mazurkit-core`.

pub mod cli;
mod error;
pub mod monodromy;
pub mod parse;
pub mod report;

pub use error::{Error, ParseError};
