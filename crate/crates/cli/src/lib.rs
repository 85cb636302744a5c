//! Command-line front end for `divfree-core`: configuration, the expression
//! language, and dispatch of commands and verification suites.

pub mod commands;
pub mod config;
pub mod parser;
pub mod suites;

pub use commands::{run, Cli, Command, Outcome};
pub use config::Config;
pub use parser::{parse, Expr, ParseError};
pub use suites::Setup;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] divfree_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Every error that reaches the user is a usage problem; verification
    /// failures are reported through [`Outcome::code`] instead.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
