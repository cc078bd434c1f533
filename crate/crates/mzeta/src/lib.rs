//! Variety-class expressions, measure evaluation, reports and the `mzeta`
//! command-line driver on top of `mzeta-core`.

pub mod cli;
pub mod dsl;
pub mod eval;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] dsl::ParseError),
    #[error(transparent)]
    Core(#[from] mzeta_core::Error),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
