//! Command-line front end, config files and tabular output for
//! [`beatwave_core`].

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod model;
pub mod output;

pub use error::{CliError, Result};
