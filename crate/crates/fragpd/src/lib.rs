//! Files, simulation and the command-line front end for `fragpd-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod montecarlo;
pub mod rational;
pub mod sweep;

pub use error::{Error, Result};
