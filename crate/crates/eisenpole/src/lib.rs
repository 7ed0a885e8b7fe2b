//! Std companion of `eisenpole-core`: the zeta-value backend, parallel
//! drivers, rendering and serialization behind the `eisenpole` binary.

pub mod appendix;
pub mod config;
pub mod driver;
pub mod error;
pub mod json;
pub mod numerics;
pub mod parallel;
pub mod render;

pub use config::{Command, Format, Parabolics, RunConfig};
pub use driver::{run, Outcome};
pub use error::CliError;
pub use numerics::ZetaEngine;
