//! Bundle files, reports, and the commands of the `cocart` binary.

pub mod bundle;
pub mod commands;
pub mod report;
pub mod syntax;

pub use bundle::{parse_bundle, serialize_bundle, Bundle, BundleError};
pub use commands::{CliError, Outcome, Which};
pub use report::Report;
