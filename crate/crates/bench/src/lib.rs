//! Manifest-driven verification of the engine against curated expected
//! values, plus the pieces the `paper-bench` CLI is built from.

pub mod checks;
pub mod kexpr;
pub mod manifest;
pub mod notation;
pub mod registry;
pub mod report;
pub mod suites;
pub mod tables;

pub use manifest::{Check, CheckKind, Manifest, ManifestError};
pub use report::{run_manifest, Report, RunConfig};
