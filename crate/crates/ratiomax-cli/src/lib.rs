//! Command-line surface for the ratiomax solvers: instance file I/O,
//! seeded random generators and plain-text reports.
//!
//! The binary lives in `main.rs`; everything it does is reachable
//! through this library so tests and benchmarks can drive the same
//! code paths directly.

pub mod args;
pub mod commands;
pub mod gen;
pub mod io;
pub mod report;

pub use commands::{batch_report, certify_report, generate_report, solve_report, SolveMethod};
pub use gen::{generate, GenSpec, Kind, Preset, RegionSpec};
pub use io::{CliError, InstanceFile, InstancePayload, LoadedInstance, FORMAT_VERSION};
