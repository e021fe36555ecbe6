//! Simulation and audit of a string comparison protocol built on Grover
//! amplitude amplification.
//!
//! * [`statevector`] - dense amplitude kernel for one register.
//! * [`protocol`] - oracle compilation, input preparation, verdicts.
//! * [`validator`] - brute-force joint simulation of every register.
//! * [`analysis`] - closed-form amplification and the claim audit.
//! * [`cli`] - command-line workflows and their serialized output.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod format;
pub mod protocol;
pub mod statevector;
pub mod validator;

pub use error::{Error, Result};
pub use protocol::{compare, ComparisonInstance, ComparisonTranscript, Mode, Verdict};
pub use statevector::{MarkedSet, RegisterConfig, StateVector};
