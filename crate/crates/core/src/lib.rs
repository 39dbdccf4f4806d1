//! Exact computations with extended affine root systems: construction from
//! finite root systems and semilattices, subsystem extraction and
//! localization, twisted-affinization orbit data, and three explicit Lie
//! algebra realizations used as bracket-level cross-checks.

pub mod arith;
pub mod ears;
pub mod error;
pub mod finroots;
pub mod lattice;
pub mod realize;
pub mod report;
pub mod twist;

pub use error::{Error, Result};
pub use report::{Report, Status, Violation};
