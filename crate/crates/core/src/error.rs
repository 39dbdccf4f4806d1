use std::fmt;

/// Errors surfaced by the library. Check-style operations return reports
/// instead; these are for inputs that make an operation meaningless.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("unsupported cyclotomic order {0} (must be 1 or prime)")]
    NonPrimeOrder(u32),
    #[error("variable count mismatch: {0} vs {1}")]
    VarCountMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid Cartan type {0}{1}")]
    InvalidCartanType(String, usize),
    #[error("no diagram automorphism of order {order} for {label}")]
    InadmissibleAutomorphism { label: String, order: u32 },
    #[error("isotropic vector where a nonisotropic root is required")]
    IsotropicRoot,
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("generating set is empty")]
    EmptyT,
    #[error("generating set is not connected")]
    DisconnectedT,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn fmt_vec<T: fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}
