pub mod cyclotomic;
pub mod laurent;
pub mod matrix;
pub mod rational;

pub use cyclotomic::Cyclotomic;
pub use laurent::LaurentPoly;
pub use matrix::{exact_rank, ExactMatrix, RankScalar, SparseSpan};
pub use rational::Rational;
