pub mod automorphism;
pub mod system;

pub use automorphism::{diagram_automorphism, DiagramAutomorphism};
pub use system::{build_finite, CartanType, FiniteRootSystem, FiniteSpec, RootCoords};
pub mod display;
pub use display::{fmt_eps, fmt_simple};
