pub mod dims;
pub mod orbits;
pub mod projection;
pub mod table;

pub use dims::{AffinizedRow, IsotropicDim};
pub use orbits::{Orbit, OrbitTable, SeparationReport};
pub use projection::{ProjectionVector, TwistDatum};
pub use table::{ProjectionTable, ProjRow};
