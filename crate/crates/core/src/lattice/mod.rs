pub mod hnf;
#[allow(clippy::module_inception)]
pub mod lattice;
pub mod semilattice;

pub use lattice::{subgroup_span, Lattice, Subgroup};
pub use semilattice::{box_points, interaction_check, interaction_check_k, sumset_cosets, CosetSet, Semilattice};
