pub mod axioms;
pub mod datum;
pub mod filtration;
pub mod lemma;
pub mod subsystem;

pub use axioms::{axioms_check, closedness_check, ClosedMode};
pub use datum::{DatumJson, EarsDatum, EarsRoot, RootSet};
pub use filtration::{filtration_build, filtration_hypotheses, Filtration, FiltrationSummary};
pub use lemma::{semilattice_closure_check, Decomposition, LemmaInput};
pub use subsystem::{affine_localize, classify, finite_localize, subsystem_rt, FilteredView, SubsystemSummary, SubsystemView};
