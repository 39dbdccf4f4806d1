pub mod btype;
pub mod jordan;
pub mod toroidal;

pub use btype::{bl_bracket, BlDatum, BlIsotropic, LaurentMatrix};
pub use jordan::{delta_op, rokn3_check, tkk_bracket_class, JordanElement, JordanTorus, OpTerm, TkkClass, TkkOperator};
pub use toroidal::{toroidal_bracket, toroidal_form, toroidal_isotropic_space, IsotropicSpace, ToroidalElement};
