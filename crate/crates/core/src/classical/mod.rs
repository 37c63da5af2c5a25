//! Spin algebras built from coupling coefficients and their Cartesian
//! counterparts.

pub mod cartesian;
pub mod spin;

pub use cartesian::{
    build_octonion_cartesian, build_quaternion, derive_octonion_structure, imaginary_octonions, octonion_generators,
    octonions_from_table, FTable, OctonionDerivation, SymTracelessTensor,
};
pub use spin::{
    build_spin_algebra, jordan_check, spin1_checks, spin1_quaternion_extension, spin2_jordan_check,
    spin3_octonion_bridge, spin_label, su2_isomorphism_check, OctonionBridge, SpinAlgebraSpec, UnitalExtension,
};
