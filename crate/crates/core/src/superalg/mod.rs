//! Graded coupling algebras: osp(1,2), super-quaternions and the
//! spin-(3, 3/2) extension of the octonion construction.

pub mod graded;
pub mod osp;

pub use graded::{
    build_graded_cg, build_super_cg, build_super_octonion, solve_super_cg_ratio, super_cg_spec, super_octonion_spec,
    Coupling, GradedSectorSpec, Sector,
};
pub use osp::{
    build_osp12_cartesian, build_super_quaternion, check_osp_form, check_spherical_cartesian_isomorphism,
    check_super_quaternion, index_sign, osp_coupling, osp_form, pauli, relabel_to_osp, spherical_to_cartesian,
    EpsilonAB, OspBasis,
};
