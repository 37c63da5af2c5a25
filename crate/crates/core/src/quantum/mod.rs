//! su_q(2): representations, Hopf structure, the quantum spin-1 coupling
//! algebra and the quantum quaternion.

mod hopf;
mod qalgebra;
mod qcg;
mod quaternion;
mod rep;
mod sampling;

pub use hopf::{
    check_antipode_axiom, check_antipode_coproduct, check_antipode_relations, check_coassociativity, check_counit,
    check_counit_antipode, coproduct_gen, coproduct_word, counit_gen, counit_word, defining_relations,
    verify_hopf_axioms, Antipode, Gen, HopfReps, Tensor, Word,
};
pub use qalgebra::{
    build_q_algebra, check_antiautomorphism, check_palindromic, check_q_classical_limit, permute, q_form, q_index,
    q_involution, q_table, verify_q_identities, QAlgebra, Q_LABELS,
};
pub use qcg::{check_covariance, check_form_matches_singlet, derive_q_cg_spin1, product_matrix, QCgDerivation};
pub use quaternion::{
    build_quantum_quaternion, check_quantum_quaternion, quadratic_certificate, quaternion_images, QuadraticData,
};
pub use rep::{rep_generators, verify_classical_limit, verify_coproduct, verify_suq2_relations, SuqGenerators};
pub use sampling::{check_at_point, sample_points, t_sample_check};
