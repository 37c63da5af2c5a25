pub mod algebra;
pub mod classical;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod quantum;
pub mod scalar;
pub mod suite;
pub mod superalg;
pub mod wigner;

pub use error::{Error, Result};

pub use scalar::{GaussianRational, LaurentPoly, QRadical, Radical, RationalFunction, Scalar};

/// Algebras over sums of square roots of rationals.
pub type RadicalAlgebra = algebra::StructureAlgebra<Radical>;
/// Algebras over the q-radical ring, for the deformed constructions.
pub type QRadicalAlgebra = algebra::StructureAlgebra<QRadical>;
pub type RadicalForm = algebra::BilinearForm<Radical>;
pub type QRadicalForm = algebra::BilinearForm<QRadical>;
pub type RadicalElement = algebra::Element<Radical>;
pub type QRadicalElement = algebra::Element<QRadical>;
