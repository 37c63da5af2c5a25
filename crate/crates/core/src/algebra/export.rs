use serde::Serialize;

use super::{BilinearForm, StructureAlgebra};
use crate::scalar::{Scalar, ScalarRing};

/// JSON view of an algebra. Constants are listed as `[a, b, c, "k"]` meaning
/// `e_a * e_b` has coefficient `k` along `e_c`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraJson {
    pub basis: Vec<String>,
    pub grades: Vec<u8>,
    pub scalar_ring: ScalarRing,
    pub constants: Vec<(usize, usize, usize, String)>,
}

impl<S: Scalar> From<&StructureAlgebra<S>> for AlgebraJson {
    fn from(alg: &StructureAlgebra<S>) -> Self {
        Self {
            basis: alg.labels().to_vec(),
            grades: alg.grades().to_vec(),
            scalar_ring: S::RING,
            constants: alg
                .constants()
                .into_iter()
                .map(|(a, b, c, k)| (a, b, c, k.to_string()))
                .collect(),
        }
    }
}

/// JSON view of a bilinear form as a row-major matrix of scalar strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormJson {
    pub scalar_ring: ScalarRing,
    pub matrix: Vec<Vec<String>>,
}

impl<S: Scalar> From<&BilinearForm<S>> for FormJson {
    fn from(form: &BilinearForm<S>) -> Self {
        let m = form.matrix();
        Self {
            scalar_ring: S::RING,
            matrix: (0..m.rows())
                .map(|i| m.row(i).iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Radical;

    #[test]
    fn serializes_in_documented_shape() {
        let mut a = StructureAlgebra::<Radical>::new(["x", "y"]);
        a.add_constant(1, 0, 0, Radical::sqrt_int(2));
        a.add_constant(0, 1, 1, Radical::from_i64(-1));
        let json = serde_json::to_string(&AlgebraJson::from(&a)).unwrap();
        assert_eq!(
            json,
            r#"{"basis":["x","y"],"grades":[0,0],"scalar_ring":"radical","constants":[[0,1,1,"-1"],[1,0,0,"sqrt(2)"]]}"#
        );
    }
}
