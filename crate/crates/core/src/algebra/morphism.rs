use super::identities::sweep;
use super::{Element, IdentityReport, StructureAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

fn image_matrix<S: Scalar>(images: &[Element<S>], dim: usize) -> Matrix<S> {
    // column i holds the coordinates of images[i]
    Matrix::from_fn(dim, images.len(), |r, c| images[c].coeff(r))
}

/// Checks that `e_i -> images[i]` is an algebra isomorphism from `src` onto
/// `dst`: the map is multiplicative on all basis pairs, grade-preserving, and
/// invertible (nonzero determinant).
pub fn check_isomorphism<S: Scalar>(
    src: &StructureAlgebra<S>,
    dst: &StructureAlgebra<S>,
    images: &[Element<S>],
) -> IdentityReport {
    let n = src.dim();
    if images.len() != n || dst.dim() != n {
        return IdentityReport::from_bool(
            "isomorphism",
            false,
            format!(
                "dimension mismatch: {n} generators, {} images, target dimension {}",
                images.len(),
                dst.dim()
            ),
        );
    }
    let phi = |x: &Element<S>| {
        let mut out = Element::zero();
        for (i, c) in x.terms() {
            out.add_scaled(&images[i], c);
        }
        out
    };
    let multiplicative = sweep("isomorphism_multiplicative", src.labels(), 2, |t| {
        let lhs = phi(src.product(t[0], t[1]));
        let rhs = dst.multiply(&images[t[0]], &images[t[1]]);
        let r = lhs.sub(&rhs);
        (!r.is_zero()).then(|| r.render(dst.labels()))
    });
    let graded = sweep("isomorphism_grading", src.labels(), 1, |t| {
        let g = src.grade(t[0]);
        images[t[0]]
            .support()
            .find(|k| dst.grade(*k) != g)
            .map(|k| format!("image has a component along {}", dst.label(k)))
    });
    let invertible = match image_matrix(images, n).determinant() {
        Ok(det) => IdentityReport::from_bool("isomorphism_invertible", !det.is_zero(), format!("det = {det}")),
        Err(err) => IdentityReport::from_bool("isomorphism_invertible", false, err.to_string()),
    };
    IdentityReport::all_of("isomorphism", vec![multiplicative, graded, invertible])
}

/// Structure constants of `alg` in the basis `new_basis[k]` (given in the old
/// coordinates), labelled by `labels`. Grades are taken from the leading
/// component of each new basis vector.
pub fn transport<S: Scalar, L: Into<String>>(
    alg: &StructureAlgebra<S>,
    new_basis: &[Element<S>],
    labels: impl IntoIterator<Item = L>,
) -> Result<StructureAlgebra<S>> {
    let n = alg.dim();
    if new_basis.len() != n {
        return Err(Error::Dimension(format!(
            "{} vectors for a {n}-dimensional algebra",
            new_basis.len()
        )));
    }
    let inv = image_matrix(new_basis, n).inverse()?;
    let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
    let grades: Vec<u8> = new_basis
        .iter()
        .map(|v| v.support().next().map_or(0, |i| alg.grade(i)))
        .collect();
    let mut out = if alg.is_graded() {
        StructureAlgebra::graded(labels.into_iter().zip(grades))
    } else {
        StructureAlgebra::new(labels)
    };
    for a in 0..n {
        for b in 0..n {
            let p = alg.multiply(&new_basis[a], &new_basis[b]).to_dense(n);
            out.set_product(a, b, Element::from_dense(&inv.apply(&p)));
        }
    }
    Ok(out)
}
