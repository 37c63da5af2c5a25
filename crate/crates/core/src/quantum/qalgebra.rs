//! The q-deformed spin-1 algebra on `x+, x0, x-`, its bilinear form and the
//! involution exchanging `x+` and `x-`.

use num_traits::One;

use crate::algebra::identities::{
    check_associator_form, check_flexible_lie_admissible, check_form_properties, element_sweep,
};
use crate::algebra::{BilinearForm, Element, IdentityReport, StructureAlgebra, SymmetryLaw};
use crate::classical::{build_spin_algebra, SpinAlgebraSpec};
use crate::error::{Error, Result};
use crate::scalar::{QRadical, Radical, Scalar};

pub const Q_LABELS: [&str; 3] = ["x+", "x0", "x-"];

/// Basis index of `x_m`.
pub fn q_index(m: i64) -> usize {
    (1 - m) as usize
}

/// The q-algebra together with its form and involution, the involution
/// given as a basis permutation.
#[derive(Clone, Debug, PartialEq)]
pub struct QAlgebra {
    pub beta: QRadical,
    pub algebra: StructureAlgebra<QRadical>,
    pub form: BilinearForm<QRadical>,
    pub involution: Vec<usize>,
}

/// Structure constants `x0 x0 = beta (t - 1/t) x0`, `x0 x+- = -+beta t^(-+1) x+-`,
/// `x+- x0 = +-beta t^(+-1) x+-`, `x+- x-+ = +-beta x0`, `x+- x+- = 0`.
pub fn q_table(beta: &QRadical) -> StructureAlgebra<QRadical> {
    let t = QRadical::t_pow(1);
    let tinv = QRadical::t_pow(-1);
    let (p, z, m) = (q_index(1), q_index(0), q_index(-1));
    let b = |k: QRadical| beta.clone() * k;
    let mut alg = StructureAlgebra::new(Q_LABELS);
    alg.add_constant(z, z, z, b(t.clone() - tinv.clone()));
    alg.add_constant(z, p, p, b(-tinv.clone()));
    alg.add_constant(z, m, m, b(t.clone()));
    alg.add_constant(p, z, p, b(t));
    alg.add_constant(m, z, m, b(-tinv));
    alg.add_constant(p, m, z, beta.clone());
    alg.add_constant(m, p, z, -beta.clone());
    alg
}

/// `B(x+, x-) = t`, `B(x-, x+) = 1/t`, `B(x0, x0) = -1`, all other entries 0.
pub fn q_form() -> BilinearForm<QRadical> {
    let mut form = BilinearForm::zero(3);
    form.set(q_index(1), q_index(-1), QRadical::t_pow(1));
    form.set(q_index(-1), q_index(1), QRadical::t_pow(-1));
    form.set(q_index(0), q_index(0), -QRadical::one());
    form
}

/// `x0 -> x0`, `x+- -> x-+`.
pub fn q_involution() -> Vec<usize> {
    vec![q_index(-1), q_index(0), q_index(1)]
}

pub fn build_q_algebra(beta: &QRadical) -> QAlgebra {
    QAlgebra {
        beta: beta.clone(),
        algebra: q_table(beta),
        form: q_form(),
        involution: q_involution(),
    }
}

/// Applies a basis permutation to an element.
pub fn permute<S: Scalar>(x: &Element<S>, perm: &[usize]) -> Element<S> {
    Element::from_terms(x.terms().map(|(i, c)| (perm[i], c.clone())))
}

/// `w(x y) = w(y) w(x)` on all basis pairs.
pub fn check_antiautomorphism<S: Scalar>(alg: &StructureAlgebra<S>, perm: &[usize]) -> IdentityReport {
    element_sweep("involution_antiautomorphism", alg, 2, |t| {
        permute(alg.product(t[0], t[1]), perm).sub(alg.product(perm[t[1]], perm[t[0]]))
    })
}

/// `t -> 1/t` applied to every coefficient of an element.
fn invert_variable(x: &Element<QRadical>) -> Result<Element<QRadical>> {
    x.try_map(|c| {
        c.invert_variable()
            .ok_or_else(|| Error::Unsupported(format!("t -> 1/t on {c}")))
    })
}

/// Inverting `t` and relabelling by the involution gives the same algebra up
/// to the sign of the product: `tau(w(x) w(y)) = -w(x y)`, where `tau` sends
/// `t` to `1/t`. Since `x -> -x` maps a product to its negative, both tables
/// define isomorphic algebras.
pub fn check_palindromic(alg: &StructureAlgebra<QRadical>, perm: &[usize]) -> Result<IdentityReport> {
    let n = alg.dim();
    for a in 0..n {
        for b in 0..n {
            invert_variable(alg.product(a, b))?;
        }
    }
    Ok(element_sweep("palindromic", alg, 2, |t| {
        let inverted = invert_variable(alg.product(perm[t[0]], perm[t[1]])).expect("checked above");
        inverted.add(&permute(alg.product(t[0], t[1]), perm))
    }))
}

fn prefixed(r: IdentityReport) -> IdentityReport {
    let name = format!("q_{}", r.name);
    r.named(name)
}

/// The associator in terms of the form, invariance of the form, its
/// compatibility with the involution, the cyclic associator sum and
/// Lie-admissibility, the involution being an anti-automorphism, and
/// non-degeneracy; flexibility is expected to fail.
pub fn verify_q_identities(q: &QAlgebra) -> Vec<IdentityReport> {
    let alg = &q.algebra;
    let law = SymmetryLaw::InvolutionCompatible(q.involution.clone());
    let mut out = vec![prefixed(check_associator_form(alg, &q.form))];
    for r in check_form_properties(alg, &q.form, &law) {
        let r = match r.name.as_str() {
            "form_symmetry" => r.named("form_involution_symmetry"),
            _ => r,
        };
        out.push(prefixed(r));
    }
    for r in check_flexible_lie_admissible(alg) {
        let r = if r.name == "flexible" { r.expect_fail() } else { r };
        out.push(prefixed(r));
    }
    out.push(prefixed(check_antiautomorphism(alg, &q.involution)));
    out
}

/// At `t = 1` the table and the form are those of the classical spin-1
/// algebra with `b = sqrt(2) beta` and its invariant pairing.
pub fn check_q_classical_limit(q: &QAlgebra) -> Result<IdentityReport> {
    let alg = q.algebra.try_map_scalars(QRadical::specialize_t1)?;
    let form = q.form.try_map_scalars(QRadical::specialize_t1)?;
    let b = Radical::sqrt_int(2) * q.beta.specialize_t1()?;
    let (spin1, pairing) = build_spin_algebra(&SpinAlgebraSpec::new(1, b.clone()))?;
    let same_table = alg.constants() == spin1.constants();
    let same_form = form == pairing;
    Ok(IdentityReport::from_bool(
        "q_classical_limit",
        same_table && same_form,
        format!("spin-1 algebra at b = {b}: table {}, form {}", same_table, same_form),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::identities::{associator_form_residual, flexible_residual};
    use crate::algebra::Status;

    fn q1() -> QAlgebra {
        build_q_algebra(&QRadical::one())
    }

    #[test]
    fn seven_products() {
        let q = q1();
        assert_eq!(q.algebra.constants().len(), 7);
        let (p, z, m) = (q_index(1), q_index(0), q_index(-1));
        assert_eq!(q.algebra.product(p, m), &Element::basis(z));
        assert_eq!(q.algebra.product(m, p), &Element::basis(z).neg());
        assert!(q.algebra.product(p, p).is_zero());
        assert_eq!(q.algebra.product(z, p), &Element::term(p, -QRadical::t_pow(-1)));
        assert_eq!(q.algebra.product(p, z), &Element::term(p, QRadical::t_pow(1)));
    }

    #[test]
    fn form_and_involution() {
        let q = q1();
        let w = &q.involution;
        let (p, m) = (q_index(1), q_index(-1));
        assert_eq!(q.form.entry(w[p], w[m]), &QRadical::t_pow(-1));
        assert_eq!(q.form.entry(w[p], w[m]), q.form.entry(m, p));
        assert!(check_antiautomorphism(&q.algebra, w).holds());
    }

    #[test]
    fn identities_hold_and_flexibility_fails() {
        let q = q1();
        let reports = verify_q_identities(&q);
        for r in &reports {
            assert_eq!(r.status, Status::Pass, "{r}");
        }
        let flex = reports.iter().find(|r| r.name == "q_flexible").unwrap();
        let w = flex.witness.as_ref().unwrap();
        let i = &w.indices;
        assert!(!flexible_residual(&q.algebra, i[0], i[1], i[2]).is_zero());
        // a genuine (x, y, x) failure exists
        let (p, m) = (q_index(1), q_index(-1));
        assert!(!q
            .algebra
            .associator(&Element::basis(p), &Element::basis(m), &Element::basis(p))
            .is_zero());
    }

    #[test]
    fn associator_form_on_mixed_triple() {
        let q = q1();
        let (p, z, m) = (q_index(1), q_index(0), q_index(-1));
        assert!(associator_form_residual(&q.algebra, &q.form, p, z, m).is_zero());
    }

    #[test]
    fn palindromic_up_to_sign() {
        let q = q1();
        assert!(check_palindromic(&q.algebra, &q.involution).unwrap().holds());
        // without the sign the relation fails
        let negated = q.algebra.rescaled(&-QRadical::one());
        assert!(!check_palindromic(&negated, &[0, 1, 2]).unwrap().holds());
    }

    #[test]
    fn classical_limit_is_spin_one() {
        assert!(check_q_classical_limit(&q1()).unwrap().holds());
        let doubled = build_q_algebra(&QRadical::from_i64(2));
        assert!(check_q_classical_limit(&doubled).unwrap().holds());
        let mut wrong = q1();
        wrong.form.set(0, 0, QRadical::one());
        assert!(!check_q_classical_limit(&wrong).unwrap().holds());
    }

    #[test]
    fn broken_table_fails_associator_form() {
        let q = q1();
        let mut alg = q.algebra.clone();
        alg.add_constant(q_index(1), q_index(1), q_index(1), QRadical::one());
        assert!(!check_associator_form(&alg, &q.form).holds());
    }
}
