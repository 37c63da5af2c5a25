//! Unit adjunction, the unit-coefficient solver and the composition test.

use super::identities::{associator_residual, sweep};
use super::{BilinearForm, Element, IdentityReport, StructureAlgebra};
use crate::scalar::Scalar;

/// Algebra on `e0` plus the basis of `alg` with
/// `x * y = lambda B(x,y) e0 + mu (x y)` and `e0` a two-sided unit.
/// The label of the new unit is `e0`.
pub fn adjoin_unit<S: Scalar>(
    alg: &StructureAlgebra<S>,
    form: &BilinearForm<S>,
    lambda: &S,
    mu: &S,
) -> StructureAlgebra<S> {
    let n = alg.dim();
    assert_eq!(form.dim(), n, "form dimension");
    let labels =
        std::iter::once(("e0".to_string(), 0u8)).chain((0..n).map(|i| (alg.label(i).to_string(), alg.grade(i))));
    let mut out = if alg.is_graded() {
        StructureAlgebra::graded(labels)
    } else {
        StructureAlgebra::new(labels.map(|(l, _)| l))
    };
    out.add_constant(0, 0, 0, S::one());
    for a in 0..n {
        out.add_constant(0, a + 1, a + 1, S::one());
        out.add_constant(a + 1, 0, a + 1, S::one());
        for b in 0..n {
            out.add_constant(a + 1, b + 1, 0, lambda.clone() * form.entry(a, b).clone());
            for (c, k) in alg.product(a, b).terms() {
                out.add_constant(a + 1, b + 1, c + 1, mu.clone() * k.clone());
            }
        }
    }
    out
}

/// `e0 (+) scale * form`, with `B(e0, e0) = 1` and `e0` orthogonal to the rest.
pub fn extend_form<S: Scalar>(form: &BilinearForm<S>, scale: &S) -> BilinearForm<S> {
    let n = form.dim();
    BilinearForm::from_fn(n + 1, |a, b| match (a, b) {
        (0, 0) => S::one(),
        (0, _) | (_, 0) => S::zero(),
        _ => scale.clone() * form.entry(a - 1, b - 1).clone(),
    })
}

/// Which law the unit coefficient is solved for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitMode {
    /// `(x*y)*z = x*(y*z)`.
    Associative,
    /// Linearized left and right alternative laws
    /// `(x,z,y) + (z,x,y) = 0` and `(y,x,z) + (y,z,x) = 0`.
    Alternative,
}

fn law_residuals<S: Scalar>(u: &StructureAlgebra<S>, mode: UnitMode, a: usize, b: usize, c: usize) -> Vec<Element<S>> {
    match mode {
        UnitMode::Associative => vec![associator_residual(u, a, b, c)],
        UnitMode::Alternative => vec![
            associator_residual(u, a, c, b).add(&associator_residual(u, c, a, b)),
            associator_residual(u, b, a, c).add(&associator_residual(u, b, c, a)),
        ],
    }
}

/// The `lambda` (with `mu = 1`) for which `adjoin_unit` satisfies `mode`,
/// or `None` when no value works. The residual of every basis triple is
/// affine in `lambda`, so it is sampled at 0 and 1, the first nonzero slope
/// fixes `lambda`, and the value is then verified on every triple. When the
/// law holds for every `lambda` the canonical answer is 0.
pub fn solve_unit_coefficient<S: Scalar>(
    alg: &StructureAlgebra<S>,
    form: &BilinearForm<S>,
    mode: UnitMode,
) -> Option<S> {
    let one = S::one();
    let u0 = adjoin_unit(alg, form, &S::zero(), &one);
    let u1 = adjoin_unit(alg, form, &one, &one);
    let n = u0.dim();
    let mut candidate: Option<S> = None;
    'search: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let r0 = law_residuals(&u0, mode, a, b, c);
                let r1 = law_residuals(&u1, mode, a, b, c);
                for (r0, r1) in r0.iter().zip(&r1) {
                    let slope = r1.sub(r0);
                    let first = slope.terms().next().map(|(k, s)| (k, s.clone()));
                    if let Some((k, s)) = first {
                        let inv = s.try_inverse()?;
                        candidate = Some(-(r0.coeff(k) * inv));
                        break 'search;
                    }
                }
            }
        }
    }
    let lambda = candidate.unwrap_or_else(S::zero);
    let u = adjoin_unit(alg, form, &lambda, &one);
    let ok = sweep("unit_law", u.labels(), 3, |t| {
        law_residuals(&u, mode, t[0], t[1], t[2])
            .iter()
            .any(|r| !r.is_zero())
            .then(String::new)
    })
    .holds();
    ok.then_some(lambda)
}

/// `B(x1 y1, x2 y2) + B(x1 y2, x2 y1) - 2 B(x1, x2) B(y1, y2)`: the
/// polarization of `N(xy) = N(x) N(y)` with `N(x) = B(x, x)`.
pub fn composition_residual<S: Scalar>(
    alg: &StructureAlgebra<S>,
    form: &BilinearForm<S>,
    x1: usize,
    x2: usize,
    y1: usize,
    y2: usize,
) -> S {
    let p = |a, b| alg.product(a, b);
    form.eval(p(x1, y1), p(x2, y2)) + form.eval(p(x1, y2), p(x2, y1))
        - S::from_i64(2) * form.entry(x1, x2).clone() * form.entry(y1, y2).clone()
}

/// Norm multiplicativity, checked on all basis quadruples of the polarized
/// identity.
pub fn check_composition<S: Scalar>(alg: &StructureAlgebra<S>, form: &BilinearForm<S>) -> IdentityReport {
    sweep("composition", alg.labels(), 4, |t| {
        let r = composition_residual(alg, form, t[0], t[1], t[2], t[3]);
        (!r.is_zero()).then(|| r.to_string())
    })
}
