//! The unital extension `x * y = x . y - B(x, y) e0` of the q-algebra, and
//! the certificates identifying it with the quaternions.

use num_traits::One;

use super::qalgebra::{build_q_algebra, q_index};
use crate::algebra::identities::{check_associativity, sweep};
use crate::algebra::{
    adjoin_unit, check_composition, check_isomorphism, BilinearForm, Element, IdentityReport, StructureAlgebra,
};
use crate::classical::{build_quaternion, spin1_quaternion_extension};
use crate::error::Result;
use crate::scalar::{QRadical, Radical, Scalar};

/// Basis `e0, x+, x0, x-`.
pub fn build_quantum_quaternion() -> StructureAlgebra<QRadical> {
    let q = build_q_algebra(&QRadical::one());
    adjoin_unit(&q.algebra, &q.form, &-QRadical::one(), &QRadical::one())
}

/// Linear trace and symmetric norm form of a quadratic unital algebra:
/// `x * x - T(x) x + N(x, x) e0 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticData<S> {
    pub trace: Vec<S>,
    pub norm: BilinearForm<S>,
}

impl<S: Scalar> QuadraticData<S> {
    fn trace_of(&self, x: &Element<S>) -> S {
        x.terms()
            .fold(S::zero(), |acc, (i, c)| acc + self.trace[i].clone() * c.clone())
    }
}

fn e<S: Scalar>(i: usize) -> Element<S> {
    Element::basis(i)
}

/// Reads the trace and norm off the basis of an algebra with unit `e0` at
/// index 0, then checks the quadratic relation on every basis vector and every
/// sum of two basis vectors. `None` when the products do not have the
/// required shape.
pub fn quadratic_certificate<S: Scalar>(alg: &StructureAlgebra<S>) -> (IdentityReport, Option<QuadraticData<S>>) {
    let n = alg.dim();
    let labels = alg.labels();
    let unit = sweep("quadratic_unit", labels, 1, |t| {
        let a = t[0];
        (alg.product(0, a) != &e(a) || alg.product(a, 0) != &e(a))
            .then(|| format!("e0 is not a unit for {}", labels[a]))
    });
    if !unit.holds() {
        return (unit, None);
    }
    let half = S::ratio(1, 2);
    let mut trace = vec![S::from_i64(2)];
    for a in 1..n {
        trace.push(alg.product(a, a).coeff(a));
    }
    let mut norm = BilinearForm::zero(n);
    for a in 0..n {
        for b in a..n {
            // x y + y x - T(x) y - T(y) x = -2 N(x, y) e0
            let s = alg
                .product(a, b)
                .add(alg.product(b, a))
                .sub(&e(b).scale(&trace[a]))
                .sub(&e(a).scale(&trace[b]));
            if s.support().any(|k| k != 0) {
                let report = IdentityReport::from_bool(
                    "quadratic",
                    false,
                    format!(
                        "{} {} + {} {} leaves the span of the factors and e0",
                        labels[a], labels[b], labels[b], labels[a]
                    ),
                );
                return (report, None);
            }
            let v = -(s.coeff(0) * half.clone());
            norm.set(a, b, v.clone());
            norm.set(b, a, v);
        }
    }
    let data = QuadraticData { trace, norm };
    let spanning = sweep("quadratic_spanning_set", labels, 2, |t| {
        if t[0] > t[1] {
            return None;
        }
        let x = if t[0] == t[1] { e(t[0]) } else { e(t[0]).add(&e(t[1])) };
        let r = alg
            .multiply(&x, &x)
            .sub(&x.scale(&data.trace_of(&x)))
            .add(&e(0).scale(&data.norm.eval(&x, &x)));
        (!r.is_zero()).then(|| r.render(labels))
    });
    (IdentityReport::all_of("quadratic", vec![unit, spanning]), Some(data))
}

/// Images of the quaternion units `e0, phi1, phi2, phi3` in the quantum
/// quaternion. With `c = (t - 1/t)/2`, `d = (t + 1/t)/2` and `h = (x0 - c e0)/d`
/// (so `h * h = e0`):
/// `phi1 = x+/2 + x-/d`, `phi2 = i (-x+/2 + x-/d)`, `phi3 = i h`.
pub fn quaternion_images() -> Vec<Element<QRadical>> {
    let half = QRadical::ratio(1, 2);
    let i = QRadical::imaginary_unit();
    let c = (QRadical::t_pow(1) - QRadical::t_pow(-1)) * half.clone();
    let d = (QRadical::t_pow(1) + QRadical::t_pow(-1)) * half.clone();
    let dinv = d.inverse().expect("(t + 1/t)/2 is a single term");
    let (p, z, m) = (q_index(1) + 1, q_index(0) + 1, q_index(-1) + 1);
    let ia = i.clone() * dinv.clone();
    vec![
        e(0),
        Element::from_terms([(p, half.clone()), (m, dinv.clone())]),
        Element::from_terms([(p, -(i.clone() * half)), (m, ia.clone())]),
        Element::from_terms([(z, ia.clone()), (0, -(ia * c))]),
    ]
}

/// Associativity, the quadratic certificate with its norm multiplicative,
/// the explicit isomorphism from the quaternions (reported for information),
/// and at `t = 1` both equality with the spherical spin-1 extension and the
/// same isomorphism onto the Cartesian quaternion table.
pub fn check_quantum_quaternion() -> Result<Vec<IdentityReport>> {
    let qq = build_quantum_quaternion();
    let mut out = vec![check_associativity(&qq).named("quantum_quaternion_associative")];
    let (quadratic, data) = quadratic_certificate(&qq);
    out.push(quadratic.named("quantum_quaternion_quadratic"));
    out.push(match &data {
        Some(d) => check_composition(&qq, &d.norm).named("quantum_quaternion_composition"),
        None => IdentityReport::from_bool("quantum_quaternion_composition", false, "no norm form"),
    });
    let images = quaternion_images();
    out.push(
        check_isomorphism(&build_quaternion::<QRadical>(), &qq, &images)
            .named("quantum_quaternion_isomorphism")
            .informational(),
    );

    let at_one = qq.try_map_scalars(QRadical::specialize_t1)?;
    let spherical = spin1_quaternion_extension(&Radical::sqrt_int(2))?;
    out.push(IdentityReport::from_bool(
        "quantum_quaternion_t1_spherical",
        spherical.algebra.is_some_and(|a| a.constants() == at_one.constants()),
        "compared with the spin-1 unital extension at b = sqrt(2)",
    ));
    let images_at_one = images
        .iter()
        .map(|x| x.try_map(QRadical::specialize_t1))
        .collect::<Result<Vec<_>>>()?;
    out.push(
        check_isomorphism(&build_quaternion::<Radical>(), &at_one, &images_at_one)
            .named("quantum_quaternion_t1_cartesian"),
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Status;
    use num_traits::Zero;

    #[test]
    fn unit_products() {
        let qq = build_quantum_quaternion();
        let (p, z, m) = (q_index(1) + 1, q_index(0) + 1, q_index(-1) + 1);
        assert_eq!(qq.labels(), ["e0", "x+", "x0", "x-"]);
        assert_eq!(
            qq.product(p, m),
            &Element::from_terms([(z, QRadical::one()), (0, -QRadical::t_pow(1))])
        );
        let at_one = qq.try_map_scalars(QRadical::specialize_t1).unwrap();
        assert_eq!(at_one.product(z, z), &Element::basis(0));
    }

    #[test]
    fn certificates_pass() {
        for r in check_quantum_quaternion().unwrap() {
            assert_ne!(r.status, Status::Fail, "{r}");
            assert!(r.holds(), "{r}");
        }
    }

    #[test]
    fn norm_values() {
        let qq = build_quantum_quaternion();
        let (_, data) = quadratic_certificate(&qq);
        let data = data.unwrap();
        let z = q_index(0) + 1;
        assert_eq!(data.trace[z], QRadical::t_pow(1) - QRadical::t_pow(-1));
        assert_eq!(data.norm.entry(z, z), &-QRadical::one());
        assert!(data.norm.entry(1, 1).is_zero());
    }

    #[test]
    fn non_quadratic_algebra_is_rejected() {
        let mut qq = build_quantum_quaternion();
        qq.add_constant(1, 2, 3, QRadical::one());
        let (r, data) = quadratic_certificate(&qq);
        assert!(!r.holds());
        assert!(data.is_none());
    }
}
