//! Spin-`j` coupling algebras and the identities they satisfy.

use num_traits::{One, Zero};

use crate::algebra::identities::{
    check_alternative, check_cg_family, check_commutation_sign, check_cubic, check_jacobi, check_malcev, element_sweep,
    sweep, CgIdentityShape,
};
use crate::algebra::{
    adjoin_unit, check_composition, extend_form, solve_unit_coefficient, BilinearForm, Element, IdentityReport,
    StructureAlgebra, UnitMode,
};
use crate::error::{Error, Result};
use crate::scalar::{Radical, Scalar};
use crate::wigner::{cj, pairing, HalfInt};

/// Parameters of a spin-`j` algebra: `psi(m1) . psi(m2) = b C_j(m1, m2) psi(m1 + m2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinAlgebraSpec {
    pub j: HalfInt,
    pub b: Radical,
}

impl SpinAlgebraSpec {
    pub fn new(j: i64, b: Radical) -> Self {
        Self { j: HalfInt::int(j), b }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.j.is_integer() || !(1..=3).contains(&(self.j.twice() / 2)) {
            return Err(Error::Unsupported(format!("spin algebra for j = {}", self.j)));
        }
        Ok(())
    }
}

/// Basis label of `psi_j(m)`.
pub fn spin_label(j: HalfInt, m: HalfInt) -> String {
    format!("psi{j}({m})")
}

/// The `2j+1`-dimensional algebra with constants `b C_j(m1, m2)` and the
/// pairing `<psi(m1)|psi(m2)> = (-1)^(j-m1) delta(m1+m2, 0)`. Basis order is
/// `m = j, j-1, ..., -j`.
pub fn build_spin_algebra(spec: &SpinAlgebraSpec) -> Result<(StructureAlgebra<Radical>, BilinearForm<Radical>)> {
    spec.validate()?;
    let j = spec.j;
    let ms: Vec<HalfInt> = j.projections().collect();
    let mut alg = StructureAlgebra::new(ms.iter().map(|m| spin_label(j, *m)));
    let mut form = BilinearForm::zero(ms.len());
    for (a, &m1) in ms.iter().enumerate() {
        for (b, &m2) in ms.iter().enumerate() {
            form.set(a, b, pairing(j, m1, m2)?);
            let m3 = m1 + m2;
            if m3.twice().abs() > j.twice() {
                continue;
            }
            let c = cj(j, m1, m2)?;
            if !c.is_zero() {
                alg.add_constant(a, b, j.index_of(m3), spec.b.clone() * c);
            }
        }
    }
    Ok((alg, form))
}

fn spin_one_index(m: i64) -> usize {
    (1 - m) as usize
}

/// Defines `J3 = -(sqrt(2)/b) psi(0)` and `J(+-) = -(2i/b) psi(+-1)` on a
/// spin-1 algebra and checks `[J3, J+-] = +-J+-` and `[J+, J-] = 2 J3`, with the
/// algebra product as bracket.
pub fn su2_isomorphism_check(alg: &StructureAlgebra<Radical>, b1: &Radical) -> Result<IdentityReport> {
    if alg.dim() != 3 {
        return Err(Error::Dimension(format!(
            "spin-1 algebra has dimension 3, got {}",
            alg.dim()
        )));
    }
    let inv_b = b1.try_inverse().ok_or(Error::DivisionByZero)?;
    let j3 = Element::term(spin_one_index(0), -(Radical::sqrt_int(2) * inv_b.clone()));
    let ladder = -(Radical::from_i64(2) * Radical::imaginary_unit() * inv_b);
    let jp = Element::term(spin_one_index(1), ladder.clone());
    let jm = Element::term(spin_one_index(-1), ladder);
    let relations = [
        (alg.multiply(&j3, &jp), jp.clone()),
        (alg.multiply(&j3, &jm), jm.neg()),
        (alg.multiply(&jp, &jm), j3.scale(&Radical::from_i64(2))),
    ];
    let names = ["[J3,J+] = J+", "[J3,J-] = -J-", "[J+,J-] = 2 J3"].map(String::from);
    Ok(sweep("su2_brackets", &names, 1, |t| {
        let (lhs, rhs) = &relations[t[0]];
        let r = lhs.sub(rhs);
        (!r.is_zero()).then(|| r.render(alg.labels()))
    }))
}

/// Outcome of the spin-1 unit adjunction.
#[derive(Clone, Debug)]
pub struct UnitalExtension {
    pub unit_coefficient: Option<Radical>,
    pub algebra: Option<StructureAlgebra<Radical>>,
    pub norm: Option<BilinearForm<Radical>>,
    pub reports: Vec<IdentityReport>,
}

impl UnitalExtension {
    pub fn report(&self, name: &str) -> IdentityReport {
        IdentityReport::all_of(name, self.reports.clone())
    }
}

fn unital_extension(
    alg: &StructureAlgebra<Radical>,
    form: &BilinearForm<Radical>,
    mode: UnitMode,
    law: IdentityReport,
    law_check: impl Fn(&StructureAlgebra<Radical>) -> IdentityReport,
) -> UnitalExtension {
    let Some(a) = solve_unit_coefficient(alg, form, mode) else {
        return UnitalExtension {
            unit_coefficient: None,
            algebra: None,
            norm: None,
            reports: vec![law.with_detail("no unit coefficient satisfies the law")],
        };
    };
    let unital = adjoin_unit(alg, form, &a, &Radical::one());
    let norm = extend_form(form, &-a.clone());
    let reports = vec![law_check(&unital), check_composition(&unital, &norm)];
    UnitalExtension {
        unit_coefficient: Some(a),
        algebra: Some(unital),
        norm: Some(norm),
        reports,
    }
}

/// Spin-1 battery: anticommutativity, Jacobi, the triple-product identity and
/// the su(2) brackets.
pub fn spin1_checks(b1: &Radical) -> Result<Vec<IdentityReport>> {
    let (alg, form) = build_spin_algebra(&SpinAlgebraSpec::new(1, b1.clone()))?;
    let mut out = vec![
        check_commutation_sign(&alg, 1).named("spin1_anticommutative"),
        check_jacobi(&alg).named("spin1_jacobi"),
        check_cg_family(&alg, &form, &Radical::ratio(1, 2), b1, CgIdentityShape::SpinOneTriple)?,
    ];
    if !b1.is_zero() {
        out.push(su2_isomorphism_check(&alg, b1)?);
    }
    Ok(out)
}

/// Solves the spin-1 unit coefficient for associativity and certifies the
/// result as a composition algebra.
pub fn spin1_quaternion_extension(b1: &Radical) -> Result<UnitalExtension> {
    let (alg, form) = build_spin_algebra(&SpinAlgebraSpec::new(1, b1.clone()))?;
    let law = IdentityReport::from_bool("spin1_unital_associative", false, "");
    Ok(unital_extension(&alg, &form, UnitMode::Associative, law, |u| {
        crate::algebra::identities::check_associativity(u).named("spin1_unital_associative")
    }))
}

/// Spin-3 battery: the symmetrized coupling identity (coefficient and element
/// level), Malcev, failure of Jacobi, and the alternative unital extension
/// certified by composition.
#[derive(Clone, Debug)]
pub struct OctonionBridge {
    pub reports: Vec<IdentityReport>,
    pub extension: UnitalExtension,
}

impl OctonionBridge {
    pub fn report(&self) -> IdentityReport {
        let mut parts = self.reports.clone();
        parts.extend(self.extension.reports.iter().cloned());
        IdentityReport::all_passed("spin3_octonion_bridge", parts)
    }
}

pub fn spin3_octonion_bridge(b3: &Radical) -> Result<OctonionBridge> {
    let (alg, form) = build_spin_algebra(&SpinAlgebraSpec::new(3, b3.clone()))?;
    let reports = vec![
        check_commutation_sign(&alg, 1).named("spin3_anticommutative"),
        check_cg_family(
            &alg,
            &form,
            &Radical::ratio(1, 6),
            b3,
            CgIdentityShape::SpinThreeSymmetric,
        )?,
        check_malcev(&alg)?.named("spin3_malcev"),
        check_jacobi(&alg).named("spin3_jacobi").expect_fail(),
    ];
    let law = IdentityReport::from_bool("spin3_unital_alternative", false, "");
    let extension = unital_extension(&alg, &form, UnitMode::Alternative, law, |u| {
        check_alternative(u).named("spin3_unital_alternative")
    });
    Ok(OctonionBridge { reports, extension })
}

/// Spin-2 battery: the cyclic coupling identity, the cubic relation
/// `x^3 = (2/7) b^2 <x|x> x`, commutativity (which makes `x^3` unambiguous),
/// and an informational Jordan-identity check of the unital extension with
/// unit coefficient `(4/7) b^2`.
pub fn spin2_jordan_check(b2: &Radical) -> Result<Vec<IdentityReport>> {
    let (alg, form) = build_spin_algebra(&SpinAlgebraSpec::new(2, b2.clone()))?;
    let k = Radical::ratio(2, 7) * b2.clone() * b2.clone();
    let unital = adjoin_unit(
        &alg,
        &form,
        &(Radical::ratio(4, 7) * b2.clone() * b2.clone()),
        &Radical::one(),
    );
    Ok(vec![
        check_commutation_sign(&alg, 0).named("spin2_commutative"),
        check_cg_family(&alg, &form, &Radical::ratio(2, 7), b2, CgIdentityShape::SpinTwoCyclic)?,
        check_cubic(&alg, &form, &k).named("spin2_cubic"),
        jordan_check(&unital).named("spin2_unital_jordan").informational(),
    ])
}

/// Linearized Jordan identity `(x^2 y) x = x^2 (y x)` for a commutative algebra.
pub fn jordan_check<S: Scalar>(alg: &StructureAlgebra<S>) -> IdentityReport {
    element_sweep("jordan", alg, 4, |t| {
        let e = |i: usize| Element::<S>::basis(i);
        let m = |x: &Element<S>, y: &Element<S>| alg.multiply(x, y);
        let y = e(t[3]);
        let mut r = Element::zero();
        for (p, q, s) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])] {
            let pq = m(&e(p), &e(q));
            r = r.add(&m(&m(&pq, &y), &e(s))).sub(&m(&pq, &m(&y, &e(s))));
        }
        r
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_one_product_and_pairing() {
        let (alg, form) = build_spin_algebra(&SpinAlgebraSpec::new(1, Radical::one())).unwrap();
        assert_eq!(alg.labels(), ["psi1(1)", "psi1(0)", "psi1(-1)"]);
        assert_eq!(
            alg.product(0, 2),
            &Element::term(
                1,
                Radical::sqrt_rational(&num_rational::BigRational::new(1.into(), 2.into()))
            )
        );
        assert_eq!(form.entry(0, 2), &Radical::one());
        assert_eq!(form.entry(1, 1), &Radical::from_i64(-1));
        assert_eq!(form.entry(2, 0), &Radical::one());
        assert!(form.entry(0, 0).is_zero());
    }

    #[test]
    fn out_of_range_products_vanish() {
        let (alg, _) = build_spin_algebra(&SpinAlgebraSpec::new(2, Radical::one())).unwrap();
        assert!(alg.product(0, 0).is_zero());
    }

    #[test]
    fn unsupported_spins_are_rejected() {
        for j in [0, 4] {
            assert!(build_spin_algebra(&SpinAlgebraSpec::new(j, Radical::one())).is_err());
        }
        let half = SpinAlgebraSpec {
            j: HalfInt::from_twice(1),
            b: Radical::one(),
        };
        assert!(build_spin_algebra(&half).is_err());
    }

    #[test]
    fn su2_brackets_hold_for_several_normalizations() {
        for b in [Radical::one(), Radical::from_i64(2), Radical::ratio(1, 3)] {
            let (alg, _) = build_spin_algebra(&SpinAlgebraSpec::new(1, b.clone())).unwrap();
            assert!(su2_isomorphism_check(&alg, &b).unwrap().holds());
        }
    }

    #[test]
    fn su2_check_rejects_zero_normalization() {
        let (alg, _) = build_spin_algebra(&SpinAlgebraSpec::new(1, Radical::one())).unwrap();
        assert_eq!(
            su2_isomorphism_check(&alg, &Radical::zero()).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn su2_check_catches_perturbation() {
        let (alg, _) = build_spin_algebra(&SpinAlgebraSpec::new(1, Radical::one())).unwrap();
        let report = su2_isomorphism_check(&alg.perturbed(3), &Radical::one()).unwrap();
        assert!(!report.holds());
        assert!(report.witness.is_some());
    }

    #[test]
    fn spin_one_unit_coefficient_is_minus_half_b_squared() {
        for b in [Radical::one(), Radical::from_i64(2), Radical::ratio(1, 3)] {
            let ext = spin1_quaternion_extension(&b).unwrap();
            assert_eq!(
                ext.unit_coefficient,
                Some(Radical::ratio(-1, 2) * b.clone() * b.clone())
            );
            assert!(ext.reports.iter().all(IdentityReport::holds), "{:?}", ext.reports);
        }
    }

    #[test]
    fn spin_two_cubic_with_vanishing_normalization() {
        let reports = spin2_jordan_check(&Radical::zero()).unwrap();
        assert!(reports[..3].iter().all(IdentityReport::holds));
    }

    #[test]
    fn spin_three_bridge_solves_alternative_unit() {
        for b in [Radical::one(), Radical::from_i64(2)] {
            let bridge = spin3_octonion_bridge(&b).unwrap();
            assert!(bridge.report().passed(), "{}", bridge.report());
            assert_eq!(
                bridge.extension.unit_coefficient,
                Some(Radical::ratio(-1, 6) * b.clone() * b.clone())
            );
            let jacobi = bridge.reports.iter().find(|r| r.name == "spin3_jacobi").unwrap();
            assert!(!jacobi.holds() && jacobi.passed());
        }
    }

    #[test]
    fn spin_two_battery() {
        for r in spin2_jordan_check(&Radical::one()).unwrap() {
            assert!(r.passed() || r.status == crate::algebra::Status::Info);
        }
    }
}
