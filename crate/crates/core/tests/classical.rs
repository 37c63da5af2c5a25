use num_rational::BigRational;
use num_traits::{One, Zero};

use cgalg::algebra::identities::check_form_properties;
use cgalg::algebra::identities::{
    cg_identity_sides, check_associativity, check_commutation_sign, check_jacobi, check_malcev, CgIdentityShape,
};
use cgalg::algebra::{adjoin_unit, check_composition, solve_unit_coefficient, Element, SymmetryLaw, UnitMode};
use cgalg::classical::{
    build_octonion_cartesian, build_quaternion, build_spin_algebra, spin1_checks, spin1_quaternion_extension,
    spin2_jordan_check, spin3_octonion_bridge, su2_isomorphism_check, SpinAlgebraSpec,
};
use cgalg::wigner::{pairing, HalfInt};
use cgalg::{Radical, Scalar};

fn spin(j: i64, b: Radical) -> (cgalg::RadicalAlgebra, cgalg::RadicalForm) {
    build_spin_algebra(&SpinAlgebraSpec::new(j, b)).unwrap()
}

#[test]
fn pairing_signs() {
    let h = HalfInt::from_twice;
    assert_eq!(pairing(h(2), h(2), h(-2)).unwrap(), Radical::one());
    assert!(pairing(h(2), h(2), h(0)).unwrap().is_zero());
    assert_eq!(pairing(h(1), h(1), h(-1)).unwrap(), Radical::one());
    assert_eq!(pairing(h(1), h(-1), h(1)).unwrap(), -Radical::one());
    let (_, form) = spin(1, Radical::one());
    assert!(
        check_form_properties(&spin(1, Radical::one()).0, &form, &SymmetryLaw::Symmetric)
            .iter()
            .all(|r| r.holds())
    );
}

#[test]
fn commutation_signs_by_spin() {
    assert!(check_commutation_sign(&spin(1, Radical::one()).0, 1).holds());
    assert!(check_commutation_sign(&spin(2, Radical::one()).0, 0).holds());
    assert!(check_commutation_sign(&spin(3, Radical::one()).0, 1).holds());
}

#[test]
fn spin_one_is_su2() {
    let b = Radical::one();
    assert!(check_jacobi(&spin(1, b.clone()).0).holds());
    assert!(su2_isomorphism_check(&spin(1, b.clone()).0, &b).unwrap().holds());
    assert!(spin1_checks(&Radical::from_i64(3)).unwrap().iter().all(|r| r.passed()));
}

#[test]
fn triple_product_value_at_one_zero_minus_one() {
    let (lhs, rhs) = cg_identity_sides(CgIdentityShape::SpinOneTriple, &Radical::ratio(1, 2), [1, 0, -1]);
    assert_eq!(lhs, Radical::ratio(1, 2));
    assert_eq!(rhs, Radical::ratio(1, 2));
}

#[test]
fn unit_coefficient_for_spin_one() {
    let (alg, form) = spin(1, Radical::one());
    assert_eq!(
        solve_unit_coefficient(&alg, &form, UnitMode::Associative),
        Some(Radical::ratio(-1, 2))
    );
    for (p, q) in [(1, 1), (2, 1), (1, 3)] {
        let b = Radical::from_rational(BigRational::new(p.into(), q.into()));
        let ext = spin1_quaternion_extension(&b).unwrap();
        assert_eq!(ext.unit_coefficient, Some(-(Radical::ratio(1, 2) * b.clone() * b)));
        assert!(ext.reports.iter().all(|r| r.holds()));
    }
    let unital = adjoin_unit(&alg, &form, &Radical::ratio(-1, 2), &Radical::one());
    assert_eq!(unital.product(0, 0), &Element::basis(0));
    assert_eq!(unital.product(0, 2), &Element::basis(2));
    assert!(check_associativity(&unital).holds());
}

#[test]
fn cartesian_quaternion_products() {
    let q = build_quaternion::<Radical>();
    assert_eq!(q.product(1, 1), &Element::term(0, -Radical::one()));
    assert_eq!(q.product(1, 2), &Element::basis(3));
    assert_eq!(q.product(2, 1), &Element::term(3, -Radical::one()));
    assert!(check_associativity(&q).holds());
}

#[test]
fn spin_three_is_malcev_not_lie() {
    let (alg, _) = spin(3, Radical::one());
    assert!(check_malcev(&alg).unwrap().holds());
    let jacobi = check_jacobi(&alg);
    assert!(!jacobi.holds());
    assert_eq!(jacobi, check_jacobi(&alg));
    let bridge = spin3_octonion_bridge(&Radical::one()).unwrap();
    assert_eq!(bridge.extension.unit_coefficient, Some(Radical::ratio(-1, 6)));
    assert!(bridge.report().passed());
}

#[test]
fn octonion_table() {
    let (oct, f) = build_octonion_cartesian().unwrap();
    assert!(f.is_totally_antisymmetric());
    for a in 0..7 {
        for b in 0..7 {
            for c in 0..7 {
                assert!([-1, 0, 1].contains(&f.get(a, b, c)));
            }
        }
    }
    let norm = cgalg::RadicalForm::from_fn(8, |a, b| if a == b { Radical::one() } else { Radical::zero() });
    assert!(check_composition(&oct, &norm).holds());
    let assoc = check_associativity(&oct);
    assert!(!assoc.holds());
    let w = assoc.witness.unwrap();
    let i = &w.indices;
    assert!(!oct
        .associator(&Element::basis(i[0]), &Element::basis(i[1]), &Element::basis(i[2]))
        .is_zero());
}

#[test]
fn spin_two_cubic() {
    for b in [Radical::one(), Radical::from_i64(2), Radical::sqrt_int(3)] {
        for r in spin2_jordan_check(&b).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }
    let (alg, form) = spin(2, Radical::one());
    let x = Element::basis(2);
    let cube = alg.multiply(&alg.multiply(&x, &x), &x);
    assert_eq!(cube, x.scale(&(Radical::ratio(2, 7) * form.eval(&x, &x))));
}
