use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use cgalg::algebra::identities::{associator_residual, check_associativity, check_cg_family, CgIdentityShape};
use cgalg::algebra::Element;
use cgalg::classical::{build_quaternion, build_spin_algebra, SpinAlgebraSpec};
use cgalg::scalar::q_integer;
use cgalg::wigner::{cg, CGKey};
use cgalg::{GaussianRational, LaurentPoly, QRadical, Radical, Scalar};

fn rational() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=7).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational(), any::<bool>())
        .prop_map(|(re, im, complex)| GaussianRational::new(re, if complex { im } else { BigRational::zero() }))
}

fn radical() -> impl Strategy<Value = Radical> {
    let radicand = prop::sample::select(vec![1u64, 2, 3, 5, 6, 7, 10, 15]);
    prop::collection::vec((radicand, gaussian()), 0..4).prop_map(Radical::from_terms)
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 0..4).prop_map(|terms| {
        LaurentPoly::from_s_coeffs(terms.into_iter().map(|(e, c)| (2 * e, GaussianRational::from_i64(c))))
    })
}

/// `p + q sqrt([2]) + r sqrt([3])`, all finite at `t = 1`.
fn qradical() -> impl Strategy<Value = QRadical> {
    (laurent(), laurent(), laurent()).prop_map(|(p, q, r)| {
        let root = |n| QRadical::sqrt(&q_integer(n).unwrap()).unwrap();
        QRadical::from_laurent(p) + QRadical::from_laurent(q) * root(2) + QRadical::from_laurent(r) * root(3)
    })
}

fn sample_point() -> impl Strategy<Value = BigRational> {
    (1i64..=9, 1i64..=9).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn radical_ring_axioms(x in radical(), y in radical(), z in radical()) {
        prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!(x.clone() - x.clone(), Radical::zero());
        prop_assert_eq!(x.clone() * Radical::one(), x);
    }

    #[test]
    fn gaussian_field_axioms(x in gaussian(), y in gaussian(), z in gaussian()) {
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z);
        if !x.is_zero() {
            prop_assert_eq!(x.clone() * x.inverse().unwrap(), GaussianRational::one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn radical_inverse(x in radical()) {
        if let Some(inv) = x.try_inverse() {
            prop_assert_eq!(x * inv, Radical::one());
        } else {
            prop_assert!(x.is_zero());
        }
    }

    #[test]
    fn specialization_is_a_ring_homomorphism(x in qradical(), y in qradical()) {
        let at = |v: &QRadical| v.specialize_t1().unwrap();
        prop_assert_eq!(at(&(x.clone() + y.clone())), at(&x) + at(&y));
        prop_assert_eq!(at(&(x.clone() * y.clone())), at(&x) * at(&y));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(x in qradical(), y in qradical(), s in sample_point()) {
        let at = |v: &QRadical| v.evaluate_at(&s).unwrap();
        prop_assert_eq!(at(&(x.clone() + y.clone())), at(&x) + at(&y));
        prop_assert_eq!(at(&(x.clone() * y.clone())), at(&x) * at(&y));
    }

    #[test]
    fn qradical_ring_axioms(x in qradical(), y in qradical(), z in qradical()) {
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x * z);
    }

    #[test]
    fn q_integer_addition_rule(m in 0i64..8, n in 0i64..8) {
        // [m + n] = t^(-n) [m] + t^m [n]
        let lhs = q_integer(m + n).unwrap();
        let rhs = LaurentPoly::t_pow(-n) * q_integer(m).unwrap() + LaurentPoly::t_pow(m) * q_integer(n).unwrap();
        prop_assert_eq!(lhs, rhs);
        let qn = q_integer(n).unwrap();
        prop_assert_eq!(qn.at_one(), GaussianRational::from_i64(n));
        prop_assert_eq!(qn.invert_variable(), qn);
    }

    #[test]
    fn cg_reflection_and_completeness(tj1 in 0i64..=6, tj2 in 0i64..=6, k1 in 0i64..=6, k2 in 0i64..=6) {
        let tm1 = -tj1 + 2 * (k1 % (tj1 + 1));
        let tm2 = -tj2 + 2 * (k2 % (tj2 + 1));
        let mut total = Radical::zero();
        for tj in ((tj1 - tj2).abs()..=tj1 + tj2).step_by(2) {
            let tm = tm1 + tm2;
            if tm.abs() > tj {
                continue;
            }
            let c = cg(&CGKey::twice(tj1, tj2, tj, tm1, tm2, tm)).unwrap();
            let reflected = cg(&CGKey::twice(tj1, tj2, tj, -tm1, -tm2, -tm)).unwrap();
            let sign = if ((tj1 + tj2 - tj) / 2) % 2 == 0 { Radical::one() } else { -Radical::one() };
            prop_assert_eq!(reflected, sign * c.clone());
            total = total + c.clone() * c;
        }
        prop_assert_eq!(total, Radical::one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn normalization_rescales_constants(j in 1i64..=3, b in rational()) {
        prop_assume!(!b.is_zero());
        let b = Radical::from_rational(b);
        let (unit, form1) = build_spin_algebra(&SpinAlgebraSpec::new(j, Radical::one())).unwrap();
        let (scaled, form_b) = build_spin_algebra(&SpinAlgebraSpec::new(j, b.clone())).unwrap();
        prop_assert_eq!(scaled.constants(), unit.rescaled(&b).constants());
        prop_assert_eq!(&form1, &form_b);
        let (k, shape) = match j {
            1 => (Radical::ratio(1, 2), CgIdentityShape::SpinOneTriple),
            2 => (Radical::ratio(2, 7), CgIdentityShape::SpinTwoCyclic),
            _ => (Radical::ratio(1, 6), CgIdentityShape::SpinThreeSymmetric),
        };
        prop_assert!(check_cg_family(&scaled, &form_b, &k, &b, shape).unwrap().holds());
    }

    #[test]
    fn perturbed_quaternions_fail_with_a_genuine_witness(seed in any::<u64>()) {
        let alg = build_quaternion::<Radical>().perturbed(seed);
        let report = check_associativity(&alg);
        prop_assert!(!report.holds());
        let w = report.witness.unwrap();
        let i = &w.indices;
        prop_assert!(!associator_residual(&alg, i[0], i[1], i[2]).is_zero());
        let direct = alg.associator(&Element::basis(i[0]), &Element::basis(i[1]), &Element::basis(i[2]));
        prop_assert!(!direct.is_zero());
    }
}
