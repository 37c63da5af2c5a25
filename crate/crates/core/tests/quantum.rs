use num_traits::{One, Zero};

use cgalg::algebra::identities::check_associativity;
use cgalg::algebra::Element;
use cgalg::quantum::{
    build_q_algebra, build_quantum_quaternion, counit_gen, derive_q_cg_spin1, q_index, rep_generators,
    verify_classical_limit, verify_coproduct, verify_hopf_axioms, verify_q_identities, verify_suq2_relations, Gen,
};
use cgalg::scalar::q_integer;
use cgalg::wigner::HalfInt;
use cgalg::{LaurentPoly, QRadical, Scalar};

fn t(k: i64) -> QRadical {
    QRadical::t_pow(k)
}

#[test]
fn q_integers() {
    assert_eq!(q_integer(2).unwrap(), LaurentPoly::t_pow(1) + LaurentPoly::t_pow(-1));
    assert_eq!(
        q_integer(3).unwrap(),
        LaurentPoly::t_pow(2) + LaurentPoly::one() + LaurentPoly::t_pow(-2)
    );
    assert!(q_integer(-1).is_err());
}

#[test]
fn spin_one_representation() {
    let g = rep_generators(HalfInt::int(1)).unwrap();
    let root2 = QRadical::sqrt(&q_integer(2).unwrap()).unwrap();
    assert_eq!(g.jp.get(0, 1), &root2);
    assert_eq!(g.jp.get(1, 2), &root2);
    for (k, m) in [1, 0, -1].into_iter().enumerate() {
        assert_eq!(g.h.get(k, k), &QRadical::from_i64(m));
    }
}

#[test]
fn relations_coproducts_and_limits() {
    for twice in [1, 2, 3, 4, 6] {
        let j = HalfInt::from_twice(twice);
        assert!(verify_suq2_relations(j).unwrap().holds(), "j = {j}");
        assert!(verify_classical_limit(j).unwrap().holds(), "j = {j}");
    }
    for (a, b) in [(1, 1), (1, 2), (2, 2)] {
        assert!(verify_coproduct(HalfInt::from_twice(a), HalfInt::from_twice(b))
            .unwrap()
            .holds());
    }
}

#[test]
fn hopf_structure() {
    assert!(counit_gen(Gen::Jp).is_zero());
    assert!(counit_gen(Gen::Jm).is_zero());
    assert_eq!(counit_gen(Gen::K), QRadical::one());
    assert_eq!(counit_gen(Gen::Kinv), QRadical::one());
    for r in verify_hopf_axioms().unwrap() {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn q_table_entries() {
    let q = build_q_algebra(&QRadical::one());
    let (p, z, m) = (q_index(1), q_index(0), q_index(-1));
    let alg = &q.algebra;
    assert!(alg.product(p, p).is_zero());
    assert_eq!(alg.product(z, p), &Element::term(p, -t(-1)));
    assert_eq!(alg.product(p, z), &Element::term(p, t(1)));
    assert_eq!(alg.product(p, m), &Element::basis(z));
    assert_eq!(alg.product(m, p), &Element::term(z, -QRadical::one()));
    let w = &q.involution;
    assert_eq!(q.form.entry(w[p], w[m]), &t(-1));
    assert_ne!(q.form.entry(p, m), q.form.entry(m, p));
    let assoc = alg.associator(&Element::basis(p), &Element::basis(m), &Element::basis(p));
    assert_eq!(assoc, Element::term(p, t(1) - t(-1)));
    for r in verify_q_identities(&q) {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn derived_table_matches_up_to_beta() {
    let d = derive_q_cg_spin1().unwrap();
    assert!(d.report().passed());
    let at_one = d.algebra.try_map_scalars(QRadical::specialize_t1).unwrap();
    for a in 0..3 {
        for b in 0..3 {
            assert_eq!(at_one.product(a, b), &at_one.product(b, a).neg());
        }
    }
}

#[test]
fn quantum_quaternion() {
    let qq = build_quantum_quaternion();
    let (p, z, m) = (q_index(1) + 1, q_index(0) + 1, q_index(-1) + 1);
    assert_eq!(
        qq.product(p, m),
        &Element::from_terms([(z, QRadical::one()), (0, -t(1))])
    );
    assert!(check_associativity(&qq).holds());
}
