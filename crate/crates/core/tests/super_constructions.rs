use num_traits::One;

use cgalg::algebra::identities::{check_super_anticommutativity, check_super_jacobi};
use cgalg::algebra::Element;
use cgalg::superalg::{
    build_osp12_cartesian, build_super_cg, build_super_octonion, build_super_quaternion, check_osp_form,
    check_spherical_cartesian_isomorphism, check_super_quaternion, osp_coupling, relabel_to_osp, solve_super_cg_ratio,
    OspBasis,
};
use cgalg::wigner::{cg, CGKey};
use cgalg::{Radical, Scalar};

fn i() -> Radical {
    Radical::imaginary_unit()
}

#[test]
fn cartesian_osp_products() {
    let alg = build_osp12_cartesian(&osp_coupling());
    assert_eq!(osp_coupling(), Radical::ratio(1, 2));
    assert_eq!(alg.grades(), [0, 0, 0, 1, 1]);
    assert_eq!(alg.product(0, 1), &Element::term(2, i()));
    assert_eq!(alg.product(3, 4), alg.product(4, 3));
    assert!(check_super_anticommutativity(&alg).holds());
    assert!(check_super_jacobi(&alg).holds());
    let wrong = check_super_jacobi(&build_osp12_cartesian(&Radical::one()));
    assert!(!wrong.holds());
    assert!(wrong.witness.is_some());
}

#[test]
fn osp_presentation() {
    let alg = build_osp12_cartesian(&osp_coupling());
    let x = OspBasis::standard();
    assert_eq!(alg.multiply(x.get(1, 1), x.u(2)), x.u(1).scale(&Radical::from_i64(2)));
    for j in 1..3 {
        for k in 1..3 {
            assert_eq!(&alg.multiply(x.u(j), x.u(k)), x.get(j, k));
        }
    }
    assert!(relabel_to_osp(&alg).unwrap().holds());
    for r in check_osp_form(&alg) {
        assert!(r.holds(), "{r}");
    }
}

#[test]
fn spherical_coupling_is_sqrt6_over_4() {
    let a = solve_super_cg_ratio().unwrap();
    assert_eq!(a, Radical::sqrt_int(6) * Radical::ratio(1, 4));
    let sph = build_super_cg(&a);
    assert!(check_super_jacobi(&sph).holds());
    assert!(check_spherical_cartesian_isomorphism(&a).holds());
    // psi_1/2(1/2) psi_1/2(1/2) = C(1/2 1/2 1; 1/2 1/2 1) psi_1(1), symmetric
    let (up, top) = (3, 0);
    let c = cg(&CGKey::twice(1, 1, 2, 1, 1, 2)).unwrap();
    assert_eq!(c, Radical::one());
    assert_eq!(sph.product(up, up), &Element::term(top, c));
    assert_eq!(sph.product(0, 3), &sph.product(3, 0).neg());
}

#[test]
fn super_quaternion() {
    let sq = build_super_quaternion();
    assert_eq!(sq.product(1, 1), &Element::term(0, -Radical::one()));
    assert_eq!(sq.product(1, 2), &Element::basis(3));
    for r in check_super_quaternion(&sq).unwrap() {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn super_octonion_bosonic_part() {
    let (alg, reports) = build_super_octonion(&Radical::one(), &Radical::one()).unwrap();
    assert_eq!(alg.dim(), 11);
    for r in &reports {
        assert!(r.passed(), "{r}");
    }
    // bose-fermi products are antisymmetric
    for a in 0..7 {
        for f in 7..11 {
            assert_eq!(alg.product(a, f), &alg.product(f, a).neg());
        }
    }
}
