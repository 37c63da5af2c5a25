//! The orthosymplectic superalgebra osp(1,2) in Cartesian form, its
//! `X_AB` presentation, the invariant form and the super-quaternions.

use num_traits::{One, Zero};

use crate::algebra::identities::{
    check_associativity, check_flexible_lie_admissible, check_form_properties, check_super_jacobi, sweep,
};
use crate::algebra::{
    adjoin_unit, check_isomorphism, BilinearForm, Element, IdentityReport, StructureAlgebra, SymmetryLaw,
};
use crate::classical::build_quaternion;
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Radical, Scalar};

/// Pauli matrix `sigma_mu` for `mu` in 1..=3: `sigma_1` real symmetric,
/// `sigma_2` imaginary antisymmetric, `sigma_3` diagonal.
pub fn pauli(mu: usize) -> [[GaussianRational; 2]; 2] {
    let z = GaussianRational::zero;
    let one = GaussianRational::one;
    let i = GaussianRational::i;
    match mu {
        1 => [[z(), one()], [one(), z()]],
        2 => [[z(), -i()], [i(), z()]],
        3 => [[one(), z()], [z(), -one()]],
        _ => panic!("Pauli index {mu} out of range"),
    }
}

fn mat_mul(a: &[[GaussianRational; 2]; 2], b: &[[GaussianRational; 2]; 2]) -> [[GaussianRational; 2]; 2] {
    let e = |r: usize, c: usize| a[r][0].clone() * b[0][c].clone() + a[r][1].clone() * b[1][c].clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn levi_civita(a: usize, b: usize, c: usize) -> i64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

const PHI: [usize; 3] = [0, 1, 2];
const XI: [usize; 2] = [3, 4];

/// Basis `phi1, phi2, phi3` (even) and `xi1, xi2` (odd) with
/// `phi_mu . phi_nu = i eps phi_la`,
/// `phi_mu . xi_j = -xi_j . phi_mu = a' sum_k xi_k (sigma_mu)_kj`,
/// `xi_j . xi_k = -(i/2) sum_la (sigma_2 sigma_la)_jk phi_la`.
pub fn build_osp12_cartesian(a_prime: &Radical) -> StructureAlgebra<Radical> {
    let mut alg = StructureAlgebra::graded([("phi1", 0), ("phi2", 0), ("phi3", 0), ("xi1", 1), ("xi2", 1)]);
    let g = |x: GaussianRational| Radical::from_gaussian(x);
    for mu in 0..3 {
        for nu in 0..3 {
            for la in 0..3 {
                let e = levi_civita(mu, nu, la);
                if e != 0 {
                    alg.add_constant(
                        PHI[mu],
                        PHI[nu],
                        PHI[la],
                        Radical::imaginary_unit() * Radical::from_i64(e),
                    );
                }
            }
        }
        let s = pauli(mu + 1);
        for j in 0..2 {
            for k in 0..2 {
                let c = a_prime.clone() * g(s[k][j].clone());
                if !c.is_zero() {
                    alg.add_constant(PHI[mu], XI[j], XI[k], c.clone());
                    alg.add_constant(XI[j], PHI[mu], XI[k], -c);
                }
            }
        }
    }
    let minus_half_i = Radical::imaginary_unit() * Radical::ratio(-1, 2);
    for la in 0..3 {
        let m = mat_mul(&pauli(2), &pauli(la + 1));
        for j in 0..2 {
            for k in 0..2 {
                let c = minus_half_i.clone() * g(m[j][k].clone());
                if !c.is_zero() {
                    alg.add_constant(XI[j], XI[k], PHI[la], c);
                }
            }
        }
    }
    alg
}

/// The coupling that makes [`build_osp12_cartesian`] a Lie superalgebra.
pub fn osp_coupling() -> Radical {
    Radical::ratio(1, 2)
}

/// Index `0` is odd, `1` and `2` are even.
fn odd(a: usize) -> bool {
    a == 0
}

/// `(-1)^(A.B)`: `-1` exactly when both indices are odd.
pub fn index_sign(a: usize, b: usize) -> i64 {
    if odd(a) && odd(b) {
        -1
    } else {
        1
    }
}

/// `eps_AB` on `{0, 1, 2}`: `eps_12 = -eps_21 = 1`, `eps_00 = 1`, else 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonAB {
    pub entries: [[i64; 3]; 3],
}

impl EpsilonAB {
    pub fn standard() -> Self {
        Self {
            entries: [[1, 0, 0], [0, 0, 1], [0, -1, 0]],
        }
    }

    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.entries[a][b]
    }

    /// `eps_AB = -(-1)^(A.B) eps_BA`.
    pub fn is_graded_antisymmetric(&self) -> bool {
        (0..3).all(|a| (0..3).all(|b| self.get(a, b) == -index_sign(a, b) * self.get(b, a)))
    }
}

/// The elements `X_AB` for `A, B` in `{0, 1, 2}`, in Cartesian coordinates:
/// `X11 = -2(phi1 + i phi2)`, `X22 = 2(phi1 - i phi2)`, `X12 = X21 = -2 phi3`,
/// `X0j = Xj0 = u_j` with `u1 = -2 xi1`, `u2 = 2 xi2`, and `X00 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct OspBasis {
    pub x: [[Element<Radical>; 3]; 3],
}

impl OspBasis {
    pub fn standard() -> Self {
        let r = Radical::from_i64;
        let i = Radical::imaginary_unit();
        let x11 = Element::from_terms([(0, r(-2)), (1, r(-2) * i.clone())]);
        let x22 = Element::from_terms([(0, r(2)), (1, r(-2) * i)]);
        let x12 = Element::term(2, r(-2));
        let u1 = Element::term(3, r(-2));
        let u2 = Element::term(4, r(2));
        Self {
            x: [
                [Element::zero(), u1.clone(), u2.clone()],
                [u1, x11, x12.clone()],
                [u2, x12, x22],
            ],
        }
    }

    pub fn get(&self, a: usize, b: usize) -> &Element<Radical> {
        &self.x[a][b]
    }

    /// `u_j = X_0j`.
    pub fn u(&self, j: usize) -> &Element<Radical> {
        &self.x[0][j]
    }
}

/// Rewrites the Cartesian osp algebra in the `X_AB` basis and checks the
/// presentation: the full quadruple relation
/// `X_AB X_CD = eps_BC X_AD + (-1)^(B.C) eps_AC X_BD + (-1)^(B.C) eps_BD X_AC
///  + (-1)^(A.(B+C)) eps_AD X_BC`
/// over all 81 index quadruples, the sp(2) block, the even-odd and odd-odd
/// blocks, and the graded symmetries of `X` and `eps`.
pub fn relabel_to_osp(alg: &StructureAlgebra<Radical>) -> Result<IdentityReport> {
    if alg.dim() != 5 || alg.grades() != [0, 0, 0, 1, 1] {
        return Err(Error::Dimension(
            "relabeling needs the 5-dimensional Cartesian osp algebra".into(),
        ));
    }
    let basis = OspBasis::standard();
    let eps = EpsilonAB::standard();
    let span = crate::linalg::Matrix::from_fn(5, 5, |r, c| {
        let v = [
            basis.get(1, 1),
            basis.get(2, 2),
            basis.get(1, 2),
            basis.u(1),
            basis.u(2),
        ][c];
        v.coeff(r)
    });
    if span.determinant()?.is_zero() {
        return Err(Error::NotInvertible("X_AB do not span the algebra".into()));
    }
    let x = |a: usize, b: usize| basis.get(a, b);
    let s = |a: usize, b: usize| Radical::from_i64(index_sign(a, b));
    let ep = |a: usize, b: usize| Radical::from_i64(eps.get(a, b));
    let labels: Vec<String> = (0..3).map(|a| a.to_string()).collect();
    let rhs = |a: usize, b: usize, c: usize, d: usize| {
        let sign_ad = s(a, b) * s(a, c);
        x(a, d)
            .scale(&ep(b, c))
            .add(&x(b, d).scale(&(s(b, c) * ep(a, c))))
            .add(&x(a, c).scale(&(s(b, c) * ep(b, d))))
            .add(&x(b, c).scale(&(sign_ad * ep(a, d))))
    };
    let quadruples = sweep("osp_quadruple_relation", &labels, 4, |t| {
        let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
        let r = alg.multiply(x(a, b), x(c, d)).sub(&rhs(a, b, c, d));
        (!r.is_zero()).then(|| r.render(alg.labels()))
    });
    let sp2 = sweep("osp_symplectic_block", &labels, 4, |t| {
        if t.contains(&0) {
            return None;
        }
        let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
        let expected = x(a, d)
            .scale(&ep(b, c))
            .add(&x(b, d).scale(&ep(a, c)))
            .add(&x(a, c).scale(&ep(b, d)))
            .add(&x(b, c).scale(&ep(a, d)));
        let r = alg.multiply(x(a, b), x(c, d)).sub(&expected);
        (!r.is_zero()).then(|| r.render(alg.labels()))
    });
    let mixed = sweep("osp_even_odd_block", &labels, 3, |t| {
        if t.contains(&0) {
            return None;
        }
        let (a, b, j) = (t[0], t[1], t[2]);
        let xu = alg.multiply(x(a, b), basis.u(j));
        let ux = alg.multiply(basis.u(j), x(a, b));
        let expected = basis.u(b).scale(&ep(a, j)).add(&basis.u(a).scale(&ep(b, j)));
        let (left, right) = (xu.sub(&expected), ux.add(&expected));
        (!left.is_zero() || !right.is_zero())
            .then(|| format!("{}; {}", left.render(alg.labels()), right.render(alg.labels())))
    });
    let odd_odd = sweep("osp_odd_odd_block", &labels, 2, |t| {
        if t.contains(&0) {
            return None;
        }
        let r = alg.multiply(basis.u(t[0]), basis.u(t[1])).sub(x(t[0], t[1]));
        (!r.is_zero()).then(|| r.render(alg.labels()))
    });
    let x_symmetry = sweep("osp_x_graded_symmetry", &labels, 2, |t| {
        let r = x(t[0], t[1]).sub(&x(t[1], t[0]).scale(&s(t[0], t[1])));
        (!r.is_zero()).then(|| r.render(alg.labels()))
    });
    let eps_symmetry = IdentityReport::from_bool("osp_epsilon_graded_antisymmetry", eps.is_graded_antisymmetric(), "");
    Ok(IdentityReport::all_of(
        "osp_relabeling",
        vec![quadruples, sp2, mixed, odd_odd, x_symmetry, eps_symmetry],
    ))
}

/// `<phi_mu|phi_nu> = delta`, `<xi_j|xi_k> = eps_jk` (`eps_12 = 1`), mixed 0.
pub fn osp_form() -> BilinearForm<Radical> {
    BilinearForm::from_fn(5, |a, b| match (a, b) {
        (0..=2, 0..=2) if a == b => Radical::one(),
        (3, 4) => Radical::one(),
        (4, 3) => -Radical::one(),
        _ => Radical::zero(),
    })
}

/// Grade-orthogonality, supersymmetry, invariance and non-degeneracy of the
/// osp form.
pub fn check_osp_form(alg: &StructureAlgebra<Radical>) -> Vec<IdentityReport> {
    check_form_properties(alg, &osp_form(), &SymmetryLaw::Supersymmetric)
        .into_iter()
        .map(|r| {
            let name = format!("osp_{}", r.name);
            r.named(name)
        })
        .collect()
}

/// Adjoins `e0` to the osp algebra with `x * y = -<x|y> e0 - i x . y`.
/// Basis: `e0, phi1, phi2, phi3, xi1, xi2`.
pub fn build_super_quaternion() -> StructureAlgebra<Radical> {
    let osp = build_osp12_cartesian(&osp_coupling());
    adjoin_unit(&osp, &osp_form(), &-Radical::one(), &-Radical::imaginary_unit())
}

/// Bosonic block equals the quaternion table, associativity fails (and the
/// first failing triple involves an odd element), super-flexibility and
/// super-Lie-admissibility hold; the cyclic associator sum is informational.
pub fn check_super_quaternion(sq: &StructureAlgebra<Radical>) -> Result<Vec<IdentityReport>> {
    let bosonic = sq.restrict(&[0, 1, 2, 3])?;
    let quaternion = build_quaternion::<Radical>();
    let same = bosonic.labels() == quaternion.labels() && bosonic.constants() == quaternion.constants();
    let associativity = check_associativity(sq)
        .named("super_quaternion_associativity")
        .expect_fail();
    let odd_witness = associativity
        .witness
        .as_ref()
        .is_some_and(|w| w.indices.iter().any(|i| sq.grade(*i) == 1));
    let mut out = vec![
        IdentityReport::from_bool("super_quaternion_bosonic_block_is_quaternion", same, ""),
        associativity,
        IdentityReport::from_bool("super_quaternion_associativity_fails_on_odd_elements", odd_witness, ""),
    ];
    for r in check_flexible_lie_admissible(sq) {
        let name = format!("super_quaternion_{}", r.name);
        let r = r.named(name);
        out.push(if r.name.ends_with("cyclic_associator") {
            r.informational()
        } else {
            r
        });
    }
    Ok(out)
}

/// Images of the spherical basis `psi1(1), psi1(0), psi1(-1), psi1/2(1/2),
/// psi1/2(-1/2)` of the spin-(1, 1/2) algebra in Cartesian coordinates:
/// `psi1(+-1) = (i/2)(phi1 +- i phi2)`, `psi1(0) = -phi3/sqrt(2)` (spin 1 as
/// for su(2)), `psi1/2(1/2) = w xi1`, `psi1/2(-1/2) = -conj(w) xi2` with
/// `w = (1 - i)/sqrt(2)`, the spinor phase that makes the mixed products agree.
pub fn spherical_to_cartesian() -> Vec<Element<Radical>> {
    let i = Radical::imaginary_unit();
    let half_i = i.clone() * Radical::ratio(1, 2);
    let inv_sqrt2 = Radical::sqrt_rational(&num_rational::BigRational::new(1.into(), 2.into()));
    let w = (Radical::one() - i.clone()) * inv_sqrt2.clone();
    let w_bar = (Radical::one() + i.clone()) * inv_sqrt2.clone();
    vec![
        Element::from_terms([(0, half_i.clone()), (1, half_i.clone() * i.clone())]),
        Element::term(2, -inv_sqrt2),
        Element::from_terms([(0, half_i.clone()), (1, -(half_i * i))]),
        Element::term(3, w),
        Element::term(4, -w_bar),
    ]
}

/// The spherical algebra at the solved coupling is isomorphic to the
/// Cartesian one at `a' = 1/2`, both satisfy super-Jacobi, and the grade
/// dimensions agree.
pub fn check_spherical_cartesian_isomorphism(a: &Radical) -> IdentityReport {
    let sph = crate::superalg::build_super_cg(a);
    let cart = build_osp12_cartesian(&osp_coupling());
    let dims = |alg: &StructureAlgebra<Radical>| {
        (0..2)
            .map(|g| alg.grades().iter().filter(|x| **x == g).count())
            .collect::<Vec<_>>()
    };
    IdentityReport::all_of(
        "osp_spherical_cartesian_isomorphism",
        vec![
            check_super_jacobi(&sph).named("spherical_super_jacobi"),
            check_super_jacobi(&cart).named("cartesian_super_jacobi"),
            IdentityReport::from_bool("graded_dimensions_agree", dims(&sph) == dims(&cart), ""),
            check_isomorphism(&sph, &cart, &spherical_to_cartesian()),
        ],
    )
}
