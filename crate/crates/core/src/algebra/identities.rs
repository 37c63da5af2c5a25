//! Identity checkers. Every identity here is multilinear, so checking it on
//! all tuples of basis elements decides it for arbitrary elements.
//!
//! Each checker has a matching `*_residual` function computing the quantity
//! that must vanish for one tuple, so a witness can be recomputed
//! independently of the sweep that found it.

use num_traits::Zero;
use rayon::prelude::*;

use super::{BilinearForm, Element, IdentityReport, StructureAlgebra, SymmetryLaw, Witness};
use crate::error::{Error, Result};
use crate::scalar::{Radical, Scalar};
use crate::wigner::{cj, HalfInt};

/// Runs `residual` over all `arity`-tuples of `0..n` and reports the
/// lexicographically first tuple whose residual is nonzero.
pub fn sweep<F>(name: &str, labels: &[String], arity: usize, residual: F) -> IdentityReport
where
    F: Fn(&[usize]) -> Option<String> + Sync,
{
    let n = labels.len();
    let total = n.pow(arity as u32);
    let found = (0..total).into_par_iter().find_map_first(|k| {
        let tuple = decode(k, n, arity);
        residual(&tuple).map(|r| (tuple, r))
    });
    let witness = found.map(|(indices, residual)| Witness {
        labels: indices.iter().map(|i| labels[*i].clone()).collect(),
        indices,
        residual,
    });
    IdentityReport::new(name, total, witness)
}

pub(crate) fn decode(mut k: usize, n: usize, arity: usize) -> Vec<usize> {
    let mut t = vec![0; arity];
    for slot in t.iter_mut().rev() {
        *slot = k % n;
        k /= n;
    }
    t
}

pub fn element_sweep<S, F>(name: &str, alg: &StructureAlgebra<S>, arity: usize, f: F) -> IdentityReport
where
    S: Scalar,
    F: Fn(&[usize]) -> Element<S> + Sync,
{
    let labels = alg.labels();
    sweep(name, labels, arity, |t| {
        let r = f(t);
        (!r.is_zero()).then(|| r.render(labels))
    })
}

fn scalar_sweep<S, F>(name: &str, labels: &[String], arity: usize, f: F) -> IdentityReport
where
    S: Scalar,
    F: Fn(&[usize]) -> S + Sync,
{
    sweep(name, labels, arity, |t| {
        let r = f(t);
        (!r.is_zero()).then(|| r.to_string())
    })
}

fn e<S: Scalar>(i: usize) -> Element<S> {
    Element::basis(i)
}

fn mul<S: Scalar>(alg: &StructureAlgebra<S>, x: &Element<S>, y: &Element<S>) -> Element<S> {
    alg.multiply(x, y)
}

/// `e_a e_b - sign * e_b e_a`.
pub fn commutation_residual<S: Scalar>(alg: &StructureAlgebra<S>, sign: &S, a: usize, b: usize) -> Element<S> {
    alg.product(a, b).sub(&alg.product(b, a).scale(sign))
}

/// Verifies `x y = (-1)^j y x` on all basis pairs.
pub fn check_commutation_sign<S: Scalar>(alg: &StructureAlgebra<S>, j_parity: i64) -> IdentityReport {
    let sign = if j_parity.rem_euclid(2) == 0 {
        S::one()
    } else {
        -S::one()
    };
    element_sweep("commutation_sign", alg, 2, |t| {
        commutation_residual(alg, &sign, t[0], t[1])
    })
}

/// Graded commutativity rule `x y = -(-1)^(xy) y x` of a Lie superalgebra.
pub fn check_super_anticommutativity<S: Scalar>(alg: &StructureAlgebra<S>) -> IdentityReport {
    element_sweep("super_anticommutativity", alg, 2, |t| {
        let sign = -alg.sign(t[0], t[1]);
        commutation_residual(alg, &sign, t[0], t[1])
    })
}

/// `(xy)z + (yz)x + (zx)y`.
pub fn jacobi_residual<S: Scalar>(alg: &StructureAlgebra<S>, a: usize, b: usize, c: usize) -> Element<S> {
    let (x, y, z) = (e(a), e(b), e(c));
    mul(alg, &mul(alg, &x, &y), &z)
        .add(&mul(alg, &mul(alg, &y, &z), &x))
        .add(&mul(alg, &mul(alg, &z, &x), &y))
}

pub fn check_jacobi<S: Scalar>(alg: &StructureAlgebra<S>) -> IdentityReport {
    element_sweep("jacobi", alg, 3, |t| jacobi_residual(alg, t[0], t[1], t[2]))
}

/// `(-1)^(xz) (xy)z + (-1)^(yx) (yz)x + (-1)^(zy) (zx)y`.
pub fn super_jacobi_residual<S: Scalar>(alg: &StructureAlgebra<S>, a: usize, b: usize, c: usize) -> Element<S> {
    let (x, y, z) = (e(a), e(b), e(c));
    mul(alg, &mul(alg, &x, &y), &z)
        .scale(&alg.sign(a, c))
        .add(&mul(alg, &mul(alg, &y, &z), &x).scale(&alg.sign(b, a)))
        .add(&mul(alg, &mul(alg, &z, &x), &y).scale(&alg.sign(c, b)))
}

pub fn check_super_jacobi<S: Scalar>(alg: &StructureAlgebra<S>) -> IdentityReport {
    element_sweep("super_jacobi", alg, 3, |t| super_jacobi_residual(alg, t[0], t[1], t[2]))
}

/// `(xy)z - x(yz)`.
pub fn associator_residual<S: Scalar>(alg: &StructureAlgebra<S>, a: usize, b: usize, c: usize) -> Element<S> {
    alg.associator(&e(a), &e(b), &e(c))
}

pub fn check_associativity<S: Scalar>(alg: &StructureAlgebra<S>) -> IdentityReport {
    element_sweep("associativity", alg, 3, |t| associator_residual(alg, t[0], t[1], t[2]))
}

/// Left and right alternative laws `(x,x,y) = 0 = (y,x,x)`, each linearized
/// and checked on its own.
pub fn check_alternative<S: Scalar>(alg: &StructureAlgebra<S>) -> IdentityReport {
    let left = element_sweep("left_alternative", alg, 3, |t| {
        associator_residual(alg, t[0], t[1], t[2]).add(&associator_residual(alg, t[1], t[0], t[2]))
    });
    let right = element_sweep("right_alternative", alg, 3, |t| {
        associator_residual(alg, t[0], t[1], t[2]).add(&associator_residual(alg, t[0], t[2], t[1]))
    });
    IdentityReport::all_of("alternative", vec![left, right])
}

/// Malcev identity `(xy)(xz) = ((xy)z)x + ((yz)x)x + ((zx)x)y`, polarized in
/// `x` so that it becomes multilinear in `(x1, x2, y, z)`.
pub fn malcev_residual<S: Scalar>(alg: &StructureAlgebra<S>, a1: usize, a2: usize, b: usize, c: usize) -> Element<S> {
    let (x1, x2, y, z) = (e(a1), e(a2), e(b), e(c));
    let m = |p: &Element<S>, q: &Element<S>| mul(alg, p, q);
    let half = |x: &Element<S>, xp: &Element<S>| {
        // terms of the quadratic identity with the first x replaced by x and the second by xp
        let xy = m(x, &y);
        m(&xy, &m(xp, &z))
            .sub(&m(&m(&xy, &z), xp))
            .sub(&m(&m(&m(&y, &z), x), xp))
            .sub(&m(&m(&m(&z, x), xp), &y))
    };
    half(&x1, &x2).add(&half(&x2, &x1))
}

/// Checks the Malcev identity on all basis quadruples. The identity is only
/// meaningful for anticommutative algebras, so other input is rejected.
pub fn check_malcev<S: Scalar>(alg: &StructureAlgebra<S>) -> Result<IdentityReport> {
    let n = alg.dim();
    let minus = -S::one();
    for a in 0..n {
        for b in a..n {
            if !commutation_residual(alg, &minus, a, b).is_zero() {
                return Err(Error::NotAnticommutative(a, b));
            }
        }
    }
    Ok(element_sweep("malcev", alg, 4, |t| {
        malcev_residual(alg, t[0], t[1], t[2], t[3])
    }))
}

/// `(x,y,z) + (-1)^(xy+yz+zx) (z,y,x)`, the polarization of `(x,y,x) = 0`
/// (with graded signs; all signs are +1 in an ungraded algebra).
pub fn flexible_residual<S: Scalar>(alg: &StructureAlgebra<S>, a: usize, b: usize, c: usize) -> Element<S> {
    let sign = alg.sign(a, b) * alg.sign(b, c) * alg.sign(c, a);
    associator_residual(alg, a, b, c).add(&associator_residual(alg, c, b, a).scale(&sign))
}

/// `[x,y] = xy - (-1)^(xy) yx`.
pub fn supercommutator<S: Scalar>(alg: &StructureAlgebra<S>, a: usize, b: usize) -> Element<S> {
    alg.product(a, b).sub(&alg.product(b, a).scale(&alg.sign(a, b)))
}

/// Graded Jacobi identity of the (super)commutator bracket.
pub fn lie_admissible_residual<S: Scalar>(alg: &StructureAlgebra<S>, a: usize, b: usize, c: usize) -> Element<S> {
    // [[u,v],w] with [u,v] already an element of grade u+v
    let bracket_with = |u: usize, v: usize, w: usize| {
        let mut out = Element::zero();
        for (k, coeff) in supercommutator(alg, u, v).terms() {
            out.add_scaled(&supercommutator(alg, k, w), coeff);
        }
        out
    };
    bracket_with(a, b, c)
        .scale(&alg.sign(a, c))
        .add(&bracket_with(b, c, a).scale(&alg.sign(b, a)))
        .add(&bracket_with(c, a, b).scale(&alg.sign(c, b)))
}

/// `(-1)^(xz) (x,y,z) + (-1)^(yx) (y,z,x) + (-1)^(zy) (z,x,y)`.
pub fn cyclic_associator_residual<S: Scalar>(alg: &StructureAlgebra<S>, a: usize, b: usize, c: usize) -> Element<S> {
    associator_residual(alg, a, b, c)
        .scale(&alg.sign(a, c))
        .add(&associator_residual(alg, b, c, a).scale(&alg.sign(b, a)))
        .add(&associator_residual(alg, c, a, b).scale(&alg.sign(c, b)))
}

/// Flexibility, Lie-admissibility of the (super)commutator, and vanishing of
/// the cyclic associator sum, each over all basis triples. Graded algebras get
/// the graded versions of all three.
pub fn check_flexible_lie_admissible<S: Scalar>(alg: &StructureAlgebra<S>) -> Vec<IdentityReport> {
    let prefix = if alg.is_graded() { "super_" } else { "" };
    vec![
        element_sweep(&format!("{prefix}flexible"), alg, 3, |t| {
            flexible_residual(alg, t[0], t[1], t[2])
        }),
        element_sweep(&format!("{prefix}lie_admissible"), alg, 3, |t| {
            lie_admissible_residual(alg, t[0], t[1], t[2])
        }),
        element_sweep(&format!("{prefix}cyclic_associator"), alg, 3, |t| {
            cyclic_associator_residual(alg, t[0], t[1], t[2])
        }),
    ]
}

/// `(x,y,z) - B(x,y) z + B(y,z) x`.
pub fn associator_form_residual<S: Scalar>(
    alg: &StructureAlgebra<S>,
    form: &BilinearForm<S>,
    a: usize,
    b: usize,
    c: usize,
) -> Element<S> {
    associator_residual(alg, a, b, c)
        .sub(&e(c).scale(form.entry(a, b)))
        .add(&e(a).scale(form.entry(b, c)))
}

pub fn check_associator_form<S: Scalar>(alg: &StructureAlgebra<S>, form: &BilinearForm<S>) -> IdentityReport {
    element_sweep("associator_form", alg, 3, |t| {
        associator_form_residual(alg, form, t[0], t[1], t[2])
    })
}

/// `(xy)z + (yz)x + (zx)y - k (B(x,y) z + B(y,z) x + B(z,x) y)`: the full
/// polarization of `(xx)x = k B(x,x) x` in a commutative algebra with a
/// symmetric form (both sides carry the same factor 2).
pub fn cubic_residual<S: Scalar>(
    alg: &StructureAlgebra<S>,
    form: &BilinearForm<S>,
    coeff: &S,
    a: usize,
    b: usize,
    c: usize,
) -> Element<S> {
    let rhs = e(c)
        .scale(form.entry(a, b))
        .add(&e(a).scale(form.entry(b, c)))
        .add(&e(b).scale(form.entry(c, a)))
        .scale(coeff);
    jacobi_residual(alg, a, b, c).sub(&rhs)
}

/// `(xx)x - k B(x,x) x` for a single element.
pub fn cube_residual<S: Scalar>(
    alg: &StructureAlgebra<S>,
    form: &BilinearForm<S>,
    coeff: &S,
    x: &Element<S>,
) -> Element<S> {
    let cube = alg.multiply(&alg.multiply(x, x), x);
    cube.sub(&x.scale(&(coeff.clone() * form.eval(x, x))))
}

/// Cubic relation `x^3 = k B(x,x) x`: fully polarized over basis triples, and
/// directly on every basis vector and every sum of two basis vectors.
pub fn check_cubic<S: Scalar>(alg: &StructureAlgebra<S>, form: &BilinearForm<S>, coeff: &S) -> IdentityReport {
    let polarized = element_sweep("cubic_polarized", alg, 3, |t| {
        cubic_residual(alg, form, coeff, t[0], t[1], t[2])
    });
    let labels = alg.labels();
    let spanning = sweep("cubic_spanning_set", labels, 2, |t| {
        if t[0] > t[1] {
            return None;
        }
        let x = if t[0] == t[1] { e(t[0]) } else { e(t[0]).add(&e(t[1])) };
        let r = cube_residual(alg, form, coeff, &x);
        (!r.is_zero()).then(|| r.render(labels))
    });
    IdentityReport::all_of("cubic", vec![polarized, spanning])
}

/// `B(xy, z) - B(x, yz)`.
pub fn invariance_residual<S: Scalar>(
    alg: &StructureAlgebra<S>,
    form: &BilinearForm<S>,
    a: usize,
    b: usize,
    c: usize,
) -> S {
    form.eval(alg.product(a, b), &e(c)) - form.eval(&e(a), alg.product(b, c))
}

pub fn symmetry_residual<S: Scalar>(
    alg: &StructureAlgebra<S>,
    form: &BilinearForm<S>,
    law: &SymmetryLaw,
    a: usize,
    b: usize,
) -> S {
    let lhs = form.entry(a, b).clone();
    match law {
        SymmetryLaw::Symmetric => lhs - form.entry(b, a).clone(),
        SymmetryLaw::Antisymmetric => lhs + form.entry(b, a).clone(),
        SymmetryLaw::Supersymmetric => lhs - alg.sign(a, b) * form.entry(b, a).clone(),
        SymmetryLaw::InvolutionCompatible(w) => form.entry(w[a], w[b]).clone() - form.entry(b, a).clone(),
    }
}

/// Invariance, the symmetry law, grade-orthogonality (graded algebras only)
/// and non-degeneracy by exact determinant.
pub fn check_form_properties<S: Scalar>(
    alg: &StructureAlgebra<S>,
    form: &BilinearForm<S>,
    law: &SymmetryLaw,
) -> Vec<IdentityReport> {
    let labels = alg.labels();
    let mut out = vec![
        scalar_sweep("form_invariance", labels, 3, |t| {
            invariance_residual(alg, form, t[0], t[1], t[2])
        }),
        scalar_sweep("form_symmetry", labels, 2, |t| {
            symmetry_residual(alg, form, law, t[0], t[1])
        }),
    ];
    if alg.is_graded() {
        out.push(scalar_sweep("form_grade_orthogonal", labels, 2, |t| {
            if alg.grade(t[0]) != alg.grade(t[1]) {
                form.entry(t[0], t[1]).clone()
            } else {
                S::zero()
            }
        }));
    }
    out.push(match form.determinant() {
        Ok(det) => IdentityReport::from_bool("form_nondegenerate", !det.is_zero(), format!("det = {det}")),
        Err(err) => IdentityReport::from_bool("form_nondegenerate", false, err.to_string()),
    });
    out
}

/// Coefficient identities among spin-`j` couplings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CgIdentityShape {
    /// j = 1: `C(m1,m2) C(m1+m2,m3) = k { (-1)^m2 d(m2+m3) - (-1)^m1 d(m1+m3) }`.
    SpinOneTriple,
    /// j = 3: `C(m1,m3) C(m2,m1+m3) + C(m2,m3) C(m1,m2+m3)
    ///        = k { 2 (-1)^m1 d(m1+m2) - (-1)^m3 [d(m1+m3) + d(m2+m3)] }`.
    SpinThreeSymmetric,
    /// j = 2: cyclic sum of `C(m1,m2) C(m3,m1+m2)`
    ///        `= k { (-1)^m1 d(m1+m2) + (-1)^m2 d(m2+m3) + (-1)^m3 d(m3+m1) }`.
    SpinTwoCyclic,
}

impl CgIdentityShape {
    pub fn spin(self) -> i64 {
        match self {
            CgIdentityShape::SpinOneTriple => 1,
            CgIdentityShape::SpinTwoCyclic => 2,
            CgIdentityShape::SpinThreeSymmetric => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CgIdentityShape::SpinOneTriple => "spin1_triple_product",
            CgIdentityShape::SpinThreeSymmetric => "spin3_symmetrized_product",
            CgIdentityShape::SpinTwoCyclic => "spin2_cyclic_product",
        }
    }
}

/// `C_j(m1, m2)` with every out-of-range argument read as a zero coefficient.
pub fn cj_or_zero(j: i64, m1: i64, m2: i64) -> Radical {
    if m1.abs() > j || m2.abs() > j || (m1 + m2).abs() > j {
        return Radical::zero();
    }
    cj(HalfInt::int(j), HalfInt::int(m1), HalfInt::int(m2)).expect("arguments in range")
}

fn sign_pow(m: i64) -> Radical {
    Radical::from_i64(if m.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn delta(n: i64) -> Radical {
    Radical::from_i64(i64::from(n == 0))
}

/// Both sides of a coefficient identity at one `(m1, m2, m3)`.
pub fn cg_identity_sides(shape: CgIdentityShape, k: &Radical, m: [i64; 3]) -> (Radical, Radical) {
    let [m1, m2, m3] = m;
    let c = |a, b| cj_or_zero(shape.spin(), a, b);
    let (lhs, rhs) = match shape {
        CgIdentityShape::SpinOneTriple => (
            c(m1, m2) * c(m1 + m2, m3),
            sign_pow(m2) * delta(m2 + m3) - sign_pow(m1) * delta(m1 + m3),
        ),
        CgIdentityShape::SpinThreeSymmetric => (
            c(m1, m3) * c(m2, m1 + m3) + c(m2, m3) * c(m1, m2 + m3),
            Radical::from_i64(2) * sign_pow(m1) * delta(m1 + m2) - sign_pow(m3) * (delta(m1 + m3) + delta(m2 + m3)),
        ),
        CgIdentityShape::SpinTwoCyclic => (
            c(m1, m2) * c(m3, m1 + m2) + c(m2, m3) * c(m1, m2 + m3) + c(m3, m1) * c(m2, m3 + m1),
            sign_pow(m1) * delta(m1 + m2) + sign_pow(m2) * delta(m2 + m3) + sign_pow(m3) * delta(m3 + m1),
        ),
    };
    (lhs, k.clone() * rhs)
}

/// Element-level form of a coefficient identity on a spin-`j` algebra with
/// normalization `b`, for basis triple `(a, b, c)` (index `i` is `m = j - i`):
/// - j = 1: `(xy)z - k b^2 (B(x,z) y - B(y,z) x)`
/// - j = 3: `(xz)y + (yz)x - k b^2 (2 B(x,y) z - B(x,z) y - B(y,z) x)`
/// - j = 2: the polarized cubic relation with coefficient `k b^2`.
pub fn cg_element_residual(
    alg: &StructureAlgebra<Radical>,
    form: &BilinearForm<Radical>,
    shape: CgIdentityShape,
    kb2: &Radical,
    t: [usize; 3],
) -> Element<Radical> {
    let [a, b, c] = t;
    let (x, y, z) = (e::<Radical>(a), e(b), e(c));
    let f = |p: usize, q: usize| form.entry(p, q).clone();
    match shape {
        CgIdentityShape::SpinOneTriple => {
            let lhs = mul(alg, &mul(alg, &x, &y), &z);
            let rhs = y.scale(&f(a, c)).sub(&x.scale(&f(b, c))).scale(kb2);
            lhs.sub(&rhs)
        }
        CgIdentityShape::SpinThreeSymmetric => {
            let lhs = mul(alg, &mul(alg, &x, &z), &y).add(&mul(alg, &mul(alg, &y, &z), &x));
            let rhs = z
                .scale(&(Radical::from_i64(2) * f(a, b)))
                .sub(&y.scale(&f(a, c)))
                .sub(&x.scale(&f(b, c)))
                .scale(kb2);
            lhs.sub(&rhs)
        }
        CgIdentityShape::SpinTwoCyclic => cubic_residual(alg, form, kb2, a, b, c),
    }
}

/// Checks a coefficient identity over all `(2j+1)^3` projection triples and
/// its element-level consequence over all basis triples of `alg`, whose
/// structure constants are `b C_j(m1, m2)`.
pub fn check_cg_family(
    alg: &StructureAlgebra<Radical>,
    form: &BilinearForm<Radical>,
    rhs_coefficient: &Radical,
    b: &Radical,
    shape: CgIdentityShape,
) -> Result<IdentityReport> {
    let j = shape.spin();
    let dim = (2 * j + 1) as usize;
    if alg.dim() != dim || form.dim() != dim {
        return Err(Error::Dimension(format!(
            "{} needs a {dim}-dimensional spin-{j} algebra, got {}",
            shape.name(),
            alg.dim()
        )));
    }
    let m_labels: Vec<String> = (0..dim).map(|i| (j - i as i64).to_string()).collect();
    let coefficient = sweep(&format!("{}_coefficients", shape.name()), &m_labels, 3, |t| {
        let m = [0, 1, 2].map(|k| j - t[k] as i64);
        let (lhs, rhs) = cg_identity_sides(shape, rhs_coefficient, m);
        (lhs != rhs).then(|| format!("{lhs} != {rhs}"))
    });
    let kb2 = rhs_coefficient.clone() * b.clone() * b.clone();
    let element = element_sweep(&format!("{}_elements", shape.name()), alg, 3, |t| {
        cg_element_residual(alg, form, shape, &kb2, [t[0], t[1], t[2]])
    });
    Ok(IdentityReport::all_of(shape.name(), vec![coefficient, element]))
}
