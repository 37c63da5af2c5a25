//! Cross-check of the q-structures at sampled rational values of
//! `s = t^(1/2)`. Every value is evaluated exactly and the identities are
//! recomputed from the evaluated constants, independently of the symbolic
//! checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::qalgebra::build_q_algebra;
use super::qcg::derive_q_cg_spin1;
use super::quaternion::build_quantum_quaternion;
use super::rep::{matrix_report, rep_generators, SuqGenerators};
use crate::algebra::identities::{
    check_associativity, check_associator_form, check_form_properties, cyclic_associator_residual, element_sweep,
};
use crate::algebra::{IdentityReport, SymmetryLaw};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{QRadical, Radical, Scalar};
use crate::wigner::HalfInt;

/// `n` distinct positive rationals `p/q` with `1 <= p, q <= 30`, none equal
/// to 1, drawn from `seed`.
pub fn sample_points(n: usize, seed: u64) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<BigRational> = Vec::with_capacity(n);
    while out.len() < n {
        let s = BigRational::new(BigInt::from(rng.gen_range(1..=30)), BigInt::from(rng.gen_range(1..=30)));
        if !s.is_one() && !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

struct Sampled {
    h: Matrix<Radical>,
    jp: Matrix<Radical>,
    jm: Matrix<Radical>,
    k: Matrix<Radical>,
    kinv: Matrix<Radical>,
}

fn at(m: &Matrix<QRadical>, s: &BigRational) -> Result<Matrix<Radical>> {
    m.try_map(|x| x.evaluate_at(s))
}

impl Sampled {
    fn new(g: &SuqGenerators, s: &BigRational) -> Result<Self> {
        Ok(Self {
            h: at(&g.h, s)?,
            jp: at(&g.jp, s)?,
            jm: at(&g.jm, s)?,
            k: at(&g.k, s)?,
            kinv: at(&g.kinv, s)?,
        })
    }

    fn coproduct(&self, other: &Self) -> Self {
        let (i1, i2) = (Matrix::identity(self.h.rows()), Matrix::identity(other.h.rows()));
        Self {
            h: i1.kron(&other.h).add(&self.h.kron(&i2)),
            jp: self.kinv.kron(&other.jp).add(&self.jp.kron(&other.k)),
            jm: self.kinv.kron(&other.jm).add(&self.jm.kron(&other.k)),
            k: self.k.kron(&other.k),
            kinv: self.kinv.kron(&other.kinv),
        }
    }

    fn relations(&self, t: &Radical, label: &str) -> Result<Vec<(String, Matrix<Radical>)>> {
        let tinv = t.try_inverse().ok_or(Error::DivisionByZero)?;
        let denom = (t.clone() - tinv.clone()).try_inverse().ok_or(Error::DivisionByZero)?;
        let k2 = self.k.mul(&self.k);
        let kinv2 = self.kinv.mul(&self.kinv);
        let id = Matrix::identity(self.h.rows());
        Ok(vec![
            (
                format!("{label}: [H,J+] - J+"),
                self.h.commutator(&self.jp).sub(&self.jp),
            ),
            (
                format!("{label}: [H,J-] + J-"),
                self.h.commutator(&self.jm).add(&self.jm),
            ),
            (
                format!("{label}: [J+,J-] - [2H]"),
                self.jp.commutator(&self.jm).sub(&k2.sub(&kinv2).scale(&denom)),
            ),
            (format!("{label}: t^H t^-H - 1"), self.k.mul(&self.kinv).sub(&id)),
            (
                format!("{label}: t^H J+ t^-H - t J+"),
                self.k.mul(&self.jp).mul(&self.kinv).sub(&self.jp.scale(t)),
            ),
        ])
    }
}

/// All checks at one sample point, combined into one report.
pub fn check_at_point(s: &BigRational) -> Result<IdentityReport> {
    let t = Radical::from_rational(s * s);
    let mut parts = Vec::new();

    let half = Sampled::new(&rep_generators(HalfInt::from_twice(1))?, s)?;
    let one = Sampled::new(&rep_generators(HalfInt::int(1))?, s)?;
    let three_halves = Sampled::new(&rep_generators(HalfInt::from_twice(3))?, s)?;
    let half_one = half.coproduct(&one);
    let one_one = one.coproduct(&one);
    let mut residuals = half.relations(&t, "V1/2")?;
    residuals.extend(one.relations(&t, "V1")?);
    residuals.extend(three_halves.relations(&t, "V3/2")?);
    residuals.extend(half_one.relations(&t, "V1/2 x V1")?);
    parts.push(matrix_report("sampled_suq2_relations", &residuals));

    let derived = derive_q_cg_spin1()?;
    let m = at(&derived.product_map, s)?;
    parts.push(matrix_report(
        "sampled_q_cg_covariance",
        &[
            ("H".into(), one.h.mul(&m).sub(&m.mul(&one_one.h))),
            ("J+".into(), one.jp.mul(&m).sub(&m.mul(&one_one.jp))),
            ("J-".into(), one.jm.mul(&m).sub(&m.mul(&one_one.jm))),
        ],
    ));

    let q = build_q_algebra(&QRadical::one());
    let alg = q.algebra.try_map_scalars(|x| x.evaluate_at(s))?;
    let form = q.form.try_map_scalars(|x| x.evaluate_at(s))?;
    parts.push(check_associator_form(&alg, &form).named("sampled_q_associator_form"));
    let law = SymmetryLaw::InvolutionCompatible(q.involution.clone());
    for r in check_form_properties(&alg, &form, &law) {
        let name = format!("sampled_q_{}", r.name);
        parts.push(r.named(name));
    }
    parts.push(element_sweep("sampled_q_cyclic_associator", &alg, 3, |t| {
        cyclic_associator_residual(&alg, t[0], t[1], t[2])
    }));
    let qq = build_quantum_quaternion().try_map_scalars(|x| x.evaluate_at(s))?;
    parts.push(check_associativity(&qq).named("sampled_quantum_quaternion_associative"));

    Ok(IdentityReport::all_of(format!("t_sample_s={s}"), parts))
}

/// The cross-check at `n` sample points drawn from `seed`.
pub fn t_sample_check(n: usize, seed: u64) -> Result<Vec<IdentityReport>> {
    sample_points(n, seed).iter().map(check_at_point).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn points_are_distinct_and_not_one() {
        let pts = sample_points(5, 7);
        assert_eq!(pts.len(), 5);
        for (i, p) in pts.iter().enumerate() {
            assert!(!p.is_one() && !p.is_zero());
            assert!(!pts[..i].contains(p));
        }
        assert_eq!(pts, sample_points(5, 7));
    }

    #[test]
    fn sampled_checks_pass() {
        for r in t_sample_check(3, 1).unwrap() {
            assert!(r.holds(), "{r}");
        }
    }

    #[test]
    fn sampling_sees_a_wrong_table() {
        let s = BigRational::new(BigInt::from(2), BigInt::from(3));
        let mut q = build_q_algebra(&QRadical::one());
        q.algebra
            .add_constant(1, 1, 1, QRadical::t_pow(1) - QRadical::t_pow(-1));
        let alg = q.algebra.try_map_scalars(|x| x.evaluate_at(&s)).unwrap();
        let form = q.form.try_map_scalars(|x| x.evaluate_at(&s)).unwrap();
        assert!(!check_associator_form(&alg, &form).holds());
    }
}
