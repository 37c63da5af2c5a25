//! The spin-j representations of su_q(2) and the coproduct on tensor products.
//!
//! `K` stands for `t^H`; on weight `m` it acts as `t^m`, a power of
//! `s = t^(1/2)`.

use num_traits::Zero;

use crate::algebra::{IdentityReport, Witness};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{q_integer, QRadical, Radical, Scalar};
use crate::wigner::HalfInt;

/// Images of `H`, `J+`, `J-`, `t^H` and `t^-H` on a representation space,
/// which is the tensor product of the spin representations in `factors`.
#[derive(Clone, Debug, PartialEq)]
pub struct SuqGenerators {
    pub factors: Vec<HalfInt>,
    pub h: Matrix<QRadical>,
    pub jp: Matrix<QRadical>,
    pub jm: Matrix<QRadical>,
    pub k: Matrix<QRadical>,
    pub kinv: Matrix<QRadical>,
}

/// `sqrt([a] [b])`.
fn q_root(a: i64, b: i64) -> Result<QRadical> {
    QRadical::sqrt(&(q_integer(a)? * q_integer(b)?))
}

/// `1 / (t - 1/t)`.
pub(crate) fn inverse_t_difference() -> QRadical {
    (QRadical::t_pow(1) - QRadical::t_pow(-1))
        .inverse()
        .expect("t - 1/t is a single term")
}

/// Generators on `V_j` in the basis `|j, m>`, `m = j, ..., -j`.
pub fn rep_generators(j: HalfInt) -> Result<SuqGenerators> {
    if !(0..=6).contains(&j.twice()) {
        return Err(Error::Unsupported(format!(
            "representation of spin {j} (supported: 0 <= j <= 3)"
        )));
    }
    let n = (j.twice() + 1) as usize;
    let ms: Vec<HalfInt> = j.projections().collect();
    let mut jp = Matrix::zeros(n, n);
    let mut jm = Matrix::zeros(n, n);
    for (a, m) in ms.iter().enumerate() {
        // j - m and j + m as integers
        let lo = (j.twice() - m.twice()) / 2;
        let hi = (j.twice() + m.twice()) / 2;
        if a > 0 {
            jp.set(a - 1, a, q_root(lo, hi + 1)?);
        }
        if a + 1 < n {
            jm.set(a + 1, a, q_root(hi, lo + 1)?);
        }
    }
    let diag = |f: &dyn Fn(HalfInt) -> QRadical| {
        Matrix::from_fn(n, n, |r, c| if r == c { f(ms[r]) } else { QRadical::zero() })
    };
    Ok(SuqGenerators {
        factors: vec![j],
        h: diag(&|m| QRadical::from_rational(m.to_rational())),
        jp,
        jm,
        k: diag(&|m| QRadical::t_half_pow(m.twice())),
        kinv: diag(&|m| QRadical::t_half_pow(-m.twice())),
    })
}

fn spin_name(factors: &[HalfInt]) -> String {
    factors.iter().map(|j| j.to_string()).collect::<Vec<_>>().join("x")
}

/// Reports the first nonzero entry among named residual matrices.
pub(crate) fn matrix_report<S: Scalar>(name: &str, residuals: &[(String, Matrix<S>)]) -> IdentityReport {
    let mut checked = 0;
    for (label, m) in residuals {
        checked += 1;
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if !m.get(r, c).is_zero() {
                    let witness = Witness {
                        labels: vec![label.clone()],
                        indices: vec![r, c],
                        residual: m.get(r, c).to_string(),
                    };
                    return IdentityReport::new(name, checked, Some(witness));
                }
            }
        }
    }
    IdentityReport::new(name, checked, None)
}

impl SuqGenerators {
    pub fn dim(&self) -> usize {
        self.h.rows()
    }

    pub fn identity(&self) -> Matrix<QRadical> {
        Matrix::identity(self.dim())
    }

    /// `(t^(2H) - t^(-2H)) / (t - 1/t)`.
    pub fn cartan_bracket(&self) -> Matrix<QRadical> {
        let k2 = self.k.mul(&self.k);
        let kinv2 = self.kinv.mul(&self.kinv);
        k2.sub(&kinv2).scale(&inverse_t_difference())
    }

    /// Residuals of the defining relations: the Cartan action on `J+-`, the
    /// `[J+, J-]` relation, `t^H` inverse to `t^-H`, commuting with `H`, and
    /// conjugating `J+-` to `t^(+-1) J+-`.
    pub fn relation_residuals(&self) -> Vec<(String, Matrix<QRadical>)> {
        let t = QRadical::t_pow(1);
        let tinv = QRadical::t_pow(-1);
        let id = self.identity();
        vec![
            ("[H,J+] - J+".into(), self.h.commutator(&self.jp).sub(&self.jp)),
            ("[H,J-] + J-".into(), self.h.commutator(&self.jm).add(&self.jm)),
            (
                "[J+,J-] - [2H]".into(),
                self.jp.commutator(&self.jm).sub(&self.cartan_bracket()),
            ),
            ("t^H t^-H - 1".into(), self.k.mul(&self.kinv).sub(&id)),
            ("t^-H t^H - 1".into(), self.kinv.mul(&self.k).sub(&id)),
            ("[H,t^H]".into(), self.h.commutator(&self.k)),
            (
                "t^H J+ t^-H - t J+".into(),
                self.k.mul(&self.jp).mul(&self.kinv).sub(&self.jp.scale(&t)),
            ),
            (
                "t^H J- t^-H - J-/t".into(),
                self.k.mul(&self.jm).mul(&self.kinv).sub(&self.jm.scale(&tinv)),
            ),
        ]
    }

    pub fn check_relations(&self, name: &str) -> IdentityReport {
        matrix_report(name, &self.relation_residuals())
    }

    /// Images on `self (x) other` under the coproduct.
    pub fn coproduct(&self, other: &Self) -> Self {
        let (i1, i2) = (self.identity(), other.identity());
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().copied());
        Self {
            factors,
            h: i1.kron(&other.h).add(&self.h.kron(&i2)),
            jp: self.kinv.kron(&other.jp).add(&self.jp.kron(&other.k)),
            jm: self.kinv.kron(&other.jm).add(&self.jm.kron(&other.k)),
            k: self.k.kron(&other.k),
            kinv: self.kinv.kron(&other.kinv),
        }
    }

    /// Exact values at `t = 1`, in the order `H, J+, J-, t^H, t^-H`.
    pub fn specialize_t1(&self) -> Result<[Matrix<Radical>; 5]> {
        let f = |m: &Matrix<QRadical>| m.try_map(QRadical::specialize_t1);
        Ok([f(&self.h)?, f(&self.jp)?, f(&self.jm)?, f(&self.k)?, f(&self.kinv)?])
    }

    /// At `t = 1`: `t^(+-H)` become the identity and `H, J+-` satisfy the su(2)
    /// relations `[H, J+-] = +-J+-`, `[J+, J-] = 2H`.
    pub fn check_classical_limit(&self, name: &str) -> Result<IdentityReport> {
        let [h, jp, jm, k, kinv] = self.specialize_t1()?;
        let id = Matrix::<Radical>::identity(self.dim());
        let two = Radical::from_i64(2);
        Ok(matrix_report(
            name,
            &[
                ("[H,J+] - J+".into(), h.commutator(&jp).sub(&jp)),
                ("[H,J-] + J-".into(), h.commutator(&jm).add(&jm)),
                ("[J+,J-] - 2H".into(), jp.commutator(&jm).sub(&h.scale(&two))),
                ("t^H - 1".into(), k.sub(&id)),
                ("t^-H - 1".into(), kinv.sub(&id)),
            ],
        ))
    }
}

/// The su_q(2) relations as exact matrix identities on `V_j`.
pub fn verify_suq2_relations(j: HalfInt) -> Result<IdentityReport> {
    Ok(rep_generators(j)?.check_relations(&format!("suq2_relations_j{j}")))
}

/// The relations on `V_j1 (x) V_j2` for the coproduct images, i.e. the
/// coproduct respects the defining relations.
pub fn verify_coproduct(j1: HalfInt, j2: HalfInt) -> Result<IdentityReport> {
    let g = rep_generators(j1)?.coproduct(&rep_generators(j2)?);
    Ok(g.check_relations(&format!("suq2_coproduct_{}", spin_name(&g.factors))))
}

/// The relations of the spin-j representation reduce to su(2) at `t = 1`.
pub fn verify_classical_limit(j: HalfInt) -> Result<IdentityReport> {
    rep_generators(j)?.check_classical_limit(&format!("suq2_classical_limit_j{j}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentPoly;
    use num_traits::One;

    fn half(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn spin_half_raising_is_one() {
        let g = rep_generators(half(1)).unwrap();
        assert_eq!(g.jp.get(0, 1), &QRadical::one());
        assert_eq!(g.jm.get(1, 0), &QRadical::one());
        assert_eq!(g.k.get(0, 0), &QRadical::t_half_pow(1));
    }

    #[test]
    fn spin_one_entries() {
        let g = rep_generators(HalfInt::int(1)).unwrap();
        let root2 = QRadical::sqrt(&q_integer(2).unwrap()).unwrap();
        assert_eq!(g.jp.get(0, 1), &root2);
        assert_eq!(g.jp.get(1, 2), &root2);
        let h: Vec<_> = (0..3).map(|i| g.h.get(i, i).clone()).collect();
        assert_eq!(h, [QRadical::from_i64(1), QRadical::zero(), QRadical::from_i64(-1)]);
        // [J+, J-] is diagonal with entries [2m]
        let c = g.jp.commutator(&g.jm);
        assert_eq!(c.get(0, 0), &QRadical::from_laurent(q_integer(2).unwrap()));
        assert!(c.get(1, 1).is_zero());
        assert_eq!(c.get(2, 2), &-QRadical::from_laurent(q_integer(2).unwrap()));
        assert_eq!(
            root2.clone() * root2,
            QRadical::from_laurent(LaurentPoly::t_pow(1) + LaurentPoly::t_pow(-1))
        );
    }

    #[test]
    fn relations_hold_up_to_spin_three() {
        for twice in 0..=6 {
            let r = verify_suq2_relations(half(twice)).unwrap();
            assert!(r.holds(), "{r}");
            assert!(verify_classical_limit(half(twice)).unwrap().holds());
        }
        assert!(rep_generators(half(7)).is_err());
    }

    #[test]
    fn coproduct_respects_relations() {
        for (a, b) in [(1, 1), (1, 2), (2, 1)] {
            let r = verify_coproduct(half(a), half(b)).unwrap();
            assert!(r.holds(), "{r}");
        }
        // Delta(H) commutes with Delta(J+) up to Delta(J+)
        let g = rep_generators(half(1)).unwrap();
        let d = g.coproduct(&g);
        assert_eq!(d.h.commutator(&d.jp), d.jp);
    }

    #[test]
    fn primitive_coproduct_breaks_relations() {
        let g = rep_generators(HalfInt::int(1)).unwrap();
        let mut d = g.coproduct(&g);
        let i = g.identity();
        d.jp = g.jp.kron(&i).add(&i.kron(&g.jp));
        d.jm = g.jm.kron(&i).add(&i.kron(&g.jm));
        let r = d.check_relations("primitive");
        assert!(!r.holds());
        assert_eq!(r.witness.unwrap().labels, ["[J+,J-] - [2H]"]);
    }
}
