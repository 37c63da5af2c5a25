//! Graded coupling algebras on several spin sectors.

use num_traits::{One, Zero};

use crate::algebra::identities::{
    check_flexible_lie_admissible, check_super_anticommutativity, check_super_jacobi, super_jacobi_residual,
};
use crate::algebra::{IdentityReport, StructureAlgebra};
use crate::classical::{build_spin_algebra, spin3_octonion_bridge, spin_label, SpinAlgebraSpec};
use crate::error::{Error, Result};
use crate::scalar::{Radical, Scalar};
use crate::wigner::{cg, CGKey, HalfInt};

/// One spin multiplet of a graded algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sector {
    pub j: HalfInt,
    pub grade: u8,
}

/// `psi_left(m1) . psi_right(m2) = constant sum_m C(jl jr jt; m1 m2 m) psi_target(m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coupling {
    pub left: usize,
    pub right: usize,
    pub target: usize,
    pub constant: Radical,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradedSectorSpec {
    pub sectors: Vec<Sector>,
    pub couplings: Vec<Coupling>,
}

impl GradedSectorSpec {
    /// Every sector is bosonic iff its spin is an integer, couplings refer to
    /// existing sectors, respect the grading and are listed at most once.
    pub fn validate(&self) -> Result<()> {
        for s in &self.sectors {
            let parity = s.j.twice().rem_euclid(2) as u8;
            if s.j.twice() < 0 || s.grade != parity {
                return Err(Error::Unsupported(format!("sector j = {} with grade {}", s.j, s.grade)));
            }
        }
        let n = self.sectors.len();
        for (k, c) in self.couplings.iter().enumerate() {
            if c.left >= n || c.right >= n || c.target >= n {
                return Err(Error::Dimension(format!("coupling {k} refers to a missing sector")));
            }
            let g = |i: usize| self.sectors[i].grade;
            if (g(c.left) + g(c.right)) % 2 != g(c.target) {
                return Err(Error::Unsupported(format!("coupling {k} does not respect the grading")));
            }
            if self.couplings[..k]
                .iter()
                .any(|d| (d.left, d.right) == (c.left, c.right))
            {
                return Err(Error::Unsupported(format!("coupling {k} repeats a sector pair")));
            }
        }
        Ok(())
    }

    /// Index of the first basis vector of each sector.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.sectors.len());
        let mut at = 0;
        for s in &self.sectors {
            out.push(at);
            at += (s.j.twice() + 1) as usize;
        }
        out
    }
}

/// Builds the graded algebra of a sector spec. Basis: sectors in order, each
/// with `m = j, ..., -j`, labelled like `psi1/2(-1/2)`.
pub fn build_graded_cg(spec: &GradedSectorSpec) -> Result<StructureAlgebra<Radical>> {
    spec.validate()?;
    let offsets = spec.offsets();
    let labels = spec
        .sectors
        .iter()
        .flat_map(|s| s.j.projections().map(move |m| (spin_label(s.j, m), s.grade)));
    let mut alg = StructureAlgebra::graded(labels);
    for c in &spec.couplings {
        let (l, r, t) = (
            spec.sectors[c.left].j,
            spec.sectors[c.right].j,
            spec.sectors[c.target].j,
        );
        for (a, m1) in l.projections().enumerate() {
            for (b, m2) in r.projections().enumerate() {
                let m3 = m1 + m2;
                if m3.twice().abs() > t.twice() {
                    continue;
                }
                let k = cg(&CGKey {
                    j1: l,
                    j2: r,
                    j3: t,
                    m1,
                    m2,
                    m3,
                })?;
                if !k.is_zero() {
                    alg.add_constant(
                        offsets[c.left] + a,
                        offsets[c.right] + b,
                        offsets[c.target] + t.index_of(m3),
                        c.constant.clone() * k,
                    );
                }
            }
        }
    }
    Ok(alg)
}

fn sector(twice_j: i64) -> Sector {
    Sector {
        j: HalfInt::from_twice(twice_j),
        grade: twice_j.rem_euclid(2) as u8,
    }
}

fn coupling(left: usize, right: usize, target: usize, constant: Radical) -> Coupling {
    Coupling {
        left,
        right,
        target,
        constant,
    }
}

/// Spins 1 (bosonic) and 1/2 (fermionic) with both spin-1 and spin-1/2
/// self-couplings normalized to 1 and the mixed couplings equal to `a`.
pub fn super_cg_spec(a: &Radical) -> GradedSectorSpec {
    GradedSectorSpec {
        sectors: vec![sector(2), sector(1)],
        couplings: vec![
            coupling(0, 0, 0, Radical::one()),
            coupling(1, 1, 0, Radical::one()),
            coupling(0, 1, 1, a.clone()),
            coupling(1, 0, 1, a.clone()),
        ],
    }
}

pub fn build_super_cg(a: &Radical) -> StructureAlgebra<Radical> {
    build_graded_cg(&super_cg_spec(a)).expect("fixed spec is valid")
}

/// The mixed coupling for which the spin-(1, 1/2) algebra satisfies the
/// super-Jacobi identity. Every residual component is a polynomial of degree
/// at most 2 in `a`; it is interpolated from `a = 0, 1, 2`, the first
/// component that is exactly linear fixes `a`, and the value is verified on
/// all triples.
pub fn solve_super_cg_ratio() -> Option<Radical> {
    let samples: Vec<StructureAlgebra<Radical>> = (0..3).map(|k| build_super_cg(&Radical::from_i64(k))).collect();
    let n = samples[0].dim();
    let two = Radical::from_i64(2);
    let half = Radical::ratio(1, 2);
    let mut candidate = None;
    'search: for t in 0..n * n * n {
        let (x, y, z) = (t / (n * n), (t / n) % n, t % n);
        let r: Vec<_> = samples.iter().map(|alg| super_jacobi_residual(alg, x, y, z)).collect();
        for k in 0..n {
            let (r0, r1, r2) = (r[0].coeff(k), r[1].coeff(k), r[2].coeff(k));
            // r(a) = c0 + c1 a + c2 a^2
            let c2 = (r2.clone() - two.clone() * r1.clone() + r0.clone()) * half.clone();
            let c1 = r1 - r0.clone() - c2.clone();
            if c2.is_zero() && !c1.is_zero() {
                candidate = Some(-(r0 * c1.inverse()?));
                break 'search;
            }
        }
    }
    let a = candidate?;
    check_super_jacobi(&build_super_cg(&a)).holds().then_some(a)
}

/// Spins 3 (bosonic) and 3/2 (fermionic): spin-3 self-coupling 1, spin-3/2
/// pairs coupling into spin 3 with `a1`, mixed products into spin 3/2 with
/// `a2`. Exchanging the factors of a mixed product flips its sign through the
/// coupling-coefficient symmetry, so one constant serves both orders.
pub fn super_octonion_spec(a1: &Radical, a2: &Radical) -> GradedSectorSpec {
    GradedSectorSpec {
        sectors: vec![sector(6), sector(3)],
        couplings: vec![
            coupling(0, 0, 0, Radical::one()),
            coupling(1, 1, 0, a1.clone()),
            coupling(0, 1, 1, a2.clone()),
            coupling(1, 0, 1, a2.clone()),
        ],
    }
}

/// Builds the 11-dimensional spin-(3, 3/2) algebra and an exploratory report.
/// Only the bosonic claims (spin-3 block unchanged and its unital extension an
/// octonion algebra) are asserted; the graded identities are informational.
pub fn build_super_octonion(a1: &Radical, a2: &Radical) -> Result<(StructureAlgebra<Radical>, Vec<IdentityReport>)> {
    let alg = build_graded_cg(&super_octonion_spec(a1, a2))?;
    let bosonic = alg.restrict(&(0..7).collect::<Vec<_>>())?;
    let (spin3, _) = build_spin_algebra(&SpinAlgebraSpec::new(3, Radical::one()))?;
    let same = bosonic.constants() == spin3.constants();
    let mut reports = vec![
        IdentityReport::from_bool("super_octonion_bosonic_block_is_spin3", same, ""),
        spin3_octonion_bridge(&Radical::one())?
            .report()
            .named("super_octonion_bosonic_octonion"),
        check_super_anticommutativity(&alg).named("super_octonion_graded_commutation"),
        check_super_jacobi(&alg)
            .named("super_octonion_super_jacobi")
            .informational(),
    ];
    reports.extend(check_flexible_lie_admissible(&alg).into_iter().map(|r| {
        let name = format!("super_octonion_{}", r.name);
        r.named(name).informational()
    }));
    Ok((alg, reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;

    #[test]
    fn fermion_pair_lands_in_boson_sector_symmetrically() {
        let alg = build_super_cg(&Radical::one());
        // psi1/2(1/2) psi1/2(1/2) = C(1/2 1/2 1; 1/2 1/2 1) psi1(1) = psi1(1)
        assert_eq!(alg.label(3), "psi1/2(1/2)");
        assert_eq!(alg.product(3, 3), &Element::basis(0));
        assert_eq!(alg.product(3, 4), alg.product(4, 3));
        assert_eq!(alg.grades(), [0, 0, 0, 1, 1]);
    }

    #[test]
    fn mixed_products_anticommute() {
        let alg = build_super_cg(&Radical::from_i64(3));
        assert!(check_super_anticommutativity(&alg).holds());
        for b in 0..3 {
            for f in 3..5 {
                assert_eq!(alg.product(b, f), &alg.product(f, b).neg());
            }
        }
    }

    #[test]
    fn super_jacobi_fixes_the_mixed_coupling() {
        let a = solve_super_cg_ratio().unwrap();
        assert_eq!(a, Radical::sqrt_int(6) * Radical::ratio(1, 4));
        assert!(!check_super_jacobi(&build_super_cg(&Radical::one())).holds());
    }

    #[test]
    fn spec_validation() {
        let bad_grade = GradedSectorSpec {
            sectors: vec![Sector {
                j: HalfInt::int(1),
                grade: 1,
            }],
            couplings: vec![],
        };
        assert!(bad_grade.validate().is_err());
        let mut spec = super_cg_spec(&Radical::one());
        spec.couplings.push(coupling(0, 1, 0, Radical::one()));
        assert!(spec.validate().is_err());
    }

    #[test]
    fn super_octonion_bosonic_claims() {
        let (alg, reports) = build_super_octonion(&Radical::one(), &Radical::one()).unwrap();
        assert_eq!(alg.dim(), 11);
        assert!(
            reports
                .iter()
                .all(|r| r.passed() || r.status == crate::algebra::Status::Info),
            "{reports:?}"
        );
    }
}
