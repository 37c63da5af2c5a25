//! Named constructions and the verification suites run over them.
//!
//! Every construction has a battery of checks that only looks at the algebra
//! (and form) handed to it, so the same battery runs on a perturbed copy in
//! fuzz mode. A suite is the batteries of its constructions plus checks that
//! need more than one algebra, such as solving for a coupling or comparing a
//! deformation with its limit.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::identities::{
    check_alternative, check_associativity, check_cg_family, check_commutation_sign, check_cubic, check_jacobi,
    check_malcev, check_super_anticommutativity, check_super_jacobi, CgIdentityShape,
};
use crate::algebra::{
    check_composition, AlgebraJson, BilinearForm, FormJson, IdentityReport, Status, StructureAlgebra, Witness,
};
use crate::classical::{
    build_octonion_cartesian, build_spin_algebra, derive_octonion_structure, jordan_check, spin1_quaternion_extension,
    spin3_octonion_bridge, su2_isomorphism_check, SpinAlgebraSpec,
};
use crate::error::{Error, Result};
use crate::quantum::{
    build_q_algebra, build_quantum_quaternion, check_covariance, check_palindromic, check_q_classical_limit,
    check_quantum_quaternion, derive_q_cg_spin1, product_matrix, q_involution, quadratic_certificate, rep_generators,
    t_sample_check, verify_classical_limit, verify_coproduct, verify_hopf_axioms, verify_q_identities,
    verify_suq2_relations, QAlgebra,
};
use crate::scalar::{QRadical, Radical, Scalar};
use crate::superalg::{
    build_osp12_cartesian, build_super_octonion, build_super_quaternion, check_osp_form,
    check_spherical_cartesian_isomorphism, check_super_quaternion, osp_coupling, osp_form, relabel_to_osp,
    solve_super_cg_ratio,
};
use crate::wigner::HalfInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Classical,
    Super,
    Quantum,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 4] = ["classical", "super", "quantum", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Classical => "classical",
            Suite::Super => "super",
            Suite::Quantum => "quantum",
            Suite::All => "all",
        }
    }

    pub fn contains(self, c: Construction) -> bool {
        self == Suite::All || c.suite() == self
    }

    pub fn constructions(self) -> Vec<Construction> {
        Construction::ALL.into_iter().filter(|c| self.contains(*c)).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::Classical, Suite::Super, Suite::Quantum, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                Error::Unsupported(format!(
                    "unknown suite {s:?}; expected one of {}",
                    Self::NAMES.join(", ")
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Construction {
    Spin1,
    Spin2,
    Spin3,
    Quaternion,
    Octonion,
    Osp12,
    SuperQuaternion,
    SuperOctonion,
    QSpin1,
    QQuaternion,
}

impl Construction {
    pub const ALL: [Construction; 10] = [
        Construction::Spin1,
        Construction::Spin2,
        Construction::Spin3,
        Construction::Quaternion,
        Construction::Octonion,
        Construction::Osp12,
        Construction::SuperQuaternion,
        Construction::SuperOctonion,
        Construction::QSpin1,
        Construction::QQuaternion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::Spin1 => "spin1",
            Construction::Spin2 => "spin2",
            Construction::Spin3 => "spin3",
            Construction::Quaternion => "quaternion",
            Construction::Octonion => "octonion",
            Construction::Osp12 => "osp12",
            Construction::SuperQuaternion => "super-quaternion",
            Construction::SuperOctonion => "super-octonion",
            Construction::QSpin1 => "q-spin1",
            Construction::QQuaternion => "q-quaternion",
        }
    }

    pub fn names() -> Vec<&'static str> {
        Self::ALL.iter().map(|c| c.name()).collect()
    }

    pub fn suite(self) -> Suite {
        match self {
            Construction::Spin1
            | Construction::Spin2
            | Construction::Spin3
            | Construction::Quaternion
            | Construction::Octonion => Suite::Classical,
            Construction::Osp12 | Construction::SuperQuaternion | Construction::SuperOctonion => Suite::Super,
            Construction::QSpin1 | Construction::QQuaternion => Suite::Quantum,
        }
    }

    /// Whether the normalization `b` changes the construction.
    pub fn uses_b(self) -> bool {
        matches!(
            self,
            Construction::Spin1 | Construction::Spin2 | Construction::Spin3 | Construction::Quaternion
        )
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            Error::Unsupported(format!(
                "unknown construction {s:?}; expected one of {}",
                Self::names().join(", ")
            ))
        })
    }
}

/// A built construction: the algebra and, where the construction has one,
/// its bilinear form.
#[derive(Clone, Debug, PartialEq)]
pub enum Built {
    Radical {
        algebra: StructureAlgebra<Radical>,
        form: Option<BilinearForm<Radical>>,
    },
    Q {
        algebra: StructureAlgebra<QRadical>,
        form: Option<BilinearForm<QRadical>>,
    },
}

/// Serialized form of [`Built`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuiltJson {
    pub construction: String,
    pub algebra: AlgebraJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<FormJson>,
}

impl Built {
    pub fn dim(&self) -> usize {
        match self {
            Built::Radical { algebra, .. } => algebra.dim(),
            Built::Q { algebra, .. } => algebra.dim(),
        }
    }

    pub fn labels(&self) -> &[String] {
        match self {
            Built::Radical { algebra, .. } => algebra.labels(),
            Built::Q { algebra, .. } => algebra.labels(),
        }
    }

    pub fn table(&self) -> String {
        match self {
            Built::Radical { algebra, .. } => algebra.to_string(),
            Built::Q { algebra, .. } => algebra.to_string(),
        }
    }

    pub fn to_json(&self, c: Construction) -> BuiltJson {
        let (algebra, form) = match self {
            Built::Radical { algebra, form } => (AlgebraJson::from(algebra), form.as_ref().map(FormJson::from)),
            Built::Q { algebra, form } => (AlgebraJson::from(algebra), form.as_ref().map(FormJson::from)),
        };
        BuiltJson {
            construction: c.name().to_string(),
            algebra,
            form,
        }
    }

    /// A copy with one structure constant shifted, chosen from `seed`.
    pub fn perturbed(&self, seed: u64) -> Self {
        match self {
            Built::Radical { algebra, form } => Built::Radical {
                algebra: algebra.perturbed(seed),
                form: form.clone(),
            },
            Built::Q { algebra, form } => Built::Q {
                algebra: algebra.perturbed(seed),
                form: form.clone(),
            },
        }
    }
}

/// Builds a construction at normalization `b`; constructions with a fixed
/// normalization ignore it.
pub fn build(c: Construction, b: &Radical) -> Result<Built> {
    let spin = |j| -> Result<Built> {
        let (algebra, form) = build_spin_algebra(&SpinAlgebraSpec::new(j, b.clone()))?;
        Ok(Built::Radical {
            algebra,
            form: Some(form),
        })
    };
    match c {
        Construction::Spin1 => spin(1),
        Construction::Spin2 => spin(2),
        Construction::Spin3 => spin(3),
        Construction::Quaternion => {
            let ext = spin1_quaternion_extension(b)?;
            match (ext.algebra, ext.norm) {
                (Some(algebra), Some(norm)) => Ok(Built::Radical {
                    algebra,
                    form: Some(norm),
                }),
                _ => Err(Error::Inconsistent(format!(
                    "no associative unital extension at b = {b}"
                ))),
            }
        }
        Construction::Octonion => {
            let (algebra, _) = build_octonion_cartesian()?;
            let form = euclidean(algebra.dim());
            Ok(Built::Radical {
                algebra,
                form: Some(form),
            })
        }
        Construction::Osp12 => Ok(Built::Radical {
            algebra: build_osp12_cartesian(&osp_coupling()),
            form: Some(osp_form()),
        }),
        Construction::SuperQuaternion => Ok(Built::Radical {
            algebra: build_super_quaternion(),
            form: None,
        }),
        Construction::SuperOctonion => {
            let (algebra, _) = build_super_octonion(&Radical::one(), &Radical::one())?;
            Ok(Built::Radical { algebra, form: None })
        }
        Construction::QSpin1 => {
            let q = build_q_algebra(&QRadical::one());
            Ok(Built::Q {
                algebra: q.algebra,
                form: Some(q.form),
            })
        }
        Construction::QQuaternion => Ok(Built::Q {
            algebra: build_quantum_quaternion(),
            form: None,
        }),
    }
}

fn euclidean(n: usize) -> BilinearForm<Radical> {
    BilinearForm::from_fn(n, |a, b| if a == b { Radical::one() } else { Radical::zero() })
}

fn prefixed(prefix: &str, r: IdentityReport) -> IdentityReport {
    let name = format!("{prefix}_{}", r.name);
    r.named(name)
}

/// A failed precondition, reported as a failing check.
fn error_report(name: &str, e: &Error) -> IdentityReport {
    let witness = match e {
        Error::NotAnticommutative(a, b) => Some(Witness {
            indices: vec![*a, *b],
            labels: vec![a.to_string(), b.to_string()],
            residual: "x y + y x != 0".into(),
        }),
        _ => None,
    };
    match witness {
        Some(w) => IdentityReport::new(name, 1, Some(w)).with_detail(e.to_string()),
        None => IdentityReport::from_bool(name, false, e.to_string()),
    }
}

fn or_fail(name: &str, r: Result<IdentityReport>) -> IdentityReport {
    r.unwrap_or_else(|e| error_report(name, &e))
}

fn with_labels(mut r: IdentityReport, labels: &[String]) -> IdentityReport {
    if let Some(w) = &mut r.witness {
        if w.labels.iter().zip(&w.indices).all(|(l, i)| *l == i.to_string()) {
            w.labels = w
                .indices
                .iter()
                .map(|i| labels.get(*i).cloned().unwrap_or_else(|| i.to_string()))
                .collect();
        }
    }
    r
}

fn require_form<S>(c: Construction, form: &Option<BilinearForm<S>>) -> Result<&BilinearForm<S>> {
    form.as_ref()
        .ok_or_else(|| Error::Unsupported(format!("{c} needs its bilinear form")))
}

/// The checks of one construction on the given algebra. `b` is the
/// normalization it was built with.
pub fn battery(c: Construction, built: &Built, b: &Radical) -> Result<Vec<IdentityReport>> {
    let reports = match (c, built) {
        (Construction::Spin1, Built::Radical { algebra, form }) => {
            let form = require_form(c, form)?;
            let mut out = vec![
                check_commutation_sign(algebra, 1).named("spin1_anticommutative"),
                check_jacobi(algebra).named("spin1_jacobi"),
                or_fail(
                    "spin1_triple_product",
                    check_cg_family(algebra, form, &Radical::ratio(1, 2), b, CgIdentityShape::SpinOneTriple),
                ),
            ];
            if !b.is_zero() {
                out.push(or_fail("su2_brackets", su2_isomorphism_check(algebra, b)));
            }
            out
        }
        (Construction::Spin2, Built::Radical { algebra, form }) => {
            let form = require_form(c, form)?;
            let k = Radical::ratio(2, 7) * b.clone() * b.clone();
            let unital = crate::algebra::adjoin_unit(
                algebra,
                form,
                &(Radical::ratio(4, 7) * b.clone() * b.clone()),
                &Radical::one(),
            );
            vec![
                check_commutation_sign(algebra, 0).named("spin2_commutative"),
                or_fail(
                    "spin2_cyclic_product",
                    check_cg_family(algebra, form, &Radical::ratio(2, 7), b, CgIdentityShape::SpinTwoCyclic),
                ),
                check_cubic(algebra, form, &k).named("spin2_cubic"),
                jordan_check(&unital).named("spin2_unital_jordan").informational(),
            ]
        }
        (Construction::Spin3, Built::Radical { algebra, form }) => {
            let form = require_form(c, form)?;
            vec![
                check_commutation_sign(algebra, 1).named("spin3_anticommutative"),
                or_fail(
                    "spin3_symmetrized_product",
                    check_cg_family(
                        algebra,
                        form,
                        &Radical::ratio(1, 6),
                        b,
                        CgIdentityShape::SpinThreeSymmetric,
                    ),
                ),
                or_fail("spin3_malcev", check_malcev(algebra).map(|r| r.named("spin3_malcev"))),
                check_jacobi(algebra).named("spin3_jacobi").expect_fail(),
            ]
        }
        (Construction::Quaternion, Built::Radical { algebra, form }) => {
            let norm = require_form(c, form)?;
            vec![
                check_associativity(algebra).named("quaternion_associativity"),
                check_composition(algebra, norm).named("quaternion_composition"),
            ]
        }
        (Construction::Octonion, Built::Radical { algebra, form }) => {
            let norm = require_form(c, form)?;
            vec![
                check_alternative(algebra).named("octonion_alternative"),
                check_composition(algebra, norm).named("octonion_composition"),
                check_associativity(algebra)
                    .named("octonion_associativity")
                    .expect_fail(),
            ]
        }
        (Construction::Osp12, Built::Radical { algebra, .. }) => {
            let mut out = vec![
                check_super_anticommutativity(algebra).named("osp12_graded_commutation"),
                check_super_jacobi(algebra).named("osp12_super_jacobi"),
                or_fail("osp_relabeling", relabel_to_osp(algebra)),
            ];
            out.extend(check_osp_form(algebra));
            out
        }
        (Construction::SuperQuaternion, Built::Radical { algebra, .. }) => check_super_quaternion(algebra)?,
        (Construction::SuperOctonion, Built::Radical { algebra, .. }) => super_octonion_battery(algebra)?,
        (Construction::QSpin1, Built::Q { algebra, form }) => {
            let form = require_form(c, form)?;
            let q = QAlgebra {
                beta: QRadical::one(),
                algebra: algebra.clone(),
                form: form.clone(),
                involution: q_involution(),
            };
            let v = rep_generators(HalfInt::int(1))?;
            let vv = v.coproduct(&v);
            let mut out = verify_q_identities(&q);
            out.push(check_palindromic(algebra, &q.involution)?.named("q_palindromic"));
            out.push(check_covariance(&product_matrix(algebra), &v, &vv));
            out.push(check_q_classical_limit(&q)?);
            out
        }
        (Construction::QQuaternion, Built::Q { algebra, .. }) => {
            let (quadratic, data) = quadratic_certificate(algebra);
            vec![
                check_associativity(algebra).named("quantum_quaternion_associative"),
                quadratic.named("quantum_quaternion_quadratic"),
                match data {
                    Some(d) => check_composition(algebra, &d.norm).named("quantum_quaternion_composition"),
                    None => IdentityReport::from_bool("quantum_quaternion_composition", false, "no norm form"),
                },
            ]
        }
        _ => return Err(Error::Unsupported(format!("{c} built over the wrong scalar ring"))),
    };
    Ok(reports.into_iter().map(|r| with_labels(r, built.labels())).collect())
}

/// The bosonic block is the spin-3 algebra, the whole algebra is graded
/// (anti)commutative, and the graded identities are informational.
fn super_octonion_battery(alg: &StructureAlgebra<Radical>) -> Result<Vec<IdentityReport>> {
    let bosonic = alg.restrict(&(0..7).collect::<Vec<_>>())?;
    let (spin3, _) = build_spin_algebra(&SpinAlgebraSpec::new(3, Radical::one()))?;
    let mut out = vec![
        IdentityReport::from_bool(
            "super_octonion_bosonic_block_is_spin3",
            bosonic.constants() == spin3.constants(),
            "",
        ),
        check_super_anticommutativity(alg).named("super_octonion_graded_commutation"),
        or_fail(
            "super_octonion_bosonic_malcev",
            check_malcev(&bosonic).map(|r| r.named("super_octonion_bosonic_malcev")),
        ),
        check_super_jacobi(alg)
            .named("super_octonion_super_jacobi")
            .informational(),
    ];
    out.extend(
        crate::algebra::identities::check_flexible_lie_admissible(alg)
            .into_iter()
            .map(|r| {
                let name = format!("super_octonion_{}", r.name);
                r.named(name).informational()
            }),
    );
    Ok(out)
}

/// Options of a suite run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOptions {
    pub b: Radical,
    pub t_samples: usize,
    pub seed: u64,
    pub fuzz: Option<u64>,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            b: Radical::one(),
            t_samples: 5,
            seed: 1,
            fuzz: None,
        }
    }
}

/// Results of one construction or suite-level group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub name: String,
    pub reports: Vec<IdentityReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fuzz_seed: Option<u64>,
    pub sections: Vec<Section>,
}

impl SuiteReport {
    pub fn reports(&self) -> impl Iterator<Item = &IdentityReport> {
        self.sections.iter().flat_map(|s| s.reports.iter())
    }

    pub fn passed(&self) -> bool {
        self.reports().all(IdentityReport::passed)
    }

    pub fn count(&self, status: Status) -> usize {
        self.reports().filter(|r| r.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityReport> {
        self.reports().filter(|r| !r.passed())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sections {
            writeln!(f, "[{}]", s.name)?;
            for r in &s.reports {
                writeln!(f, "  {r}")?;
            }
        }
        write!(
            f,
            "{} checks: {} pass, {} fail, {} info",
            self.reports().count(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Info)
        )
    }
}

/// Builds and checks one construction, perturbed first in fuzz mode.
pub fn run_construction(c: Construction, opts: &RunOptions) -> Result<Section> {
    let built = build(c, &opts.b)?;
    let built = match opts.fuzz {
        Some(seed) => built.perturbed(seed),
        None => built,
    };
    Ok(Section {
        name: c.name().to_string(),
        reports: battery(c, &built, &opts.b)?,
    })
}

/// Checks of a suite that go beyond single constructions.
pub fn suite_extras(suite: Suite, opts: &RunOptions) -> Result<Vec<Section>> {
    Ok(match suite {
        Suite::Classical => classical_extras()?,
        Suite::Super => super_extras()?,
        Suite::Quantum => quantum_extras(opts)?,
        Suite::All => {
            let mut out = classical_extras()?;
            out.extend(super_extras()?);
            out.extend(quantum_extras(opts)?);
            out
        }
    })
}

fn classical_extras() -> Result<Vec<Section>> {
    let mut units = Vec::new();
    for b in [Radical::one(), Radical::from_i64(2), Radical::ratio(1, 3)] {
        let ext = spin1_quaternion_extension(&b)?;
        let expected = -(Radical::ratio(1, 2) * b.clone() * b.clone());
        let found = ext
            .unit_coefficient
            .as_ref()
            .map_or("none".to_string(), ToString::to_string);
        units.push(IdentityReport::from_bool(
            format!("spin1_unit_coefficient_b={b}"),
            ext.unit_coefficient.as_ref() == Some(&expected),
            format!("a = {found}, expected {expected}"),
        ));
        units.push(ext.report(&format!("spin1_unital_extension_b={b}")));
    }
    let derivation = derive_octonion_structure(&crate::classical::cartesian::octonion_tensor_normalization())?;
    let octonion = derivation
        .reports
        .into_iter()
        .map(|r| prefixed("octonion", r))
        .collect();
    let mut bridge = Vec::new();
    for b in [Radical::one(), Radical::from_i64(2)] {
        let ext = spin3_octonion_bridge(&b)?;
        let expected = -(Radical::ratio(1, 6) * b.clone() * b.clone());
        bridge.push(IdentityReport::from_bool(
            format!("spin3_unit_coefficient_b={b}"),
            ext.extension.unit_coefficient.as_ref() == Some(&expected),
            format!("expected {expected}"),
        ));
        bridge.push(ext.report().named(format!("spin3_octonion_bridge_b={b}")));
    }
    Ok(vec![
        Section {
            name: "spin1 unit adjunction".into(),
            reports: units,
        },
        Section {
            name: "octonion derivation".into(),
            reports: octonion,
        },
        Section {
            name: "spin3 octonion bridge".into(),
            reports: bridge,
        },
    ])
}

fn super_extras() -> Result<Vec<Section>> {
    let expected = Radical::sqrt_int(6) * Radical::ratio(1, 4);
    let solved = solve_super_cg_ratio();
    let mut reports = vec![IdentityReport::from_bool(
        "super_cg_mixed_coupling",
        solved.as_ref() == Some(&expected),
        format!(
            "a = {}",
            solved.as_ref().map_or("none".to_string(), ToString::to_string)
        ),
    )];
    reports.push(
        check_super_jacobi(&build_osp12_cartesian(&Radical::one()))
            .named("osp12_super_jacobi_at_coupling_1")
            .expect_fail(),
    );
    if let Some(a) = &solved {
        reports.push(check_spherical_cartesian_isomorphism(a));
    }
    let (_, reports_so) = build_super_octonion(&Radical::one(), &Radical::one())?;
    let octonion = reports_so
        .into_iter()
        .filter(|r| r.name == "super_octonion_bosonic_octonion")
        .collect();
    Ok(vec![
        Section {
            name: "osp(1,2) couplings".into(),
            reports,
        },
        Section {
            name: "super octonion".into(),
            reports: octonion,
        },
    ])
}

fn quantum_extras(opts: &RunOptions) -> Result<Vec<Section>> {
    let mut reps = Vec::new();
    for twice in [1, 2, 3, 4, 6] {
        let j = HalfInt::from_twice(twice);
        reps.push(verify_suq2_relations(j)?);
        reps.push(verify_classical_limit(j)?);
    }
    for (a, b) in [(1, 1), (1, 2), (2, 2)] {
        reps.push(verify_coproduct(HalfInt::from_twice(a), HalfInt::from_twice(b))?);
    }
    let derivation = derive_q_cg_spin1()?;
    let mut algebra = derivation.reports.clone();
    algebra.push(IdentityReport::from_bool("q_cg_beta", true, format!("beta = {}", derivation.beta)).informational());
    algebra.push(check_q_classical_limit(&build_q_algebra(&derivation.beta))?.named("q_cg_classical_limit"));
    algebra.extend(check_quantum_quaternion()?);
    let mut out = vec![
        Section {
            name: "su_q(2) representations".into(),
            reports: reps,
        },
        Section {
            name: "hopf structure".into(),
            reports: verify_hopf_axioms()?,
        },
        Section {
            name: "q-algebra derivation".into(),
            reports: algebra,
        },
    ];
    if opts.t_samples > 0 {
        out.push(Section {
            name: "t sampling".into(),
            reports: t_sample_check(opts.t_samples, opts.seed)?,
        });
    }
    Ok(out)
}

/// Runs a whole suite, or only `construction` when given. In fuzz mode only
/// the construction batteries run, on perturbed constants.
pub fn run_suite(suite: Suite, construction: Option<Construction>, opts: &RunOptions) -> Result<SuiteReport> {
    let constructions = match construction {
        Some(c) if !suite.contains(c) => {
            return Err(Error::Unsupported(format!("{c} is not part of the {suite} suite")));
        }
        Some(c) => vec![c],
        None => suite.constructions(),
    };
    let mut sections = constructions
        .into_iter()
        .map(|c| run_construction(c, opts))
        .collect::<Result<Vec<_>>>()?;
    if construction.is_none() && opts.fuzz.is_none() {
        sections.extend(suite_extras(suite, opts)?);
    }
    Ok(SuiteReport {
        suite,
        fuzz_seed: opts.fuzz,
        sections,
    })
}
