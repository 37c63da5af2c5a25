//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! with its timing; the test fails if any criterion does.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};

use cgalg::algebra::identities::{
    cg_identity_sides, check_associativity, check_cg_family, check_commutation_sign, check_cubic, check_jacobi,
    check_malcev, check_super_jacobi, CgIdentityShape,
};
use cgalg::algebra::{check_composition, IdentityReport, Status};
use cgalg::classical::{
    build_octonion_cartesian, build_spin_algebra, spin1_quaternion_extension, su2_isomorphism_check, SpinAlgebraSpec,
};
use cgalg::quantum::{
    build_q_algebra, build_quantum_quaternion, check_quantum_quaternion, derive_q_cg_spin1, verify_classical_limit,
    verify_coproduct, verify_hopf_axioms, verify_q_identities, verify_suq2_relations,
};
use cgalg::superalg::{
    build_osp12_cartesian, build_super_quaternion, check_osp_form, check_super_quaternion, osp_coupling, relabel_to_osp,
};
use cgalg::wigner::{cg, CGKey, HalfInt};
use cgalg::{QRadical, Radical, Scalar};

type Criterion = (u32, &'static str, fn() -> Outcome, u64);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Every report passes; the detail names the first one that does not.
fn all_pass(reports: &[IdentityReport]) -> Outcome {
    match reports.iter().find(|r| r.status == Status::Fail) {
        Some(r) => outcome(false, r.to_string()),
        None => outcome(true, format!("{} checks", reports.len())),
    }
}

fn spin(j: i64, b: Radical) -> (cgalg::RadicalAlgebra, cgalg::RadicalForm) {
    build_spin_algebra(&SpinAlgebraSpec::new(j, b)).unwrap()
}

fn fails_with_witness(r: &IdentityReport) -> bool {
    !r.holds() && r.witness.is_some()
}

fn criterion_1() -> Outcome {
    let keys = common::all_keys();
    let mismatch = keys.iter().find(|k| {
        let racah = cg(&CGKey::twice(k[0], k[1], k[2], k[3], k[4], k[5])).unwrap();
        racah != common::oracle_cg(k[0], k[1], k[2], k[3], k[4], k[5])
    });
    match mismatch {
        Some(k) => outcome(false, format!("mismatch at {k:?}")),
        None => outcome(true, format!("{} coefficients", keys.len())),
    }
}

fn criterion_2() -> Outcome {
    let mut details = Vec::new();
    for (shape, k, triples) in [
        (CgIdentityShape::SpinOneTriple, Radical::ratio(1, 2), 27),
        (CgIdentityShape::SpinThreeSymmetric, Radical::ratio(1, 6), 343),
        (CgIdentityShape::SpinTwoCyclic, Radical::ratio(2, 7), 125),
    ] {
        let j = shape.spin();
        let mut count = 0;
        for m1 in -j..=j {
            for m2 in -j..=j {
                for m3 in -j..=j {
                    let (lhs, rhs) = cg_identity_sides(shape, &k, [m1, m2, m3]);
                    if lhs != rhs {
                        return outcome(false, format!("{} at ({m1}, {m2}, {m3})", shape.name()));
                    }
                    count += 1;
                }
            }
        }
        let (alg, form) = spin(j, Radical::one());
        let element_level = check_cg_family(&alg, &form, &k, &Radical::one(), shape).unwrap();
        if count != triples || !element_level.holds() {
            return outcome(false, element_level.to_string());
        }
        details.push(format!("{}: {count}", shape.name()));
    }
    outcome(true, details.join(", "))
}

fn criterion_3() -> Outcome {
    let b = Radical::one();
    let (alg, _) = spin(1, b.clone());
    all_pass(&[
        check_commutation_sign(&alg, 1),
        check_jacobi(&alg),
        su2_isomorphism_check(&alg, &b).unwrap(),
    ])
}

fn criterion_4() -> Outcome {
    for (p, q) in [(1, 1), (2, 1), (1, 3)] {
        let b = Radical::from_rational(BigRational::new(p.into(), q.into()));
        let ext = spin1_quaternion_extension(&b).unwrap();
        let expected = -(Radical::ratio(1, 2) * b.clone() * b.clone());
        if ext.unit_coefficient.as_ref() != Some(&expected) {
            return outcome(
                false,
                format!("b = {b}: got {:?}", ext.unit_coefficient.map(|a| a.to_string())),
            );
        }
        let (alg, norm) = (ext.algebra.unwrap(), ext.norm.unwrap());
        let assoc = check_associativity(&alg);
        if !assoc.holds() || assoc.checked != 64 || !check_composition(&alg, &norm).holds() {
            return outcome(false, format!("b = {b}: {assoc}"));
        }
    }
    outcome(true, "a = -b^2/2 for b in {1, 2, 1/3}")
}

fn criterion_5() -> Outcome {
    let (alg, form) = spin(3, Radical::one());
    let family = check_cg_family(
        &alg,
        &form,
        &Radical::ratio(1, 6),
        &Radical::one(),
        CgIdentityShape::SpinThreeSymmetric,
    )
    .unwrap();
    let malcev = check_malcev(&alg).unwrap();
    let jacobi = check_jacobi(&alg);
    let reproducible = jacobi == check_jacobi(&alg);
    let ok = family.holds()
        && malcev.holds()
        && malcev.checked == 7usize.pow(4)
        && fails_with_witness(&jacobi)
        && reproducible;
    outcome(
        ok,
        format!(
            "malcev {} quadruples; jacobi witness {}",
            malcev.checked,
            jacobi.witness.map(|w| w.to_string()).unwrap_or_default()
        ),
    )
}

fn criterion_6() -> Outcome {
    let (oct, f) = build_octonion_cartesian().unwrap();
    let entries_ok = (0..7).all(|a| (0..7).all(|b| (0..7).all(|c| [-1, 0, 1].contains(&f.get(a, b, c)))));
    let norm = cgalg::RadicalForm::from_fn(8, |a, b| if a == b { Radical::one() } else { Radical::zero() });
    let composition = check_composition(&oct, &norm);
    let assoc = check_associativity(&oct);
    outcome(
        f.is_totally_antisymmetric() && entries_ok && composition.holds() && fails_with_witness(&assoc),
        format!(
            "associativity witness {}",
            assoc.witness.map(|w| w.to_string()).unwrap_or_default()
        ),
    )
}

fn criterion_7() -> Outcome {
    for b in [Radical::one(), Radical::from_i64(2), Radical::ratio(1, 3)] {
        let (alg, form) = spin(2, b.clone());
        let k = Radical::ratio(2, 7) * b.clone() * b.clone();
        let r = check_cubic(&alg, &form, &k);
        if !r.holds() {
            return outcome(false, format!("b = {b}: {r}"));
        }
        // a different coefficient must fail
        if check_cubic(&alg, &form, &(k + Radical::ratio(1, 7))).holds() {
            return outcome(false, format!("b = {b}: cubic relation holds for a wrong coefficient"));
        }
    }
    outcome(true, "coefficient (2/7) b^2")
}

fn criterion_8() -> Outcome {
    let alg = build_osp12_cartesian(&osp_coupling());
    let good = check_super_jacobi(&alg);
    let bad = check_super_jacobi(&build_osp12_cartesian(&Radical::one()));
    let relabel = relabel_to_osp(&alg).unwrap();
    let mut reports = vec![good, relabel];
    reports.extend(check_osp_form(&alg));
    reports.extend(check_super_quaternion(&build_super_quaternion()).unwrap());
    if !fails_with_witness(&bad) {
        return outcome(false, format!("coupling 1: {bad}"));
    }
    all_pass(&reports)
}

fn criterion_9() -> Outcome {
    let mut reports = Vec::new();
    for twice in [1, 2, 3, 4, 6] {
        let j = HalfInt::from_twice(twice);
        reports.push(verify_suq2_relations(j).unwrap());
        reports.push(verify_classical_limit(j).unwrap());
    }
    for (a, b) in [(1, 1), (1, 2), (2, 2)] {
        reports.push(verify_coproduct(HalfInt::from_twice(a), HalfInt::from_twice(b)).unwrap());
    }
    reports.extend(verify_hopf_axioms().unwrap());
    all_pass(&reports)
}

fn criterion_10() -> Outcome {
    let d = derive_q_cg_spin1().unwrap();
    let wanted = ["q_cg_table_proportional", "q_cg_covariance"];
    let found: Vec<_> = d
        .reports
        .iter()
        .filter(|r| wanted.contains(&r.name.as_str()))
        .cloned()
        .collect();
    if found.len() != 2 {
        return outcome(false, "missing reports");
    }
    let mut o = all_pass(&found);
    o.detail = format!("beta = {}", d.beta);
    o
}

fn criterion_11() -> Outcome {
    let q = build_q_algebra(&QRadical::one());
    let reports = verify_q_identities(&q);
    let flexible = reports.iter().find(|r| r.name == "q_flexible").unwrap();
    if !fails_with_witness(flexible) {
        return outcome(false, flexible.to_string());
    }
    let assoc = check_associativity(&build_quantum_quaternion());
    if !assoc.holds() || assoc.checked != 64 {
        return outcome(false, assoc.to_string());
    }
    let quaternion = check_quantum_quaternion().unwrap();
    let t1: Vec<_> = quaternion
        .into_iter()
        .filter(|r| r.name.starts_with("quantum_quaternion_t1"))
        .collect();
    if t1.len() != 2 {
        return outcome(false, "missing t = 1 reports");
    }
    let mut all = reports;
    all.extend(t1);
    all_pass(&all)
}

fn criterion_12() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_cgalg");
    let start = Instant::now();
    let all = Command::new(bin).args(["verify", "--suite", "all"]).output().unwrap();
    let elapsed = start.elapsed();
    if all.status.code() != Some(0) || elapsed > Duration::from_secs(180) {
        return outcome(
            false,
            format!("verify --suite all: {:?} in {elapsed:?}", all.status.code()),
        );
    }
    for (c, suite) in [
        ("spin3", "classical"),
        ("quaternion", "classical"),
        ("osp12", "super"),
        ("q-spin1", "quantum"),
    ] {
        let o = Command::new(bin)
            .args(["verify", "--construction", c, "--suite", suite, "--fuzz", "5"])
            .output()
            .unwrap();
        let text = String::from_utf8_lossy(&o.stdout);
        if o.status.code() != Some(1) || !text.contains("witness ") {
            return outcome(false, format!("fuzzed {c}: exit {:?}", o.status.code()));
        }
    }
    outcome(
        true,
        format!("suite all in {:.1}s; fuzzed runs exit 1", elapsed.as_secs_f64()),
    )
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        (1, "CG kernel agrees with the tensor-product oracle", criterion_1, 5),
        (2, "coupling-coefficient identities for spins 1, 3, 2", criterion_2, 5),
        (3, "spin 1 is anticommutative, Lie, and su(2)", criterion_3, 0),
        (4, "spin-1 unit coefficient and quaternion certificate", criterion_4, 0),
        (5, "spin 3 is Malcev and not Lie", criterion_5, 30),
        (6, "Cartesian octonion table", criterion_6, 0),
        (7, "spin-2 cubic relation", criterion_7, 0),
        (8, "osp(1,2) and the super-quaternion", criterion_8, 0),
        (
            9,
            "su_q(2) relations, coproducts, Hopf maps, t = 1 limit",
            criterion_9,
            60,
        ),
        (10, "q-CG derivation up to one overall factor", criterion_10, 0),
        (11, "q-algebra identities and the quantum quaternion", criterion_11, 0),
        (12, "end-to-end CLI", criterion_12, 180),
    ];
    let mut failed = Vec::new();
    for (n, name, run, limit) in criteria {
        let start = Instant::now();
        let mut o = run();
        let elapsed = start.elapsed();
        if limit > 0 && elapsed > Duration::from_secs(limit) {
            o.ok = false;
            o.detail = format!("{} (over the {limit}s limit)", o.detail);
        }
        let status = if o.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {n:>2} {status} [{:>7.2}s] {name}: {}",
            elapsed.as_secs_f64(),
            o.detail
        );
        if !o.ok {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
