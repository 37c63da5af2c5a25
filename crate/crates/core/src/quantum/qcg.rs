//! The spin-1 product of su_q(2) derived from the decomposition of
//! `V_1 (x) V_1`: the spin-1 submodule is generated from its highest weight
//! vector, and `x_m1 . x_m2` is the spin-1 component of `x_m1 (x) x_m2`.
//!
//! Every linear solve happens inside a single weight space, where all entries
//! are rational functions times a common power of `sqrt([2])`, so pivots are
//! always invertible single terms.

use num_traits::{One, Zero};

use super::qalgebra::{q_form, q_index, q_table, Q_LABELS};
use super::rep::{matrix_report, rep_generators, SuqGenerators};
use crate::algebra::{Element, IdentityReport, StructureAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::QRadical;
use crate::wigner::HalfInt;

/// Index of `x_m1 (x) x_m2` in `V_1 (x) V_1`.
fn pair(m1: i64, m2: i64) -> usize {
    3 * q_index(m1) + q_index(m2)
}

/// Pair indices of total weight `weight`, ordered by the first factor.
fn weight_space(weight: i64) -> Vec<usize> {
    (-1..=1)
        .rev()
        .filter_map(|m1| {
            let m2 = weight - m1;
            (-1..=1).contains(&m2).then(|| pair(m1, m2))
        })
        .collect()
}

/// Kernel of `op` restricted to the weight space `weight`, required to be one
/// dimensional; the result is a vector on the full space.
fn weight_kernel(op: &Matrix<QRadical>, weight: i64) -> Result<Vec<QRadical>> {
    let cols = weight_space(weight);
    let restricted = Matrix::from_fn(op.rows(), cols.len(), |r, c| op.get(r, cols[c]).clone());
    let kernel = restricted.nullspace()?;
    if kernel.len() != 1 {
        return Err(Error::Inconsistent(format!(
            "raising operator has a {}-dimensional kernel at weight {weight}",
            kernel.len()
        )));
    }
    let mut v = vec![QRadical::zero(); op.rows()];
    for (c, x) in cols.iter().zip(&kernel[0]) {
        v[*c] = x.clone();
    }
    Ok(v)
}

fn is_zero_vector(v: &[QRadical]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// The table found by the derivation, with the data behind it.
#[derive(Clone, Debug)]
pub struct QCgDerivation {
    /// Derived product on `x+, x0, x-`.
    pub algebra: StructureAlgebra<QRadical>,
    /// Ratio of the derived table to the reference table at `beta = 1`.
    pub beta: QRadical,
    /// Components of the invariant vector along `x+ (x) x-`, `x0 (x) x0`,
    /// `x- (x) x+`.
    pub singlet: [QRadical; 3],
    /// The product as a 3 x 9 matrix from `V_1 (x) V_1` to `V_1`.
    pub product_map: Matrix<QRadical>,
    pub reports: Vec<IdentityReport>,
}

impl QCgDerivation {
    pub fn report(&self) -> IdentityReport {
        IdentityReport::all_passed("q_cg_derivation", self.reports.clone())
    }
}

/// `g m = m Delta(g)` for `H`, `J+`, `J-`, with `m` the product map.
pub fn check_covariance(product_map: &Matrix<QRadical>, v: &SuqGenerators, vv: &SuqGenerators) -> IdentityReport {
    matrix_report(
        "q_cg_covariance",
        &[
            ("H".into(), v.h.mul(product_map).sub(&product_map.mul(&vv.h))),
            ("J+".into(), v.jp.mul(product_map).sub(&product_map.mul(&vv.jp))),
            ("J-".into(), v.jm.mul(product_map).sub(&product_map.mul(&vv.jm))),
        ],
    )
}

/// The 3 x 9 matrix of a product on `V_1`.
pub fn product_matrix(alg: &StructureAlgebra<QRadical>) -> Matrix<QRadical> {
    Matrix::from_fn(3, 9, |c, k| alg.constant(k / 3, k % 3, c))
}

pub fn derive_q_cg_spin1() -> Result<QCgDerivation> {
    let v = rep_generators(HalfInt::int(1))?;
    let vv = v.coproduct(&v);
    // J- x_1 = sqrt([2]) x_0
    let lowering = v.jm.get(q_index(0), q_index(1)).clone();
    let inv_lowering = lowering.inverse().ok_or(Error::DivisionByZero)?;

    // spin-1 submodule: highest weight vector, lowered with the same
    // normalization as x_1 -> x_0 -> x_-1
    let top = weight_kernel(&vv.jp, 1)?;
    let mid: Vec<QRadical> = vv
        .jm
        .apply(&top)
        .into_iter()
        .map(|x| x * inv_lowering.clone())
        .collect();
    let low: Vec<QRadical> = vv
        .jm
        .apply(&mid)
        .into_iter()
        .map(|x| x * inv_lowering.clone())
        .collect();
    let spin_one = [top, mid, low];
    // spin-2 submodule from x_1 (x) x_1, spin-0 from the weight-0 kernel
    let mut spin_two = vec![Element::<QRadical>::basis(pair(1, 1)).to_dense(9)];
    for _ in 0..4 {
        let next = vv.jm.apply(spin_two.last().expect("nonempty"));
        spin_two.push(next);
    }
    let singlet = weight_kernel(&vv.jp, 0)?;

    let mut checks = vec![
        IdentityReport::from_bool("q_cg_highest_weight", is_zero_vector(&vv.jp.apply(&spin_one[0])), ""),
        IdentityReport::from_bool("q_cg_lowest_weight", is_zero_vector(&vv.jm.apply(&spin_one[2])), ""),
        IdentityReport::from_bool("q_cg_singlet_invariant", is_zero_vector(&vv.jm.apply(&singlet)), ""),
    ];

    // columns: spin 2 (5), spin 1 (3), spin 0 (1)
    let columns: Vec<&Vec<QRadical>> = spin_two
        .iter()
        .chain(spin_one.iter())
        .chain(std::iter::once(&singlet))
        .collect();
    let basis = Matrix::from_fn(9, 9, |r, c| columns[c][r].clone());
    let mut alg = StructureAlgebra::new(Q_LABELS);
    for k in 0..9 {
        let coords = basis
            .solve(&Element::<QRadical>::basis(k).to_dense(9))?
            .ok_or_else(|| Error::Inconsistent("submodules do not span the tensor square".into()))?;
        for (i, c) in coords[5..8].iter().enumerate() {
            alg.add_constant(k / 3, k % 3, i, c.clone());
        }
    }

    let (p, z, m) = (q_index(1), q_index(0), q_index(-1));
    let beta = alg.constant(p, m, z);
    let reference = q_table(&QRadical::one()).rescaled(&beta);
    let proportional = alg.constants() == reference.constants() && !beta.is_zero();
    checks.push(IdentityReport::from_bool(
        "q_cg_table_proportional",
        proportional,
        format!("beta = {beta}"),
    ));
    let product_map = product_matrix(&alg);
    checks.push(check_covariance(&product_map, &v, &vv));

    let singlet = [
        singlet[pair(1, -1)].clone(),
        singlet[pair(0, 0)].clone(),
        singlet[pair(-1, 1)].clone(),
    ];
    checks.push(check_form_matches_singlet(&singlet));
    Ok(QCgDerivation {
        algebra: alg,
        beta,
        singlet,
        product_map,
        reports: checks,
    })
}

/// `B(x_m, x_-m)` is one constant times the invariant vector's component along
/// `x_m (x) x_-m`, and `B` vanishes off the antidiagonal.
pub fn check_form_matches_singlet(singlet: &[QRadical; 3]) -> IdentityReport {
    let form = q_form();
    let name = "q_form_singlet_proportional";
    let Some(inv) = singlet[1].inverse() else {
        return IdentityReport::from_bool(name, false, "invariant vector has no x0 (x) x0 component");
    };
    let kappa = form.entry(q_index(0), q_index(0)).clone() * inv;
    let mut residuals = Vec::new();
    for m1 in [1, 0, -1] {
        for m2 in [1, 0, -1] {
            let expected = if m1 + m2 == 0 {
                kappa.clone() * singlet[q_index(m1)].clone()
            } else {
                QRadical::zero()
            };
            let mut r = Matrix::zeros(1, 1);
            r.set(0, 0, form.entry(q_index(m1), q_index(m2)).clone() - expected);
            residuals.push((format!("B(x{m1}, x{m2})"), r));
        }
    }
    matrix_report(name, &residuals).with_detail(format!("constant = {kappa}"))
}
