//! Cartesian realizations: vectors give the quaternions, totally symmetric
//! traceless rank-3 tensors give the octonions.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::identities::sweep;
use crate::algebra::{Element, IdentityReport, StructureAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Radical, Scalar};

fn levi_civita(a: usize, b: usize, c: usize) -> i64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

/// Unital algebra on `e0, phi1, phi2, phi3` with
/// `phi_mu * phi_nu = -delta(mu,nu) e0 + eps(mu,nu,la) phi_la`.
pub fn build_quaternion<S: Scalar>() -> StructureAlgebra<S> {
    let mut q = StructureAlgebra::new(["e0", "phi1", "phi2", "phi3"]);
    q.add_constant(0, 0, 0, S::one());
    for mu in 0..3 {
        q.add_constant(0, mu + 1, mu + 1, S::one());
        q.add_constant(mu + 1, 0, mu + 1, S::one());
        q.add_constant(mu + 1, mu + 1, 0, -S::one());
        for nu in 0..3 {
            for la in 0..3 {
                let e = levi_civita(mu, nu, la);
                if e != 0 {
                    q.add_constant(mu + 1, nu + 1, la + 1, S::from_i64(e));
                }
            }
        }
    }
    q
}

type Index3 = [usize; 3];

fn flat(i: Index3) -> usize {
    9 * i[0] + 3 * i[1] + i[2]
}

fn all_indices() -> impl Iterator<Item = Index3> {
    (0..27).map(|k| [k / 9, (k / 3) % 3, k % 3])
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn permute(i: Index3, p: [usize; 3]) -> Index3 {
    [i[p[0]], i[p[1]], i[p[2]]]
}

/// A rank-3 tensor over three dimensions. Values built through [`Self::symbol`]
/// or the product are totally symmetric and trace-free. Indices are 0-based in
/// code and printed 1-based, so `phi_123` is `[0, 1, 2]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymTracelessTensor<S> {
    components: Vec<S>,
}

impl<S: Scalar> SymTracelessTensor<S> {
    pub fn zero() -> Self {
        Self {
            components: vec![S::zero(); 27],
        }
    }

    /// The basis symbol `phi_{mu nu la}`: the symmetric traceless part of
    /// the unit tensor at `(mu, nu, la)`.
    pub fn symbol(i: Index3) -> Self {
        let mut raw = Self::zero();
        raw.components[flat(i)] = S::one();
        raw.project()
    }

    pub fn get(&self, i: Index3) -> &S {
        &self.components[flat(i)]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            components: self.components.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        all_indices().all(|i| PERMUTATIONS.iter().all(|p| self.get(permute(i, *p)) == self.get(i)))
    }

    pub fn is_traceless(&self) -> bool {
        (0..3).all(|c| {
            (0..3)
                .map(|a| self.get([a, a, c]).clone())
                .fold(S::zero(), |x, y| x + y)
                .is_zero()
        })
    }

    /// Symmetrizes and removes all traces.
    pub fn project(&self) -> Self {
        let sixth = S::ratio(1, 6);
        let sym: Vec<S> = all_indices()
            .map(|i| {
                PERMUTATIONS
                    .iter()
                    .map(|p| self.get(permute(i, *p)).clone())
                    .fold(S::zero(), |x, y| x + y)
                    * sixth.clone()
            })
            .collect();
        let trace: Vec<S> = (0..3)
            .map(|c| {
                (0..3)
                    .map(|a| sym[flat([a, a, c])].clone())
                    .fold(S::zero(), |x, y| x + y)
            })
            .collect();
        let fifth = S::ratio(1, 5);
        let components = all_indices()
            .map(|[a, b, c]| {
                let mut correction = S::zero();
                for (d, t) in [(delta(a, b), c), (delta(b, c), a), (delta(a, c), b)] {
                    if d != 0 {
                        correction = correction + trace[t].clone();
                    }
                }
                sym[flat([a, b, c])].clone() - fifth.clone() * correction
            })
            .collect();
        Self { components }
    }

    /// Product of two basis symbols: `b/36` times the sum over both index
    /// permutations and `tau` of
    /// `d(mu,al) eps(nu,be,tau) phi_{la ga tau} - (1/5) d(mu,nu) eps(la,be,tau) phi_{al ga tau}
    ///  + (1/5) d(al,be) eps(ga,nu,tau) phi_{mu la tau}`.
    pub fn symbol_product(p: Index3, q: Index3, b: &S) -> Self {
        // accumulate 5x the raw coefficients as integers, then project once
        let mut raw = [0i64; 27];
        for pp in PERMUTATIONS {
            let [mu, nu, la] = permute(p, pp);
            for qq in PERMUTATIONS {
                let [al, be, ga] = permute(q, qq);
                for tau in 0..3 {
                    raw[flat([la, ga, tau])] += 5 * delta(mu, al) * levi_civita(nu, be, tau);
                    raw[flat([al, ga, tau])] -= delta(mu, nu) * levi_civita(la, be, tau);
                    raw[flat([mu, la, tau])] += delta(al, be) * levi_civita(ga, nu, tau);
                }
            }
        }
        let scale = b.clone() * S::ratio(1, 180);
        let raw = Self {
            components: raw.iter().map(|k| S::from_i64(*k) * scale.clone()).collect(),
        };
        raw.project()
    }

    /// Bilinear extension of [`Self::symbol_product`], writing each factor
    /// as `sum_k x_k phi_k`.
    pub fn product(&self, other: &Self, b: &S) -> Self {
        let mut out = Self::zero();
        for i in all_indices() {
            let x = self.get(i);
            if x.is_zero() {
                continue;
            }
            for k in all_indices() {
                let y = other.get(k);
                if !y.is_zero() {
                    out = out.add(&Self::symbol_product(i, k, b).scale(&(x.clone() * y.clone())));
                }
            }
        }
        out
    }
}

impl<S: Scalar> fmt::Display for SymTracelessTensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = all_indices()
            .filter(|i| !self.get(*i).is_zero())
            .map(|i| format!("({})*t{}{}{}", self.get(i), i[0] + 1, i[1] + 1, i[2] + 1))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// A basis vector given as a combination of symbols `phi_{mu nu la}`.
pub type SymbolCombination = Vec<(Radical, Index3)>;

/// The seven imaginary octonion units as symmetric traceless tensors.
pub fn octonion_generators() -> Vec<SymbolCombination> {
    let r = |p: i64, q: i64| Radical::sqrt_rational(&num_rational::BigRational::new(p.into(), q.into()));
    let i1 = |a: usize, b: usize, c: usize| [a - 1, b - 1, c - 1];
    vec![
        vec![(-r(3, 2), i1(2, 3, 3))],
        vec![(Radical::from_i64(2) * r(3, 5), i1(1, 2, 3))],
        vec![(r(1, 10), i1(2, 2, 2)), (Radical::from_i64(-3) * r(1, 10), i1(1, 1, 2))],
        vec![(r(3, 2), i1(1, 3, 3))],
        vec![(-r(3, 5), i1(3, 1, 1)), (r(3, 5), i1(3, 2, 2))],
        vec![(-r(1, 10), i1(1, 1, 1)), (Radical::from_i64(3) * r(1, 10), i1(1, 2, 2))],
        vec![(Radical::one(), i1(3, 3, 3))],
    ]
}

fn as_tensor(c: &SymbolCombination) -> SymTracelessTensor<Radical> {
    c.iter().fold(SymTracelessTensor::zero(), |acc, (k, i)| {
        acc.add(&SymTracelessTensor::symbol(*i).scale(k))
    })
}

fn combination_product(x: &SymbolCombination, y: &SymbolCombination, b: &Radical) -> SymTracelessTensor<Radical> {
    let mut out = SymTracelessTensor::zero();
    for (cx, ix) in x {
        for (cy, iy) in y {
            out = out.add(&SymTracelessTensor::symbol_product(*ix, *iy, b).scale(&(cx.clone() * cy.clone())));
        }
    }
    out
}

/// Coordinates of a tensor in the given basis, or `None` outside the span.
fn coordinates(basis: &Matrix<Radical>, v: &SymTracelessTensor<Radical>) -> Result<Option<Vec<Radical>>> {
    basis.solve(&v.components)
}

/// Structure constants `f_ABC` of the seven imaginary units, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTable {
    entries: [[[i8; 7]; 7]; 7],
}

impl FTable {
    pub fn get(&self, a: usize, b: usize, c: usize) -> i8 {
        self.entries[a][b][c]
    }

    pub fn is_totally_antisymmetric(&self) -> bool {
        (0..343).all(|k| {
            let (a, b, c) = (k / 49, (k / 7) % 7, k % 7);
            let f = self.get(a, b, c);
            f == -self.get(b, a, c) && f == -self.get(a, c, b) && f == self.get(b, c, a)
        })
    }

    /// Triples `A < B < C` (1-based) with `f_ABC = 1`, after possibly swapping
    /// to make the sign positive.
    pub fn oriented_triples(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..7 {
            for b in a + 1..7 {
                for c in b + 1..7 {
                    match self.get(a, b, c) {
                        1 => out.push([a + 1, b + 1, c + 1]),
                        -1 => out.push([a + 1, c + 1, b + 1]),
                        _ => {}
                    }
                }
            }
        }
        out
    }
}

/// Seven-dimensional algebra `e_A . e_B = f_ABC e_C`.
pub fn imaginary_octonions<S: Scalar>(f: &FTable) -> StructureAlgebra<S> {
    let mut alg = StructureAlgebra::new((1..=7).map(|a| format!("e{a}")));
    for a in 0..7 {
        for b in 0..7 {
            for c in 0..7 {
                let v = f.get(a, b, c);
                if v != 0 {
                    alg.add_constant(a, b, c, S::from_i64(v.into()));
                }
            }
        }
    }
    alg
}

/// Unital algebra `e_A * e_B = -delta_AB e0 + f_ABC e_C` on `e0, ..., e7`.
pub fn octonions_from_table<S: Scalar>(f: &FTable) -> StructureAlgebra<S> {
    let mut alg = StructureAlgebra::new((0..8).map(|a| format!("e{a}")));
    alg.add_constant(0, 0, 0, S::one());
    for a in 1..8 {
        alg.add_constant(0, a, a, S::one());
        alg.add_constant(a, 0, a, S::one());
        alg.add_constant(a, a, 0, -S::one());
        for b in 1..8 {
            for c in 1..8 {
                let v = f.get(a - 1, b - 1, c - 1);
                if v != 0 {
                    alg.add_constant(a, b, c, S::from_i64(v.into()));
                }
            }
        }
    }
    alg
}

/// Everything computed from the tensor product at normalization `b`.
#[derive(Clone, Debug)]
pub struct OctonionDerivation {
    /// `e_A . e_B` expanded back in the `e_C` basis.
    pub structure: StructureAlgebra<Radical>,
    pub reports: Vec<IdentityReport>,
}

impl OctonionDerivation {
    /// The integer table, when every constant is 0 or +-1.
    pub fn f_table(&self) -> Option<FTable> {
        let mut entries = [[[0i8; 7]; 7]; 7];
        for (a, b, c, k) in self.structure.constants() {
            entries[a][b][c] = match k {
                k if k == Radical::one() => 1,
                k if k == -Radical::one() => -1,
                _ => return None,
            };
        }
        Some(FTable { entries })
    }
}

/// Multiplies the seven generators with the tensor product, expands every
/// product in the generator basis and checks the construction along the way.
/// Fails with [`Error::Inconsistent`] when a product leaves the span.
pub fn derive_octonion_structure(b: &Radical) -> Result<OctonionDerivation> {
    let generators = octonion_generators();
    let tensors: Vec<_> = generators.iter().map(as_tensor).collect();
    let basis = Matrix::from_fn(27, 7, |r, c| tensors[c].components[r].clone());
    let labels: Vec<String> = (1..=7).map(|a| format!("e{a}")).collect();

    let round_trip = sweep("basis_round_trip", &labels, 1, |t| {
        match coordinates(&basis, &tensors[t[0]]) {
            Ok(Some(v))
                if v.iter()
                    .enumerate()
                    .all(|(i, x)| *x == if i == t[0] { Radical::one() } else { Radical::zero() }) =>
            {
                None
            }
            Ok(Some(v)) => Some(format!("coordinates {v:?}")),
            Ok(None) => Some("not in the span of the generators".into()),
            Err(e) => Some(e.to_string()),
        }
    });
    // phi_{mu mu l} summed over mu is zero, so multiplying it by any symbol must give zero
    let pairs: Vec<(usize, Index3)> = (0..3).flat_map(|l| all_indices().map(move |q| (l, q))).collect();
    let pair_labels: Vec<String> = pairs
        .iter()
        .map(|(l, q)| format!("trace{} with t{}{}{}", l + 1, q[0] + 1, q[1] + 1, q[2] + 1))
        .collect();
    let trace_compatible = sweep("product_respects_trace_relations", &pair_labels, 1, |t| {
        let (l, q) = pairs[t[0]];
        let sum = |f: &dyn Fn(Index3) -> SymTracelessTensor<Radical>| {
            (0..3).fold(SymTracelessTensor::zero(), |acc, mu| acc.add(&f([mu, mu, l])))
        };
        let left = sum(&|tr| SymTracelessTensor::symbol_product(tr, q, b));
        let right = sum(&|tr| SymTracelessTensor::symbol_product(q, tr, b));
        (!left.is_zero() || !right.is_zero()).then(|| format!("left {left}; right {right}"))
    });

    let mut structure = StructureAlgebra::new(labels.iter().cloned());
    let mut closure_failures = Vec::new();
    for a in 0..7 {
        for c in 0..7 {
            let p = combination_product(&generators[a], &generators[c], b);
            if !p.is_symmetric() || !p.is_traceless() {
                closure_failures.push(format!("e{} . e{} is not symmetric traceless", a + 1, c + 1));
                continue;
            }
            match coordinates(&basis, &p)? {
                Some(v) => structure.set_product(a, c, Element::from_dense(&v)),
                None => {
                    return Err(Error::Inconsistent(format!(
                        "e{} . e{} = {p} lies outside the span of the generators",
                        a + 1,
                        c + 1
                    )))
                }
            }
        }
    }
    if let Some(first) = closure_failures.first() {
        return Err(Error::Inconsistent(first.clone()));
    }
    let closure = IdentityReport::from_bool("product_closes_on_traceless_tensors", true, "49 generator pairs");
    let antisymmetric = sweep("structure_totally_antisymmetric", &labels, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let f = structure.constant(x, y, z);
        (f != -structure.constant(y, x, z) || f != -structure.constant(x, z, y)).then(|| format!("f = {f}"))
    });
    let unit_values = sweep("structure_values_in_0_pm1", &labels, 3, |t| {
        let f = structure.constant(t[0], t[1], t[2]);
        (!(f.is_zero() || f == Radical::one() || f == -Radical::one())).then(|| f.to_string())
    });
    Ok(OctonionDerivation {
        structure,
        reports: vec![round_trip, trace_compatible, closure, antisymmetric, unit_values],
    })
}

/// The normalization used for the Cartesian octonion construction.
pub fn octonion_tensor_normalization() -> Radical {
    Radical::from_i64(-5)
}

/// Derives `f_ABC` at `b = -5` and returns the unital octonion algebra on
/// `e0, ..., e7` with its table.
pub fn build_octonion_cartesian() -> Result<(StructureAlgebra<Radical>, FTable)> {
    let derivation = derive_octonion_structure(&octonion_tensor_normalization())?;
    if let Some(bad) = derivation.reports.iter().find(|r| !r.holds()) {
        return Err(Error::Inconsistent(format!("octonion derivation: {bad}")));
    }
    let f = derivation
        .f_table()
        .ok_or_else(|| Error::Inconsistent("octonion constants are not 0 or +-1".into()))?;
    Ok((octonions_from_table(&f), f))
}
