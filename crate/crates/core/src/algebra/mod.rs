//! Finite-dimensional (super)algebras given by structure constants, bilinear
//! forms on them, and exhaustive identity checkers.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

mod export;
pub mod identities;
mod morphism;
mod report;
mod unital;

pub use export::{AlgebraJson, FormJson};
pub use morphism::{check_isomorphism, transport};
pub use report::{Expectation, IdentityReport, Status, Verdict, Witness};
pub use unital::{adjoin_unit, check_composition, composition_residual, extend_form, solve_unit_coefficient, UnitMode};

/// Sparse vector in the basis of an algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Element<S> {
    coords: BTreeMap<usize, S>,
}

impl<S: Scalar> Element<S> {
    pub fn zero() -> Self {
        Self {
            coords: BTreeMap::new(),
        }
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, S::one())
    }

    pub fn term(i: usize, c: S) -> Self {
        let mut out = Self::zero();
        out.add_term(i, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, S)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (i, c) in iter {
            out.add_term(i, c);
        }
        out
    }

    pub fn from_dense(v: &[S]) -> Self {
        Self::from_terms(v.iter().cloned().enumerate())
    }

    pub fn to_dense(&self, dim: usize) -> Vec<S> {
        (0..dim).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coords.get(&i).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &S)> {
        self.coords.iter().map(|(i, c)| (*i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords.keys().copied()
    }

    pub fn add_term(&mut self, i: usize, c: S) {
        if c.is_zero() {
            return;
        }
        match self.coords.get_mut(&i) {
            Some(slot) => {
                *slot = slot.clone() + c;
                if slot.is_zero() {
                    self.coords.remove(&i);
                }
            }
            None => {
                self.coords.insert(i, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        if c.is_zero() {
            return;
        }
        for (i, a) in &other.coords {
            self.add_term(*i, a.clone() * c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &S::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-S::one());
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn map<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> Element<T> {
        Element::from_terms(self.coords.iter().map(|(i, c)| (*i, f(c))))
    }

    pub fn try_map<T: Scalar>(&self, mut f: impl FnMut(&S) -> Result<T>) -> Result<Element<T>> {
        let mut out = Element::zero();
        for (i, c) in &self.coords {
            out.add_term(*i, f(c)?);
        }
        Ok(out)
    }

    /// Renders with the given labels, e.g. `2*x0 - (1/3)*x1`.
    pub fn render(&self, labels: &[String]) -> String {
        let terms = self.coords.iter().map(|(i, c)| {
            let label = labels.get(*i).cloned().unwrap_or_else(|| format!("e{i}"));
            let text = c.to_string();
            if text == "1" {
                label
            } else if text == "-1" {
                format!("-{label}")
            } else if text.contains(' ') {
                format!("({text})*{label}")
            } else {
                format!("{text}*{label}")
            }
        });
        crate::scalar::join_terms(terms)
    }
}

impl<S: Scalar> Default for Element<S> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Algebra with basis `e_0..e_{n-1}`, optional Z2 grading and structure
/// constants `e_a * e_b = sum_c k_abc e_c`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureAlgebra<S> {
    labels: Vec<String>,
    grades: Vec<u8>,
    graded: bool,
    products: Vec<Element<S>>,
}

impl<S: Scalar> StructureAlgebra<S> {
    /// Ungraded algebra with all products zero.
    pub fn new<L: Into<String>>(labels: impl IntoIterator<Item = L>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        Self {
            grades: vec![0; n],
            graded: false,
            labels,
            products: vec![Element::zero(); n * n],
        }
    }

    /// Graded algebra with all products zero; grades are 0 (even) or 1 (odd).
    pub fn graded<L: Into<String>>(labels: impl IntoIterator<Item = (L, u8)>) -> Self {
        let (labels, grades): (Vec<String>, Vec<u8>) = labels.into_iter().map(|(l, g)| (l.into(), g)).unzip();
        assert!(grades.iter().all(|g| *g <= 1), "grades are 0 or 1");
        let n = labels.len();
        Self {
            labels,
            grades,
            graded: true,
            products: vec![Element::zero(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn grades(&self) -> &[u8] {
        &self.grades
    }

    pub fn grade(&self, i: usize) -> u8 {
        self.grades[i]
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// `(-1)^(grade(a) * grade(b))`.
    pub fn sign(&self, a: usize, b: usize) -> S {
        if self.grades[a] & self.grades[b] == 1 {
            -S::one()
        } else {
            S::one()
        }
    }

    pub fn set_product(&mut self, a: usize, b: usize, value: Element<S>) {
        let n = self.dim();
        assert!(a < n && b < n, "basis index out of range");
        assert!(value.support().all(|c| c < n), "basis index out of range");
        self.products[a * n + b] = value;
    }

    pub fn add_constant(&mut self, a: usize, b: usize, c: usize, k: S) {
        let n = self.dim();
        assert!(a < n && b < n && c < n, "basis index out of range");
        self.products[a * n + b].add_term(c, k);
    }

    /// `e_a * e_b`.
    pub fn product(&self, a: usize, b: usize) -> &Element<S> {
        &self.products[a * self.dim() + b]
    }

    pub fn constant(&self, a: usize, b: usize, c: usize) -> S {
        self.product(a, b).coeff(c)
    }

    /// Bilinear extension of the basis products.
    pub fn multiply(&self, x: &Element<S>, y: &Element<S>) -> Element<S> {
        let mut out = Element::zero();
        for (a, xa) in x.terms() {
            for (b, yb) in y.terms() {
                let p = self.product(a, b);
                if !p.is_zero() {
                    out.add_scaled(p, &(xa.clone() * yb.clone()));
                }
            }
        }
        out
    }

    /// `x * y` checking that both live in this algebra.
    pub fn try_multiply(&self, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
        let n = self.dim();
        if x.support().chain(y.support()).any(|i| i >= n) {
            return Err(Error::Dimension(format!(
                "element has a coordinate outside the {n}-dimensional basis"
            )));
        }
        Ok(self.multiply(x, y))
    }

    /// `(x y) z - x (y z)`.
    pub fn associator(&self, x: &Element<S>, y: &Element<S>, z: &Element<S>) -> Element<S> {
        self.multiply(&self.multiply(x, y), z)
            .sub(&self.multiply(x, &self.multiply(y, z)))
    }

    /// Nonzero constants in lexicographic `(a, b, c)` order.
    pub fn constants(&self) -> Vec<(usize, usize, usize, S)> {
        let n = self.dim();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for (c, k) in self.product(a, b).terms() {
                    out.push((a, b, c, k.clone()));
                }
            }
        }
        out
    }

    /// Checks that every product lands in the sum of the factor grades.
    pub fn check_grading(&self) -> Result<()> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                let g = self.grades[a] ^ self.grades[b];
                if let Some(c) = self.product(a, b).support().find(|c| self.grades[*c] != g) {
                    return Err(Error::Inconsistent(format!(
                        "{} * {} has a component along {} of the wrong grade",
                        self.labels[a], self.labels[b], self.labels[c]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn map_scalars<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> StructureAlgebra<T> {
        StructureAlgebra {
            labels: self.labels.clone(),
            grades: self.grades.clone(),
            graded: self.graded,
            products: self.products.iter().map(|p| p.map(&mut f)).collect(),
        }
    }

    pub fn try_map_scalars<T: Scalar>(&self, mut f: impl FnMut(&S) -> Result<T>) -> Result<StructureAlgebra<T>> {
        Ok(StructureAlgebra {
            labels: self.labels.clone(),
            grades: self.grades.clone(),
            graded: self.graded,
            products: self.products.iter().map(|p| p.try_map(&mut f)).collect::<Result<_>>()?,
        })
    }

    /// Every constant multiplied by `c`.
    pub fn rescaled(&self, c: &S) -> Self {
        self.map_scalars(|k| k.clone() * c.clone())
    }

    pub fn with_labels<L: Into<String>>(mut self, labels: impl IntoIterator<Item = L>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.dim(), "label count");
        self.labels = labels;
        self
    }

    /// Subalgebra spanned by `indices`, if closed under the product.
    pub fn restrict(&self, indices: &[usize]) -> Result<Self> {
        let pos: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(k, i)| (*i, k)).collect();
        let mut out = Self {
            labels: indices.iter().map(|i| self.labels[*i].clone()).collect(),
            grades: indices.iter().map(|i| self.grades[*i]).collect(),
            graded: self.graded,
            products: vec![Element::zero(); indices.len() * indices.len()],
        };
        for (ka, a) in indices.iter().enumerate() {
            for (kb, b) in indices.iter().enumerate() {
                let mut v = Element::zero();
                for (c, k) in self.product(*a, *b).terms() {
                    let Some(kc) = pos.get(&c) else {
                        return Err(Error::Inconsistent(format!(
                            "span is not closed: {} * {} leaves it",
                            self.labels[*a], self.labels[*b]
                        )));
                    };
                    v.add_term(*kc, k.clone());
                }
                out.set_product(ka, kb, v);
            }
        }
        Ok(out)
    }

    /// A copy with one structure constant shifted by one, chosen from `seed`.
    /// The mirrored product `e_b * e_a` is left alone, so symmetry-based
    /// identities break along with the rest.
    pub fn perturbed(&self, seed: u64) -> Self {
        let n = self.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let candidates: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|(a, b)| !self.product(*a, *b).is_zero())
            .collect();
        let (a, b) = if candidates.is_empty() {
            (rng.gen_range(0..n), rng.gen_range(0..n))
        } else {
            candidates[rng.gen_range(0..candidates.len())]
        };
        let c = self
            .product(a, b)
            .support()
            .next()
            .unwrap_or_else(|| rng.gen_range(0..n));
        let mut out = self.clone();
        out.add_constant(a, b, c, S::one());
        out
    }
}

impl<S: Scalar> fmt::Display for StructureAlgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                let p = self.product(a, b);
                if !p.is_zero() {
                    writeln!(
                        f,
                        "{} * {} = {}",
                        self.labels[a],
                        self.labels[b],
                        p.render(&self.labels)
                    )?;
                }
            }
        }
        Ok(())
    }
}

/// Symmetry law a bilinear form is expected to obey.
#[derive(Clone, Debug, PartialEq)]
pub enum SymmetryLaw {
    /// `B(x, y) = B(y, x)`.
    Symmetric,
    /// `B(x, y) = -B(y, x)`.
    Antisymmetric,
    /// `B(x, y) = (-1)^(xy) B(y, x)`.
    Supersymmetric,
    /// `B(w(x), w(y)) = B(y, x)` for the basis permutation `w`.
    InvolutionCompatible(Vec<usize>),
}

/// Bilinear form `B(e_a, e_b) = matrix[a][b]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<S> {
    matrix: Matrix<S>,
}

impl<S: Scalar> BilinearForm<S> {
    pub fn new(matrix: Matrix<S>) -> Self {
        assert_eq!(matrix.rows(), matrix.cols(), "form matrix must be square");
        Self { matrix }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Matrix::zeros(n, n))
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> S) -> Self {
        Self::new(Matrix::from_fn(n, n, f))
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn entry(&self, a: usize, b: usize) -> &S {
        self.matrix.get(a, b)
    }

    pub fn set(&mut self, a: usize, b: usize, v: S) {
        self.matrix.set(a, b, v);
    }

    pub fn eval(&self, x: &Element<S>, y: &Element<S>) -> S {
        let mut acc = S::zero();
        for (a, xa) in x.terms() {
            for (b, yb) in y.terms() {
                let m = self.matrix.get(a, b);
                if !m.is_zero() {
                    acc = acc + xa.clone() * yb.clone() * m.clone();
                }
            }
        }
        acc
    }

    pub fn scaled(&self, c: &S) -> Self {
        Self::new(self.matrix.scale(c))
    }

    pub fn determinant(&self) -> Result<S> {
        self.matrix.determinant()
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> BilinearForm<T> {
        BilinearForm::new(self.matrix.map(f))
    }

    pub fn try_map_scalars<T: Scalar>(&self, f: impl FnMut(&S) -> Result<T>) -> Result<BilinearForm<T>> {
        Ok(BilinearForm::new(self.matrix.try_map(f)?))
    }
}
