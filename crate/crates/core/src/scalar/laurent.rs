use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::dense::{self, Dense};
use super::{impl_ring_ops, join_terms, GaussianRational};
use crate::error::{Error, Result};

/// Laurent polynomial with Gaussian-rational coefficients.
///
/// The stored variable is `s = t^(1/2)` so that `t^m` stays polynomial for
/// half-integer `m`; every constructor and the renderer speak in `t`. A key
/// `e` in `coeffs` is the power of `s`, i.e. `t^(e/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, GaussianRational>,
}

impl LaurentPoly {
    pub fn constant(c: GaussianRational) -> Self {
        Self::s_monomial(c, 0)
    }

    /// `c * s^e`, where `s = t^(1/2)`.
    pub fn s_monomial(c: GaussianRational, e: i64) -> Self {
        let mut out = Self::zero();
        out.accumulate(e, c);
        out
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::s_monomial(GaussianRational::one(), 2 * k)
    }

    /// `t^(twice_k / 2)`.
    pub fn t_half_pow(twice_k: i64) -> Self {
        Self::s_monomial(GaussianRational::one(), twice_k)
    }

    pub fn t() -> Self {
        Self::t_pow(1)
    }

    pub fn from_s_coeffs<I: IntoIterator<Item = (i64, GaussianRational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.accumulate(e, c);
        }
        out
    }

    /// Terms as `(power of s, coefficient)`, ascending.
    pub fn s_terms(&self) -> impl Iterator<Item = (i64, &GaussianRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn s_coeff(&self, e: i64) -> GaussianRational {
        self.coeffs.get(&e).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest power of `s`; `None` for zero.
    pub fn s_valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn s_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.coeffs.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(i64, &GaussianRational)> {
        if self.coeffs.len() == 1 {
            self.s_terms().next()
        } else {
            None
        }
    }

    pub fn has_rational_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_real())
    }

    /// Value at `t = 1`: the sum of the coefficients.
    pub fn at_one(&self) -> GaussianRational {
        self.coeffs
            .values()
            .fold(GaussianRational::zero(), |acc, c| acc.add_ref(c))
    }

    /// Value at `s = s0`; fails only when `s0 = 0` meets a negative power.
    pub fn eval_s(&self, s0: &GaussianRational) -> Result<GaussianRational> {
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.coeffs {
            let p = if *e >= 0 {
                s0.pow(*e as u32)
            } else {
                s0.inverse().ok_or(Error::DivisionByZero)?.pow(e.unsigned_abs() as u32)
            };
            acc = acc.add_ref(&c.mul_ref(&p));
        }
        Ok(acc)
    }

    /// `s -> 1/s`, equivalently `t -> 1/t`.
    pub fn invert_variable(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn shift_s(&self, by: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero();
        for (e, a) in &self.coeffs {
            out.accumulate(*e, a.mul_ref(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Splits off the lowest power of `s`: `self = s^v * dense(s)` with a
    /// nonzero constant term.
    pub(crate) fn to_dense(&self) -> (i64, Dense) {
        let Some(v) = self.s_valuation() else {
            return (0, Vec::new());
        };
        let top = self.s_degree().unwrap();
        let dense = (v..=top).map(|e| self.s_coeff(e)).collect();
        (v, dense)
    }

    pub(crate) fn from_dense(shift: i64, p: &[GaussianRational]) -> Self {
        Self::from_s_coeffs(p.iter().enumerate().map(|(i, c)| (shift + i as i64, c.clone())))
    }

    fn accumulate(&mut self, e: i64, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(GaussianRational::zero);
        *entry = entry.add_ref(&c);
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub(crate) fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.accumulate(*e, c.clone());
        }
        out
    }

    pub(crate) fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.accumulate(*e, c.neg_ref());
        }
        out
    }

    pub(crate) fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.accumulate(e1 + e2, c1.mul_ref(c2));
            }
        }
        out
    }

    pub(crate) fn neg_ref(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c.neg_ref())).collect(),
        }
    }

    /// Greatest common divisor of the polynomial parts (powers of `s`
    /// ignored), normalized to constant term 1.
    pub fn poly_gcd(&self, other: &Self) -> Self {
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        let g = dense::gcd(&a, &b);
        Self::from_dense(0, &normalize_constant_term(&g))
    }

    fn render_term(e: i64, c: &GaussianRational) -> String {
        if e == 0 {
            return c.to_string();
        }
        let tpart = match (e % 2 == 0, e / 2) {
            (true, 1) => "t".to_string(),
            (true, k) if k > 0 => format!("t^{k}"),
            (true, k) => format!("t^({k})"),
            (false, _) => format!("t^({e}/2)"),
        };
        if c.is_one() {
            tpart
        } else if c.neg_ref().is_one() {
            format!("-{tpart}")
        } else {
            format!("{c}*{tpart}")
        }
    }
}

/// Scales a dense polynomial with nonzero constant term to constant term 1.
pub(crate) fn normalize_constant_term(p: &[GaussianRational]) -> Dense {
    match p.first() {
        None => Vec::new(),
        Some(c0) => dense::scale(p, &c0.inverse().expect("nonzero constant term")),
    }
}

impl_ring_ops!(LaurentPoly);

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(GaussianRational::one())
    }
}

impl From<GaussianRational> for LaurentPoly {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl From<BigRational> for LaurentPoly {
    fn from(c: BigRational) -> Self {
        Self::constant(c.into())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = join_terms(self.coeffs.iter().rev().map(|(e, c)| Self::render_term(*e, c)));
        f.write_str(&rendered)
    }
}

/// The q-integer `[n] = t^(n-1) + t^(n-3) + ... + t^(-(n-1))`.
pub fn q_integer(n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::NegativeQInteger(n));
    }
    Ok(LaurentPoly::from_s_coeffs(
        (0..n).map(|k| (2 * (n - 1 - 2 * k), GaussianRational::one())),
    ))
}

/// `f = factor * square_part^2 * squarefree_part`.
///
/// `factor` is a nonzero constant, `squarefree_part` is `s^v * p(s)` with
/// `v` in `{0, 1}` and `p` square-free with `p(0) = 1`, and the polynomial part
/// of `square_part` also has constant term 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeSplit {
    pub factor: GaussianRational,
    pub square_part: LaurentPoly,
    pub squarefree_part: LaurentPoly,
}

/// Square-free decomposition by repeated gcd with the derivative.
pub fn squarefree_normalize(f: &LaurentPoly) -> Result<SquarefreeSplit> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (v, g) = f.to_dense();
    let mut square = vec![GaussianRational::one()];
    let mut free = vec![GaussianRational::one()];
    for (i, a) in dense::yun(&g).iter().enumerate() {
        let mult = i + 1;
        let a = normalize_constant_term(a);
        square = dense::mul(&square, &dense::pow(&a, mult / 2));
        if mult % 2 == 1 {
            free = dense::mul(&free, &a);
        }
    }
    Ok(SquarefreeSplit {
        factor: g[0].clone(),
        square_part: LaurentPoly::from_dense(v.div_euclid(2), &square),
        squarefree_part: LaurentPoly::from_dense(v.rem_euclid(2), &free),
    })
}
