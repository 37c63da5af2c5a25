use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::{gcd_u64, sqrt_abs};
use super::{
    dense, impl_ring_ops, join_terms, squarefree_normalize, GaussianRational, LaurentPoly, Radical, RationalFunction,
    Scalar, ScalarRing,
};
use crate::error::{Error, Result};

/// Canonical square-free radicand `d * s^v * p(s)`: `d` a square-free positive
/// integer, `v` in `{0, 1}`, `p` square-free over the rationals with `p(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Radicand {
    int: u64,
    odd_s: bool,
    poly: LaurentPoly,
}

impl Radicand {
    fn unit() -> Self {
        Self {
            int: 1,
            odd_s: false,
            poly: LaurentPoly::one(),
        }
    }

    fn is_unit(&self) -> bool {
        *self == Self::unit()
    }

    fn as_laurent(&self) -> LaurentPoly {
        let c = GaussianRational::from(BigRational::from_integer(BigInt::from(self.int)));
        self.poly.shift_s(i64::from(self.odd_s)).scale(&c)
    }

    /// `sqrt(a) * sqrt(b) = coeff * sqrt(r)`.
    fn product(a: &Self, b: &Self) -> (RationalFunction, Self) {
        let g = gcd_u64(a.int, b.int);
        let int = (a.int / g).checked_mul(b.int / g).expect("radicand overflow");
        let both = a.odd_s && b.odd_s;
        let h = a.poly.poly_gcd(&b.poly);
        let (_, pa) = a.poly.to_dense();
        let (_, pb) = b.poly.to_dense();
        let (_, ph) = h.to_dense();
        let rest = dense::exact_div(&dense::mul(&pa, &pb), &dense::mul(&ph, &ph));
        let coeff = h
            .shift_s(i64::from(both))
            .scale(&GaussianRational::from(BigRational::from_integer(BigInt::from(g))));
        let r = Self {
            int,
            odd_s: a.odd_s ^ b.odd_s,
            poly: LaurentPoly::from_dense(0, &rest),
        };
        (RationalFunction::from(coeff), r)
    }
}

/// Finite sum of `c * sqrt(r)` with rational-function coefficients `c` and
/// canonical square-free radicands `r`, all in the variable `s = t^(1/2)`.
///
/// Distinct canonical radicands are linearly independent over the rational
/// functions, so `==` on the stored form is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRadical {
    terms: BTreeMap<Radicand, RationalFunction>,
}

impl QRadical {
    pub fn from_ratfunc(c: RationalFunction) -> Self {
        let mut out = Self::zero();
        out.accumulate(Radicand::unit(), c);
        out
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self::from_ratfunc(p.into())
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::t_pow(k))
    }

    /// `t^(twice_k / 2)`.
    pub fn t_half_pow(twice_k: i64) -> Self {
        Self::from_laurent(LaurentPoly::t_half_pow(twice_k))
    }

    /// Square root of a Laurent polynomial with rational coefficients. A
    /// negative constant factor becomes a factor `i`.
    pub fn sqrt(f: &LaurentPoly) -> Result<Self> {
        if f.is_zero() {
            return Ok(Self::zero());
        }
        if !f.has_rational_coeffs() {
            return Err(Error::NonRationalRadicand(f.to_string()));
        }
        let split = squarefree_normalize(f)?;
        let r = split.factor.re().clone();
        let (k, d) = sqrt_abs(&r);
        let unit = if r.is_negative() {
            GaussianRational::new(BigRational::zero(), k)
        } else {
            GaussianRational::from(k)
        };
        let (v, sf) = split.squarefree_part.to_dense();
        let key = Radicand {
            int: d,
            odd_s: v == 1,
            poly: LaurentPoly::from_dense(0, &sf),
        };
        let mut out = Self::zero();
        out.accumulate(key, RationalFunction::from(split.square_part.scale(&unit)));
        Ok(out)
    }

    /// `sqrt(n / d) = sqrt(n * d) / d`.
    pub fn sqrt_ratfunc(x: &RationalFunction) -> Result<Self> {
        let root = Self::sqrt(&(x.num() * x.den()))?;
        let inv = RationalFunction::from(x.den().clone())
            .inverse()
            .ok_or(Error::DivisionByZero)?;
        Ok(root.scale(&inv))
    }

    /// Coefficient in front of `sqrt(1)`.
    pub fn rational_part(&self) -> RationalFunction {
        self.terms
            .get(&Radicand::unit())
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn as_ratfunc(&self) -> Option<RationalFunction> {
        match self.terms.len() {
            0 => Some(RationalFunction::zero()),
            1 => self.terms.get(&Radicand::unit()).cloned(),
            _ => None,
        }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// True when both values carry the same set of radicands.
    pub fn same_radicands(&self, other: &Self) -> bool {
        self.terms.keys().eq(other.terms.keys())
    }

    fn accumulate(&mut self, key: Radicand, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(entry) => {
                *entry = entry.add_ref(&c);
                if entry.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub(crate) fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.accumulate(k.clone(), c.clone());
        }
        out
    }

    pub(crate) fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.accumulate(k.clone(), c.neg_ref());
        }
        out
    }

    pub(crate) fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let c = ca.mul_ref(cb);
                if ka.is_unit() {
                    out.accumulate(kb.clone(), c);
                } else if kb.is_unit() {
                    out.accumulate(ka.clone(), c);
                } else {
                    let (extra, key) = Radicand::product(ka, kb);
                    out.accumulate(key, c.mul_ref(&extra));
                }
            }
        }
        out
    }

    pub(crate) fn neg_ref(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero();
        for (k, a) in &self.terms {
            out.accumulate(k.clone(), a.mul_ref(c));
        }
        out
    }

    /// Inverse of a single term `c * sqrt(r)`, which is `sqrt(r) / (c * r)`.
    /// Sums of several radicals are not inverted.
    pub fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        let denom = c.mul_ref(&RationalFunction::from(k.as_laurent()));
        let mut out = Self::zero();
        out.accumulate(k.clone(), denom.inverse()?);
        Some(out)
    }

    /// `t -> 1/t` on values without irrational radicands.
    pub fn invert_variable(&self) -> Option<Self> {
        self.as_ratfunc().map(|c| Self::from_ratfunc(c.invert_variable()))
    }

    /// Exact value at `t = 1`.
    pub fn specialize_t1(&self) -> Result<Radical> {
        let mut out = Radical::zero();
        for (k, c) in &self.terms {
            let value = c.at_one()?;
            let radicand = k.as_laurent().at_one();
            out = out + Radical::sqrt_rational(radicand.re()).scale(&value);
        }
        Ok(out)
    }

    /// Exact value at `s = s0`, i.e. `t = s0^2`. Radicands stay positive for
    /// positive `s0` when they are positive at `s0`, and the root is taken as
    /// the principal one.
    pub fn evaluate_at(&self, s0: &BigRational) -> Result<Radical> {
        let point = GaussianRational::from(s0.clone());
        let mut out = Radical::zero();
        for (k, c) in &self.terms {
            let value = c.eval_s(&point)?;
            let radicand = k.as_laurent().eval_s(&point)?;
            out = out + Radical::sqrt_rational(radicand.re()).scale(&value);
        }
        Ok(out)
    }

    fn render_term(k: &Radicand, c: &RationalFunction) -> String {
        if k.is_unit() {
            return c.to_string();
        }
        let root = format!("sqrt({})", k.as_laurent());
        if c.is_one() {
            root
        } else if c.neg_ref().is_one() {
            format!("-{root}")
        } else if c.is_compound() {
            format!("({c})*{root}")
        } else {
            format!("{c}*{root}")
        }
    }
}

impl_ring_ops!(QRadical);

impl Zero for QRadical {
    fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for QRadical {
    fn one() -> Self {
        Self::from_ratfunc(RationalFunction::one())
    }
}

impl From<LaurentPoly> for QRadical {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<RationalFunction> for QRadical {
    fn from(c: RationalFunction) -> Self {
        Self::from_ratfunc(c)
    }
}

impl fmt::Display for QRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = join_terms(self.terms.iter().map(|(k, c)| Self::render_term(k, c)));
        f.write_str(&rendered)
    }
}

impl Scalar for QRadical {
    const RING: ScalarRing = ScalarRing::QRadical;

    fn from_gaussian(g: GaussianRational) -> Self {
        Self::from_ratfunc(g.into())
    }

    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q_integer;
    use crate::scalar::rational::rat;

    fn q(n: i64) -> LaurentPoly {
        q_integer(n).unwrap()
    }

    #[test]
    fn roots_square_back() {
        for f in [
            q(2),
            q(2) * q(3),
            LaurentPoly::t(),
            q(3).scale(&GaussianRational::from_i64(-6)),
        ] {
            let r = QRadical::sqrt(&f).unwrap();
            assert_eq!(&r * &r, QRadical::from(f.clone()), "f = {f}");
        }
    }

    #[test]
    fn roots_combine_through_gcd() {
        let a = QRadical::sqrt(&(q(2) * q(3))).unwrap();
        let b = QRadical::sqrt(&(q(3) * LaurentPoly::t())).unwrap();
        let ab = QRadical::sqrt(&(q(2) * q(3) * q(3) * LaurentPoly::t())).unwrap();
        assert_eq!(&a * &b, ab);
        assert_eq!(QRadical::sqrt(&(q(2) * q(2))).unwrap(), QRadical::from(q(2)));
    }

    #[test]
    fn non_rational_radicand_rejected() {
        let f = LaurentPoly::t().scale(&GaussianRational::i());
        assert!(matches!(QRadical::sqrt(&f), Err(Error::NonRationalRadicand(_))));
    }

    #[test]
    fn specialization() {
        assert_eq!(
            QRadical::from(q(2)).specialize_t1().unwrap(),
            Radical::from_rational(rat(2, 1))
        );
        assert_eq!(
            QRadical::sqrt(&q(2)).unwrap().specialize_t1().unwrap(),
            Radical::sqrt_int(2)
        );
        let tt = LaurentPoly::t() - LaurentPoly::t_pow(-1);
        let one = RationalFunction::new(tt.clone(), tt).unwrap();
        assert_eq!(QRadical::from(one).specialize_t1().unwrap(), Radical::one());
    }

    #[test]
    fn single_term_inverse() {
        let x = QRadical::sqrt(&(q(2) * q(3)))
            .unwrap()
            .scale(&RationalFunction::from(LaurentPoly::t()));
        assert_eq!(&x * &x.inverse().unwrap(), QRadical::one());
        assert!((QRadical::one() + QRadical::sqrt(&q(2)).unwrap()).inverse().is_none());
    }

    #[test]
    fn rendering() {
        assert_eq!(QRadical::sqrt(&q(2)).unwrap().to_string(), "t^(-1/2)*sqrt(t^2 + 1)");
        assert_eq!(QRadical::from(q(2)).to_string(), "t + t^(-1)");
    }
}
