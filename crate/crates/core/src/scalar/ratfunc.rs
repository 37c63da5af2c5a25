use std::fmt;

use num_traits::{One, Zero};

use super::dense;
use super::laurent::normalize_constant_term;
use super::{impl_ring_ops, GaussianRational, LaurentPoly};
use crate::error::{Error, Result};

/// Quotient of Laurent polynomials in `s = t^(1/2)`.
///
/// Constructors reduce to lowest terms with the denominator a polynomial in
/// `s` whose constant term is 1, but equality is decided by
/// cross-multiplication so hand-built values compare correctly too.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    /// Builds without reduction.
    pub fn raw(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self { num, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::from(LaurentPoly::zero());
        }
        let (a, p) = num.to_dense();
        let (b, q) = den.to_dense();
        if q.len() == 1 {
            let c = q[0].inverse().expect("nonzero");
            return Self {
                num: LaurentPoly::from_dense(a - b, &dense::scale(&p, &c)),
                den: LaurentPoly::one(),
            };
        }
        let g = dense::gcd(&p, &q);
        let p = dense::exact_div(&p, &g);
        let q = dense::exact_div(&q, &g);
        let c = q[0].inverse().expect("denominator keeps a nonzero constant term");
        Self {
            num: LaurentPoly::from_dense(a - b, &dense::scale(&p, &c)),
            den: LaurentPoly::from_dense(0, &normalize_constant_term(&q)),
        }
    }

    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        let (_, q) = self.den.to_dense();
        if q.len() == 1 {
            let (v, _) = self.den.to_dense();
            Some(self.num.scale(&q[0].inverse()?).shift_s(-v))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        self.as_laurent().and_then(|p| p.as_constant())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }

    pub fn invert_variable(&self) -> Self {
        Self::reduce(self.num.invert_variable(), self.den.invert_variable())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Value at `s = s0`.
    pub fn eval_s(&self, s0: &GaussianRational) -> Result<GaussianRational> {
        let r = Self::reduce(self.num.clone(), self.den.clone());
        let d = r.den.eval_s(s0)?;
        let inv = d.inverse().ok_or_else(|| Error::PoleAt(self.to_string()))?;
        Ok(r.num.eval_s(s0)?.mul_ref(&inv))
    }

    /// Value at `t = 1` after cancelling common factors.
    pub fn at_one(&self) -> Result<GaussianRational> {
        self.eval_s(&GaussianRational::one())
            .map_err(|_| Error::PoleAtOne(self.to_string()))
    }

    pub(crate) fn add_ref(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::reduce(self.num.add_ref(&rhs.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul_ref(&rhs.den).add_ref(&rhs.num.mul_ref(&self.den)),
            self.den.mul_ref(&rhs.den),
        )
    }

    pub(crate) fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    pub(crate) fn mul_ref(&self, rhs: &Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        Self::reduce(self.num.mul_ref(&rhs.num), self.den.mul_ref(&rhs.den))
    }

    pub(crate) fn neg_ref(&self) -> Self {
        Self {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    /// True when printing this as a factor needs parentheses.
    pub(crate) fn is_compound(&self) -> bool {
        if !self.den.is_one() {
            return true;
        }
        self.num.len() > 1 || self.num.s_terms().any(|(_, c)| c.is_compound())
    }
}

impl_ring_ops!(RationalFunction);

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul_ref(&other.den) == other.num.mul_ref(&self.den)
    }
}

impl Eq for RationalFunction {}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from(LaurentPoly::one())
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl From<GaussianRational> for RationalFunction {
    fn from(c: GaussianRational) -> Self {
        Self::from(LaurentPoly::constant(c))
    }
}

fn wrap(p: &LaurentPoly) -> String {
    if p.len() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q_integer;

    fn t_minus_tinv() -> LaurentPoly {
        LaurentPoly::t() - LaurentPoly::t_pow(-1)
    }

    #[test]
    fn cancellation_before_specialization() {
        let x = RationalFunction::new(t_minus_tinv(), t_minus_tinv()).unwrap();
        assert_eq!(x, RationalFunction::one());
        assert_eq!(x.at_one().unwrap(), GaussianRational::one());
        let pole = RationalFunction::new(LaurentPoly::one(), t_minus_tinv()).unwrap();
        assert!(matches!(pole.at_one(), Err(Error::PoleAtOne(_))));
    }

    #[test]
    fn q_integer_quotient() {
        // [4]/[2] = t^2 + t^-2
        let x = RationalFunction::new(q_integer(4).unwrap(), q_integer(2).unwrap()).unwrap();
        assert_eq!(x.as_laurent().unwrap(), LaurentPoly::t_pow(2) + LaurentPoly::t_pow(-2));
    }

    #[test]
    fn cross_multiplied_equality() {
        let raw = RationalFunction::raw(LaurentPoly::t() * LaurentPoly::t(), LaurentPoly::t());
        assert_eq!(raw, RationalFunction::from(LaurentPoly::t()));
        assert!(RationalFunction::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn field_ops() {
        let a = RationalFunction::new(LaurentPoly::one(), q_integer(2).unwrap()).unwrap();
        let b = RationalFunction::from(t_minus_tinv());
        let c = &(&a * &b) + &a;
        let inv = c.inverse().unwrap();
        assert_eq!(&c * &inv, RationalFunction::one());
        assert_eq!(&(&c - &a) * &a.inverse().unwrap(), b);
    }
}
