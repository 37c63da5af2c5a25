//! Exact scalar rings.
//!
//! Everything downstream is generic over [`Scalar`]. The concrete rings are
//! the Gaussian rationals, [`Radical`] (sums of `c * sqrt(d)` with square-free
//! integer `d`) for the classical constructions, and [`QRadical`] (square
//! roots of square-free Laurent polynomials over rational functions) for the
//! q-deformed ones. There is no floating point in any of them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

mod dense;
mod gaussian;
mod laurent;
mod qradical;
mod radical;
mod ratfunc;
pub mod rational;

pub use gaussian::GaussianRational;
pub use laurent::{q_integer, squarefree_normalize, LaurentPoly, SquarefreeSplit};
pub use qradical::QRadical;
pub use radical::Radical;
pub use ratfunc::RationalFunction;

/// Tag carried into JSON exports so a reader knows how to parse scalar strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarRing {
    Gaussian,
    Radical,
    QRadical,
}

impl ScalarRing {
    pub fn as_str(self) -> &'static str {
        match self {
            ScalarRing::Gaussian => "gaussian",
            ScalarRing::Radical => "radical",
            ScalarRing::QRadical => "q_radical",
        }
    }
}

/// An exact commutative scalar ring containing the Gaussian rationals.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const RING: ScalarRing;

    fn from_gaussian(g: GaussianRational) -> Self;

    /// Multiplicative inverse when the ring can produce one exactly.
    fn try_inverse(&self) -> Option<Self>;

    fn from_rational(r: BigRational) -> Self {
        Self::from_gaussian(GaussianRational::from(r))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_gaussian(GaussianRational::from_i64(n))
    }

    fn ratio(p: i64, q: i64) -> Self {
        Self::from_gaussian(GaussianRational::ratio(p, q))
    }

    fn imaginary_unit() -> Self {
        Self::from_gaussian(GaussianRational::i())
    }
}

/// Implements the by-value and by-reference arithmetic operators of a type in
/// terms of its `add_ref`, `sub_ref`, `mul_ref` and `neg_ref` methods.
macro_rules! impl_ring_ops {
    ($t:ty) => {
        impl ::std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                self.add_ref(&rhs)
            }
        }
        impl<'a> ::std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                self.add_ref(rhs)
            }
        }
        impl<'a> ::std::ops::Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                self.add_ref(rhs)
            }
        }
        impl ::std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                self.sub_ref(&rhs)
            }
        }
        impl<'a> ::std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl<'a> ::std::ops::Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl ::std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                self.mul_ref(&rhs)
            }
        }
        impl<'a> ::std::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl<'a> ::std::ops::Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl ::std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl<'a> ::std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
        impl ::std::ops::AddAssign<&$t> for $t {
            fn add_assign(&mut self, rhs: &$t) {
                *self = self.add_ref(rhs);
            }
        }
        impl ::std::ops::SubAssign<&$t> for $t {
            fn sub_assign(&mut self, rhs: &$t) {
                *self = self.sub_ref(rhs);
            }
        }
        impl ::std::ops::MulAssign<&$t> for $t {
            fn mul_assign(&mut self, rhs: &$t) {
                *self = self.mul_ref(rhs);
            }
        }
        impl ::std::iter::Sum for $t {
            fn sum<I: Iterator<Item = $t>>(iter: I) -> $t {
                iter.fold(<$t as ::num_traits::Zero>::zero(), |acc, x| acc.add_ref(&x))
            }
        }
    };
}
pub(crate) use impl_ring_ops;

/// Joins already-rendered signed terms as `a + b - c`.
pub(crate) fn join_terms<I: IntoIterator<Item = String>>(terms: I) -> String {
    let mut out = String::new();
    for term in terms {
        if out.is_empty() {
            out.push_str(&term);
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
