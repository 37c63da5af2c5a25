//! Exact Clebsch-Gordan coefficients in the Condon-Shortley phase convention.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Radical;

/// An integer or half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub const fn from_twice(twice: i64) -> Self {
        Self { twice }
    }

    pub const fn int(n: i64) -> Self {
        Self { twice: 2 * n }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// `m = j, j-1, ..., -j`.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> {
        let j = self.twice;
        (0..=j).map(move |k| HalfInt::from_twice(j - 2 * k))
    }

    /// Position of `m` in [`projections`](Self::projections) of `self`.
    pub fn index_of(self, m: HalfInt) -> usize {
        ((self.twice - m.twice) / 2) as usize
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.twice), BigInt::from(2))
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"n"` or `"n/2"` (and any fraction equal to one of those).
    fn from_str(s: &str) -> Result<Self> {
        let r = crate::scalar::rational::parse_rational(s)?;
        let twice = r * BigRational::from_integer(BigInt::from(2));
        if !twice.is_integer() {
            return Err(Error::InvalidSpin(format!("{s} is not a multiple of 1/2")));
        }
        let t = twice.to_integer();
        i64::try_from(t)
            .map(HalfInt::from_twice)
            .map_err(|_| Error::InvalidSpin(s.to_string()))
    }
}

/// Checks `j >= 0`, `|m| <= j` and that `j - m` is an integer.
pub fn validate(j: HalfInt, m: HalfInt) -> Result<()> {
    if j.twice < 0 {
        return Err(Error::InvalidSpin(format!("j = {j} is negative")));
    }
    if m.twice.abs() > j.twice {
        return Err(Error::InvalidSpin(format!("|m| = |{m}| exceeds j = {j}")));
    }
    if (j.twice - m.twice) % 2 != 0 {
        return Err(Error::InvalidSpin(format!("j - m = {} is not an integer", j - m)));
    }
    Ok(())
}

/// Arguments of `C(j1 j2 j3; m1 m2 m3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CGKey {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j3: HalfInt,
    pub m1: HalfInt,
    pub m2: HalfInt,
    pub m3: HalfInt,
}

impl CGKey {
    /// Builds a key from twice-values.
    pub fn twice(j1: i64, j2: i64, j3: i64, m1: i64, m2: i64, m3: i64) -> Self {
        let h = HalfInt::from_twice;
        Self {
            j1: h(j1),
            j2: h(j2),
            j3: h(j3),
            m1: h(m1),
            m2: h(m2),
            m3: h(m3),
        }
    }

    pub fn validate(&self) -> Result<()> {
        validate(self.j1, self.m1)?;
        validate(self.j2, self.m2)?;
        validate(self.j3, self.m3)
    }
}

fn factorial(n: i64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact coefficient via Racah's single-sum formula. Zero when
/// `m1 + m2 != m3` or the triangle condition fails.
pub fn cg(key: &CGKey) -> Result<Radical> {
    key.validate()?;
    let CGKey { j1, j2, j3, m1, m2, m3 } = *key;
    let [j1, j2, j3, m1, m2, m3] = [j1, j2, j3, m1, m2, m3].map(|x| x.twice);
    if m1 + m2 != m3 || j3 > j1 + j2 || j3 < (j1 - j2).abs() || (j1 + j2 + j3) % 2 != 0 {
        return Ok(Radical::zero());
    }
    // all quantities below are integers once halved
    let h = |x: i64| x / 2;
    let f = |x: i64| factorial(h(x));
    let prefactor_num = BigInt::from(j3 + 1)
        * f(j3 + j1 - j2)
        * f(j3 - j1 + j2)
        * f(j1 + j2 - j3)
        * f(j3 + m3)
        * f(j3 - m3)
        * f(j1 - m1)
        * f(j1 + m1)
        * f(j2 - m2)
        * f(j2 + m2);
    let prefactor = BigRational::new(prefactor_num, f(j1 + j2 + j3 + 2));

    let k_min = 0.max(h(j2 - j3 - m1)).max(h(j1 - j3 + m2));
    let k_max = h(j1 + j2 - j3).min(h(j1 - m1)).min(h(j2 + m2));
    let mut sum = BigRational::zero();
    for k in k_min..=k_max {
        let den = factorial(k)
            * factorial(h(j1 + j2 - j3) - k)
            * factorial(h(j1 - m1) - k)
            * factorial(h(j2 + m2) - k)
            * factorial(h(j3 - j2 + m1) + k)
            * factorial(h(j3 - j1 - m2) + k);
        let term = BigRational::new(BigInt::one(), den);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(Radical::sqrt_rational(&prefactor).scale(&sum.into()))
}

/// `C_j(m1, m2) = C(j j j; m1 m2 m1+m2)` for integer `j`; zero when
/// `|m1 + m2| > j`.
pub fn cj(j: HalfInt, m1: HalfInt, m2: HalfInt) -> Result<Radical> {
    if !j.is_integer() {
        return Err(Error::InvalidSpin(format!("C_j needs integer j, got {j}")));
    }
    validate(j, m1)?;
    validate(j, m2)?;
    let m3 = m1 + m2;
    if m3.twice.abs() > j.twice {
        return Ok(Radical::zero());
    }
    cg(&CGKey {
        j1: j,
        j2: j,
        j3: j,
        m1,
        m2,
        m3,
    })
}

/// `(2j+1)^(1/2) C(j j 0; m1 m2 0)`.
pub fn pairing_via_cg(j: HalfInt, m1: HalfInt, m2: HalfInt) -> Result<Radical> {
    validate(j, m1)?;
    validate(j, m2)?;
    let c = cg(&CGKey {
        j1: j,
        j2: j,
        j3: HalfInt::ZERO,
        m1,
        m2,
        m3: HalfInt::ZERO,
    })?;
    Ok(Radical::sqrt_int(j.twice + 1) * c)
}

/// `(-1)^(j - m1) delta(m1 + m2, 0)`.
pub fn pairing_closed_form(j: HalfInt, m1: HalfInt, m2: HalfInt) -> Result<Radical> {
    validate(j, m1)?;
    validate(j, m2)?;
    if m1.twice + m2.twice != 0 {
        return Ok(Radical::zero());
    }
    let sign = if ((j.twice - m1.twice) / 2) % 2 == 0 { 1 } else { -1 };
    Ok(Radical::from_rational(BigRational::from_integer(BigInt::from(sign))))
}

/// The invariant pairing of two spin-`j` states, computed both from the
/// coefficient and from its closed form; disagreement is an error.
pub fn pairing(j: HalfInt, m1: HalfInt, m2: HalfInt) -> Result<Radical> {
    let via_cg = pairing_via_cg(j, m1, m2)?;
    let closed = pairing_closed_form(j, m1, m2)?;
    if via_cg != closed {
        return Err(Error::Inconsistent(format!(
            "pairing({j}; {m1}, {m2}): {via_cg} from the coefficient, {closed} in closed form"
        )));
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;

    fn hi(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn spin_zero_coupling_is_one() {
        for tj in 0..=6 {
            for m in hi(tj).projections() {
                let key = CGKey {
                    j1: hi(tj),
                    j2: HalfInt::ZERO,
                    j3: hi(tj),
                    m1: m,
                    m2: HalfInt::ZERO,
                    m3: m,
                };
                assert_eq!(cg(&key).unwrap(), Radical::one());
            }
        }
    }

    #[test]
    fn spin_one_values() {
        let inv_sqrt2 = Radical::sqrt_rational(&rat(1, 2));
        assert_eq!(cg(&CGKey::twice(2, 2, 2, 2, 0, 2)).unwrap(), inv_sqrt2);
        assert_eq!(cg(&CGKey::twice(2, 2, 2, 2, -2, 0)).unwrap(), inv_sqrt2);
        assert_eq!(
            cj(HalfInt::int(1), HalfInt::int(1), HalfInt::int(0)).unwrap(),
            inv_sqrt2
        );
        assert!(cj(HalfInt::int(1), HalfInt::int(0), HalfInt::int(0)).unwrap().is_zero());
    }

    #[test]
    fn malformed_arguments_rejected() {
        assert!(cg(&CGKey::twice(2, 2, 2, 4, -2, 2)).is_err());
        assert!(cg(&CGKey::twice(2, 2, 2, 1, 0, 1)).is_err());
        assert!(cg(&CGKey::twice(-2, 2, 2, 0, 0, 0)).is_err());
        assert!(cj(hi(1), hi(1), hi(1)).is_err());
    }

    #[test]
    fn pairing_values() {
        let one = Radical::one();
        assert_eq!(
            pairing(HalfInt::int(1), HalfInt::int(1), HalfInt::int(-1)).unwrap(),
            one
        );
        assert!(pairing(HalfInt::int(1), HalfInt::int(1), HalfInt::int(0))
            .unwrap()
            .is_zero());
        assert_eq!(pairing(hi(1), hi(1), hi(-1)).unwrap(), one);
        assert_eq!(pairing(hi(1), hi(-1), hi(1)).unwrap(), -one);
    }

    #[test]
    fn parses_and_enumerates() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), hi(3));
        assert_eq!("-1".parse::<HalfInt>().unwrap(), hi(-2));
        assert!("1/3".parse::<HalfInt>().is_err());
        let ms: Vec<_> = hi(3).projections().map(|m| m.twice()).collect();
        assert_eq!(ms, vec![3, 1, -1, -3]);
        assert_eq!(HalfInt::ZERO.projections().count(), 1);
        assert_eq!(hi(3).index_of(hi(-1)), 2);
    }
}
