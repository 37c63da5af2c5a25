//! Helpers around `num_rational::BigRational`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"`. Decimal notation is rejected so that every
/// numeric input stays exact.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let err = || Error::Parse(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let ok = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())
    };
    if !ok(num) || !ok(den) {
        return Err(err());
    }
    let n: BigInt = num.parse().map_err(|_| err())?;
    let d: BigInt = den.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

/// Renders as `p` or `p/q`.
pub fn render(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Writes `n = k^2 * d` with `d` square-free. Returns `(k, d)`.
///
/// Trial division up to the cube root of the remaining cofactor leaves at most
/// two prime factors, which are square-free unless the cofactor is a perfect
/// square.
pub fn squarefree_split(n: &BigUint) -> (BigUint, u64) {
    assert!(!n.is_zero(), "square-free split of zero");
    let mut rest = n.clone();
    let mut k = BigUint::one();
    let mut d = BigUint::one();
    let mut p: u64 = 2;
    loop {
        let pb = BigUint::from(p);
        if &pb * &pb * &pb > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            e += 1;
        }
        if e > 0 {
            k *= pb.pow(e / 2);
            if e % 2 == 1 {
                d *= &pb;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let r = rest.sqrt();
        if &r * &r == rest {
            k *= r;
        } else {
            d *= rest;
        }
    }
    let d = d.to_u64().expect("square-free radicand exceeds the supported range");
    (k, d)
}

/// `sqrt(|r|) = k * sqrt(d)` with rational `k` and square-free `d`.
/// Returns `(k, d)`; the caller handles the sign of `r`.
pub fn sqrt_abs(r: &BigRational) -> (BigRational, u64) {
    if r.is_zero() {
        return (BigRational::zero(), 1);
    }
    let num = r.numer().abs().to_biguint().unwrap();
    let den = r.denom().to_biguint().unwrap();
    // sqrt(p/q) = sqrt(p*q)/q
    let (k, d) = squarefree_split(&(&num * &den));
    (BigRational::new(BigInt::from(k), BigInt::from(den)), d)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Prime factors of a square-free radicand, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_exact_forms_only() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-1/3").unwrap(), rat(-1, 3));
        assert_eq!(parse_rational(" 2/4 ").unwrap(), rat(1, 2));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn splits_squares() {
        let cases = [
            (1u64, 1u64, 1u64),
            (8, 2, 2),
            (12, 2, 3),
            (49, 7, 1),
            (30, 1, 30),
            (720, 12, 5),
        ];
        for (n, k, d) in cases {
            let (kk, dd) = squarefree_split(&BigUint::from(n));
            assert_eq!((kk, dd), (BigUint::from(k), d), "n = {n}");
        }
        // two large primes squared and multiplied
        let p = BigUint::from(1_000_003u64);
        let (k, d) = squarefree_split(&(&p * &p * BigUint::from(6u64)));
        assert_eq!((k, d), (p, 6));
    }

    #[test]
    fn sqrt_of_rational() {
        assert_eq!(sqrt_abs(&rat(1, 2)), (rat(1, 2), 2));
        assert_eq!(sqrt_abs(&rat(9, 4)), (rat(3, 2), 1));
        assert_eq!(sqrt_abs(&rat(-3, 2)), (rat(1, 2), 6));
    }
}
