use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::{gcd_u64, prime_factors, sqrt_abs};
use super::{impl_ring_ops, join_terms, GaussianRational, Scalar, ScalarRing};

/// Finite sum `sum_d c_d * sqrt(d)` over square-free radicands `d >= 1` with
/// Gaussian-rational coefficients.
///
/// Square roots of distinct square-free integers are linearly independent over
/// the Gaussian rationals, so the stored form is canonical and `==` is exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radical {
    terms: BTreeMap<u64, GaussianRational>,
}

impl Radical {
    /// Builds from arbitrary positive radicands, extracting square factors.
    pub fn from_terms<I: IntoIterator<Item = (u64, GaussianRational)>>(iter: I) -> Self {
        let mut out = Radical::zero();
        for (d, c) in iter {
            assert!(d > 0, "radicand must be positive");
            let (k, sf) = sqrt_abs(&BigRational::from_integer(BigInt::from(d)));
            out.accumulate(sf, c.scale(&k));
        }
        out
    }

    pub fn from_gaussian(c: GaussianRational) -> Self {
        let mut out = Radical::zero();
        out.accumulate(1, c);
        out
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_gaussian(r.into())
    }

    /// Principal square root of a rational: `i * sqrt(|r|)` for negative `r`.
    pub fn sqrt_rational(r: &BigRational) -> Self {
        let (k, d) = sqrt_abs(r);
        let c = if r.is_negative() {
            GaussianRational::new(BigRational::zero(), k)
        } else {
            GaussianRational::from(k)
        };
        let mut out = Radical::zero();
        out.accumulate(d, c);
        out
    }

    pub fn sqrt_int(n: i64) -> Self {
        Self::sqrt_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &GaussianRational)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    /// The value as a Gaussian rational when no irrational radicand remains.
    pub fn as_gaussian(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_gaussian().filter(|g| g.is_real()).map(|g| g.re().clone())
    }

    /// Re-applies square extraction to every term; a no-op on stored values.
    pub fn normalized(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(d, c)| (*d, c.clone())))
    }

    fn accumulate(&mut self, d: u64, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(d).or_insert_with(GaussianRational::zero);
        *entry = entry.add_ref(&c);
        if entry.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub(crate) fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.accumulate(*d, c.clone());
        }
        out
    }

    pub(crate) fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.accumulate(*d, c.neg_ref());
        }
        out
    }

    /// `sqrt(d) * sqrt(e) = g * sqrt(d*e/g^2)` with `g = gcd(d, e)`.
    pub(crate) fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Radical::zero();
        for (d, a) in &self.terms {
            for (e, b) in &rhs.terms {
                let g = gcd_u64(*d, *e);
                let radicand = (d / g).checked_mul(e / g).expect("radicand overflow");
                let coeff = a.mul_ref(b).scale(&BigRational::from_integer(BigInt::from(g)));
                out.accumulate(radicand, coeff);
            }
        }
        out
    }

    pub(crate) fn neg_ref(&self) -> Self {
        Radical {
            terms: self.terms.iter().map(|(d, c)| (*d, c.neg_ref())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Radical::zero();
        for (d, a) in &self.terms {
            out.accumulate(*d, a.mul_ref(c));
        }
        out
    }

    /// Galois conjugate flipping the sign of `sqrt(p)`.
    fn flip_prime(&self, p: u64) -> Self {
        Radical {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (*d, if d % p == 0 { c.neg_ref() } else { c.clone() }))
                .collect(),
        }
    }

    /// Multiplicative inverse by rationalising: multiplying by the conjugate
    /// under each prime removes that prime from every radicand.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut numerator = Radical::one();
        let mut rest = self.clone();
        loop {
            let prime = rest
                .terms
                .keys()
                .filter(|d| **d > 1)
                .flat_map(|d| prime_factors(*d))
                .min();
            let Some(p) = prime else { break };
            let conj = rest.flip_prime(p);
            numerator = numerator.mul_ref(&conj);
            rest = rest.mul_ref(&conj);
        }
        let g = rest.as_gaussian()?;
        Some(numerator.scale(&g.inverse()?))
    }

    fn render_term(d: u64, c: &GaussianRational) -> String {
        if d == 1 {
            return c.to_string();
        }
        let root = format!("sqrt({d})");
        if c.is_real() {
            return render_real_term(c.re(), d, &root);
        }
        if c.re().is_zero() {
            let body = render_real_term(c.im(), d, &root);
            return format!("{body}*i");
        }
        format!("{c}*{root}")
    }
}

/// `r * sqrt(d)` rendered as `p/sqrt(d)` when the denominator absorbs `d`,
/// otherwise as `(p/q)*sqrt(d)`.
fn render_real_term(r: &BigRational, d: u64, root: &str) -> String {
    let p = r.numer();
    let q = r.denom();
    let dd = BigInt::from(d);
    let sign = if p.is_negative() { "-" } else { "" };
    let pa = p.abs();
    if q.is_one() {
        return if pa.is_one() {
            format!("{sign}{root}")
        } else {
            format!("{sign}{pa}*{root}")
        };
    }
    if (q % &dd).is_zero() {
        // p sqrt(d)/q = p / ((q/d) sqrt(d))
        let k = q / &dd;
        return if k.is_one() {
            format!("{sign}{pa}/{root}")
        } else {
            format!("{sign}{pa}/({k}*{root})")
        };
    }
    format!("{sign}({}/{})*{root}", pa, q)
}

impl_ring_ops!(Radical);

impl Zero for Radical {
    fn zero() -> Self {
        Radical { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Radical {
    fn one() -> Self {
        Radical::from_gaussian(GaussianRational::one())
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = join_terms(self.terms.iter().map(|(d, c)| Self::render_term(*d, c)));
        f.write_str(&rendered)
    }
}

impl From<GaussianRational> for Radical {
    fn from(g: GaussianRational) -> Self {
        Radical::from_gaussian(g)
    }
}

impl Scalar for Radical {
    const RING: ScalarRing = ScalarRing::Radical;

    fn from_gaussian(g: GaussianRational) -> Self {
        Radical::from_gaussian(g)
    }

    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}
