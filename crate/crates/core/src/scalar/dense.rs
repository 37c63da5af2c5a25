//! Dense univariate polynomials over the Gaussian rationals, lowest degree first.

use num_traits::{One, Zero};

use super::GaussianRational;

pub(crate) type Dense = Vec<GaussianRational>;

pub(crate) fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn degree(p: &[GaussianRational]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn sub(a: &[GaussianRational], b: &[GaussianRational]) -> Dense {
    let n = a.len().max(b.len());
    let zero = GaussianRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero).sub_ref(b.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

pub(crate) fn mul(a: &[GaussianRational], b: &[GaussianRational]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![GaussianRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &[GaussianRational], c: &GaussianRational) -> Dense {
    trim(a.iter().map(|x| x.mul_ref(c)).collect())
}

/// Quotient and remainder; panics on a zero divisor.
pub(crate) fn div_rem(a: &[GaussianRational], b: &[GaussianRational]) -> (Dense, Dense) {
    let db = degree(b).expect("polynomial division by zero");
    let lead_inv = b[db].inverse().expect("trimmed polynomial has nonzero lead");
    let mut rem: Dense = trim(a.to_vec());
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![GaussianRational::zero(); rem.len() - db];
    while rem.len() > db {
        let shift = rem.len() - 1 - db;
        let c = rem[rem.len() - 1].mul_ref(&lead_inv);
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] = rem[shift + i].sub_ref(&c.mul_ref(bi));
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub(crate) fn monic(a: &[GaussianRational]) -> Dense {
    match a.last() {
        None => Vec::new(),
        Some(lead) => scale(a, &lead.inverse().expect("nonzero lead")),
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &[GaussianRational], b: &[GaussianRational]) -> Dense {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

pub(crate) fn derivative(a: &[GaussianRational]) -> Dense {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul_ref(&GaussianRational::from_i64(i as i64)))
            .collect(),
    )
}

pub(crate) fn exact_div(a: &[GaussianRational], b: &[GaussianRational]) -> Dense {
    let (q, r) = div_rem(a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Yun's square-free decomposition of a nonzero polynomial: returns monic
/// `a_1, a_2, ...` with `f = lead * prod a_i^i`, each `a_i` square-free and
/// pairwise coprime.
pub(crate) fn yun(f: &[GaussianRational]) -> Vec<Dense> {
    let f = monic(f);
    if degree(&f).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let df = derivative(&f);
    let a0 = gcd(&f, &df);
    let mut b = exact_div(&f, &a0);
    let mut c = exact_div(&df, &a0);
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    loop {
        let a = gcd(&b, &d);
        b = exact_div(&b, &a);
        out.push(a);
        if degree(&b).unwrap_or(0) == 0 {
            break;
        }
        c = exact_div(&d, &out[out.len() - 1]);
        d = sub(&c, &derivative(&b));
    }
    out
}

pub(crate) fn pow(a: &[GaussianRational], e: usize) -> Dense {
    let mut acc = vec![GaussianRational::one()];
    for _ in 0..e {
        acc = mul(&acc, a);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Dense {
        trim(cs.iter().map(|c| GaussianRational::from_i64(*c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = mul(&p(&[1, 1]), &p(&[-2, 1]));
        let b = mul(&p(&[1, 1]), &p(&[3, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        let (q, r) = div_rem(&a, &p(&[1, 1]));
        assert_eq!(q, p(&[-2, 1]));
        assert!(r.is_empty());
    }

    #[test]
    fn yun_recovers_multiplicities() {
        let x1 = p(&[1, 1]);
        let x2 = p(&[1, 0, 1]);
        let f = mul(&mul(&x1, &pow(&x2, 2)), &pow(&p(&[-5, 1]), 3));
        let parts = yun(&f);
        assert_eq!(parts, vec![x1, x2, p(&[-5, 1])]);
    }
}
