//! Reference values computed without the Racah sum.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use cgalg::Radical;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `J+ f_m = raise(j, m) f_(m+1)` on the unnormalized states `f_m = J-^(j-m) |j j>`,
/// all in twice-units.
fn raise(tj: i64, tm: i64) -> BigRational {
    // (j + m + 1)(j - m)
    q((tj + tm + 2) * (tj - tm)) / q(4)
}

/// `<f_m|f_m>`: the product of `raise` over the ladder from `m` up to `j`.
fn norm_sq(tj: i64, tm: i64) -> BigRational {
    let mut out = q(1);
    let mut m = tm;
    while m < tj {
        out *= raise(tj, m);
        m += 2;
    }
    out
}

/// `C(j1 j2 j3; m1 m2 m3)` (all arguments doubled) from the coupled states of
/// `V_j1 (x) V_j2`: the highest weight vector of spin `j3` is found by a
/// recurrence in the weight-`j3` space with positive component along
/// `m1 = j1`, lowered to weight `m3` in the unnormalized product basis, and
/// normalized at the end.
pub fn oracle_cg(tj1: i64, tj2: i64, tj3: i64, tm1: i64, tm2: i64, tm3: i64) -> Radical {
    let triangle = tj3 <= tj1 + tj2 && tj3 >= (tj1 - tj2).abs() && (tj1 + tj2 + tj3) % 2 == 0;
    if tm1 + tm2 != tm3 || !triangle || tm3.abs() > tj3 {
        return Radical::zero();
    }
    let in_range = |tj: i64, tm: i64| tm.abs() <= tj && (tj - tm) % 2 == 0;
    let dim = |tj: i64| (tj + 1) as usize;
    let idx = |tj: i64, tm: i64| ((tj - tm) / 2) as usize;
    // vector on V_j1 (x) V_j2 in the basis f_m1 (x) f_m2, indexed [m1][m2]
    let mut v = vec![vec![BigRational::zero(); dim(tj2)]; dim(tj1)];
    let mut m1 = tj1;
    let mut x = q(1);
    while in_range(tj2, tj3 - m1) && m1 >= -tj1 {
        v[idx(tj1, m1)][idx(tj2, tj3 - m1)] = x.clone();
        // coefficient of f_m1 (x) f_(m2+1) in J+ v vanishes:
        // x(m1 - 1) raise1(m1 - 1) + x(m1) raise2(m2) = 0 with m2 = j3 - m1
        let below = m1 - 2;
        if below < -tj1 || !in_range(tj2, tj3 - below) {
            break;
        }
        let a1 = raise(tj1, below);
        let a2 = raise(tj2, tj3 - m1);
        x = -(x * a2) / a1;
        m1 = below;
    }
    // lower from j3 to m3: J- f_m = f_(m-1)
    let mut weight = tj3;
    while weight > tm3 {
        let mut next = vec![vec![BigRational::zero(); dim(tj2)]; dim(tj1)];
        for a in 0..dim(tj1) {
            for b in 0..dim(tj2) {
                let c = &v[a][b];
                if c.is_zero() {
                    continue;
                }
                if a + 1 < dim(tj1) {
                    next[a + 1][b] += c.clone();
                }
                if b + 1 < dim(tj2) {
                    next[a][b + 1] += c.clone();
                }
            }
        }
        v = next;
        weight -= 2;
    }
    let m_of = |tj: i64, k: usize| tj - 2 * k as i64;
    let mut total = BigRational::zero();
    for a in 0..dim(tj1) {
        for b in 0..dim(tj2) {
            total += v[a][b].clone() * v[a][b].clone() * norm_sq(tj1, m_of(tj1, a)) * norm_sq(tj2, m_of(tj2, b));
        }
    }
    let c = v[idx(tj1, tm1)][idx(tj2, tm2)].clone();
    if c.is_zero() {
        return Radical::zero();
    }
    let squared = c.clone() * c.clone() * norm_sq(tj1, tm1) * norm_sq(tj2, tm2) / total;
    let magnitude = Radical::sqrt_rational(&squared);
    if c.is_negative() {
        -magnitude
    } else {
        magnitude
    }
}

/// Every argument tuple (doubled) with `j1, j2, j3 <= 3` and projections in
/// range, including tuples that violate the triangle or projection sum.
pub fn all_keys() -> Vec<[i64; 6]> {
    let mut out = Vec::new();
    for tj1 in 0..=6 {
        for tj2 in 0..=6 {
            for tj3 in 0..=6 {
                for tm1 in (-tj1..=tj1).step_by(2) {
                    for tm2 in (-tj2..=tj2).step_by(2) {
                        for tm3 in (-tj3..=tj3).step_by(2) {
                            out.push([tj1, tj2, tj3, tm1, tm2, tm3]);
                        }
                    }
                }
            }
        }
    }
    out
}
