//! `2 cos(t·π)` by dyadic bracketing, and its inverse.
//!
//! For a dyadic `t = m/2^k` in `[0, 1]` the half-angle rule
//! `2 cos(θ) = ±sqrt(2 + 2 cos 2θ)` unwinds to one of `0`, `±2` in at most
//! `k` steps. Any other `t` is bracketed between two neighbouring dyadics;
//! `cos(t·π)` is monotone on `[0, 1]`, so the bracket is rigorous without a
//! value of π.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::interval::{rational_ceil_scaled, rational_floor_scaled, Interval};

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

/// `t` reduced into `[0, 1]` with `cos(t·π)` unchanged.
pub(crate) fn reduce_to_unit(t: &BigRational) -> BigRational {
    let k = (t / two()).floor();
    let r = t - k * two();
    if r > BigRational::one() {
        two() - r
    } else {
        r
    }
}

/// Enclosure of `2 cos(π m / 2^k)` for `0 <= m <= 2^k`.
fn two_cos_dyadic(m: &BigInt, k: u32, prec: u32) -> Interval {
    let mut m = m.clone();
    let mut k = k;
    let mut negative = Vec::new();
    let base = loop {
        let full = BigInt::one() << k;
        if m.is_zero() {
            break 2;
        }
        if m == full {
            break -2;
        }
        let twice = &m << 1u32;
        if twice == full {
            break 0;
        }
        if twice < full {
            negative.push(false);
        } else {
            negative.push(true);
            m = full - m;
        }
        k -= 1;
    };
    let lower = BigRational::from_integer(BigInt::from(-2));
    let upper = two();
    let mut v = Interval::point_int(base, prec);
    for &neg in negative.iter().rev() {
        let r = v.add_int(2).sqrt();
        v = if neg { r.neg() } else { r }.clamp(&lower, &upper);
    }
    v
}

/// Enclosure of `2 cos(t·π)` over `t` in `[a, b] ⊆ [0, 1]`, evaluated on
/// dyadics with `k` fractional bits.
fn two_cos_unit_range(a: &BigRational, b: &BigRational, k: u32, prec: u32) -> Interval {
    let lo_m = rational_floor_scaled(a, k);
    let hi_m = rational_ceil_scaled(b, k);
    let exact = lo_m == hi_m;
    let left = two_cos_dyadic(&lo_m, k, prec);
    if exact {
        return left;
    }
    let right = two_cos_dyadic(&hi_m, k, prec);
    // decreasing on [0, 1]: value lies in [f(hi), f(lo)]
    right.hull(&left)
}

fn is_dyadic(t: &BigRational) -> Option<u32> {
    let d = t.denom();
    (d & (d - 1u32)).is_zero().then(|| (d.bits() - 1) as u32)
}

fn evaluate_until(bits: u32, f: impl Fn(u32, u32) -> Interval) -> Interval {
    let mut prec = bits + 32;
    let mut k = bits + 4;
    loop {
        let iv = f(k, prec);
        if iv.width_log2().is_none_or(|w| w <= -(bits as i64)) {
            return iv;
        }
        prec += prec / 2;
        k += 2;
    }
}

/// Enclosure of `2 cos(t·π)` with width at most `2^-bits`.
pub(crate) fn two_cos_turns(t: &BigRational, bits: u32) -> Interval {
    let r = reduce_to_unit(t);
    if let Some(k) = is_dyadic(&r) {
        let m = r.numer().clone();
        return evaluate_until(bits, |_, prec| two_cos_dyadic(&m, k, prec));
    }
    evaluate_until(bits, |k, prec| two_cos_unit_range(&r, &r, k, prec))
}

/// Enclosure of `2 cos(t·π)` for all `t` in `[lo, hi]` (requires
/// `hi - lo < 1`). The width target applies to the range image, so it is
/// only reached when `[lo, hi]` itself is narrow.
pub(crate) fn two_cos_turns_range(lo: &BigRational, hi: &BigRational, bits: u32) -> Interval {
    debug_assert!(lo <= hi);
    let shift = (lo / two()).floor() * two();
    let a = lo - &shift;
    let b = hi - &shift;
    let mut pieces = Vec::new();
    let mut start = a.clone();
    while start < b {
        let j = start.floor();
        let end = if b < &j + BigRational::one() { b.clone() } else { &j + BigRational::one() };
        let (ua, ub) = if j.to_integer().is_even() {
            (&start - &j, &end - &j)
        } else {
            (&j + BigRational::one() - &end, &j + BigRational::one() - &start)
        };
        pieces.push((ua, ub));
        start = end;
    }
    if pieces.is_empty() {
        pieces.push((reduce_to_unit(&a), reduce_to_unit(&a)));
    }
    let mut prec = bits + 32;
    let mut k = bits + 4;
    let mut last = None;
    for _ in 0..8 {
        let iv = pieces
            .iter()
            .map(|(ua, ub)| two_cos_unit_range(ua, ub, k, prec))
            .reduce(|x, y| x.hull(&y))
            .unwrap();
        if iv.width_log2().is_none_or(|w| w <= -(bits as i64)) {
            return iv;
        }
        last = Some(iv);
        prec += prec / 2;
        k += 2;
    }
    last.unwrap()
}

/// Bracket `[u_lo, u_hi] ⊆ [0, 1]` of the `u` with `2 cos(u·π)` in `b`
/// (`b` is clamped to `[-2, 2]`).
///
/// Works bit by bit with the doubling map `2 cos 2θ = (2 cos θ)² - 2`; a
/// step whose sign is not certain ends the walk with the bound
/// `|u - 1/2| <= |2 cos(u·π)| / 4`.
pub(crate) fn acos_turns(b: &Interval, max_steps: u32) -> (BigRational, BigRational) {
    let lower = BigRational::from_integer(BigInt::from(-2));
    let upper = two();
    let half = BigRational::new(1.into(), 2.into());
    let quarter = BigRational::new(1.into(), 4.into());
    let mut x = b.clamp(&lower, &upper);
    let mut upper_half = Vec::new();
    let (mut u_lo, mut u_hi) = (BigRational::zero(), BigRational::one());
    for _ in 0..max_steps {
        if x.is_positive() {
            upper_half.push(false);
        } else if x.is_negative() {
            upper_half.push(true);
        } else {
            let m = x.mag() * &quarter;
            u_lo = (&half - &m).max(BigRational::zero());
            u_hi = (&half + &m).min(BigRational::one());
            break;
        }
        x = x.square().add_int(-2).clamp(&lower, &upper);
    }
    for &hi_branch in upper_half.iter().rev() {
        let (a, b) = (&u_lo / two(), &u_hi / two());
        if hi_branch {
            u_lo = BigRational::one() - b;
            u_hi = BigRational::one() - a;
        } else {
            u_lo = a;
            u_hi = b;
        }
    }
    (u_lo, u_hi)
}
