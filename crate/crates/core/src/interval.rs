//! Fixed-point interval arithmetic.
//!
//! An [`Interval`] is the closed range `[lo, hi] · 2^-prec` with big-integer
//! endpoints. Every operation rounds outward, so the true value of any
//! computation stays inside the result.

use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

pub(crate) fn floor_shr(x: &BigInt, n: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << n))
}

pub(crate) fn ceil_shr(x: &BigInt, n: u32) -> BigInt {
    -((-x).div_floor(&(BigInt::one() << n)))
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Smallest integer `s` with `s*s >= n` (n >= 0).
pub(crate) fn ceil_isqrt(n: &BigInt) -> BigInt {
    let s = n.sqrt();
    if &s * &s < *n {
        s + 1u32
    } else {
        s
    }
}

pub(crate) fn rational_floor_scaled(r: &BigRational, prec: u32) -> BigInt {
    (r.numer() << prec).div_floor(r.denom())
}

pub(crate) fn rational_ceil_scaled(r: &BigRational, prec: u32) -> BigInt {
    ceil_div(&(r.numer() << prec), r.denom())
}

impl Interval {
    pub fn new(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi, prec }
    }

    pub fn point_int(v: i64, prec: u32) -> Self {
        let x = BigInt::from(v) << prec;
        Interval::new(x.clone(), x, prec)
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        Interval::new(rational_floor_scaled(r, prec), rational_ceil_scaled(r, prec), prec)
    }

    /// Interval spanning two rationals (in either order).
    pub fn from_bounds(a: &BigRational, b: &BigRational, prec: u32) -> Self {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Interval::new(rational_floor_scaled(lo, prec), rational_ceil_scaled(hi, prec), prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn lo_scaled(&self) -> &BigInt {
        &self.lo
    }

    pub fn hi_scaled(&self) -> &BigInt {
        &self.hi
    }

    fn scale(&self) -> BigInt {
        BigInt::one() << self.prec
    }

    pub fn lo(&self) -> BigRational {
        BigRational::new(self.lo.clone(), self.scale())
    }

    pub fn hi(&self) -> BigRational {
        BigRational::new(self.hi.clone(), self.scale())
    }

    pub fn mid(&self) -> BigRational {
        BigRational::new(&self.lo + &self.hi, self.scale() << 1u32)
    }

    pub fn width(&self) -> BigRational {
        BigRational::new(&self.hi - &self.lo, self.scale())
    }

    /// `log2` of the width, rounded up; `None` for a point interval.
    pub fn width_log2(&self) -> Option<i64> {
        let w = &self.hi - &self.lo;
        if w.is_zero() {
            None
        } else {
            Some(w.bits() as i64 - self.prec as i64)
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains(&self, r: &BigRational) -> bool {
        self.lo() <= *r && *r <= self.hi()
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo() <= other.hi() && other.lo() <= self.hi()
    }

    /// Strictly left of `other`.
    pub fn precedes(&self, other: &Interval) -> bool {
        self.hi() < other.lo()
    }

    /// Upper bound on `|x|` over the interval.
    pub fn mag(&self) -> BigRational {
        let a = self.lo.abs();
        let b = self.hi.abs();
        BigRational::new(if a > b { a } else { b }, self.scale())
    }

    /// Lower bound on `|x|` over the interval (zero if it contains zero).
    pub fn mig(&self) -> BigRational {
        if self.contains_zero() {
            BigRational::zero()
        } else {
            let a = self.lo.abs();
            let b = self.hi.abs();
            BigRational::new(if a < b { a } else { b }, self.scale())
        }
    }

    /// Re-express at another precision, rounding outward.
    pub fn with_prec(&self, prec: u32) -> Interval {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let s = prec - self.prec;
                Interval::new(&self.lo << s, &self.hi << s, prec)
            }
            Ordering::Less => {
                let s = self.prec - prec;
                Interval::new(floor_shr(&self.lo, s), ceil_shr(&self.hi, s), prec)
            }
        }
    }

    fn aligned<'a>(&'a self, other: &'a Interval) -> (Interval, Interval) {
        let p = self.prec.max(other.prec);
        (self.with_prec(p), other.with_prec(p))
    }

    pub fn add(&self, other: &Interval) -> Interval {
        let (a, b) = self.aligned(other);
        Interval::new(a.lo + b.lo, a.hi + b.hi, a.prec)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        let (a, b) = self.aligned(other);
        Interval::new(a.lo - b.hi, a.hi - b.lo, a.prec)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-&self.hi, -&self.lo, self.prec)
    }

    pub fn add_int(&self, v: i64) -> Interval {
        let k = BigInt::from(v) << self.prec;
        Interval::new(&self.lo + &k, &self.hi + &k, self.prec)
    }

    pub fn mul_int(&self, v: &BigInt) -> Interval {
        let a = &self.lo * v;
        let b = &self.hi * v;
        if v.is_negative() {
            Interval::new(b, a, self.prec)
        } else {
            Interval::new(a, b, self.prec)
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let (a, b) = self.aligned(other);
        let p = a.prec;
        let cands = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
        let min = cands.iter().min().unwrap();
        let max = cands.iter().max().unwrap();
        Interval::new(floor_shr(min, p), ceil_shr(max, p), p)
    }

    pub fn square(&self) -> Interval {
        let p = self.prec;
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        let (min, max) = if self.contains_zero() {
            (BigInt::zero(), if a > b { a } else { b })
        } else if a < b {
            (a, b)
        } else {
            (b, a)
        };
        Interval::new(floor_shr(&min, p), ceil_shr(&max, p), p)
    }

    /// Quotient; `None` when the divisor contains zero.
    pub fn div(&self, other: &Interval) -> Option<Interval> {
        if other.contains_zero() {
            return None;
        }
        let (a, b) = self.aligned(other);
        let p = a.prec;
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for n in [&a.lo, &a.hi] {
            let n = n << p;
            for d in [&b.lo, &b.hi] {
                let f = n.div_floor(d);
                let c = ceil_div(&n, d);
                if lo.as_ref().is_none_or(|l| f < *l) {
                    lo = Some(f);
                }
                if hi.as_ref().is_none_or(|h| c > *h) {
                    hi = Some(c);
                }
            }
        }
        Some(Interval::new(lo.unwrap(), hi.unwrap(), p))
    }

    /// Square root of the non-negative part; callers decide what a negative
    /// lower endpoint means.
    pub fn sqrt(&self) -> Interval {
        let p = self.prec;
        let lo = if self.lo.sign() == Sign::Minus {
            BigInt::zero()
        } else {
            (&self.lo << p).sqrt()
        };
        let hi = if self.hi.sign() == Sign::Minus {
            BigInt::zero()
        } else {
            ceil_isqrt(&(&self.hi << p))
        };
        Interval::new(lo, hi, p)
    }

    /// Intersect with `[lo, hi]`; the true value is known to lie there.
    pub fn clamp(&self, lo: &BigRational, hi: &BigRational) -> Interval {
        let l = rational_floor_scaled(lo, self.prec);
        let h = rational_ceil_scaled(hi, self.prec);
        let new_lo = if self.lo < l { l.clone() } else { self.lo.clone() };
        let new_hi = if self.hi > h { h } else { self.hi.clone() };
        if new_lo > new_hi {
            // Disjoint only through rounding at the boundary.
            Interval::new(l.clone(), l, self.prec)
        } else {
            Interval::new(new_lo, new_hi, self.prec)
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        let (a, b) = self.aligned(other);
        Interval::new(a.lo.min(b.lo), a.hi.max(b.hi), a.prec)
    }
}
