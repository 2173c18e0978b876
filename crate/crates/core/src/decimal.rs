//! Decimals with a rigorous error bound.

use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::interval::Interval;

/// A decimal `±m · 10^-digits` whose true value lies within `10^-digits`.
///
/// The printed form shows exactly `digits` places after the point. When the
/// enclosure allowed it the digits are the correctly rounded ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionDecimal {
    scaled: BigInt,
    digits: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid decimal literal at byte {offset}")]
pub struct DecimalParseError {
    pub offset: usize,
}

fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), n as usize)
}

impl PrecisionDecimal {
    pub fn from_scaled(scaled: BigInt, digits: u32) -> Self {
        PrecisionDecimal { scaled, digits }
    }

    /// Correctly rounded decimal of an exact rational.
    pub fn from_rational(r: &BigRational, digits: u32) -> Self {
        PrecisionDecimal { scaled: round_half_away(r, digits), digits }
    }

    /// Decimal certified by an enclosure, or `None` if the enclosure is too
    /// wide for `digits` places.
    pub fn from_interval(iv: &Interval, digits: u32) -> Option<Self> {
        let bound = BigRational::new(BigInt::from(1), pow10(digits));
        if iv.width() > bound {
            return None;
        }
        let lo = round_half_away(&iv.lo(), digits);
        let hi = round_half_away(&iv.hi(), digits);
        let scaled = if lo == hi {
            lo
        } else {
            // |v - round(mid)| <= width/2 + 10^-d/2 <= 10^-d
            round_half_away(&iv.mid(), digits)
        };
        Some(PrecisionDecimal { scaled, digits })
    }

    /// Like [`from_interval`](Self::from_interval) but only succeeds when
    /// the rounding is certified to be the correct one.
    pub fn from_interval_correctly_rounded(iv: &Interval, digits: u32) -> Option<Self> {
        let lo = round_half_away(&iv.lo(), digits);
        let hi = round_half_away(&iv.hi(), digits);
        let bound = BigRational::new(BigInt::from(1), pow10(digits));
        if lo == hi && iv.width() <= bound {
            Some(PrecisionDecimal { scaled: lo, digits })
        } else {
            None
        }
    }

    pub fn guaranteed_digits(&self) -> u32 {
        self.digits
    }

    pub fn scaled(&self) -> &BigInt {
        &self.scaled
    }

    pub fn is_negative(&self) -> bool {
        self.scaled.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.scaled.is_zero()
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.scaled.clone(), pow10(self.digits))
    }

    pub fn error_bound(&self) -> BigRational {
        BigRational::new(BigInt::from(1), pow10(self.digits))
    }

    /// Closed range guaranteed to hold the true value.
    pub fn enclosure(&self, prec: u32) -> Interval {
        let v = self.to_rational();
        let e = self.error_bound();
        Interval::from_bounds(&(&v - &e), &(&v + &e), prec)
    }

    /// Same value rounded to fewer places.
    pub fn round_to(&self, digits: u32) -> PrecisionDecimal {
        if digits >= self.digits {
            return self.clone();
        }
        PrecisionDecimal::from_rational(&self.to_rational(), digits)
    }
}

/// `round(x · 10^digits)`, ties away from zero.
fn round_half_away(x: &BigRational, digits: u32) -> BigInt {
    let v = x * BigRational::from_integer(pow10(digits));
    let n = v.numer().abs();
    let d = v.denom();
    // floor((2n + d) / 2d)
    let r = (n * 2u32 + d).div_floor(&(d * 2u32));
    if v.numer().is_negative() {
        -r
    } else {
        r
    }
}

impl fmt::Display for PrecisionDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mag: BigUint = self.scaled.magnitude().clone();
        let mut s = mag.to_string();
        let d = self.digits as usize;
        if s.len() <= d {
            let pad = d + 1 - s.len();
            let mut z = String::with_capacity(d + 1);
            for _ in 0..pad {
                z.push('0');
            }
            z.push_str(&s);
            s = z;
        }
        let (int, frac) = s.split_at(s.len() - d);
        if self.scaled.is_negative() {
            f.write_str("-")?;
        }
        f.write_str(int)?;
        if d > 0 {
            f.write_str(".")?;
            f.write_str(frac)?;
        }
        Ok(())
    }
}

impl FromStr for PrecisionDecimal {
    type Err = DecimalParseError;

    /// Parses `[-]digits[.digits]`; the number of places becomes the
    /// guaranteed digit count.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let lead = s.len() - s.trim_start().len();
        let (neg, body, off) = match t.strip_prefix('-') {
            Some(rest) => (true, rest, lead + 1),
            None => (false, t.strip_prefix('+').unwrap_or(t), lead + usize::from(t.starts_with('+'))),
        };
        let (int, frac) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return Err(DecimalParseError { offset: off });
        }
        for (i, c) in body.char_indices() {
            if !(c.is_ascii_digit() || (c == '.' && i == int.len())) {
                return Err(DecimalParseError { offset: off + i });
            }
        }
        let mut all = String::from(int);
        all.push_str(frac);
        let mut scaled: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().map_err(|_| DecimalParseError { offset: off })? };
        if neg {
            scaled = -scaled;
        }
        Ok(PrecisionDecimal { scaled, digits: frac.len() as u32 })
    }
}
