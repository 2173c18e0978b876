//! Angles that are rational multiples of π.
//!
//! Every angle is stored as a number of half-turns `t`, meaning `t·π`,
//! normalised into `[0, 2)`. Values of `2 sin` and `2 cos` come from two
//! independent routes:
//!
//! - [`tower`] and [`exact_value`] build nested square roots from the special
//!   angles (π/3, π/4, π/5 and the π/15, π/30 families derived from them by
//!   sum and difference formulas) with the half-angle rules;
//! - [`two_trig_value`] brackets any rational angle between two dyadic angles
//!   and evaluates those by repeated half-angle square roots.

mod tower;
mod trig;

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::decimal::PrecisionDecimal;
use crate::exactpoly::{chebyshev_t, Polynomial};
use crate::radical::{self, RadicalExpr};

pub use tower::{exact_value, special_angle_table, tower};
pub(crate) use trig::{acos_turns, reduce_to_unit, two_cos_turns, two_cos_turns_range};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigFunc {
    Sin,
    Cos,
}

impl FromStr for TrigFunc {
    type Err = AngleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sin" => Ok(TrigFunc::Sin),
            "cos" => Ok(TrigFunc::Cos),
            _ => Err(AngleError::BadFunction),
        }
    }
}

impl fmt::Display for TrigFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrigFunc::Sin => "sin",
            TrigFunc::Cos => "cos",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AngleError {
    #[error("angle denominator must be nonzero")]
    ZeroDenominator,
    #[error("invalid angle literal, expected p/q")]
    BadLiteral,
    #[error("trigonometric function must be 'sin' or 'cos'")]
    BadFunction,
    #[error("a composition chain needs n >= 1")]
    ZeroDegree,
    #[error("a polygon needs at least 3 sides, got {0}")]
    TooFewSides(u64),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error(transparent)]
    Eval(#[from] radical::EvalError),
}

/// The angle `t·π` with `t` reduced and normalised into `[0, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalAngle {
    turns: BigRational,
}

impl RationalAngle {
    /// `(p/q)·π`.
    pub fn new(p: i64, q: i64) -> Result<Self, AngleError> {
        if q == 0 {
            return Err(AngleError::ZeroDenominator);
        }
        Ok(Self::from_turns(BigRational::new(p.into(), q.into())))
    }

    pub fn from_turns(t: BigRational) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        let k = (&t / &two).floor();
        RationalAngle { turns: t - k * two }
    }

    /// Multiple of π in `[0, 2)`.
    pub fn turns(&self) -> &BigRational {
        &self.turns
    }

    pub fn numer(&self) -> &BigInt {
        self.turns.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.turns.denom()
    }

    /// Representative in `(-1, 1]`.
    pub fn signed_turns(&self) -> BigRational {
        if self.turns > BigRational::one() {
            &self.turns - BigRational::from_integer(BigInt::from(2))
        } else {
            self.turns.clone()
        }
    }

    /// Human form such as `π/96` or `15π/64`.
    pub fn pi_string(&self) -> alloc::string::String {
        let p = self.numer();
        let q = self.denom();
        let num = if p.is_zero() {
            return "0".into();
        } else if p.is_one() {
            "π".into()
        } else {
            alloc::format!("{p}π")
        };
        if q.is_one() {
            num
        } else {
            alloc::format!("{num}/{q}")
        }
    }
}

impl fmt::Display for RationalAngle {
    /// `p/q` (the implicit unit is π).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for RationalAngle {
    type Err = AngleError;

    /// Parses `p/q` or `p` (both meaning a multiple of π).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| AngleError::BadLiteral)?;
        let q: BigInt = q.parse().map_err(|_| AngleError::BadLiteral)?;
        if q.is_zero() {
            return Err(AngleError::ZeroDenominator);
        }
        Ok(RationalAngle::from_turns(BigRational::new(p, q)))
    }
}

/// Which algebraic steps beyond square roots `2 cos` of an angle needs,
/// within the fragment of constructibility built on the primes 3 and 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructibilityClass {
    SquareRootsOnly,
    NeedsCubic,
    NeedsQuintic,
    NeedsCubicAndQuintic,
    /// The denominator has an odd prime factor larger than 5.
    OutOfScope,
}

impl fmt::Display for ConstructibilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructibilityClass::SquareRootsOnly => "SquareRootsOnly",
            ConstructibilityClass::NeedsCubic => "NeedsCubic",
            ConstructibilityClass::NeedsQuintic => "NeedsQuintic",
            ConstructibilityClass::NeedsCubicAndQuintic => "NeedsCubicAndQuintic",
            ConstructibilityClass::OutOfScope => "OutOfScope",
        })
    }
}

/// Split `q` into `2^a · 3^b · 5^c · rest`.
pub(crate) fn small_factorisation(q: &BigInt) -> (u32, u32, u32, BigInt) {
    let mut rest = q.abs();
    let mut exps = [0u32; 3];
    for (i, p) in [2u32, 3, 5].into_iter().enumerate() {
        let p = BigInt::from(p);
        while !rest.is_zero() && rest.is_multiple_of(&p) {
            rest /= &p;
            exps[i] += 1;
        }
    }
    (exps[0], exps[1], exps[2], rest)
}

/// Odd part of the denominator is in `{1, 3, 5, 15}`.
pub fn has_square_root_tower(a: &RationalAngle) -> bool {
    classify(a) == ConstructibilityClass::SquareRootsOnly
}

pub fn classify(a: &RationalAngle) -> ConstructibilityClass {
    let (_, threes, fives, rest) = small_factorisation(a.denom());
    if !rest.is_one() {
        return ConstructibilityClass::OutOfScope;
    }
    match (threes > 1, fives > 1) {
        (false, false) => ConstructibilityClass::SquareRootsOnly,
        (true, false) => ConstructibilityClass::NeedsCubic,
        (false, true) => ConstructibilityClass::NeedsQuintic,
        (true, true) => ConstructibilityClass::NeedsCubicAndQuintic,
    }
}

/// Prime factors of `n`, outermost first, such that composing `T_p` along
/// the list gives `T_n`. Smaller primes sit outside, so 675 gives
/// `[3, 3, 3, 5, 5]`, i.e. `T_3(T_3(T_3(T_5(T_5(x)))))`.
pub fn factor_chain(n: u64) -> Result<Vec<u64>, AngleError> {
    if n == 0 {
        return Err(AngleError::ZeroDegree);
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        while m.is_multiple_of(p) {
            out.push(p);
            m /= p;
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    Ok(out)
}

/// `T_{p1} ∘ T_{p2} ∘ …` for a chain listed outermost first.
pub fn compose_chain(chain: &[u64]) -> Polynomial {
    chain
        .iter()
        .rev()
        .fold(Polynomial::x(), |inner, &p| chebyshev_t(p as usize).compose(&inner))
}

/// `2 sin(a)` or `2 cos(a)` to `digits` places, for any rational angle.
pub fn two_trig_value(a: &RationalAngle, which: TrigFunc, digits: u32) -> PrecisionDecimal {
    let t = cos_turns(a, which);
    certified_decimal(digits, |bits| two_cos_turns(&t, bits))
}

/// The `t` with `f(a·π) = cos(t·π)`.
pub(crate) fn cos_turns(a: &RationalAngle, which: TrigFunc) -> BigRational {
    match which {
        TrigFunc::Cos => a.turns().clone(),
        TrigFunc::Sin => BigRational::new(1.into(), 2.into()) - a.turns(),
    }
}

/// Drive an enclosure routine (`bits` -> width at most `2^-bits`) until it
/// yields a decimal with `digits` certified, correctly rounded when possible.
pub(crate) fn certified_decimal(
    digits: u32,
    mut enclosure: impl FnMut(u32) -> crate::interval::Interval,
) -> PrecisionDecimal {
    let mut bits = crate::bits_for_digits(digits) + 8;
    let mut fallback = None;
    for _ in 0..6 {
        let iv = enclosure(bits);
        if let Some(d) = PrecisionDecimal::from_interval_correctly_rounded(&iv, digits) {
            return d;
        }
        if fallback.is_none() {
            fallback = PrecisionDecimal::from_interval(&iv, digits);
        }
        bits *= 2;
    }
    fallback.expect("enclosure narrower than requested")
}

/// Perimeter `2n·sin(π/n)` of the regular `n`-gon inscribed in the unit
/// circle.
pub fn polygon_perimeter(n: u64, digits: u32) -> Result<PrecisionDecimal, AngleError> {
    if n < 3 {
        return Err(AngleError::TooFewSides(n));
    }
    let a = RationalAngle::from_turns(BigRational::new(BigInt::one(), n.into()));
    match classify(&a) {
        ConstructibilityClass::OutOfScope => {
            Err(AngleError::Unsupported("polygon side needs an odd prime factor above 5"))
        }
        ConstructibilityClass::SquareRootsOnly => {
            let side = tower(&a, TrigFunc::Sin).expect("square-root angle has a tower");
            let perimeter = RadicalExpr::Literal(BigRational::from_integer(n.into())).times(side);
            Ok(radical::evaluate(&perimeter, digits)?)
        }
        _ => {
            let t = cos_turns(&a, TrigFunc::Sin);
            let k = BigInt::from(n);
            let extra = k.bits() as u32;
            Ok(certified_decimal(digits, |bits| two_cos_turns(&t, bits + extra).mul_int(&k)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn angle(p: i64, q: i64) -> RationalAngle {
        RationalAngle::new(p, q).unwrap()
    }

    #[test]
    fn normalisation() {
        assert_eq!(angle(-1, 96).to_string(), "191/96");
        assert_eq!(angle(30, 15).to_string(), "0/1");
        assert_eq!(angle(4, 6).to_string(), "2/3");
        assert!(RationalAngle::new(1, 0).is_err());
        assert_eq!("15/64".parse::<RationalAngle>().unwrap(), angle(15, 64));
        assert_eq!(angle(15, 64).pi_string(), "15π/64");
        assert_eq!(angle(1, 96).pi_string(), "π/96");
    }

    #[test]
    fn classification_examples() {
        use ConstructibilityClass::*;
        assert_eq!(classify(&angle(1, 96)), SquareRootsOnly);
        assert_eq!(classify(&angle(1, 675)), NeedsCubicAndQuintic);
        assert_eq!(classify(&angle(1, 600)), NeedsQuintic);
        assert_eq!(classify(&angle(1, 9)), NeedsCubic);
        assert_eq!(classify(&angle(1, 15)), SquareRootsOnly);
        assert_eq!(classify(&angle(1, 7)), OutOfScope);
        assert_eq!(classify(&angle(2, 17)), OutOfScope);
    }

    #[test]
    fn chains() {
        assert_eq!(factor_chain(675).unwrap(), [3, 3, 3, 5, 5]);
        assert_eq!(factor_chain(300).unwrap(), [2, 2, 3, 5, 5]);
        assert!(factor_chain(1).unwrap().is_empty());
        assert!(factor_chain(0).is_err());
        assert_eq!(compose_chain(&factor_chain(12).unwrap()), chebyshev_t(12));
    }

    #[test]
    fn small_perimeters() {
        assert_eq!(polygon_perimeter(6, 5).unwrap().to_string(), "6.00000");
        assert_eq!(polygon_perimeter(4, 5).unwrap().to_string(), "5.65685");
        assert!(polygon_perimeter(96, 5).unwrap().to_string().starts_with("6.2820"));
        assert!(matches!(polygon_perimeter(7, 5), Err(AngleError::Unsupported(_))));
        assert!(matches!(polygon_perimeter(2, 5), Err(AngleError::TooFewSides(2))));
        // 9 = 3^2 goes through the bracketing route: 18 sin(π/9)
        assert_eq!(polygon_perimeter(9, 12).unwrap().to_string(), "6.156362579862");
    }

    #[test]
    fn trig_values_by_bracketing() {
        assert_eq!(two_trig_value(&angle(1, 6), TrigFunc::Sin, 10).to_string(), "1.0000000000");
        assert_eq!(two_trig_value(&angle(1, 600), TrigFunc::Sin, 21).to_string(), "0.010471927662839160188");
        assert_eq!(two_trig_value(&angle(1, 1), TrigFunc::Cos, 3).to_string(), "-2.000");
    }
}
