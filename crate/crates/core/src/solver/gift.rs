//! The five-equation system of the 1639 new-year's pamphlet:
//!
//! ```text
//! B = 5A - 5A^3 + A^5
//! C = 3B - B^3
//! D = 9B - 30B^3 + 27B^5 - 9B^7 + B^9
//! C^2 + D^2 = 4
//! A = 5E - 5E^3 + E^5
//! ```
//!
//! Only the branch with every angle in `(0, π/2)` is returned:
//! `A = 2 sin(π/120)`, `B = 2 sin(π/24)`, `C = 2 sin(π/8)`,
//! `D = 2 cos(π/8)`, `E = 2 sin(π/600)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{sine_radical, Solution, SolveError};
use crate::angles::{certified_decimal, cos_turns, two_cos_turns, RationalAngle, TrigFunc};
use crate::decimal::PrecisionDecimal;
use crate::exactpoly::Polynomial;
use crate::interval::Interval;
use crate::radical;
use crate::bits_for_digits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GiftSolution {
    pub a: Solution,
    pub b: Solution,
    pub c: Solution,
    pub d: Solution,
    pub e: PrecisionDecimal,
    /// `E = 2 sin(e_angle)`.
    pub e_angle: RationalAngle,
    /// Certified bounds on the five equation residuals, in order.
    pub residuals: [BigRational; 5],
}

/// `p(x) - y`, for an equation of the form `y = p(x)`.
fn poly_residual(p: &[i64], x: &Interval, y: &Interval) -> Interval {
    let v = Polynomial::from_i64(p).eval_interval(x);
    v.sub(&y.with_prec(v.prec()))
}

/// Residuals of the five equations for enclosures of `A..E`.
pub fn gift_residuals(vals: &[Interval; 5]) -> [Interval; 5] {
    let [a, b, c, d, e] = vals;
    let sum_sq = c.square().add(&d.square().with_prec(c.prec().max(d.prec())));
    [
        poly_residual(&[0, 5, 0, -5, 0, 1], a, b),
        poly_residual(&[0, 3, 0, -1], b, c),
        poly_residual(&[0, 9, 0, -30, 0, 27, 0, -9, 0, 1], b, d),
        sum_sq.add_int(-4),
        poly_residual(&[0, 5, 0, -5, 0, 1], e, a),
    ]
}

fn solution(angle: RationalAngle, digits: u32) -> Result<Solution, SolveError> {
    let radical = sine_radical(&angle).expect("gift angles need square roots only");
    let value = radical::evaluate(&radical, digits)?;
    Ok(Solution {
        angle: Some(angle),
        radical: Some(radical),
        value,
        multiplicity: 1,
        residual: BigRational::from_integer(BigInt::from(0)),
    })
}

pub fn solve_gift(digits: u32) -> Result<GiftSolution, SolveError> {
    if digits < 18 {
        return Err(SolveError::InvalidDigits);
    }
    let angles: Vec<RationalAngle> = [(1, 120), (1, 24), (1, 8), (3, 8), (1, 600)]
        .into_iter()
        .map(|(p, q)| RationalAngle::new(p, q).expect("nonzero"))
        .collect();
    let turns: Vec<BigRational> = angles.iter().map(|a| cos_turns(a, TrigFunc::Sin)).collect();

    let bound = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize - 2));
    let mut bits = bits_for_digits(digits) + 48;
    let residuals = loop {
        let vals: [Interval; 5] = core::array::from_fn(|i| two_cos_turns(&turns[i], bits));
        let r = gift_residuals(&vals).map(|iv| iv.mag());
        if r.iter().all(|m| *m < bound) {
            break r;
        }
        if bits > 64 * bits_for_digits(digits) {
            return Err(SolveError::Uncertified);
        }
        bits *= 2;
    };

    let e_angle = angles[4].clone();
    let e = certified_decimal(digits, |bits| two_cos_turns(&turns[4], bits));
    let mut it = angles.into_iter();
    Ok(GiftSolution {
        a: solution(it.next().unwrap(), digits)?,
        b: solution(it.next().unwrap(), digits)?,
        c: solution(it.next().unwrap(), digits)?,
        d: solution(it.next().unwrap(), digits)?,
        e,
        e_angle,
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn radicals_and_e() {
        let g = solve_gift(21).unwrap();
        assert_eq!(g.b.radical.as_ref().unwrap().to_string(), "sqrt(2 - sqrt(2 + sqrt(3)))");
        assert_eq!(g.c.radical.as_ref().unwrap().to_string(), "sqrt(2 - sqrt(2))");
        assert_eq!(g.d.radical.as_ref().unwrap().to_string(), "sqrt(2 + sqrt(2))");
        assert_eq!(g.e.to_string(), "0.010471927662839160188");
        assert_eq!(g.e_angle.to_string(), "1/600");
        assert!(solve_gift(17).is_err());
    }
}
