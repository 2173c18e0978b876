//! Audit of the three worked examples and the main problem of the degree-45
//! challenge.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::{recognize_angle, solve, ChebEquation, Rhs, Solution, SolveError, DEFAULT_MAX_Q};
use crate::angles::{certified_decimal, classify, RationalAngle};
use crate::decimal::PrecisionDecimal;
use crate::exactpoly::monic_cheb;
use crate::radical::{self, enclose, numeric_equal, RadicalExpr};
use crate::ConstructibilityClass;

const DEGREE: u32 = 45;
const DIGITS: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RomanusExample {
    One,
    Two,
    Three,
    Main,
}

impl FromStr for RomanusExample {
    type Err = SolveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" => Ok(RomanusExample::One),
            "2" => Ok(RomanusExample::Two),
            "3" => Ok(RomanusExample::Three),
            "main" => Ok(RomanusExample::Main),
            _ => Err(SolveError::UnknownExample),
        }
    }
}

impl fmt::Display for RomanusExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RomanusExample::One => "1",
            RomanusExample::Two => "2",
            RomanusExample::Three => "3",
            RomanusExample::Main => "main",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AuditStatus {
    Pass,
    Mismatch,
}

impl fmt::Display for AuditStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AuditStatus::Pass => "PASS",
            AuditStatus::Mismatch => "MISMATCH",
        })
    }
}

/// A right-hand side proposed in place of a faulty one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correction {
    pub b: RadicalExpr,
    pub b_value: PrecisionDecimal,
    /// `b = 2 sin(angle)`.
    pub angle: RationalAngle,
    /// Smallest positive root of `V_45(x) = b`.
    pub solution: Solution,
    /// Whether that root is the published one.
    pub status: AuditStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub example: RomanusExample,
    pub status: AuditStatus,
    pub b: RadicalExpr,
    pub b_value: PrecisionDecimal,
    /// `b = 2 sin(b_angle)`.
    pub b_angle: RationalAngle,
    /// Published solution, when one was given as a radical.
    pub claimed: Option<RadicalExpr>,
    /// Angle of the published solution, `x = 2 sin(claimed_angle)`.
    pub claimed_angle: RationalAngle,
    /// `V_45` at the published solution.
    pub claimed_lhs: PrecisionDecimal,
    /// Smallest positive root of `V_45(x) = b`.
    pub solution: Solution,
    pub classification: ConstructibilityClass,
    /// `n` of the regular `n`-gon whose side is the root, if it is one.
    pub polygon_sides: Option<BigInt>,
    /// A second proposed `b` and its verdict (example 2 only).
    pub alternative: Option<Correction>,
    /// A right-hand side that does give the published root (example 2 only).
    pub corrected: Option<Correction>,
}

fn p(text: &str) -> RadicalExpr {
    radical::parse(text).expect("built-in radical")
}

fn angle(num: i64, den: i64) -> RationalAngle {
    RationalAngle::new(num, den).expect("nonzero denominator")
}

/// `V_45(x)` for a radical `x`, to `digits` places.
fn lhs_at(x: &RadicalExpr, digits: u32) -> Result<PrecisionDecimal, SolveError> {
    let v = monic_cheb(DEGREE as usize);
    let extra = v.l1_norm().bits() as u32;
    let mut err = None;
    let d = certified_decimal(digits, |bits| match enclose(x, bits + extra) {
        Ok(e) => v.eval_interval(&e.to_interval(bits + extra + 8)),
        Err(e) => {
            err = Some(e);
            crate::interval::Interval::point_int(0, bits)
        }
    });
    match err {
        Some(e) => Err(e.into()),
        None => Ok(d),
    }
}

fn smallest_positive(b: &RadicalExpr) -> Result<Solution, SolveError> {
    let eq = ChebEquation::new(DEGREE, Rhs::Radical(b.clone()))?;
    let set = solve(&eq, DIGITS)?;
    Ok(set.smallest_positive().cloned().expect("0 < b < 2 has a positive root"))
}

fn correction(b: RadicalExpr, claimed_angle: &RationalAngle) -> Result<Correction, SolveError> {
    let b_value = radical::evaluate(&b, DIGITS)?;
    let angle = recognize_angle(&Rhs::Radical(b.clone()), DEFAULT_MAX_Q)?;
    let solution = smallest_positive(&b)?;
    let status = if solution.angle.as_ref() == Some(claimed_angle) { AuditStatus::Pass } else { AuditStatus::Mismatch };
    Ok(Correction { b, b_value, angle, solution, status })
}

fn polygon_sides(a: &RationalAngle) -> Option<BigInt> {
    a.numer().is_one().then(|| a.denom().clone())
}

/// Re-derive one example: recognise `b`, solve, and compare the smallest
/// positive root with the published one at 30 digits.
pub fn verify_romanus(example: RomanusExample) -> Result<AuditReport, SolveError> {
    let (b, claimed, claimed_angle) = match example {
        RomanusExample::One => (
            p("sqrt(2 + sqrt(2 + sqrt(2 + sqrt(2))))"),
            Some(p("sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2 + sqrt(3)))))")),
            angle(1, 96),
        ),
        RomanusExample::Two => (
            p("sqrt(2 + sqrt(2 - sqrt(2 - sqrt(2 - sqrt(2 - sqrt(2))))))"),
            Some(p("sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2 + sqrt(2 + sqrt(3))))))")),
            angle(1, 192),
        ),
        RomanusExample::Three => (
            p("sqrt(2 + sqrt(2))"),
            Some(p("sqrt(2 - sqrt(2 + sqrt(3/16) + sqrt(15/16) + sqrt(5/8 - sqrt(5/64))))")),
            angle(1, 120),
        ),
        RomanusExample::Main => (p("sqrt(7/4 - sqrt(5/16) - sqrt(15/8 - sqrt(45/64)))"), None, angle(1, 675)),
    };
    let b_value = radical::evaluate(&b, DIGITS)?;
    let b_angle = recognize_angle(&Rhs::Radical(b.clone()), DEFAULT_MAX_Q)?;
    let solution = smallest_positive(&b)?;
    let classification = classify(solution.angle.as_ref().expect("solve reports angles"));
    let claimed_lhs = match &claimed {
        Some(x) => lhs_at(x, DIGITS)?,
        None => {
            let t = crate::angles::cos_turns(&claimed_angle, crate::TrigFunc::Sin);
            let v = monic_cheb(DEGREE as usize);
            let extra = v.l1_norm().bits() as u32;
            certified_decimal(DIGITS, |bits| v.eval_interval(&crate::angles::two_cos_turns(&t, bits + extra)))
        }
    };

    let angle_matches = solution.angle.as_ref() == Some(&claimed_angle);
    let value_matches = match (&claimed, &solution.radical) {
        (Some(c), Some(r)) => numeric_equal(c, r, DIGITS)?,
        (Some(c), None) => radical::evaluate(c, DIGITS)? == solution.value,
        (None, _) => true,
    };
    let status = if angle_matches && value_matches { AuditStatus::Pass } else { AuditStatus::Mismatch };

    let (alternative, corrected) = if example == RomanusExample::Two {
        (
            Some(correction(p("sqrt(2 - sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2 + sqrt(2))))))"), &claimed_angle)?),
            Some(correction(p("sqrt(2 - sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2)))))"), &claimed_angle)?),
        )
    } else {
        (None, None)
    };

    Ok(AuditReport {
        example,
        status,
        b,
        b_value,
        b_angle,
        claimed,
        polygon_sides: polygon_sides(solution.angle.as_ref().unwrap()),
        claimed_angle,
        claimed_lhs,
        solution,
        classification,
        alternative,
        corrected,
    })
}
