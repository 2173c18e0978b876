//! Solving `V_n(x) = b`, where `V_n(x) = 2 T_n(x/2)`.
//!
//! With `b = 2 cos(u·π)`, `u` in `[0, 1]`, the roots are
//! `x_k = 2 cos((u + 2k)·π / n)` for `k = 0..n`. Roots are reported in sine
//! form `x = 2 sin(θ·π)` with `θ` in `[-1/2, 1/2]` (stored mod 2).

mod gift;
mod romanus;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::angles::{self, acos_turns, classify, two_cos_turns, two_cos_turns_range, RationalAngle, TrigFunc};
use crate::decimal::PrecisionDecimal;
use crate::exactpoly::{monic_cheb, Polynomial};
use crate::interval::Interval;
use crate::radical::{self, Enclosure, EvalError, RadicalExpr};
use crate::{bits_for_digits, ConstructibilityClass};

pub use gift::{solve_gift, GiftSolution};
pub use romanus::{verify_romanus, AuditReport, AuditStatus, Correction, RomanusExample};

/// Largest denominator tried by [`recognize_angle`] unless told otherwise.
pub const DEFAULT_MAX_Q: u64 = 4096;

/// Digits at which a recognised angle is confirmed against a radical.
const CONFIRM_DIGITS: u32 = 45;

/// Precision doublings before a residual is declared uncertifiable.
const MAX_REFINEMENTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("the degree n must be at least 1")]
    ZeroDegree,
    #[error("at least one digit must be requested")]
    InvalidDigits,
    #[error("right-hand side lies outside [-2, 2]; there are no real roots to report")]
    Range,
    #[error("right-hand side is too close to ±2 to separate the roots")]
    NearBoundary,
    #[error("right-hand side is not 2 sin(pπ/q) for any q <= {0}")]
    NotRecognized(u64),
    #[error("example must be one of 1, 2, 3, main")]
    UnknownExample,
    #[error("residual could not be certified")]
    Uncertified,
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Right-hand side `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rhs {
    Radical(RadicalExpr),
    /// Known to within `±10^-digits` of the printed value.
    Decimal(PrecisionDecimal),
}

impl Rhs {
    fn enclose(&self, bits: u32) -> Result<Interval, SolveError> {
        match self {
            Rhs::Radical(e) => Ok(radical::enclose(e, bits)?.to_interval(bits + 8)),
            Rhs::Decimal(d) => Ok(d.enclosure(bits + 8)),
        }
    }

    fn exact(&self) -> Result<Option<BigRational>, SolveError> {
        match self {
            Rhs::Radical(e) => match radical::enclose(e, 64)? {
                Enclosure::Exact(r) => Ok(Some(r)),
                Enclosure::Approx(_) => Ok(None),
            },
            Rhs::Decimal(_) => Ok(None),
        }
    }
}

/// `V_n(x) = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebEquation {
    n: u32,
    rhs: Rhs,
}

impl ChebEquation {
    pub fn new(n: u32, rhs: Rhs) -> Result<Self, SolveError> {
        if n == 0 {
            return Err(SolveError::ZeroDegree);
        }
        Ok(ChebEquation { n, rhs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rhs(&self) -> &Rhs {
        &self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// `x = 2 sin(angle)`; absent for purely numeric roots.
    pub angle: Option<RationalAngle>,
    pub radical: Option<RadicalExpr>,
    pub value: PrecisionDecimal,
    pub multiplicity: u32,
    /// Certified upper bound on `|V_n(x) - b|` at the exact root.
    pub residual: BigRational,
}

impl Solution {
    pub fn classification(&self) -> Option<ConstructibilityClass> {
        self.angle.as_ref().map(classify)
    }
}

/// All real roots, ascending; counts include multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub solutions: Vec<Solution>,
    pub positive_count: u32,
    pub negative_count: u32,
    pub smallest_positive: Option<usize>,
}

impl SolutionSet {
    pub fn smallest_positive(&self) -> Option<&Solution> {
        self.smallest_positive.map(|i| &self.solutions[i])
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.solutions.iter().map(|s| s.multiplicity).sum()
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn pow10_recip(digits: u32) -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize))
}

/// Continued-fraction convergents of `x` with denominator at most `max_q`.
fn convergents(x: &BigRational, max_q: u64) -> Vec<BigRational> {
    let max_q = BigInt::from(max_q);
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut r = x.clone();
    loop {
        let a = r.floor().to_integer();
        let h = &a * &h1 + &h0;
        let k = &a * &k1 + &k0;
        if k > max_q {
            break;
        }
        out.push(BigRational::new(h.clone(), k.clone()));
        (h0, h1, k0, k1) = (h1, h, k1, k);
        let frac = &r - BigRational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        r = frac.recip();
    }
    out
}

/// The angle `θ` (in `[-1/2, 1/2]`, returned mod 2) with `b = 2 sin(θ·π)` and
/// denominator at most `max_q`.
///
/// Candidates are the continued-fraction convergents of a certified bracket
/// of `θ`; one is accepted only if `2 sin(θ·π)` overlaps `b` at 45 digits
/// (or at the decimal's own precision for a decimal `b`).
pub fn recognize_angle(b: &Rhs, max_q: u64) -> Result<RationalAngle, SolveError> {
    let bits = bits_for_digits(CONFIRM_DIGITS) + 16;
    let b_iv = b.enclose(bits)?;
    if b_iv.lo() > rat(2, 1) || b_iv.hi() < rat(-2, 1) {
        return Err(SolveError::Range);
    }
    let (u_lo, u_hi) = acos_turns(&b_iv, 2 * bits);
    let half = rat(1, 2);
    let (s_lo, s_hi) = (&half - &u_hi, &half - &u_lo);
    let mid = (&s_lo + &s_hi) / rat(2, 1);
    for cand in convergents(&mid, max_q.max(1)) {
        if cand < s_lo || cand > s_hi {
            continue;
        }
        let value = two_cos_turns(&(&half - &cand), bits);
        if value.intersects(&b_iv.with_prec(value.prec())) {
            return Ok(RationalAngle::from_turns(cand));
        }
    }
    Err(SolveError::NotRecognized(max_q))
}

/// Nested square roots for `2 sin(θ·π)`, when the angle allows them.
pub(crate) fn sine_radical(theta: &RationalAngle) -> Option<RadicalExpr> {
    if classify(theta) != ConstructibilityClass::SquareRootsOnly {
        return None;
    }
    let s = theta.signed_turns();
    if s.is_zero() {
        return Some(RadicalExpr::int(0));
    }
    let a = RationalAngle::from_turns(s.abs());
    let e = angles::tower(&a, TrigFunc::Sin)?;
    Some(if s.is_negative() { e.negate() } else { e })
}

/// Residual bound `|V_n(x) - b|` once it drops below `10^-digits`.
fn certify_residual(
    v: &Polynomial,
    digits: u32,
    mut root: impl FnMut(u32) -> Interval,
    mut rhs: impl FnMut(u32) -> Result<Interval, SolveError>,
) -> Result<BigRational, SolveError> {
    let bound = pow10_recip(digits);
    let mut bits = bits_for_digits(digits) + v.l1_norm().bits() as u32 + 16;
    for _ in 0..MAX_REFINEMENTS {
        let y = v.eval_interval(&root(bits));
        let r = y.sub(&rhs(bits)?.with_prec(y.prec()));
        let m = r.mag();
        if m < bound {
            return Ok(m);
        }
        bits *= 2;
    }
    Err(SolveError::Uncertified)
}

/// Root turns `t` in `[0, 1]` (with `x = 2 cos(t·π)`) and their
/// multiplicities, largest `t` (smallest `x`) first.
fn root_turns(u: &BigRational, n: u32) -> Vec<(BigRational, u32)> {
    let mut counts: BTreeMap<BigRational, u32> = BTreeMap::new();
    for k in 0..n {
        let t = (u + BigRational::from_integer(BigInt::from(2 * k))) / BigRational::from_integer(n.into());
        *counts.entry(angles::reduce_to_unit(&t)).or_default() += 1;
    }
    counts.into_iter().rev().collect()
}

fn finish(solutions: Vec<Solution>, positive: u32, negative: u32) -> SolutionSet {
    let smallest_positive = solutions.iter().position(|s| !s.value.is_negative() && !s.value.is_zero());
    SolutionSet { solutions, positive_count: positive, negative_count: negative, smallest_positive }
}

/// Exact-angle solutions for `b = 2 cos(u·π)`.
fn solve_from_turns(
    v: &Polynomial,
    n: u32,
    u: &BigRational,
    digits: u32,
    with_angles: bool,
    mut rhs: impl FnMut(u32) -> Result<Interval, SolveError>,
) -> Result<SolutionSet, SolveError> {
    let half = rat(1, 2);
    let mut solutions = Vec::new();
    let (mut positive, mut negative) = (0, 0);
    let mut smallest_positive = None;
    for (t, multiplicity) in root_turns(u, n) {
        let value = angles::certified_decimal(digits, |bits| two_cos_turns(&t, bits));
        let residual = certify_residual(v, digits, |bits| two_cos_turns(&t, bits), &mut rhs)?;
        match t.cmp(&half) {
            core::cmp::Ordering::Less => {
                positive += multiplicity;
                smallest_positive.get_or_insert(solutions.len());
            }
            core::cmp::Ordering::Greater => negative += multiplicity,
            core::cmp::Ordering::Equal => {}
        }
        let angle = RationalAngle::from_turns(&half - &t);
        let radical = if with_angles { sine_radical(&angle) } else { None };
        solutions.push(Solution {
            angle: with_angles.then_some(angle),
            radical,
            value,
            multiplicity,
            residual,
        });
    }
    Ok(SolutionSet { solutions, positive_count: positive, negative_count: negative, smallest_positive })
}

/// Every real root of `V_n(x) = b` from the recognised angle of `b`.
///
/// A radical `b` is compared with its own enclosure in the residual; a
/// decimal `b` is replaced by the exact `2 sin(θ·π)` it was recognised as.
pub fn solve(eq: &ChebEquation, digits: u32) -> Result<SolutionSet, SolveError> {
    solve_with_max_q(eq, digits, DEFAULT_MAX_Q)
}

pub fn solve_with_max_q(eq: &ChebEquation, digits: u32, max_q: u64) -> Result<SolutionSet, SolveError> {
    if digits == 0 {
        return Err(SolveError::InvalidDigits);
    }
    let theta = recognize_angle(&eq.rhs, max_q)?;
    let u = rat(1, 2) - theta.signed_turns();
    let v = monic_cheb(eq.n as usize);
    match &eq.rhs {
        Rhs::Radical(_) => solve_from_turns(&v, eq.n, &u, digits, true, |bits| eq.rhs.enclose(bits)),
        Rhs::Decimal(_) => solve_from_turns(&v, eq.n, &u, digits, true, |bits| Ok(two_cos_turns(&u, bits))),
    }
}

/// `u` with `2 cos(u·π) = b` for the rationals where it is itself rational.
fn rational_turns(b: &BigRational) -> Option<BigRational> {
    let table = [(-2, rat(1, 1)), (-1, rat(2, 3)), (0, rat(1, 2)), (1, rat(1, 3)), (2, rat(0, 1))];
    table.into_iter().find(|(v, _)| BigRational::from_integer((*v).into()) == *b).map(|(_, u)| u)
}

/// Every real root of `V_n(x) = b` as certified decimals only, without
/// recognising `b`. A decimal `b` is taken at its printed value.
pub fn solve_numeric(eq: &ChebEquation, digits: u32) -> Result<SolutionSet, SolveError> {
    if digits == 0 {
        return Err(SolveError::InvalidDigits);
    }
    let n = eq.n;
    let v = monic_cheb(n as usize);
    let exact = match &eq.rhs {
        Rhs::Decimal(d) => Some(d.to_rational()),
        Rhs::Radical(_) => eq.rhs.exact()?,
    };
    if let Some(b) = &exact {
        if b.abs() > rat(2, 1) {
            return Err(SolveError::Range);
        }
        if let Some(u) = rational_turns(b) {
            let b = b.clone();
            return solve_from_turns(&v, n, &u, digits, false, |bits| Ok(Interval::from_rational(&b, bits)));
        }
    }
    let rhs = |bits: u32| -> Result<Interval, SolveError> {
        match &exact {
            Some(b) => Ok(Interval::from_rational(b, bits)),
            None => eq.rhs.enclose(bits),
        }
    };

    let bound = pow10_recip(digits);
    let nn = BigRational::from_integer(n.into());
    let mut bits = bits_for_digits(digits) + v.l1_norm().bits() as u32 + 16;
    for _ in 0..MAX_REFINEMENTS {
        let b_iv = rhs(bits + 32)?;
        if b_iv.lo() > rat(2, 1) || b_iv.hi() < rat(-2, 1) {
            return Err(SolveError::Range);
        }
        if b_iv.contains(&rat(2, 1)) || b_iv.contains(&rat(-2, 1)) {
            bits *= 2;
            continue;
        }
        let (u_lo, u_hi) = acos_turns(&b_iv, 2 * (bits + 32));
        let mut roots = Vec::with_capacity(n as usize);
        for k in 0..n {
            let shift = BigRational::from_integer(BigInt::from(2 * k));
            let lo = (&u_lo + &shift) / &nn;
            let hi = (&u_hi + &shift) / &nn;
            roots.push(two_cos_turns_range(&lo, &hi, bits + 8));
        }
        let certified: Option<Vec<(Interval, BigRational)>> = roots
            .into_iter()
            .map(|x| {
                let y = v.eval_interval(&x);
                let m = y.sub(&b_iv.with_prec(y.prec())).mag();
                let separated = !x.contains_zero() || x.is_point();
                (m < bound && separated && PrecisionDecimal::from_interval(&x, digits).is_some()).then_some((x, m))
            })
            .collect();
        let Some(mut roots) = certified else {
            bits *= 2;
            continue;
        };
        roots.sort_by_key(|(x, _)| x.mid());
        let (mut positive, mut negative) = (0, 0);
        let solutions = roots
            .into_iter()
            .map(|(x, residual)| {
                if x.is_positive() {
                    positive += 1;
                } else if x.is_negative() {
                    negative += 1;
                }
                let value = PrecisionDecimal::from_interval_correctly_rounded(&x, digits)
                    .or_else(|| PrecisionDecimal::from_interval(&x, digits))
                    .expect("checked above");
                Solution { angle: None, radical: None, value, multiplicity: 1, residual }
            })
            .collect();
        return Ok(finish(solutions, positive, negative));
    }
    Err(SolveError::NearBoundary)
}
