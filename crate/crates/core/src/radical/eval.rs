//! Certified evaluation: exact rationals where no irrational step occurs,
//! fixed-point intervals with outward rounding everywhere else.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::{RadicalExpr, Sign};
use crate::bits_for_digits;
use crate::decimal::PrecisionDecimal;
use crate::interval::Interval;

/// Child indices from the root to a node. Sums number their head 0 and tail
/// terms from 1; quotients are `[numerator, denominator]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NodePath(pub Vec<usize>);

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("root")?;
        for i in &self.0 {
            write!(f, "/{i}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("negative radicand at {path}")]
    DomainError { path: NodePath },
    #[error("division by zero at {path}")]
    DivisionByZero { path: NodePath },
    #[error("sign of the value at {path} could not be decided")]
    UndecidableSign { path: NodePath },
    #[error("at least one digit must be requested")]
    InvalidDigits,
}

/// Maximum number of precision doublings before giving up on a sign.
const MAX_REFINEMENTS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Enclosure {
    Exact(BigRational),
    Approx(Interval),
}

impl Enclosure {
    pub(crate) fn to_interval(&self, prec: u32) -> Interval {
        match self {
            Enclosure::Exact(r) => Interval::from_rational(r, prec),
            Enclosure::Approx(iv) => iv.with_prec(prec.max(iv.prec())),
        }
    }

    fn width_ok(&self, target_bits: u32) -> bool {
        match self {
            Enclosure::Exact(_) => true,
            Enclosure::Approx(iv) => iv.width_log2().is_none_or(|w| w <= -(target_bits as i64)),
        }
    }
}

enum Issue {
    Domain,
    DivZero,
    Undecided,
}

fn exact_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

fn node(e: &RadicalExpr, prec: u32, path: &mut Vec<usize>) -> Result<Enclosure, Issue> {
    match e {
        RadicalExpr::Literal(r) => Ok(Enclosure::Exact(r.clone())),
        RadicalExpr::Sqrt(c) => {
            path.push(0);
            let v = node(c, prec, path)?;
            path.pop();
            match v {
                Enclosure::Exact(r) => {
                    if r.is_negative() {
                        return Err(Issue::Domain);
                    }
                    Ok(match exact_sqrt(&r) {
                        Some(s) => Enclosure::Exact(s),
                        None => Enclosure::Approx(Interval::from_rational(&r, prec).sqrt()),
                    })
                }
                Enclosure::Approx(iv) => {
                    if iv.is_negative() {
                        Err(Issue::Domain)
                    } else if iv.lo_scaled().is_negative() {
                        Err(Issue::Undecided)
                    } else {
                        Ok(Enclosure::Approx(iv.sqrt()))
                    }
                }
            }
        }
        RadicalExpr::Sum(head, tail) => {
            path.push(0);
            let mut acc = node(head, prec, path)?;
            path.pop();
            for (i, (sign, t)) in tail.iter().enumerate() {
                path.push(i + 1);
                let v = node(t, prec, path)?;
                path.pop();
                acc = combine(acc, v, prec, |a, b| match sign {
                    Sign::Plus => a + b,
                    Sign::Minus => a - b,
                }, |a, b| match sign {
                    Sign::Plus => a.add(b),
                    Sign::Minus => a.sub(b),
                });
            }
            Ok(acc)
        }
        RadicalExpr::Product(fs) => {
            let mut acc = Enclosure::Exact(BigRational::from_integer(BigInt::from(1)));
            for (i, f) in fs.iter().enumerate() {
                path.push(i);
                let v = node(f, prec, path)?;
                path.pop();
                acc = combine(acc, v, prec, |a, b| a * b, |a, b| a.mul(b));
            }
            Ok(acc)
        }
        RadicalExpr::Quotient(n, d) => {
            path.push(0);
            let num = node(n, prec, path)?;
            path.pop();
            path.push(1);
            let den = node(d, prec, path)?;
            match (&num, &den) {
                (_, Enclosure::Exact(z)) if z.is_zero() => return Err(Issue::DivZero),
                (_, Enclosure::Approx(iv)) if iv.contains_zero() => return Err(Issue::Undecided),
                _ => {}
            }
            path.pop();
            Ok(match (num, den) {
                (Enclosure::Exact(a), Enclosure::Exact(b)) => Enclosure::Exact(a / b),
                (a, b) => {
                    let q = a.to_interval(prec).div(&b.to_interval(prec)).expect("nonzero divisor");
                    Enclosure::Approx(q)
                }
            })
        }
    }
}

fn combine(
    a: Enclosure,
    b: Enclosure,
    prec: u32,
    exact: impl Fn(BigRational, BigRational) -> BigRational,
    approx: impl Fn(&Interval, &Interval) -> Interval,
) -> Enclosure {
    match (a, b) {
        (Enclosure::Exact(x), Enclosure::Exact(y)) => Enclosure::Exact(exact(x, y)),
        (x, y) => Enclosure::Approx(approx(&x.to_interval(prec), &y.to_interval(prec))),
    }
}

fn eval_at(e: &RadicalExpr, prec: u32) -> Result<Enclosure, (Issue, NodePath)> {
    let mut path = Vec::new();
    node(e, prec, &mut path).map_err(|i| (i, NodePath(path)))
}

fn certain_error(issue: Issue, path: NodePath) -> Option<EvalError> {
    match issue {
        Issue::Domain => Some(EvalError::DomainError { path }),
        Issue::DivZero => Some(EvalError::DivisionByZero { path }),
        Issue::Undecided => None,
    }
}

/// Enclosure of the value of `e` whose width is at most `2^-target_bits`.
pub(crate) fn enclose(e: &RadicalExpr, target_bits: u32) -> Result<Enclosure, EvalError> {
    let mut prec = target_bits + 2 * e.depth() as u32 + 32;
    let mut last_path = NodePath::default();
    for _ in 0..MAX_REFINEMENTS {
        match eval_at(e, prec) {
            Ok(v) if v.width_ok(target_bits) => return Ok(v),
            Ok(_) => {}
            Err((issue, path)) => {
                if let Some(err) = certain_error(issue, path.clone()) {
                    return Err(err);
                }
                last_path = path;
            }
        }
        prec *= 2;
    }
    Err(EvalError::UndecidableSign { path: last_path })
}

/// Decimal with at least `digits` guaranteed places; the digits are
/// correctly rounded unless the value sits too close to a rounding tie.
pub fn evaluate(e: &RadicalExpr, digits: u32) -> Result<PrecisionDecimal, EvalError> {
    if digits == 0 {
        return Err(EvalError::InvalidDigits);
    }
    let mut prec = bits_for_digits(digits + 10 + 2 * e.depth() as u32) + 8;
    let mut fallback = None;
    let mut last_path = NodePath::default();
    for _ in 0..MAX_REFINEMENTS {
        match eval_at(e, prec) {
            Ok(Enclosure::Exact(r)) => return Ok(PrecisionDecimal::from_rational(&r, digits)),
            Ok(Enclosure::Approx(iv)) => {
                if let Some(d) = PrecisionDecimal::from_interval_correctly_rounded(&iv, digits) {
                    return Ok(d);
                }
                if fallback.is_none() {
                    fallback = PrecisionDecimal::from_interval(&iv, digits);
                } else {
                    // Already certified once; one more refinement did not
                    // separate the value from a rounding tie.
                    break;
                }
            }
            Err((issue, path)) => {
                if let Some(err) = certain_error(issue, path.clone()) {
                    return Err(err);
                }
                last_path = path;
            }
        }
        prec *= 2;
    }
    fallback.ok_or(EvalError::UndecidableSign { path: last_path })
}

/// `|a - b| < 10^-digits`, decided on certified enclosures.
pub fn numeric_equal(a: &RadicalExpr, b: &RadicalExpr, digits: u32) -> Result<bool, EvalError> {
    if digits == 0 {
        return Err(EvalError::InvalidDigits);
    }
    if a == b {
        return Ok(true);
    }
    let bound = BigRational::new(BigInt::from(1), num_traits::pow(BigInt::from(10), digits as usize));
    let mut bits = bits_for_digits(digits) + 24;
    let mut diff = None;
    for _ in 0..4 {
        let x = enclose(a, bits)?;
        let y = enclose(b, bits)?;
        let d = match (&x, &y) {
            (Enclosure::Exact(p), Enclosure::Exact(q)) => return Ok((p - q).abs() < bound),
            _ => {
                let prec = bits + 8;
                x.to_interval(prec).sub(&y.to_interval(prec))
            }
        };
        if d.mag() < bound {
            return Ok(true);
        }
        if d.mig() >= bound {
            return Ok(false);
        }
        diff = Some(d);
        bits *= 2;
    }
    Ok(diff.is_some_and(|d| d.mid().abs() < bound))
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;
    use alloc::string::ToString;

    fn ev(s: &str, d: u32) -> alloc::string::String {
        evaluate(&parse(s).unwrap(), d).unwrap().to_string()
    }

    #[test]
    fn exact_square_stays_exact() {
        assert_eq!(ev("sqrt(4)", 5), "2.00000");
        assert_eq!(ev("sqrt(9/16) - 3/4", 3), "0.000");
        assert_eq!(ev("sqrt(2 - 2)", 2), "0.00");
    }

    #[test]
    fn square_root_of_two() {
        assert_eq!(ev("sqrt(2)", 20), "1.41421356237309504880");
    }

    #[test]
    fn romanus_and_viete_values() {
        assert_eq!(
            ev("sqrt(2+sqrt(2-sqrt(2-sqrt(2-sqrt(2-sqrt(2))))))", 19),
            "1.7401739822174228373"
        );
        assert_eq!(
            ev("sqrt(2-sqrt(2-sqrt(2+sqrt(2+sqrt(2+sqrt(2))))))", 19),
            "1.3790810894741338492"
        );
    }

    #[test]
    fn domain_errors_carry_a_path() {
        let err = evaluate(&parse("1 + sqrt(1 - sqrt(5))").unwrap(), 10).unwrap_err();
        assert_eq!(err, EvalError::DomainError { path: NodePath(alloc::vec![1]) });
        assert_eq!(err.to_string(), "negative radicand at root/1");
        let err = evaluate(&parse("1/(sqrt(4) - 2)").unwrap(), 10).unwrap_err();
        assert_eq!(err, EvalError::DivisionByZero { path: NodePath(alloc::vec![1]) });
        let err = evaluate(&parse("sqrt(-1/3)").unwrap(), 10).unwrap_err();
        assert!(matches!(err, EvalError::DomainError { .. }));
    }

    #[test]
    fn hidden_zero_is_undecidable() {
        // sqrt(2)^2 - 2 is zero, but not syntactically.
        let e = parse("1/(sqrt(2)*sqrt(2) - 2)").unwrap();
        assert!(matches!(evaluate(&e, 5), Err(EvalError::UndecidableSign { .. })));
    }

    #[test]
    fn zero_digits_rejected() {
        assert_eq!(evaluate(&RadicalExpr::int(1), 0), Err(EvalError::InvalidDigits));
    }

    #[test]
    fn numeric_equality() {
        let a = parse("sqrt(2)").unwrap();
        let b = parse("sqrt(3)").unwrap();
        assert!(!numeric_equal(&a, &b, 5).unwrap());
        assert!(numeric_equal(&a, &a, 50).unwrap());
        let c = parse("sqrt(8)/2").unwrap();
        assert!(numeric_equal(&a, &c, 40).unwrap());
        let near = parse("1414213/1000000").unwrap();
        assert!(numeric_equal(&a, &near, 6).unwrap());
        assert!(!numeric_equal(&a, &near, 8).unwrap());
    }

    #[test]
    fn pi_over_thirty_forms_agree() {
        let published = parse("sqrt(3/16) + sqrt(15/16) + sqrt(5/8 - sqrt(5/64))").unwrap();
        let diff = parse("(sqrt(3)*(1 + sqrt(5)) + sqrt(10 - 2*sqrt(5)))/4").unwrap();
        assert!(numeric_equal(&published, &diff, 30).unwrap());
    }
}
