//! Square-root towers for `2 cos` and `2 sin` of constructible angles.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::race::OnceBox;

use super::{cos_turns, has_square_root_tower, two_cos_turns, RationalAngle, TrigFunc};
use crate::radical::{self, RadicalExpr};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn p(text: &str) -> RadicalExpr {
    radical::parse(text).expect("table literal")
}

/// Cosine and sine of `2π/n` for `n = 1..12`, without the entries that need
/// cube roots (`n = 7, 9, 11`).
pub fn special_angle_table() -> Vec<(u32, RadicalExpr, RadicalExpr)> {
    [
        (1, "1", "0"),
        (2, "-1", "0"),
        (3, "-1/2", "sqrt(3)/2"),
        (4, "0", "1"),
        (5, "(sqrt(5) - 1)/4", "sqrt(10 + 2*sqrt(5))/4"),
        (6, "1/2", "sqrt(3)/2"),
        (8, "sqrt(2)/2", "sqrt(2)/2"),
        (10, "(sqrt(5) + 1)/4", "sqrt(10 - 2*sqrt(5))/4"),
        (12, "sqrt(3)/2", "1/2"),
    ]
    .into_iter()
    .map(|(n, c, s)| (n, p(c), p(s)))
    .collect()
}

// Small folding constructors: they only remove identities (adding zero,
// multiplying by one, literal arithmetic), never rewrite radicals.

fn scale(e: RadicalExpr, k: &BigRational) -> RadicalExpr {
    if k.is_one() {
        return e;
    }
    if let Some(x) = negated(&e) {
        return scale(x.clone(), &-k);
    }
    if k.is_negative() {
        return scale(e, &-k).negate();
    }
    match e {
        RadicalExpr::Literal(r) => RadicalExpr::Literal(r * k),
        RadicalExpr::Quotient(n, d) if d.as_literal().is_some() => {
            let d = d.as_literal().unwrap() / k;
            if d.is_one() {
                *n
            } else {
                RadicalExpr::Quotient(n, Box::new(RadicalExpr::Literal(d)))
            }
        }
        other if k.is_integer() => RadicalExpr::Literal(k.clone()).times(other),
        other => other.over(RadicalExpr::Literal(k.recip())),
    }
}

fn double(e: RadicalExpr) -> RadicalExpr {
    scale(e, &rat(2, 1))
}

fn halve(e: RadicalExpr) -> RadicalExpr {
    scale(e, &rat(1, 2))
}

/// `x` when `e` is `-1 · x`.
fn negated(e: &RadicalExpr) -> Option<&RadicalExpr> {
    match e {
        RadicalExpr::Product(fs) if fs.len() == 2 && fs[0].as_literal() == Some(&-BigRational::one()) => Some(&fs[1]),
        _ => None,
    }
}

fn sub(a: RadicalExpr, b: RadicalExpr) -> RadicalExpr {
    if let Some(x) = negated(&b) {
        return a.plus(x.clone());
    }
    match (a.as_literal(), b.as_literal()) {
        (Some(x), Some(y)) => RadicalExpr::Literal(x - y),
        (_, Some(y)) if y.is_zero() => a,
        (Some(x), _) if x.is_zero() => b.negate(),
        (_, Some(y)) if y.is_negative() => a.plus(RadicalExpr::Literal(-y)),
        _ => a.minus(b),
    }
}

fn mul(a: RadicalExpr, b: RadicalExpr) -> RadicalExpr {
    if let Some(x) = negated(&a) {
        return mul(x.clone(), b).negate();
    }
    if let Some(y) = negated(&b) {
        return mul(a, y.clone()).negate();
    }
    match (a.as_literal(), b.as_literal()) {
        (Some(x), Some(y)) => RadicalExpr::Literal(x * y),
        (Some(x), _) => {
            if x.is_zero() {
                RadicalExpr::int(0)
            } else {
                scale(b, &x.clone())
            }
        }
        (_, Some(y)) => {
            if y.is_zero() {
                RadicalExpr::int(0)
            } else {
                scale(a, &y.clone())
            }
        }
        _ => a.times(b),
    }
}

/// `2 cos(t·π)` for first-quadrant `t` read off either column of the table.
fn table_two_cos(t: &BigRational) -> Option<RadicalExpr> {
    if t.is_zero() {
        return Some(RadicalExpr::int(2));
    }
    // cos(t·π) = cos(2π/n) for n = 2/t, or sin(2π/n) for n = 2/(1/2 - t)
    let lookup = |u: BigRational, sine: bool| -> Option<RadicalExpr> {
        if u.is_zero() {
            return None;
        }
        let n = rat(2, 1) / u;
        if !n.is_integer() {
            return None;
        }
        let n = n.to_integer();
        special_angle_table()
            .into_iter()
            .find(|(m, _, _)| BigInt::from(*m) == n)
            .map(|(_, c, s)| double(if sine { s } else { c }))
    };
    lookup(t.clone(), false).or_else(|| lookup(rat(1, 2) - t, true))
}

/// `(2 cos, 2 sin)` of `t·π` for any `t` that is a multiple of 1/5 or 1/6.
fn table_pair(t: &BigRational) -> Option<(RadicalExpr, RadicalExpr)> {
    let c = signed_from_first_quadrant(t, table_two_cos)?;
    let s = signed_from_first_quadrant(&(rat(1, 2) - t), table_two_cos)?;
    Some((c, s))
}

/// Lift a first-quadrant `2 cos` rule to the full circle.
fn signed_from_first_quadrant(
    t: &BigRational,
    first: impl Fn(&BigRational) -> Option<RadicalExpr>,
) -> Option<RadicalExpr> {
    let r = super::trig::reduce_to_unit(t);
    if r <= rat(1, 2) {
        first(&r)
    } else {
        Some(first(&(BigRational::one() - r))?.negate())
    }
}

/// The printed forms of the two difference-formula derivations worked out
/// by hand: `2 cos(π/30)` from `π/5 - π/6` and `2 cos(2π/15)` from
/// `π/3 - π/5`.
fn worked_forms(t: &BigRational) -> Option<RadicalExpr> {
    if *t == rat(1, 30) {
        Some(p("sqrt(3/16) + sqrt(15/16) + sqrt(5/8 - sqrt(5/64))"))
    } else if *t == rat(2, 15) {
        Some(p("(1 + sqrt(5))/4 + sqrt(3)*sqrt(10 - 2*sqrt(5))/4"))
    } else {
        None
    }
}

/// `2 cos(k·π/30)` from `k/30 = a/5 + b/6` and the sum formula
/// `2 cos(x + y) = (2cos x · 2cos y - 2sin x · 2sin y) / 2`.
pub(super) fn derived_thirtieth(k: i64) -> RadicalExpr {
    let (a, b) = (-6i64..=6)
        .flat_map(|a| (-6i64..=6).map(move |b| (a, b)))
        .filter(|(a, b)| 6 * a + 5 * b == k)
        .min_by_key(|(a, b)| (a.abs() + b.abs(), -a))
        .expect("6a + 5b reaches every residue");
    let (cx, sx) = table_pair(&rat(a, 5)).unwrap();
    let (cy, sy) = table_pair(&rat(b, 6)).unwrap();
    halve(sub(mul(cx, cy), mul(sx, sy)))
}

struct BaseTable {
    entries: Vec<(BigRational, RadicalExpr)>,
}

static BASE: OnceBox<BaseTable> = OnceBox::new();

/// First-quadrant angles whose `2 cos` is tabulated rather than reached by
/// doubling: the special angles plus every `kπ/15` and `kπ/30`.
fn base_table() -> &'static BaseTable {
    BASE.get_or_init(|| {
        let mut entries = Vec::new();
        for t in [rat(0, 1), rat(1, 6), rat(1, 5), rat(1, 4), rat(1, 3), rat(2, 5), rat(1, 2)] {
            let v = table_two_cos(&t).unwrap();
            entries.push((t, v));
        }
        for k in 1..=15i64 {
            let t = rat(k, 30);
            if entries.iter().any(|(u, _)| *u == t) {
                continue;
            }
            let v = worked_forms(&t).or_else(|| table_two_cos(&t)).unwrap_or_else(|| derived_thirtieth(k));
            entries.push((t, v));
        }
        Box::new(BaseTable { entries })
    })
}

fn base_two_cos(t: &BigRational) -> Option<RadicalExpr> {
    base_table().entries.iter().find(|(u, _)| u == t).map(|(_, v)| v.clone())
}

/// `2 cos(t·π)` for `t` in `[0, 1/2]` with a square-root denominator.
fn first_quadrant_tower(t: &BigRational) -> RadicalExpr {
    if let Some(v) = base_two_cos(t) {
        return v;
    }
    // 2cos θ = sqrt(2 + 2cos 2θ), θ <= π/2
    let doubled = t * rat(2, 1);
    debug_assert!(t.denom() % 2u32 == BigInt::zero());
    if doubled <= rat(1, 2) {
        two_plus(first_quadrant_tower(&doubled)).sqrt()
    } else {
        // 2cos 2θ = -2cos(π - 2θ)
        RadicalExpr::int(2)
            .minus(first_quadrant_tower(&(BigRational::one() - doubled)))
            .sqrt()
    }
}

/// `2 + e`, splicing the terms of a sum so the result reads flat.
fn two_plus(e: RadicalExpr) -> RadicalExpr {
    match e {
        RadicalExpr::Sum(head, tail) => {
            let mut out = RadicalExpr::int(2).plus(*head);
            for (sign, term) in tail {
                out = match sign {
                    radical::Sign::Plus => out.plus(term),
                    radical::Sign::Minus => out.minus(term),
                };
            }
            out
        }
        other => RadicalExpr::int(2).plus(other),
    }
}

/// Nested-square-root tower for `2 sin(a)` or `2 cos(a)`, `a` in `(0, π/2]`.
///
/// `None` when `a` is outside that range or its denominator has an odd part
/// outside `{1, 3, 5, 15}`.
pub fn tower(a: &RationalAngle, which: TrigFunc) -> Option<RadicalExpr> {
    let t = a.turns();
    if t.is_zero() || *t > rat(1, 2) || !has_square_root_tower(a) {
        return None;
    }
    let e = first_quadrant_tower(&cos_turns(a, which));
    verify(&e, a, which);
    Some(e)
}

/// Cross-check a tower against the dyadic bracketing route at 40 digits.
fn verify(e: &RadicalExpr, a: &RationalAngle, which: TrigFunc) {
    let bits = crate::bits_for_digits(40);
    let tower_value = radical::enclose(e, bits).expect("tower radicands are positive");
    let other = two_cos_turns(&cos_turns(a, which), bits);
    let prec = bits + 16;
    assert!(
        tower_value.to_interval(prec).intersects(&other.with_prec(prec)),
        "tower for {a} disagrees with bracketing"
    );
}

/// Exact `sin(a)` or `cos(a)` as a radical, for any angle whose denominator
/// has odd part in `{1, 3, 5, 15}`.
pub fn exact_value(a: &RationalAngle, which: TrigFunc) -> Option<RadicalExpr> {
    if !has_square_root_tower(a) {
        return None;
    }
    let t = cos_turns(a, which);
    let two_cos = signed_from_first_quadrant(&t, |r| Some(first_quadrant_tower(r)))?;
    Some(halve(two_cos))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::{numeric_equal, parse};
    use alloc::string::ToString;

    fn angle(p: i64, q: i64) -> RationalAngle {
        RationalAngle::new(p, q).unwrap()
    }

    #[test]
    fn doubling_towers() {
        let t = tower(&angle(1, 32), TrigFunc::Cos).unwrap();
        assert_eq!(t.to_string(), "sqrt(2 + sqrt(2 + sqrt(2 + sqrt(2))))");
        assert_eq!(tower(&angle(1, 4), TrigFunc::Cos).unwrap().to_string(), "sqrt(2)");
        let s = tower(&angle(1, 96), TrigFunc::Sin).unwrap();
        assert_eq!(s.to_string(), "sqrt(2 - sqrt(2 + sqrt(2 + sqrt(2 + sqrt(3)))))");
        assert_eq!(tower(&angle(1, 48), TrigFunc::Cos).unwrap().to_string(), "sqrt(2 + sqrt(2 + sqrt(2 + sqrt(3))))");
    }

    #[test]
    fn gift_radicals() {
        assert_eq!(tower(&angle(1, 24), TrigFunc::Sin).unwrap().to_string(), "sqrt(2 - sqrt(2 + sqrt(3)))");
        assert_eq!(tower(&angle(1, 8), TrigFunc::Sin).unwrap().to_string(), "sqrt(2 - sqrt(2))");
        assert_eq!(tower(&angle(1, 8), TrigFunc::Cos).unwrap().to_string(), "sqrt(2 + sqrt(2))");
        assert_eq!(
            tower(&angle(1, 120), TrigFunc::Sin).unwrap().to_string(),
            "sqrt(2 - sqrt(2 + sqrt(3/16) + sqrt(15/16) + sqrt(5/8 - sqrt(5/64))))"
        );
    }

    #[test]
    fn out_of_range_or_unsupported() {
        assert!(tower(&angle(0, 1), TrigFunc::Cos).is_none());
        assert!(tower(&angle(3, 4), TrigFunc::Cos).is_none());
        assert!(tower(&angle(1, 9), TrigFunc::Cos).is_none());
        assert!(tower(&angle(1, 7), TrigFunc::Sin).is_none());
        assert_eq!(tower(&angle(1, 2), TrigFunc::Cos).unwrap().to_string(), "0");
        assert_eq!(tower(&angle(1, 2), TrigFunc::Sin).unwrap().to_string(), "2");
    }

    #[test]
    fn exact_values_from_table() {
        assert_eq!(exact_value(&angle(2, 5), TrigFunc::Cos).unwrap().to_string(), "(sqrt(5) - 1)/4");
        assert_eq!(exact_value(&angle(1, 2), TrigFunc::Sin).unwrap().to_string(), "1");
        assert_eq!(exact_value(&angle(1, 1), TrigFunc::Cos).unwrap().to_string(), "-1");
        assert!(exact_value(&angle(1, 9), TrigFunc::Cos).is_none());
        let c = exact_value(&angle(2, 15), TrigFunc::Cos).unwrap();
        let want = parse("((1 + sqrt(5))/4 + sqrt(3)*sqrt(10 - 2*sqrt(5))/4)/2").unwrap();
        assert!(numeric_equal(&c, &want, 40).unwrap());
    }

    #[test]
    fn worked_forms_match_sum_formula() {
        for (k, t) in [(1, rat(1, 30)), (4, rat(2, 15))] {
            let worked = worked_forms(&t).unwrap();
            let derived = derived_thirtieth(k);
            assert!(numeric_equal(&worked, &derived, 40).unwrap(), "k = {k}");
        }
    }
}
