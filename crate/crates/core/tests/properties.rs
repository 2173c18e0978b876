//! Property tests for the invariants of each module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use romanus::angles::{tower, two_trig_value};
use romanus::exactpoly::{chebyshev_t, monic_cheb};
use romanus::notation::{parse_poly, print_poly};
use romanus::radical::{evaluate, parse, Sign};
use romanus::solver::{solve, solve_gift, solve_numeric, ChebEquation, Rhs, SolutionSet};
use romanus::{NotationDialect, Polynomial, PrecisionDecimal, RadicalExpr, RationalAngle, TrigFunc};

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn pow10_recip(d: i32) -> BigRational {
    let p = num_traits::pow(BigInt::from(10), d.unsigned_abs() as usize);
    if d >= 0 {
        BigRational::new(BigInt::one(), p)
    } else {
        BigRational::from_integer(p)
    }
}

fn close(a: &PrecisionDecimal, b: &PrecisionDecimal, tol: &BigRational) -> bool {
    (a.to_rational() - b.to_rational()).abs() <= *tol
}

fn values(set: &SolutionSet) -> Vec<BigRational> {
    set.solutions.iter().map(|s| s.value.to_rational()).collect()
}

// Exponents n ≤ 200 are checked exhaustively; they are cheap.

#[test]
fn recurrence() {
    let two_x = Polynomial::from_i64(&[0, 2]);
    let (mut prev, mut cur) = (chebyshev_t(0), chebyshev_t(1));
    for n in 2..=200 {
        let next = &(&two_x * &cur) - &prev;
        assert_eq!(chebyshev_t(n), next, "n = {n}");
        prev = cur;
        cur = next;
    }
}

#[test]
fn parity() {
    for n in 0..=100 {
        let v = monic_cheb(n);
        assert!(v.terms().all(|(e, _)| e % 2 == n % 2), "n = {n}");
        assert!(v.has_parity(n % 2));
    }
}

#[test]
fn scaling_bridge() {
    // V_n(x) = 2 T_n(x/2): the x^i coefficients satisfy v_i 2^i = 2 t_i.
    for n in 0..=64 {
        let (v, t) = (monic_cheb(n), chebyshev_t(n));
        assert_eq!(v.degree(), t.degree());
        for i in 0..=n {
            assert_eq!(v.coeff(i) << i, t.coeff(i) * 2, "n = {n}, i = {i}");
        }
    }
}

#[test]
fn monic_composition() {
    for n in 1..=16usize {
        for m in 1..=256 / n {
            assert_eq!(monic_cheb(n).compose(&monic_cheb(m)), monic_cheb(n * m), "{n} ∘ {m}");
        }
    }
}

#[test]
fn monic_endpoints() {
    for n in 0..=60 {
        let v = monic_cheb(n);
        assert_eq!(v.eval_exact(&rat(2, 1)), rat(2, 1));
        let at_minus = if n % 2 == 0 { rat(2, 1) } else { rat(-2, 1) };
        assert_eq!(v.eval_exact(&rat(-2, 1)), at_minus);
    }
}

// Random radical trees.

fn literal() -> impl Strategy<Value = RadicalExpr> {
    (-999_999i64..=999_999, 1i64..=999_999).prop_map(|(p, q)| RadicalExpr::Literal(rat(p, q)))
}

fn tree() -> impl Strategy<Value = RadicalExpr> {
    literal().prop_recursive(8, 96, 4, |inner| {
        let sign = prop_oneof![Just(Sign::Plus), Just(Sign::Minus)];
        prop_oneof![
            inner.clone().prop_map(|e| RadicalExpr::Sqrt(Box::new(e))),
            (inner.clone(), prop::collection::vec((sign, inner.clone()), 1..4))
                .prop_map(|(h, t)| RadicalExpr::Sum(Box::new(h), t)),
            prop::collection::vec(inner.clone(), 2..4).prop_map(RadicalExpr::Product),
            (inner.clone(), inner).prop_map(|(a, b)| RadicalExpr::Quotient(Box::new(a), Box::new(b))),
        ]
    })
}

fn supported_angle() -> impl Strategy<Value = RationalAngle> {
    let dens = [3i64, 4, 5, 6, 8, 10, 12, 15, 16, 20, 24, 30, 32, 40, 48, 60, 64, 96, 120];
    (prop::sample::select(dens.to_vec()), 1i64..120)
        .prop_filter_map("p/q in (0, 1/2]", |(q, p)| (2 * p <= q && p.gcd(&q) == 1).then(|| RationalAngle::new(p, q).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn radical_round_trip(e in tree()) {
        prop_assert!(e.depth() <= 8);
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e, "{}", text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn monotone_refinement(a in supported_angle(), r in (0i64..10_000, 1i64..1000), d1 in 3u32..30, extra in 1u32..30) {
        let e = tower(&a, TrigFunc::Sin).unwrap().plus(RadicalExpr::Literal(rat(r.0, r.1)).sqrt());
        let d2 = d1 + extra;
        let (v1, v2) = (evaluate(&e, d1).unwrap(), evaluate(&e, d2).unwrap());
        prop_assert!(v1.guaranteed_digits() >= d1 && v2.guaranteed_digits() >= d2);
        prop_assert!(close(&v1, &v2, &(pow10_recip(d1 as i32) * BigInt::from(2))));
    }

    #[test]
    fn squaring_check(a in supported_angle(), which in prop_oneof![Just(TrigFunc::Sin), Just(TrigFunc::Cos)], d in 5u32..40) {
        // 2 + 2cos is a nonnegative radicand built from a tower.
        let c = RadicalExpr::int(2).plus(tower(&a, which).unwrap());
        let e = c.clone().sqrt();
        let (x, y) = (evaluate(&e, d).unwrap().to_rational(), evaluate(&c, d).unwrap().to_rational());
        prop_assert!((&x * &x - y).abs() <= pow10_recip(d as i32 - 2));
    }

    #[test]
    fn trig_consistency(p in -999i64..=999, q in 1i64..=1000, n in 1u32..=50) {
        // 2t is a root of V_n(x) = 2 T_n(t), so the solver's numeric route must
        // report it. This checks T_n(t) = cos(n arccos t) without the polynomial.
        prop_assume!(p.abs() < q);
        let t = rat(p, q);
        let c = chebyshev_t(n as usize).eval_exact(&t) * BigInt::from(2);
        let eq = ChebEquation::new(n, Rhs::Radical(RadicalExpr::Literal(c))).unwrap();
        let set = solve_numeric(&eq, 36).unwrap();
        let target = &t * BigInt::from(2);
        let tol = pow10_recip(30);
        prop_assert!(values(&set).iter().any(|x| (x - &target).abs() <= tol), "t = {}", t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 20, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn root_completeness(p in 1i64..60, q in prop::sample::select(vec![3i64, 4, 5, 6, 8, 10, 12, 15, 16, 20, 24, 30]),
                         negative in any::<bool>(), n in 1u32..=60) {
        prop_assume!(2 * p < q && p.gcd(&q) == 1);
        let t = tower(&RationalAngle::new(p, q).unwrap(), TrigFunc::Sin).unwrap();
        let b = if negative { t.negate() } else { t };
        let eq = ChebEquation::new(n, Rhs::Radical(b)).unwrap();
        let exact = solve(&eq, 32).unwrap();
        let numeric = solve_numeric(&eq, 32).unwrap();

        prop_assert_eq!(exact.solutions.len(), n as usize);
        prop_assert_eq!(exact.total_multiplicity(), n);
        prop_assert_eq!(exact.positive_count + exact.negative_count + exact.solutions.iter().filter(|s| s.value.is_zero()).count() as u32, n);
        let xs = values(&exact);
        prop_assert!(xs.windows(2).all(|w| w[0] < w[1]));
        let tol = pow10_recip(30);
        prop_assert!(exact.solutions.iter().all(|s| s.residual < tol && s.angle.is_some()));

        let ys = values(&numeric);
        prop_assert_eq!(ys.len(), xs.len());
        let tol = pow10_recip(25);
        prop_assert!(xs.iter().zip(&ys).all(|(x, y)| (x - y).abs() <= tol));
    }
}

#[test]
fn parametrization_example_one() {
    let b = parse("sqrt(2 + sqrt(2 + sqrt(2 + sqrt(2))))").unwrap();
    let set = solve(&ChebEquation::new(45, Rhs::Radical(b)).unwrap(), 30).unwrap();
    // π/96 + 2πk/45 = (15 + 64k)π/1440
    let mut expected: Vec<BigRational> = (0..45)
        .map(|k| two_trig_value(&RationalAngle::new(15 + 64 * k, 1440).unwrap(), TrigFunc::Sin, 30).to_rational())
        .collect();
    expected.sort();
    let got = values(&set);
    assert_eq!(got.len(), 45);
    let tol = pow10_recip(30) * BigInt::from(2);
    for (x, y) in got.iter().zip(&expected) {
        assert!((x - y).abs() <= tol);
    }
    assert_eq!((set.positive_count, set.negative_count), (23, 22));
}

#[test]
fn zeros_of_t_n() {
    for n in [2u32, 3, 4, 5, 8, 16] {
        let set = solve(&ChebEquation::new(n, Rhs::Radical(RadicalExpr::int(0))).unwrap(), 30).unwrap();
        let mut expected: Vec<BigRational> = (1..=n as i64)
            .map(|k| two_trig_value(&RationalAngle::new(2 * k - 1, 2 * n as i64).unwrap(), TrigFunc::Cos, 30).to_rational())
            .collect();
        expected.sort();
        let got = values(&set);
        assert_eq!(got.len(), n as usize);
        let tol = pow10_recip(30) * BigInt::from(2);
        assert!(got.iter().zip(&expected).all(|(x, y)| (x - y).abs() <= tol), "n = {n}");
        // sine form: 2cos((2k-1)π/2n) = 2sin(π/2 - (2k-1)π/2n)
        for s in &set.solutions {
            let t = s.angle.as_ref().unwrap().signed_turns();
            let k2 = (rat(1, 2) - t) * BigInt::from(2 * n);
            assert!(k2.is_integer() && k2.to_integer().is_odd(), "n = {n}");
        }
    }
}

#[test]
fn gift_residuals_from_decimals() {
    let g = solve_gift(30).unwrap();
    let [a, b, c, d] = [&g.a, &g.b, &g.c, &g.d].map(|s| s.value.to_rational());
    let e = g.e.to_rational();
    let v5 = monic_cheb(5);
    let residuals = [
        v5.eval_exact(&a) - &b,
        Polynomial::from_i64(&[0, 3, 0, -1]).eval_exact(&b) - &c,
        monic_cheb(9).eval_exact(&b) - &d,
        &c * &c + &d * &d - rat(4, 1),
        v5.eval_exact(&e) - &a,
    ];
    for r in residuals {
        assert!(r.abs() < pow10_recip(16));
    }
}

#[test]
fn numeric_rhs_misses_example_two_root() {
    let b: PrecisionDecimal = "1.7401739822174228373".parse().unwrap();
    let set = solve_numeric(&ChebEquation::new(45, Rhs::Decimal(b)).unwrap(), 30).unwrap();
    let x = two_trig_value(&RationalAngle::new(1, 192).unwrap(), TrigFunc::Sin, 30).to_rational();
    assert_eq!(set.total_multiplicity(), 45);
    assert!(values(&set).iter().all(|v| (v - &x).abs() > pow10_recip(15)));
}

// Notation.

fn poly(constant: bool) -> impl Strategy<Value = Polynomial> {
    let coeff = prop_oneof![3 => Just(0i64), 1 => Just(1), 1 => Just(-1), 4 => -1_000_000i64..=1_000_000];
    prop::collection::vec(coeff, 1..=51).prop_map(move |mut c| {
        if !constant {
            c[0] = 0;
        }
        Polynomial::from_i64(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn notation_round_trip(p in poly(true), q in poly(false)) {
        for dialect in [NotationDialect::Modern, NotationDialect::Stevin] {
            prop_assert!(p.degree() <= 50);
            prop_assert_eq!(&parse_poly(&print_poly(&p, dialect).unwrap(), dialect).unwrap(), &p);
        }
        let v = print_poly(&q, NotationDialect::Viete).unwrap();
        prop_assert_eq!(&parse_poly(&v, NotationDialect::Viete).unwrap(), &q);
    }

    #[test]
    fn cross_dialect(q in poly(false)) {
        let modern = print_poly(&q, NotationDialect::Modern).unwrap();
        let stevin = print_poly(&parse_poly(&modern, NotationDialect::Modern).unwrap(), NotationDialect::Stevin).unwrap();
        let viete = print_poly(&parse_poly(&stevin, NotationDialect::Stevin).unwrap(), NotationDialect::Viete).unwrap();
        let back = print_poly(&parse_poly(&viete, NotationDialect::Viete).unwrap(), NotationDialect::Modern).unwrap();
        prop_assert_eq!(back, modern);
    }
}

#[test]
fn zero_polynomial_prints_everywhere() {
    for d in [NotationDialect::Modern, NotationDialect::Stevin, NotationDialect::Viete] {
        let text = print_poly(&Polynomial::zero(), d).unwrap();
        assert!(parse_poly(&text, d).unwrap().is_zero());
    }
    assert!(Polynomial::zero().coeffs().iter().all(Zero::is_zero));
}
