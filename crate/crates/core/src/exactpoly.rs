//! Dense polynomials with big-integer coefficients and the Chebyshev
//! polynomials of the first kind.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::interval::Interval;

/// Univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient vector and `degree()` is the index of the last entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Polynomial::from_i64(&[0, 1])
    }

    /// `c · x^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Polynomial::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// `(exponent, coefficient)` pairs of the nonzero terms in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// `p ∘ q`, by Horner's scheme over polynomials.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Exact value at a rational point.
    pub fn eval_exact(&self, r: &BigRational) -> BigRational {
        // Horner over a common denominator: sum c_i n^i d^(deg-i), then divide by d^deg.
        let n = r.numer();
        let d = r.denom();
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        let deg = self.coeffs.len().saturating_sub(1);
        BigRational::new(acc, num_traits::pow(d.clone(), deg))
    }

    /// Enclosure of the value over an interval argument.
    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let prec = x.prec();
        let mut acc = Interval::point_int(0, prec);
        for c in self.coeffs.iter().rev() {
            let ci = Interval::new(c << prec, c << prec, prec);
            acc = acc.mul(x).add(&ci);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// True if every nonzero term has exponent of the given parity.
    pub fn has_parity(&self, parity: usize) -> bool {
        self.terms().all(|(e, _)| e % 2 == parity % 2)
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Chebyshev polynomial of the first kind: `T_n(cos θ) = cos nθ`.
///
/// Built from `T_0 = 1`, `T_1 = x`, `T_{k+1} = 2x T_k - T_{k-1}`.
pub fn chebyshev_t(n: usize) -> Polynomial {
    three_term(n, Polynomial::constant(BigInt::one()), 2)
}

/// `V_n(x) = 2 T_n(x/2)`: monic for `n >= 1`, `V_n(2 cos θ) = 2 cos nθ`.
///
/// Satisfies `V_0 = 2`, `V_1 = x`, `V_{k+1} = x V_k - V_{k-1}`.
pub fn monic_cheb(n: usize) -> Polynomial {
    three_term(n, Polynomial::constant(BigInt::from(2)), 1)
}

fn three_term(n: usize, p0: Polynomial, x_factor: i64) -> Polynomial {
    if n == 0 {
        return p0;
    }
    let step = Polynomial::from_i64(&[0, x_factor]);
    let mut prev = p0;
    let mut cur = Polynomial::x();
    for _ in 1..n {
        let next = &(&step * &cur) - &prev;
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}
