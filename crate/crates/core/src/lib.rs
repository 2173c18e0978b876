//! Exact arithmetic for the Chebyshev-polynomial problems of Adrianus Romanus
//! and François Viète.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`exactpoly`]: dense big-integer polynomials, `T_n`, the monic variant
//!   `V_n(x) = 2 T_n(x/2)` and polynomial composition.
//! - [`interval`] and [`decimal`]: fixed-point interval arithmetic with outward
//!   rounding, and decimals carrying a rigorous error bound.
//! - [`radical`]: nested-radical expression trees with a parser, a canonical
//!   printer and certified evaluation.
//! - [`angles`]: rational multiples of π, square-root towers for `2 sin` and
//!   `2 cos`, constructibility classes and composition chains.
//! - [`solver`]: solving `V_n(x) = b` through angle recognition, the audit of
//!   Romanus's worked examples, and the 1639 new-year's-gift system.
//! - [`notation`]: modern, Stevin and Viète polynomial notation.
//!
//! No floating-point transcendental function is used anywhere; every number
//! reported as a decimal is backed by an interval enclosure.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod angles;
pub mod decimal;
pub mod exactpoly;
pub mod interval;
pub mod notation;
pub mod radical;
pub mod solver;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use angles::{ConstructibilityClass, RationalAngle, TrigFunc};
pub use decimal::PrecisionDecimal;
pub use exactpoly::Polynomial;
pub use notation::NotationDialect;
pub use radical::RadicalExpr;

/// Exact rational number with big-integer parts, always kept reduced.
pub type Rational = BigRational;

/// Number of bits needed to resolve `digits` decimal digits (rounded up).
pub(crate) fn bits_for_digits(digits: u32) -> u32 {
    // log2(10) < 3.3220
    (digits as u64 * 33220).div_ceil(10000) as u32 + 1
}
