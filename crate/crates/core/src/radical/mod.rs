//! Nested-radical expression trees.
//!
//! Values are built from rational literals with `+ - * /` and square roots.
//! Trees are never simplified behind the caller's back: what is parsed or
//! constructed is what gets printed. Equality of values is decided
//! numerically (see [`numeric_equal`]).

mod eval;
mod parse;
mod print;

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use eval::{evaluate, numeric_equal, EvalError, NodePath};
pub(crate) use eval::{enclose, Enclosure};
pub use parse::{parse, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RadicalExpr {
    Literal(BigRational),
    Sqrt(Box<RadicalExpr>),
    /// `head ± t1 ± t2 …`; the tail is never empty.
    Sum(Box<RadicalExpr>, Vec<(Sign, RadicalExpr)>),
    /// At least two factors.
    Product(Vec<RadicalExpr>),
    Quotient(Box<RadicalExpr>, Box<RadicalExpr>),
}

impl RadicalExpr {
    pub fn int(v: i64) -> Self {
        RadicalExpr::Literal(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        RadicalExpr::Literal(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn literal(r: BigRational) -> Self {
        RadicalExpr::Literal(r)
    }

    pub fn sqrt(self) -> Self {
        RadicalExpr::Sqrt(Box::new(self))
    }

    pub fn plus(self, rhs: RadicalExpr) -> Self {
        self.join(Sign::Plus, rhs)
    }

    pub fn minus(self, rhs: RadicalExpr) -> Self {
        self.join(Sign::Minus, rhs)
    }

    fn join(self, sign: Sign, rhs: RadicalExpr) -> Self {
        match self {
            RadicalExpr::Sum(head, mut tail) => {
                tail.push((sign, rhs));
                RadicalExpr::Sum(head, tail)
            }
            other => RadicalExpr::Sum(Box::new(other), vec![(sign, rhs)]),
        }
    }

    pub fn times(self, rhs: RadicalExpr) -> Self {
        match self {
            RadicalExpr::Product(mut fs) => {
                fs.push(rhs);
                RadicalExpr::Product(fs)
            }
            other => RadicalExpr::Product(vec![other, rhs]),
        }
    }

    pub fn over(self, rhs: RadicalExpr) -> Self {
        RadicalExpr::Quotient(Box::new(self), Box::new(rhs))
    }

    /// `-e`, as the product `-1 · e` (literals are negated in place).
    pub fn negate(self) -> Self {
        match self {
            RadicalExpr::Literal(r) => RadicalExpr::Literal(-r),
            other => RadicalExpr::Product(vec![RadicalExpr::int(-1), other]),
        }
    }

    pub fn as_literal(&self) -> Option<&BigRational> {
        match self {
            RadicalExpr::Literal(r) => Some(r),
            _ => None,
        }
    }

    /// Number of edges on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        match self {
            RadicalExpr::Literal(_) => 0,
            RadicalExpr::Sqrt(c) => 1 + c.depth(),
            RadicalExpr::Sum(h, t) => 1 + t.iter().map(|(_, e)| e.depth()).fold(h.depth(), usize::max),
            RadicalExpr::Product(fs) => 1 + fs.iter().map(RadicalExpr::depth).max().unwrap_or(0),
            RadicalExpr::Quotient(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Number of square-root nodes.
    pub fn sqrt_count(&self) -> usize {
        match self {
            RadicalExpr::Literal(_) => 0,
            RadicalExpr::Sqrt(c) => 1 + c.sqrt_count(),
            RadicalExpr::Sum(h, t) => h.sqrt_count() + t.iter().map(|(_, e)| e.sqrt_count()).sum::<usize>(),
            RadicalExpr::Product(fs) => fs.iter().map(RadicalExpr::sqrt_count).sum(),
            RadicalExpr::Quotient(a, b) => a.sqrt_count() + b.sqrt_count(),
        }
    }
}
