use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{RadicalExpr, Sign};

/// Syntax error: byte offset into the input and the tokens that would have
/// been accepted there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: expected ", self.offset)?;
        for (i, e) in self.expected.iter().enumerate() {
            if i > 0 {
                f.write_str(if i + 1 == self.expected.len() { " or " } else { ", " })?;
            }
            f.write_str(e)?;
        }
        Ok(())
    }
}

impl core::error::Error for ParseError {}

const FACTOR_START: &[&str] = &["integer", "'sqrt'", "'('", "'-'"];

/// Parse the ASCII radical grammar:
///
/// ```text
/// expr   := term (('+' | '-') term)*
/// term   := factor (('*' | '/') factor)*
/// factor := INTEGER | INTEGER '/' INTEGER | 'sqrt' '(' expr ')' | '(' expr ')' | '-' factor
/// ```
///
/// `√` is accepted in place of `sqrt`. Right after a `/` operator the
/// fraction-literal rule is not applied, so `x/2/3` means `(x/2)/3`.
pub fn parse(text: &str) -> Result<RadicalExpr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error(FACTOR_START));
    }
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&["'+'", "'-'", "'*'", "'/'", "end of input"]));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError { offset: self.pos, expected: expected.to_vec() }
    }

    fn expect(&mut self, c: char, name: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<RadicalExpr, ParseError> {
        let head = self.term()?;
        let mut tail = Vec::new();
        loop {
            let sign = match self.peek() {
                Some('+') => Sign::Plus,
                Some('-') => Sign::Minus,
                _ => break,
            };
            self.pos += 1;
            tail.push((sign, self.term()?));
        }
        Ok(if tail.is_empty() { head } else { RadicalExpr::Sum(Box::new(head), tail) })
    }

    fn term(&mut self) -> Result<RadicalExpr, ParseError> {
        // A run of '*'-joined factors becomes one Product; '/' closes the run.
        let mut run = vec![self.factor(true)?];
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    run.push(self.factor(true)?);
                }
                Some('/') => {
                    self.pos += 1;
                    let numer = collapse(core::mem::take(&mut run));
                    let denom = self.factor(false)?;
                    run.push(RadicalExpr::Quotient(Box::new(numer), Box::new(denom)));
                }
                _ => break,
            }
        }
        Ok(collapse(run))
    }

    fn factor(&mut self, allow_fraction: bool) -> Result<RadicalExpr, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer();
                if allow_fraction {
                    let save = self.pos;
                    if self.peek() == Some('/') {
                        self.pos += 1;
                        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                            let at = self.pos;
                            let d = self.integer();
                            if d.is_zero() {
                                self.pos = at;
                                return Err(self.error(&["nonzero denominator"]));
                            }
                            return Ok(RadicalExpr::Literal(BigRational::new(n, d)));
                        }
                    }
                    self.pos = save;
                }
                Ok(RadicalExpr::Literal(BigRational::from_integer(n)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')', "')'")?;
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                Ok(self.factor(allow_fraction)?.negate())
            }
            Some('√') => {
                self.pos += '√'.len_utf8();
                self.sqrt_argument(allow_fraction)
            }
            Some('s') if self.rest().starts_with("sqrt") => {
                self.pos += 4;
                if self.peek() != Some('(') {
                    return Err(self.error(&["'('"]));
                }
                self.sqrt_argument(allow_fraction)
            }
            _ => Err(self.error(FACTOR_START)),
        }
    }

    fn sqrt_argument(&mut self, allow_fraction: bool) -> Result<RadicalExpr, ParseError> {
        if self.peek() == Some('(') {
            self.pos += 1;
            let e = self.expr()?;
            self.expect(')', "')'")?;
            Ok(e.sqrt())
        } else {
            // "√2" style shorthand: the radicand is a single factor
            Ok(self.factor(allow_fraction)?.sqrt())
        }
    }

    fn integer(&mut self) -> BigInt {
        let r = self.rest();
        let len = r.bytes().take_while(u8::is_ascii_digit).count();
        let digits: String = r[..len].into();
        self.pos += len;
        digits.parse().expect("digit run")
    }
}

fn collapse(mut run: Vec<RadicalExpr>) -> RadicalExpr {
    if run.len() == 1 {
        run.pop().unwrap()
    } else {
        RadicalExpr::Product(run)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_square_roots() {
        let e = parse("sqrt(2+sqrt(2))").unwrap();
        let want = RadicalExpr::int(2).plus(RadicalExpr::int(2).sqrt()).sqrt();
        assert_eq!(e, want);
    }

    #[test]
    fn main_problem_rhs() {
        let e = parse("sqrt(7/4 - sqrt(5/16) - sqrt(15/8 - sqrt(45/64)))").unwrap();
        let want = RadicalExpr::ratio(7, 4)
            .minus(RadicalExpr::ratio(5, 16).sqrt())
            .minus(RadicalExpr::ratio(15, 8).minus(RadicalExpr::ratio(45, 64).sqrt()).sqrt())
            .sqrt();
        assert_eq!(e, want);
    }

    #[test]
    fn unbalanced_parenthesis() {
        let err = parse("sqrt(2").unwrap_err();
        assert_eq!(err.offset, 6);
        assert_eq!(err.expected, vec!["')'"]);
    }

    #[test]
    fn empty_and_trailing_input() {
        assert_eq!(parse("").unwrap_err().offset, 0);
        assert_eq!(parse("   ").unwrap_err().offset, 3);
        let err = parse("2 3").unwrap_err();
        assert_eq!(err.offset, 2);
        assert!(err.expected.contains(&"end of input"));
        assert_eq!(parse("1/0").unwrap_err().offset, 2);
        assert_eq!(parse("sqrt 2").unwrap_err().offset, 5);
    }

    #[test]
    fn unicode_root_alias() {
        assert_eq!(parse("√(2)").unwrap(), parse("sqrt(2)").unwrap());
        assert_eq!(parse("2 + √3").unwrap(), parse("2 + sqrt(3)").unwrap());
    }

    #[test]
    fn division_is_left_associative() {
        let e = parse("x").unwrap_err();
        assert_eq!(e.offset, 0);
        let q = parse("sqrt(2)/2/3").unwrap();
        let want = RadicalExpr::int(2)
            .sqrt()
            .over(RadicalExpr::int(2))
            .over(RadicalExpr::int(3));
        assert_eq!(q, want);
        assert_eq!(parse("6/4").unwrap(), RadicalExpr::ratio(3, 2));
    }

    #[test]
    fn unary_minus() {
        assert_eq!(parse("-3/4").unwrap(), RadicalExpr::ratio(-3, 4));
        assert_eq!(parse("-sqrt(2)").unwrap(), RadicalExpr::int(2).sqrt().negate());
        assert_eq!(parse("2 - -3").unwrap(), RadicalExpr::int(2).minus(RadicalExpr::int(-3)));
    }
}
