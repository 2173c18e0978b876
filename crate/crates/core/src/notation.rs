//! Polynomial text in three notations.
//!
//! - `Modern`: `5x - 5x^3 + x^5`.
//! - `Stevin`: the exponent follows the coefficient in parentheses, standing
//!   in for a circled numeral: `5(1) - 5(3) + 1(5)`. A constant is a bare
//!   integer; `c(0)` is accepted on input.
//! - `Viete`: letters code the power, `N = x`, `Q = x²`, `C = x³`, and a run
//!   of `Q`s and `C`s multiplies (`QC = x⁵`): `5N - 5C + 1QC`.
//!
//! Terms are printed in ascending powers. The historical dialects always
//! print the coefficient, including `1`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactpoly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NotationDialect {
    Modern,
    Stevin,
    Viete,
}

impl FromStr for NotationDialect {
    type Err = NotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "modern" => Ok(NotationDialect::Modern),
            "stevin" => Ok(NotationDialect::Stevin),
            "viete" | "viète" => Ok(NotationDialect::Viete),
            _ => Err(NotationError::UnknownDialect),
        }
    }
}

impl fmt::Display for NotationDialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotationDialect::Modern => "modern",
            NotationDialect::Stevin => "stevin",
            NotationDialect::Viete => "viete",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NotationError {
    #[error("syntax error at offset {offset}: expected {expected}")]
    Syntax { offset: usize, expected: &'static str },
    #[error("not expressible in {dialect} notation: {reason}")]
    UnsupportedDialect { dialect: NotationDialect, reason: &'static str },
    #[error("dialect must be one of modern, stevin, viete")]
    UnknownDialect,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&mut self, expected: &'static str) -> NotationError {
        self.skip_ws();
        NotationError::Syntax { offset: self.pos, expected }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        self.text[start..self.pos].parse().ok()
    }

    fn exponent(&mut self) -> Result<usize, NotationError> {
        let offset = {
            self.skip_ws();
            self.pos
        };
        self.integer()
            .ok_or_else(|| self.error("an exponent"))?
            .to_usize()
            .filter(|&e| e <= 1 << 20)
            .ok_or(NotationError::Syntax { offset, expected: "a smaller exponent" })
    }
}

fn parse_term(c: &mut Cursor<'_>, dialect: NotationDialect) -> Result<(BigInt, usize), NotationError> {
    match dialect {
        NotationDialect::Modern => {
            let coeff = c.integer();
            if !c.eat('x') {
                return coeff.map(|k| (k, 0)).ok_or_else(|| c.error("an integer or 'x'"));
            }
            let e = if c.eat('^') { c.exponent()? } else { 1 };
            Ok((coeff.unwrap_or_else(BigInt::one), e))
        }
        NotationDialect::Stevin => {
            let coeff = c.integer().ok_or_else(|| c.error("an integer"))?;
            if !c.eat('(') {
                return Ok((coeff, 0));
            }
            let e = c.exponent()?;
            if !c.eat(')') {
                return Err(c.error("')'"));
            }
            Ok((coeff, e))
        }
        NotationDialect::Viete => {
            let coeff = c.integer().ok_or_else(|| c.error("an integer"))?;
            c.skip_ws();
            let start = c.pos;
            let mut e = 0usize;
            let mut letters = 0;
            let mut saw_n = false;
            while let Some(ch) = c.text[c.pos..].chars().next() {
                let w = match ch {
                    'N' => 1,
                    'Q' => 2,
                    'C' => 3,
                    _ if ch.is_ascii_alphabetic() => return Err(c.error("'N', 'Q' or 'C'")),
                    _ => break,
                };
                if saw_n || (ch == 'N' && letters > 0) {
                    return Err(c.error("'N' on its own"));
                }
                saw_n = ch == 'N';
                letters += 1;
                e += w;
                c.pos += 1;
            }
            if c.pos == start {
                if coeff.is_zero() {
                    return Ok((coeff, 0));
                }
                return Err(c.error("'N', 'Q' or 'C'"));
            }
            Ok((coeff, e))
        }
    }
}

/// Parse a polynomial; like terms are combined and order does not matter.
pub fn parse_poly(text: &str, dialect: NotationDialect) -> Result<Polynomial, NotationError> {
    let mut c = Cursor { text, pos: 0 };
    let mut acc: Vec<BigInt> = Vec::new();
    let mut negative = c.eat('-');
    if !negative {
        c.eat('+');
    }
    loop {
        let (k, e) = parse_term(&mut c, dialect)?;
        if acc.len() <= e {
            acc.resize(e + 1, BigInt::zero());
        }
        if negative {
            acc[e] -= k;
        } else {
            acc[e] += k;
        }
        if c.eat('+') {
            negative = false;
        } else if c.eat('-') {
            negative = true;
        } else if c.peek().is_none() {
            break;
        } else {
            return Err(c.error("'+', '-' or end of input"));
        }
    }
    Ok(Polynomial::new(acc))
}

/// Letter code of `x^e` (`e >= 1`): `N` for 1, otherwise `Q`s before `C`s
/// with as many `C`s as possible (4 → `QQ`, 7 → `QQC`).
pub fn viete_code(e: usize) -> String {
    debug_assert!(e >= 1);
    if e == 1 {
        return "N".into();
    }
    let qs = match e % 3 {
        0 => 0,
        2 => 1,
        _ => 2,
    };
    let cs = (e - 2 * qs) / 3;
    let mut s = String::with_capacity(qs + cs);
    s.extend(core::iter::repeat_n('Q', qs));
    s.extend(core::iter::repeat_n('C', cs));
    s
}

/// Canonical text of `p`, terms in ascending powers.
pub fn print_poly(p: &Polynomial, dialect: NotationDialect) -> Result<String, NotationError> {
    if p.is_zero() {
        return Ok("0".into());
    }
    if dialect == NotationDialect::Viete && !p.coeff(0).is_zero() {
        return Err(NotationError::UnsupportedDialect {
            dialect,
            reason: "there is no letter for a constant term",
        });
    }
    let mut out = String::new();
    for (e, k) in p.terms() {
        if out.is_empty() {
            if k.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if k.is_negative() { " - " } else { " + " });
        }
        let mag = k.abs();
        let _ = match dialect {
            NotationDialect::Modern => {
                if e == 0 || !mag.is_one() {
                    let _ = write!(out, "{mag}");
                }
                match e {
                    0 => Ok(()),
                    1 => write!(out, "x"),
                    _ => write!(out, "x^{e}"),
                }
            }
            NotationDialect::Stevin if e == 0 => write!(out, "{mag}"),
            NotationDialect::Stevin => write!(out, "{mag}({e})"),
            NotationDialect::Viete => write!(out, "{mag}{}", viete_code(e)),
        };
    }
    Ok(out)
}

/// Re-print `text` from one notation in another.
pub fn convert(text: &str, from: NotationDialect, to: NotationDialect) -> Result<String, NotationError> {
    print_poly(&parse_poly(text, from)?, to)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::monic_cheb;
    use NotationDialect::*;

    #[test]
    fn parses_each_dialect() {
        let v5 = Polynomial::from_i64(&[0, 5, 0, -5, 0, 1]);
        assert_eq!(parse_poly("1QC - 5C + 5N", Viete).unwrap(), v5);
        assert_eq!(parse_poly("5(1) - 5(3) + 1(5)", Stevin).unwrap(), v5);
        assert_eq!(parse_poly("x^5 - 5x^3 + 5x", Modern).unwrap(), v5);
        assert_eq!(parse_poly("x", Modern).unwrap(), Polynomial::x());
        assert_eq!(parse_poly("2x + 3x - x", Modern).unwrap(), Polynomial::from_i64(&[0, 4]));
        assert_eq!(parse_poly("7(0) + 1(2)", Stevin).unwrap(), Polynomial::from_i64(&[7, 0, 1]));
        assert_eq!(parse_poly("1CQ", Viete).unwrap(), Polynomial::monomial(1.into(), 5));
    }

    #[test]
    fn prints_each_dialect() {
        let v5 = monic_cheb(5);
        assert_eq!(print_poly(&v5, Modern).unwrap(), "5x - 5x^3 + x^5");
        assert_eq!(print_poly(&v5, Stevin).unwrap(), "5(1) - 5(3) + 1(5)");
        assert_eq!(print_poly(&v5, Viete).unwrap(), "5N - 5C + 1QC");
        assert_eq!(print_poly(&Polynomial::zero(), Modern).unwrap(), "0");
        assert_eq!(print_poly(&Polynomial::from_i64(&[-1, -1]), Modern).unwrap(), "-1 - x");
        assert!(print_poly(&monic_cheb(4), Viete).is_err());
    }

    #[test]
    fn letter_codes() {
        let codes: Vec<String> = (1..=9).map(viete_code).collect();
        assert_eq!(codes, ["N", "Q", "C", "QQ", "QC", "CC", "QQC", "QCC", "CCC"]);
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(
            parse_poly("1QX", Viete),
            Err(NotationError::Syntax { offset: 2, expected: "'N', 'Q' or 'C'" })
        );
        assert!(matches!(parse_poly("1NQ", Viete), Err(NotationError::Syntax { offset: 2, .. })));
        assert!(matches!(parse_poly("3(2", Stevin), Err(NotationError::Syntax { offset: 3, .. })));
        assert!(matches!(parse_poly("", Modern), Err(NotationError::Syntax { offset: 0, .. })));
        assert!(matches!(parse_poly("x x", Modern), Err(NotationError::Syntax { offset: 2, .. })));
    }
}
