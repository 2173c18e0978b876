use alloc::string::String;
use core::fmt::{self, Write};

use num_traits::{One, Signed};

use super::{RadicalExpr, Sign};

impl fmt::Display for RadicalExpr {
    /// Canonical text: re-parsing it yields a structurally equal tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_expr(self, &mut s);
        f.write_str(&s)
    }
}

fn write_expr(e: &RadicalExpr, out: &mut String) {
    match e {
        RadicalExpr::Literal(r) => {
            let _ = write!(out, "{r}");
        }
        RadicalExpr::Sqrt(c) => {
            out.push_str("sqrt(");
            write_expr(c, out);
            out.push(')');
        }
        RadicalExpr::Sum(head, tail) => {
            write_summand(head, out);
            for (sign, t) in tail {
                out.push_str(match sign {
                    Sign::Plus => " + ",
                    Sign::Minus => " - ",
                });
                write_summand(t, out);
            }
        }
        RadicalExpr::Product(fs) => {
            if let [RadicalExpr::Literal(m), x] = fs.as_slice() {
                if m.is_negative() && m.abs().is_one() && x.as_literal().is_none() {
                    out.push('-');
                    write_grouped(x, out);
                    return;
                }
            }
            for (i, f) in fs.iter().enumerate() {
                if i > 0 {
                    out.push('*');
                }
                match f {
                    RadicalExpr::Literal(_) | RadicalExpr::Sqrt(_) => write_expr(f, out),
                    _ => write_grouped(f, out),
                }
            }
        }
        RadicalExpr::Quotient(n, d) => {
            match **n {
                RadicalExpr::Sum(..) => write_grouped(n, out),
                _ => write_expr(n, out),
            }
            let after_digit = out.ends_with(|c: char| c.is_ascii_digit());
            out.push('/');
            let bare = match &**d {
                RadicalExpr::Sqrt(_) => true,
                RadicalExpr::Literal(r) => {
                    r.is_integer() && r.is_positive() && !after_digit
                }
                _ => false,
            };
            if bare {
                write_expr(d, out);
            } else {
                write_grouped(d, out);
            }
        }
    }
}

fn write_summand(e: &RadicalExpr, out: &mut String) {
    if matches!(e, RadicalExpr::Sum(..)) {
        write_grouped(e, out);
    } else {
        write_expr(e, out);
    }
}

fn write_grouped(e: &RadicalExpr, out: &mut String) {
    match e {
        RadicalExpr::Sqrt(_) => write_expr(e, out),
        _ => {
            out.push('(');
            write_expr(e, out);
            out.push(')');
        }
    }
}
