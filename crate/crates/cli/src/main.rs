//! `romanus`: command-line front-end.
//!
//! Results go to stdout, diagnostics to stderr. Exit status is 0 on success,
//! 1 on a domain error (out of range, not recognised, unsupported) and 2 on
//! a usage or syntax error.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use romanus::angles::{self, AngleError};
use romanus::exactpoly::{chebyshev_t, monic_cheb};
use romanus::notation::{self, NotationError};
use romanus::radical::{self, EvalError, ParseError};
use romanus::solver::{self, ChebEquation, RomanusExample, Rhs, SolveError};
use romanus::{BigRational, NotationDialect, PrecisionDecimal, RationalAngle, TrigFunc};

use render::{decimal, solution_json, solution_line, Report};

const DEFAULT_DIGITS: &str = "30";

#[derive(Parser)]
#[command(name = "romanus", version, about = "Exact Chebyshev-polynomial problems of Romanus and Viète")]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print only the bare result.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Digits {
    /// Guaranteed decimal places.
    #[arg(long, default_value = DEFAULT_DIGITS, value_parser = clap::value_parser!(u32).range(1..=2000))]
    digits: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Print T_n, or V_n(x) = 2 T_n(x/2) with --monic.
    Gen {
        #[arg(value_parser = clap::value_parser!(u32).range(0..=4096))]
        n: u32,
        #[arg(long)]
        monic: bool,
        #[arg(long, default_value = "modern", value_parser = parse::<NotationDialect>)]
        dialect: NotationDialect,
    },
    /// Solve V_n(x) = b for a radical b.
    Solve {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=100_000))]
        n: u32,
        /// Right-hand side, e.g. "sqrt(2 + sqrt(2))".
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
        #[command(flatten)]
        digits: Digits,
        /// Largest denominator tried when recognising b.
        #[arg(long, default_value_t = solver::DEFAULT_MAX_Q, value_parser = clap::value_parser!(u64).range(2..))]
        max_q: u64,
    },
    /// Solve V_n(x) = b for a decimal b, taken at its printed value.
    SolveNumeric {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=100_000))]
        n: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse::<PrecisionDecimal>)]
        rhs_decimal: PrecisionDecimal,
        #[command(flatten)]
        digits: Digits,
    },
    /// Square-root tower for 2 sin or 2 cos of an angle in (0, π/2].
    Tower {
        /// Angle p/q, meaning (p/q)·π.
        #[arg(long, allow_hyphen_values = true, value_parser = parse::<RationalAngle>)]
        angle: RationalAngle,
        #[arg(long, value_parser = parse::<TrigFunc>)]
        func: TrigFunc,
        #[command(flatten)]
        digits: Digits,
    },
    /// Evaluate a radical expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        text: String,
        #[command(flatten)]
        digits: Digits,
    },
    /// Which root extractions an angle's 2 cos needs.
    Classify {
        #[arg(long, allow_hyphen_values = true, value_parser = parse::<RationalAngle>)]
        angle: RationalAngle,
    },
    /// Prime chain p1, p2, … with T_n = T_p1 ∘ T_p2 ∘ ….
    Chain {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Perimeter of the regular n-gon in the unit circle, and half of it.
    Pi {
        #[arg(long)]
        sides: u64,
        #[command(flatten)]
        digits: Digits,
    },
    /// Re-derive one of Romanus's worked examples.
    VerifyRomanus {
        #[arg(long, value_parser = parse::<RomanusExample>)]
        example: RomanusExample,
    },
    /// Solve the five-equation new-year's-gift system.
    Gift {
        #[command(flatten)]
        digits: Digits,
    },
    /// Re-print a polynomial in another notation.
    Convert {
        #[arg(long, value_parser = parse::<NotationDialect>)]
        from: NotationDialect,
        #[arg(long, value_parser = parse::<NotationDialect>)]
        to: NotationDialect,
        #[arg(allow_hyphen_values = true)]
        text: String,
    },
}

fn parse<T>(s: &str) -> Result<T, String>
where
    T: std::str::FromStr,
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e: T::Err| e.to_string())
}

/// A failed command: exit status 1 or 2 and its message.
struct Failure {
    usage: bool,
    message: String,
}

impl Failure {
    fn domain(message: impl ToString) -> Self {
        Failure { usage: false, message: message.to_string() }
    }

    fn usage(message: impl ToString) -> Self {
        Failure { usage: true, message: message.to_string() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::usage(e)
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::InvalidDigits => Failure::usage(e),
            _ => Failure::domain(e),
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::ZeroDegree | SolveError::InvalidDigits | SolveError::UnknownExample => Failure::usage(e),
            SolveError::Eval(inner) => inner.into(),
            _ => Failure::domain(e),
        }
    }
}

impl From<AngleError> for Failure {
    fn from(e: AngleError) -> Self {
        match e {
            AngleError::ZeroDenominator | AngleError::BadLiteral | AngleError::BadFunction | AngleError::ZeroDegree => {
                Failure::usage(e)
            }
            AngleError::Eval(inner) => inner.into(),
            _ => Failure::domain(e),
        }
    }
}

impl From<NotationError> for Failure {
    fn from(e: NotationError) -> Self {
        match e {
            NotationError::UnsupportedDialect { .. } => Failure::domain(e),
            _ => Failure::usage(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are successes; clap exits 2 on usage errors
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&cli.command) {
        Ok(report) => {
            report.print(cli.json, cli.quiet);
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(if f.usage { 2 } else { 1 })
        }
    }
}

fn run(command: &Command) -> Result<Report, Failure> {
    match command {
        Command::Gen { n, monic, dialect } => {
            let p = if *monic { monic_cheb(*n as usize) } else { chebyshev_t(*n as usize) };
            let text = notation::print_poly(&p, *dialect)?;
            let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
            Ok(Report::new(
                "gen",
                json!({"n": n, "monic": monic, "dialect": dialect.to_string()}),
                json!({"text": text, "coefficients": coeffs}),
                None,
            )
            .line(text))
        }

        Command::Solve { n, rhs, digits, max_q } => {
            let b = radical::parse(rhs)?;
            let eq = ChebEquation::new(*n, Rhs::Radical(b.clone()))?;
            let angle = solver::recognize_angle(eq.rhs(), *max_q)?;
            let set = solver::solve_with_max_q(&eq, digits.digits, *max_q)?;
            let mut report = Report::new(
                "solve",
                json!({"n": n, "rhs": b.to_string(), "digits": digits.digits, "max_q": max_q}),
                render::solution_set_json(&set, Some(&angle)),
                Some(digits.digits),
            );
            report = report.detail(format!("V_{n}(x) = {b}, where b = 2 sin({})", angle.pi_string()));
            Ok(render::solution_set_lines(report, &set))
        }

        Command::SolveNumeric { n, rhs_decimal, digits } => {
            let eq = ChebEquation::new(*n, Rhs::Decimal(rhs_decimal.clone()))?;
            let set = solver::solve_numeric(&eq, digits.digits)?;
            let report = Report::new(
                "solve-numeric",
                json!({"n": n, "rhs_decimal": rhs_decimal.to_string(), "digits": digits.digits}),
                render::solution_set_json(&set, None),
                Some(digits.digits),
            )
            .detail(format!("V_{n}(x) = {rhs_decimal}"));
            Ok(render::solution_set_lines(report, &set))
        }

        Command::Tower { angle, func, digits } => {
            let e = angles::tower(angle, *func).ok_or_else(|| {
                Failure::domain(format!(
                    "no square-root tower for 2 {func}({}): the angle must lie in (0, π/2] with a denominator \
                     whose odd part divides 15",
                    angle.pi_string()
                ))
            })?;
            let value = radical::evaluate(&e, digits.digits)?;
            Ok(Report::new(
                "tower",
                json!({"angle": angle.to_string(), "func": func.to_string(), "digits": digits.digits}),
                json!({"radical": e.to_string(), "value": decimal(&value)}),
                Some(digits.digits),
            )
            .line(e.to_string())
            .detail(format!("2 {func}({}) = {value}", angle.pi_string())))
        }

        Command::Eval { text, digits } => {
            let e = radical::parse(text)?;
            let value = radical::evaluate(&e, digits.digits)?;
            Ok(Report::new(
                "eval",
                json!({"text": text, "digits": digits.digits}),
                json!({"expression": e.to_string(), "value": decimal(&value)}),
                Some(digits.digits),
            )
            .line(value.to_string()))
        }

        Command::Classify { angle } => {
            let class = angles::classify(angle);
            Ok(Report::new(
                "classify",
                json!({"angle": angle.to_string()}),
                json!({
                    "class": class.to_string(),
                    "denominator": angle.denom().to_string(),
                    "square_root_tower": angles::has_square_root_tower(angle),
                }),
                None,
            )
            .line(class.to_string()))
        }

        Command::Chain { n } => {
            let chain = angles::factor_chain(*n)?;
            let text = if chain.is_empty() {
                "x".to_string()
            } else {
                chain.iter().map(|p| format!("T_{p}")).collect::<Vec<_>>().join(" ∘ ")
            };
            Ok(Report::new("chain", json!({"n": n}), json!({"chain": chain}), None)
                .line(chain.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
                .detail(format!("T_{n} = {text}")))
        }

        Command::Pi { sides, digits } => {
            let d = digits.digits;
            let perimeter = angles::polygon_perimeter(*sides, d)?;
            // Halving a value known to ±10^-(d+2) and rounding stays within ±10^-d.
            let fine = angles::polygon_perimeter(*sides, d + 2)?;
            let half = PrecisionDecimal::from_rational(&(fine.to_rational() / BigRational::from_integer(2.into())), d);
            Ok(Report::new(
                "pi",
                json!({"sides": sides, "digits": d}),
                json!({"perimeter": decimal(&perimeter), "pi_estimate": decimal(&half)}),
                Some(d),
            )
            .line(half.to_string())
            .detail(format!("perimeter of the {sides}-gon = {perimeter}")))
        }

        Command::VerifyRomanus { example } => {
            let report = solver::verify_romanus(*example)?;
            Ok(render::audit(report))
        }

        Command::Gift { digits } => {
            let g = solver::solve_gift(digits.digits)?;
            let mut report = Report::new(
                "gift",
                json!({"digits": digits.digits}),
                json!({
                    "A": solution_json(&g.a),
                    "B": solution_json(&g.b),
                    "C": solution_json(&g.c),
                    "D": solution_json(&g.d),
                    "E": {"angle": g.e_angle.to_string(), "value": decimal(&g.e)},
                    "residual_bounds": g.residuals.iter().map(render::bound).collect::<Vec<Value>>(),
                }),
                Some(digits.digits),
            );
            for (name, s) in [("A", &g.a), ("B", &g.b), ("C", &g.c), ("D", &g.d)] {
                report = report.line(format!("{name} = {}", s.value)).detail(format!("    {}", solution_line(s)));
            }
            Ok(report.line(format!("E = {}", g.e)).detail(format!("    2 sin({})", g.e_angle.pi_string())))
        }

        Command::Convert { from, to, text } => {
            let out = notation::convert(text, *from, *to)?;
            Ok(Report::new(
                "convert",
                json!({"from": from.to_string(), "to": to.to_string(), "text": text}),
                json!({"text": out}),
                None,
            )
            .line(out))
        }
    }
}
