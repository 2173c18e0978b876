//! Text and JSON rendering of results.

use serde_json::{json, Value};

use romanus::radical;
use romanus::solver::{AuditReport, Correction, Solution, SolutionSet};
use romanus::{BigInt, BigRational, PrecisionDecimal, RationalAngle};

/// Precision at which the published audit constants are printed.
const PUBLISHED_DIGITS: u32 = 19;

pub struct Report {
    command: &'static str,
    inputs: Value,
    result: Value,
    certified_digits: Option<u32>,
    /// Text lines; `true` marks lines also printed under `--quiet`.
    lines: Vec<(bool, String)>,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value, result: Value, certified_digits: Option<u32>) -> Self {
        Report { command, inputs, result, certified_digits, lines: Vec::new() }
    }

    /// A line that is part of the bare result.
    pub fn line(mut self, text: impl Into<String>) -> Self {
        self.lines.push((true, text.into()));
        self
    }

    /// A line shown only without `--quiet`.
    pub fn detail(mut self, text: impl Into<String>) -> Self {
        self.lines.push((false, text.into()));
        self
    }

    pub fn print(&self, as_json: bool, quiet: bool) {
        if as_json {
            let doc = json!({
                "command": self.command,
                "inputs": self.inputs,
                "result": self.result,
                "certified_digits": self.certified_digits,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialise"));
            return;
        }
        for (essential, text) in &self.lines {
            if *essential || !quiet {
                println!("{text}");
            }
        }
    }
}

pub fn decimal(d: &PrecisionDecimal) -> Value {
    Value::String(d.to_string())
}

/// `k` written as `1e-k` for the largest `k` with `r <= 10^-k`, or `0`.
pub fn bound(r: &BigRational) -> Value {
    use num_traits::{One, Zero};
    if r.is_zero() {
        return Value::String("0".into());
    }
    let mut k = 0u32;
    let mut p = BigRational::one();
    let ten = BigRational::from_integer(BigInt::from(10));
    while *r <= &p / &ten {
        p /= &ten;
        k += 1;
    }
    Value::String(format!("1e-{k}"))
}

fn angle_json(a: Option<&RationalAngle>) -> Value {
    a.map_or(Value::Null, |a| Value::String(a.to_string()))
}

pub fn solution_json(s: &Solution) -> Value {
    json!({
        "angle": angle_json(s.angle.as_ref()),
        "radical": s.radical.as_ref().map(ToString::to_string),
        "value": decimal(&s.value),
        "multiplicity": s.multiplicity,
    })
}

/// `2 sin(π/96) = sqrt(…)`, for text output.
pub fn solution_line(s: &Solution) -> String {
    let mut out = match &s.angle {
        Some(a) => format!("2 sin({})", a.pi_string()),
        None => "numeric".to_string(),
    };
    if let Some(r) = &s.radical {
        out.push_str(&format!(" = {r}"));
    }
    if s.multiplicity > 1 {
        out.push_str(&format!("  (multiplicity {})", s.multiplicity));
    }
    out
}

pub fn solution_set_json(set: &SolutionSet, b_angle: Option<&RationalAngle>) -> Value {
    let worst = set.solutions.iter().map(|s| &s.residual).max().cloned().unwrap_or_default();
    json!({
        "b_angle": angle_json(b_angle),
        "solutions": set.solutions.iter().map(solution_json).collect::<Vec<_>>(),
        "positive_count": set.positive_count,
        "negative_count": set.negative_count,
        "smallest_positive": set.smallest_positive,
        "residual_bound": bound(&worst),
    })
}

pub fn solution_set_lines(mut report: Report, set: &SolutionSet) -> Report {
    for s in &set.solutions {
        report = report.line(format!("{:>w$}  {}", s.value.to_string(), solution_line(s), w = width(set)));
    }
    let smallest = set.smallest_positive().map_or("none".to_string(), |s| s.value.to_string());
    report.detail(format!(
        "{} positive, {} negative (with multiplicity); smallest positive root {smallest}",
        set.positive_count, set.negative_count
    ))
}

fn width(set: &SolutionSet) -> usize {
    set.solutions.iter().map(|s| s.value.to_string().len()).max().unwrap_or(0)
}

fn correction_json(c: &Correction) -> Value {
    json!({
        "b": c.b.to_string(),
        "b_value": decimal(&c.b_value),
        "b_angle": c.angle.to_string(),
        "solution": solution_json(&c.solution),
        "status": c.status.to_string(),
    })
}

fn at_published(e: &romanus::RadicalExpr) -> Value {
    radical::evaluate(e, PUBLISHED_DIGITS).map_or(Value::Null, |d| decimal(&d))
}

pub fn audit(r: AuditReport) -> Report {
    let mut published = json!({
        "digits": PUBLISHED_DIGITS,
        "claimed_lhs": decimal(&r.claimed_lhs.round_to(PUBLISHED_DIGITS)),
        "b_value": at_published(&r.b),
    });
    if let Some(alt) = &r.alternative {
        published["alternative_b_value"] = at_published(&alt.b);
    }
    let result = json!({
        "example": r.example.to_string(),
        "status": r.status.to_string(),
        "b": r.b.to_string(),
        "b_value": decimal(&r.b_value),
        "b_angle": r.b_angle.to_string(),
        "claimed": r.claimed.as_ref().map(ToString::to_string),
        "claimed_angle": r.claimed_angle.to_string(),
        "claimed_lhs": decimal(&r.claimed_lhs),
        "solution": solution_json(&r.solution),
        "classification": r.classification.to_string(),
        "polygon_sides": r.polygon_sides.as_ref().map(ToString::to_string),
        "alternative": r.alternative.as_ref().map(correction_json),
        "corrected": r.corrected.as_ref().map(correction_json),
        "published_precision": published,
    });

    let mut report = Report::new("verify-romanus", json!({"example": r.example.to_string()}), result, Some(30))
        .line(format!("example {}: {}", r.example, r.status))
        .detail(format!("b = {}", r.b))
        .detail(format!("  = {} = 2 sin({})", r.b_value, r.b_angle.pi_string()));
    if let Some(c) = &r.claimed {
        report = report.detail(format!("published root {c} = 2 sin({})", r.claimed_angle.pi_string()));
    } else {
        report = report.detail(format!("published root 2 sin({})", r.claimed_angle.pi_string()));
    }
    report = report
        .detail(format!(
            "V_45 at the published root = {} ({} to {PUBLISHED_DIGITS} places)",
            r.claimed_lhs,
            r.claimed_lhs.round_to(PUBLISHED_DIGITS)
        ))
        .detail(format!("smallest positive root {} = {}", r.solution.value, solution_line(&r.solution)))
        .detail(format!("classification {}", r.classification));
    if let Some(n) = &r.polygon_sides {
        report = report.detail(format!("side of the regular {n}-gon in a circle of radius 1"));
    }
    for (label, c) in [("alternative", &r.alternative), ("corrected", &r.corrected)] {
        if let Some(c) = c {
            report = report
                .detail(format!("{label} b = {} = {} = 2 sin({})", c.b, c.b_value, c.angle.pi_string()))
                .detail(format!("  smallest positive root {}: {}", solution_line(&c.solution), c.status));
        }
    }
    report
}
