//! Reports for the single-value commands. Every exact number is carried as
//! an `"n/d"` string so nothing is lost in JSON.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;
use surdcf::approx::to_decimal;
use surdcf::cf::{
    canonicalize, discriminant_poly_in_cn, evaluate_general, expand, quadratic_equation, theorem1_report,
    theorem2_report, zero_block_table, CFExpansion, ConvergentTable, EpsilonCase, Theorem2,
};
use surdcf::notation::{parse_cf, parse_quad, render_cf, render_quad};
use surdcf::number::{QuadIrr, Rational, Sign};

use crate::error::{CliError, ExitStatus};

const DECIMAL_DIGITS: u32 = 30;

fn strings(ds: &[BigInt]) -> Vec<String> {
    ds.iter().map(BigInt::to_string).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ValueJson {
    pub rational_part: Rational,
    pub radicand: Rational,
    pub sign: Sign,
    pub text: String,
    pub decimal: String,
}

impl From<&QuadIrr> for ValueJson {
    fn from(x: &QuadIrr) -> Self {
        ValueJson {
            rational_part: x.rat().clone(),
            radicand: x.radicand().clone(),
            sign: x.sign(),
            text: render_quad(x),
            decimal: to_decimal(x, DECIMAL_DIGITS),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationJson {
    pub a2: String,
    pub a1: String,
    pub a0: String,
}

impl EquationJson {
    fn new(a2: &BigInt, a1: &BigInt, a0: &BigInt) -> Self {
        EquationJson { a2: a2.to_string(), a1: a1.to_string(), a0: a0.to_string() }
    }

    /// `7x^2+19x-17=0`
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (coef, var) in [(&self.a2, "x^2"), (&self.a1, "x"), (&self.a0, "")] {
            if coef == "0" {
                continue;
            }
            let (neg, mag) = match coef.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, coef.as_str()),
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if mag != "1" || var.is_empty() {
                out.push_str(mag);
            }
            out.push_str(var);
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str("=0");
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergentJson {
    pub k: i64,
    pub p: String,
    pub q: String,
}

fn convergent_rows(t: &ConvergentTable) -> Vec<ConvergentJson> {
    (-1..=t.last() as isize)
        .map(|k| ConvergentJson { k: k as i64, p: t.p(k).to_string(), q: t.q(k).to_string() })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub input: String,
    pub expansion: String,
    pub value: ValueJson,
    pub two_a: Rational,
    pub epsilon: Option<Rational>,
    pub frac_two_a: Option<Rational>,
    pub case: Option<EpsilonCase>,
    pub equation: Option<EquationJson>,
    pub theorem2: Option<Theorem2>,
    pub convergents: Vec<ConvergentJson>,
}

fn parse_periodic(text: &str) -> Result<CFExpansion, CliError> {
    let cf = parse_cf(text).map_err(|e| CliError::from_notation(e, text))?;
    if cf.repeating.is_empty() {
        return Err(CliError::new(ExitStatus::Parse, "error: expansion has no repeating block"));
    }
    Ok(cf)
}

pub fn eval(text: &str) -> Result<EvalReport, CliError> {
    let cf = parse_periodic(text)?;
    let x = evaluate_general(&cf)?;
    let two_a = x.rat() * &Rational::from(2);
    let digits: Vec<BigInt> = cf.initial.iter().chain(&cf.repeating).cloned().collect();
    let mut report = EvalReport {
        input: text.to_string(),
        expansion: render_cf(&cf),
        value: ValueJson::from(&x),
        two_a,
        epsilon: None,
        frac_two_a: None,
        case: None,
        equation: None,
        theorem2: None,
        convergents: convergent_rows(&ConvergentTable::build(&digits)?),
    };
    if cf.is_zero_periodic() {
        let t1 = theorem1_report(&cf.repeating)?;
        let (a2, a1, a0) = quadratic_equation(&cf.repeating)?;
        debug_assert_eq!(t1.two_a, report.two_a);
        report.epsilon = Some(t1.epsilon);
        report.frac_two_a = Some(t1.frac_two_a);
        report.case = Some(t1.case_flag);
        report.equation = Some(EquationJson::new(&a2, &a1, &a0));
        report.theorem2 = Some(theorem2_report(&cf.repeating)?);
    }
    Ok(report)
}

fn case_text(case: EpsilonCase) -> &'static str {
    match case {
        EpsilonCase::PGeQ => "p_{n-1} >= q_{n-2}, frac = epsilon",
        EpsilonCase::PLtQ => "p_{n-1} < q_{n-2}, frac = epsilon + 1",
    }
}

impl EvalReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "input       {}", self.input);
        let _ = writeln!(s, "value       {}", self.value.text);
        let _ = writeln!(s, "decimal     {}", self.value.decimal);
        let _ = writeln!(s, "two_a       {}", self.two_a);
        if let (Some(eps), Some(frac), Some(case)) = (&self.epsilon, &self.frac_two_a, self.case) {
            let _ = writeln!(s, "epsilon     {eps}");
            let _ = writeln!(s, "frac_two_a  {frac}  ({})", case_text(case));
        }
        if let Some(eq) = &self.equation {
            let _ = writeln!(s, "equation    {}", eq.render());
        }
        if let Some(t) = &self.theorem2 {
            let _ = writeln!(
                s,
                "theorem2    int_two_a={} neg_cn={} palindrome={}",
                t.int_two_a, t.neg_cn, t.palindrome
            );
        }
        let _ = writeln!(s, "convergents");
        for row in &self.convergents {
            let _ = writeln!(s, "  {:>3}  {} / {}", row.k, row.p, row.q);
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpandReport {
    pub input: String,
    pub value: ValueJson,
    pub expansion: String,
    pub initial: Vec<String>,
    pub repeating: Vec<String>,
}

pub fn expand_quad(text: &str, max_steps: usize) -> Result<ExpandReport, CliError> {
    let x = parse_quad(text).map_err(|e| CliError::from_notation(e, text))?;
    let cf = expand(&x, max_steps)?;
    Ok(ExpandReport {
        input: text.to_string(),
        value: ValueJson::from(&x),
        expansion: render_cf(&cf),
        initial: strings(&cf.initial),
        repeating: strings(&cf.repeating),
    })
}

impl ExpandReport {
    pub fn to_text(&self) -> String {
        format!("{}\n", self.expansion)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscriminantJson {
    pub a: String,
    pub b: String,
    pub c: String,
    pub denominator: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct EpsilonReport {
    pub input: String,
    pub block: Vec<String>,
    pub epsilon: Rational,
    pub two_a: Rational,
    pub frac_two_a: Rational,
    pub case: EpsilonCase,
    pub p_n_minus_1: String,
    pub q_n_minus_2: String,
    pub q_n_minus_1: String,
    pub palindromic: bool,
    pub congruence: bool,
    pub epsilon_zero: bool,
    pub discriminant: DiscriminantJson,
}

/// ε and its ingredients for `[0; (block)]`.
pub fn epsilon(text: &str) -> Result<EpsilonReport, CliError> {
    let cf = parse_periodic(text)?;
    if !cf.is_zero_periodic() {
        return Err(CliError::new(ExitStatus::Parse, "error: epsilon expects the form [0; (c1,...,cn)]"));
    }
    let block = &cf.repeating;
    let t1 = theorem1_report(block)?;
    let table = zero_block_table(block)?;
    let n = table.last() as isize;
    let disc = discriminant_poly_in_cn(&block[..block.len() - 1])?;
    Ok(EpsilonReport {
        input: text.to_string(),
        block: strings(block),
        epsilon: t1.epsilon,
        two_a: t1.two_a,
        frac_two_a: t1.frac_two_a,
        case: t1.case_flag,
        p_n_minus_1: table.p(n - 1).to_string(),
        q_n_minus_2: table.q(n - 2).to_string(),
        q_n_minus_1: table.q(n - 1).to_string(),
        palindromic: t1.palindromic,
        congruence: t1.congruence_holds,
        epsilon_zero: t1.epsilon_zero,
        discriminant: DiscriminantJson {
            a: disc.a.to_string(),
            b: disc.b.to_string(),
            c: disc.c.to_string(),
            denominator: disc.denominator.to_string(),
        },
    })
}

impl EpsilonReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "block        {}", self.block.join(","));
        let _ = writeln!(
            s,
            "epsilon      ({} - {})/{} = {}",
            self.p_n_minus_1, self.q_n_minus_2, self.q_n_minus_1, self.epsilon
        );
        let _ = writeln!(s, "two_a        {}", self.two_a);
        let _ = writeln!(s, "frac_two_a   {}  ({})", self.frac_two_a, case_text(self.case));
        let _ = writeln!(
            s,
            "palindromic  {}  congruence {}  epsilon_zero {}",
            self.palindromic, self.congruence, self.epsilon_zero
        );
        let d = &self.discriminant;
        let _ = writeln!(s, "discriminant {}*cn^2 + {}*cn + {}  (over 2*q_(n-1) = {})", d.a, d.b, d.c, d.denominator);
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RoundtripReport {
    pub input: String,
    pub value: ValueJson,
    pub expansion: String,
    pub canonical_input: String,
    pub canonical_differs: bool,
    pub digits_compared: usize,
    pub pass: bool,
}

/// Evaluate, re-expand, and compare the first `digits` digits of both streams.
pub fn roundtrip(text: &str, digits: usize, max_steps: usize) -> Result<RoundtripReport, CliError> {
    let cf = parse_periodic(text)?;
    let x = evaluate_general(&cf)?;
    let back = expand(&x, max_steps)?;
    let canonical = canonicalize(&cf);
    let same_stream = cf.digits().take(digits).eq(back.digits().take(digits));
    let same_value = evaluate_general(&back).map(|y| y == x).unwrap_or(false);
    Ok(RoundtripReport {
        input: text.to_string(),
        value: ValueJson::from(&x),
        expansion: render_cf(&back),
        canonical_input: render_cf(&canonical),
        canonical_differs: canonical != cf,
        digits_compared: digits,
        pass: same_stream && same_value && canonical == back,
    })
}

impl RoundtripReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "value      {}", self.value.text);
        let _ = writeln!(s, "expansion  {}", self.expansion);
        if self.canonical_differs {
            let _ = writeln!(s, "canonical  {} (input was not in canonical form)", self.canonical_input);
        }
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{verdict}       {} digits compared", self.digits_compared);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equation_rendering() {
        let e = |a: i64, b: i64, c: i64| EquationJson::new(&a.into(), &b.into(), &c.into()).render();
        assert_eq!(e(7, 19, -17), "7x^2+19x-17=0");
        assert_eq!(e(1, 1, -1), "x^2+x-1=0");
        assert_eq!(e(77, 77, -49), "77x^2+77x-49=0");
        assert_eq!(e(2, 0, -1), "2x^2-1=0");
        assert_eq!(e(-1, -1, 1), "-x^2-x+1=0");
    }

    #[test]
    fn eval_first_example() {
        let r = eval("[0; (1,2,2,3)]").unwrap();
        assert_eq!(r.value.text, "(-19 + sqrt(837))/14");
        assert_eq!(r.two_a.to_string(), "-19/7");
        assert_eq!(r.epsilon.unwrap().to_string(), "2/7");
        assert_eq!(r.equation.unwrap().render(), "7x^2+19x-17=0");
    }

    #[test]
    fn eval_general_has_no_theorem_fields() {
        let r = eval("[1; (2)]").unwrap();
        assert_eq!(r.value.text, "sqrt(2)");
        assert!(r.epsilon.is_none() && r.equation.is_none());
    }

    #[test]
    fn error_statuses() {
        assert_eq!(eval("[0; (1,").unwrap_err().status, ExitStatus::Parse);
        assert_eq!(eval("[0; (1,0,2)]").unwrap_err().status, ExitStatus::InvalidDigit);
        assert_eq!(eval("[0; 1, 2]").unwrap_err().status, ExitStatus::Parse);
        assert_eq!(expand_quad("sqrt(4)", 100).unwrap_err().status, ExitStatus::Parse);
        assert_eq!(expand_quad("sqrt(39/44)", 3).unwrap_err().status, ExitStatus::PeriodTooLong);
        assert_eq!(epsilon("[1; (2)]").unwrap_err().status, ExitStatus::Parse);
    }

    #[test]
    fn roundtrip_examples() {
        assert!(roundtrip("[0; (1,2,2,5)]", 200, 10_000).unwrap().pass);
        let r = roundtrip("[0; (1,1)]", 200, 10_000).unwrap();
        assert!(r.pass && r.canonical_differs);
        assert_eq!(r.canonical_input, "[0; (1)]");
        let r = roundtrip("[0; 1, (16,11,1,3,2,3,1,11,16,2)]", 200, 10_000).unwrap();
        assert!(r.pass);
        assert_eq!(r.value.text, "sqrt(39/44)");
    }
}
