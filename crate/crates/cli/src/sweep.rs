//! Exhaustive verification of the rational-part identities over every
//! repeating block up to a given length and digit bound.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use surdcf::cf::{
    canonicalize, determinant_congruence, discriminant_poly_in_cn, evaluate_general, evaluate_purely_periodic,
    evaluate_zero_periodic, expand, quadratic_equation, theorem1_report, theorem2_report, zero_block_table, CFExpansion, EpsilonCase,
    DEFAULT_MAX_STEPS,
};
use surdcf::number::{Number, Rational, Window};
use surdcf::Result;

use crate::report;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub block: Vec<u32>,
    pub property: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SmokeCheck {
    pub input: String,
    pub value: String,
    pub two_a: String,
    pub epsilon: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerationReport {
    pub max_len: u32,
    pub max_digit: u32,
    pub blocks_checked: u64,
    pub violations: Vec<Violation>,
    pub epsilon_zero_count: u64,
    pub palindromic_prefix_count: u64,
    pub smoke: Vec<SmokeCheck>,
    /// Wall-clock time; kept out of the serialized report so output is reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl EnumerationReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.smoke {
            s += &format!(
                "smoke {}  value {}  two_a {}  epsilon {}  {}\n",
                c.input,
                c.value,
                c.two_a,
                c.epsilon,
                if c.ok { "ok" } else { "FAILED" }
            );
        }
        s += &format!("max_len                  {}\n", self.max_len);
        s += &format!("max_digit                {}\n", self.max_digit);
        s += &format!("blocks_checked           {}\n", self.blocks_checked);
        s += &format!("epsilon_zero_count       {}\n", self.epsilon_zero_count);
        s += &format!("palindromic_prefix_count {}\n", self.palindromic_prefix_count);
        s += &format!("violations               {}\n", self.violations.len());
        for v in &self.violations {
            let block: Vec<String> = v.block.iter().map(u32::to_string).collect();
            s += &format!("  {} [{}]\n", v.property, block.join(","));
        }
        s
    }
}

/// Partial result for one prefix `c_1…c_{n-1}` and every last digit.
#[derive(Debug, Default, Clone)]
struct Tally {
    blocks: u64,
    epsilon_zero: u64,
    palindromic: u64,
    violations: Vec<Violation>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.blocks += other.blocks;
        self.epsilon_zero += other.epsilon_zero;
        self.palindromic += other.palindromic;
        self.violations.extend(other.violations);
        self
    }
}

/// All digit lists of length `len` over `1..=max_digit`, lexicographic.
pub fn blocks_of_len(len: u32, max_digit: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|b| {
                (1..=max_digit).map(move |d| {
                    let mut nb = b.clone();
                    nb.push(d);
                    nb
                })
            })
            .collect();
    }
    out
}

fn big(ds: &[u32]) -> Vec<BigInt> {
    ds.iter().map(|&d| BigInt::from(d)).collect()
}

/// Smallest block whose repetition gives `block`.
fn primitive_root(block: &[BigInt]) -> Vec<BigInt> {
    let n = block.len();
    let d = (1..=n).find(|&d| n % d == 0 && (d..n).all(|i| block[i] == block[i - d])).unwrap_or(n);
    block[..d].to_vec()
}

/// Runs P1, P3–P11 on a single block. Returns the failing property ids
/// together with ε (for the independence check across last digits).
pub fn check_block(block: &[u32]) -> (Vec<&'static str>, Option<Rational>, bool, bool) {
    let b = big(block);
    let mut fails = Vec::new();
    let t1 = match theorem1_report(&b) {
        Ok(t) => t,
        Err(_) => return (vec!["EVAL"], None, false, false),
    };
    let cn = Rational::from(b[b.len() - 1].clone());
    let one = Rational::one();

    // P1
    if t1.epsilon.abs() >= one {
        fails.push("P1");
    }

    let x = evaluate_zero_periodic(&b);
    let y = evaluate_purely_periodic(&b);
    let (x, y) = match (x, y) {
        (Ok(x), Ok(y)) => (x, y),
        _ => {
            fails.push("EVAL");
            return (fails, Some(t1.epsilon), t1.epsilon_zero, t1.palindromic);
        }
    };

    // P3
    if x.rat() * &Rational::from(2) != &t1.epsilon - &cn {
        fails.push("P3");
    }

    // P4
    let consistent = theorem2_report(&b).map(|t| t.consistent()).unwrap_or(false)
        && t1.palindromic == t1.epsilon_zero
        && t1.epsilon_zero == t1.congruence_holds;
    if !consistent {
        fails.push("P4");
    }

    // P5, P6
    if !determinant_congruence(&b).unwrap_or(false) {
        fails.push("P5");
    }
    if !zero_block_table(&b).map(|t| t.determinants_hold()).unwrap_or(false) {
        fails.push("P6");
    }

    // P7
    let expected = CFExpansion { initial: vec![BigInt::from(0)], repeating: primitive_root(&b) };
    let round_trip_ok = expand(&x, DEFAULT_MAX_STEPS)
        .map(|cf| {
            let cf = canonicalize(&cf);
            cf == expected && evaluate_general(&cf).map(|v| v == x).unwrap_or(false)
        })
        .unwrap_or(false);
    if !round_trip_ok {
        fails.push("P7");
    }

    // P8
    if x.checked_mul(&y) != Some(Number::Rational(one.clone())) {
        fails.push("P8");
    }

    // P9
    let minus_one_to_zero = Window { lower: -&one, upper: Some(Rational::zero()) };
    if !(Window::unit().contains(&x) && Window::above_one().contains(&y) && minus_one_to_zero.contains(&y.conjugate())) {
        fails.push("P9");
    }

    // P10
    let frac = &t1.frac_two_a;
    let expected_frac = match t1.case_flag {
        EpsilonCase::PGeQ => t1.epsilon.clone(),
        EpsilonCase::PLtQ => &t1.epsilon + &one,
    };
    if frac.is_negative() || *frac >= one || !(&t1.two_a - frac).is_integer() || *frac != expected_frac {
        fails.push("P10");
    }

    // P11
    if !discriminant_matches(&b) {
        fails.push("P11");
    }

    (fails, Some(t1.epsilon), t1.epsilon_zero, t1.palindromic)
}

/// The polynomial in `c_n` against the discriminant of the block's own
/// quadratic, and the value's radicand against `disc / (2 q_{n-1})²`.
pub fn discriminant_matches(block: &[BigInt]) -> bool {
    let check = || -> Result<bool> {
        let (prefix, cn) = block.split_at(block.len() - 1);
        let poly = discriminant_poly_in_cn(prefix)?;
        let (a2, a1, a0) = quadratic_equation(block)?;
        let direct = &a1 * &a1 - BigInt::from(4) * &a2 * &a0;
        let x = evaluate_zero_periodic(block)?;
        let denom = Rational::from(poly.denominator.clone());
        let radicand = Rational::from(direct.clone()).checked_div(&denom.square())?;
        Ok(poly.at(&cn[0]) == direct && x.radicand() == &radicand)
    };
    check().unwrap_or(false)
}

fn check_prefix(prefix: &[u32], max_digit: u32) -> Tally {
    let mut tally = Tally::default();
    let mut first_eps: Option<Rational> = None;
    for cn in 1..=max_digit {
        let mut block = prefix.to_vec();
        block.push(cn);
        let (fails, eps, eps_zero, pal) = check_block(&block);
        tally.blocks += 1;
        tally.epsilon_zero += eps_zero as u64;
        tally.palindromic += pal as u64;
        let mut props: Vec<String> = fails.into_iter().map(String::from).collect();
        // P2: ε must not move with the last digit
        match (&first_eps, eps) {
            (None, Some(e)) => first_eps = Some(e),
            (Some(f), Some(e)) if *f != e => props.push("P2".into()),
            _ => {}
        }
        props.sort();
        tally.violations.extend(props.into_iter().map(|property| Violation { block: block.clone(), property }));
    }
    tally
}

fn smoke() -> Vec<SmokeCheck> {
    let cases = [
        ("[0; (1,2,2,3)]", "(-19 + sqrt(837))/14", "-19/7", "2/7"),
        ("[0; (2,3,1,3,2,1)]", "(-11 + sqrt(429))/22", "-1", "0"),
    ];
    cases
        .iter()
        .map(|&(input, value, two_a, eps)| match report::eval(input) {
            Ok(r) => {
                let epsilon = r.epsilon.map(|e| e.to_string()).unwrap_or_default();
                let ok = r.value.text == value && r.two_a.to_string() == two_a && epsilon == eps;
                SmokeCheck { input: input.into(), value: r.value.text, two_a: r.two_a.to_string(), epsilon, ok }
            }
            Err(e) => SmokeCheck {
                input: input.into(),
                value: e.message,
                two_a: String::new(),
                epsilon: String::new(),
                ok: false,
            },
        })
        .collect()
}

/// Checks every block of length `1..=max_len` with digits in `1..=max_digit`.
/// Output is independent of `workers` (`None` uses the rayon default).
pub fn enumerate(max_len: u32, max_digit: u32, workers: Option<usize>) -> EnumerationReport {
    let start = Instant::now();
    let smoke = smoke();
    let prefixes: Vec<Vec<u32>> = (0..max_len).flat_map(|len| blocks_of_len(len, max_digit)).collect();
    let run = || -> Vec<Tally> { prefixes.par_iter().map(|p| check_prefix(p, max_digit)).collect() };
    let tallies = match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run()),
        None => run(),
    };
    let mut total = tallies.into_iter().fold(Tally::default(), Tally::merge);
    for c in smoke.iter().filter(|c| !c.ok) {
        total.violations.insert(0, Violation { block: vec![], property: format!("SMOKE {}", c.input) });
    }
    EnumerationReport {
        max_len,
        max_digit,
        blocks_checked: total.blocks,
        violations: total.violations,
        epsilon_zero_count: total.epsilon_zero,
        palindromic_prefix_count: total.palindromic,
        smoke,
        elapsed: start.elapsed(),
    }
}
