use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::cf::{canonicalize, CFExpansion};
use crate::number::{exact_sqrt, QuadIrr, Rational};

fn join(ds: &[BigInt], sep: &str) -> String {
    ds.iter().map(BigInt::to_string).collect::<Vec<_>>().join(sep)
}

/// `[c0; c1, c2, (p1,p2,…)]`. An expansion without an initial block is
/// written with its first period digit unrolled into `c0`.
pub fn render_cf(cf: &CFExpansion) -> String {
    if cf.initial.is_empty() {
        if cf.repeating.is_empty() {
            return "[]".to_string();
        }
        return render_cf(&canonicalize(cf));
    }
    let mut parts: Vec<String> = cf.initial[1..].iter().map(BigInt::to_string).collect();
    if !cf.repeating.is_empty() {
        parts.push(format!("({})", join(&cf.repeating, ",")));
    }
    if parts.is_empty() {
        format!("[{}]", cf.initial[0])
    } else {
        format!("[{}; {}]", cf.initial[0], parts.join(", "))
    }
}

/// Trial-division budget for finding the square part of a radicand denominator.
const TRIAL_LIMIT: u64 = 100_000;

/// Smallest `s > 0` with `w | s²`, or `None` when `w` is too large to factor
/// within the trial-division budget.
fn square_scale(w: &BigInt) -> Option<BigInt> {
    let mut m = w.clone();
    let mut s = BigInt::one();
    let mut i: u64 = 2;
    loop {
        let ib = BigInt::from(i);
        if &ib * &ib * &ib > m {
            break;
        }
        if i > TRIAL_LIMIT {
            return None;
        }
        let mut e = 0u32;
        while m.is_multiple_of(&ib) {
            m /= &ib;
            e += 1;
        }
        s *= ib.pow(e.div_ceil(2));
        i += 1;
    }
    // what remains has at most two prime factors, each above the cube root
    match exact_sqrt(&m) {
        Some(root) => s *= root,
        None => s *= m,
    }
    Some(s)
}

/// `(P ± sqrt(D))/Q` with the smallest integer `Q`, or `sqrt(r)` / `a ± sqrt(r)`.
pub fn render_quad(x: &QuadIrr) -> String {
    let sign = x.sign().symbol();
    if x.rat().is_zero() {
        let lead = if sign == '-' { "-" } else { "" };
        return format!("{lead}sqrt({})", x.radicand());
    }
    let linear = || format!("{} {} sqrt({})", x.rat(), sign, x.radicand());
    let Some(s) = square_scale(x.radicand().denom()) else {
        return linear();
    };
    let q = x.rat().denom().lcm(&s);
    if q.is_one() {
        return linear();
    }
    let qr = Rational::from(q.clone());
    let p = (x.rat() * &qr).numer().clone();
    let d = (x.radicand() * &qr * &qr).numer().clone();
    format!("({p} {sign} sqrt({d}))/{q}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::to_digits;
    use crate::notation::{parse_cf, parse_quad};
    use crate::number::Sign;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn cf_examples() {
        let cf = |i: &[i64], p: &[i64]| CFExpansion { initial: to_digits(i), repeating: to_digits(p) };
        assert_eq!(render_cf(&cf(&[0], &[1, 2, 2, 3])), "[0; (1,2,2,3)]");
        assert_eq!(render_cf(&cf(&[1], &[2])), "[1; (2)]");
        assert_eq!(
            render_cf(&cf(&[0, 1], &[16, 11, 1, 3, 2, 3, 1, 11, 16, 2])),
            "[0; 1, (16,11,1,3,2,3,1,11,16,2)]"
        );
        assert_eq!(render_cf(&cf(&[3, 1, 2], &[])), "[3; 1, 2]");
        assert_eq!(render_cf(&cf(&[3], &[])), "[3]");
        assert_eq!(render_cf(&cf(&[], &[1, 2])), "[1; (2,1)]");
    }

    #[test]
    fn quad_examples() {
        let q = |a: Rational, s: Sign, rad: Rational| QuadIrr::new(a, s, rad).unwrap();
        assert_eq!(render_quad(&q(r(-19, 14), Sign::Plus, r(837, 196))), "(-19 + sqrt(837))/14");
        assert_eq!(render_quad(&q(Rational::zero(), Sign::Plus, r(2, 1))), "sqrt(2)");
        assert_eq!(render_quad(&q(r(-1, 2), Sign::Plus, r(39, 44))), "(-11 + sqrt(429))/22");
        assert_eq!(render_quad(&q(r(-1, 2), Sign::Plus, r(5, 4))), "(-1 + sqrt(5))/2");
        assert_eq!(render_quad(&q(r(3, 1), Sign::Minus, r(7, 1))), "3 - sqrt(7)");
        assert_eq!(render_quad(&q(Rational::zero(), Sign::Minus, r(39, 44))), "-sqrt(39/44)");
    }

    #[test]
    fn square_scales() {
        for (w, s) in [(1, 1), (196, 14), (44, 22), (4, 2), (8, 4), (12, 6), (27, 9), (1001, 1001), (49 * 121, 77)] {
            assert_eq!(square_scale(&BigInt::from(w)), Some(BigInt::from(s)), "{w}");
        }
        // brute force for small w
        for w in 1..2000i64 {
            let brute = (1..=w).find(|s| (s * s) % w == 0).unwrap();
            assert_eq!(square_scale(&BigInt::from(w)), Some(BigInt::from(brute)));
        }
    }

    #[test]
    fn renders_parse_back() {
        for text in ["(-19 + sqrt(837))/14", "(-11 + sqrt(429))/22", "sqrt(2)", "-sqrt(39/44)", "3 - sqrt(7)"] {
            let x = parse_quad(text).unwrap();
            assert_eq!(render_quad(&x), text);
        }
        for text in ["[0; (1,2,2,3)]", "[0; 1, (16,11,1,3,2,3,1,11,16,2)]", "[-2; 5, (1)]"] {
            assert_eq!(render_cf(&parse_cf(text).unwrap()), text);
        }
    }
}
