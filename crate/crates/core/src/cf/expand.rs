//! Expansion of a quadratic irrational into its eventually periodic
//! continued fraction, by iterating complete quotients `(P + √D)/Q`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::expansion::CFExpansion;
use crate::error::{Error, Result};
use crate::number::{isqrt, QuadIrr, Sign};

pub const DEFAULT_MAX_STEPS: usize = 10_000;

/// `(P + √D)/Q` with `√D > 0`, `D` not a square and `Q | D − P²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurdState {
    pub p: BigInt,
    pub q: BigInt,
    pub d: BigInt,
}

impl SurdState {
    pub fn from_quad(x: &QuadIrr) -> SurdState {
        let (an, ad) = (x.rat().numer(), x.rat().denom());
        let (rn, rd) = (x.radicand().numer(), x.radicand().denom());
        // a + s√(rn/rd) = (an·L/ad + s√(rn·rd·(L/rd)²))/L
        let l = ad.lcm(rd);
        let scale = &l / rd;
        let mut p = an * (&l / ad);
        let mut q = l;
        let mut d = rn * rd * &scale * &scale;
        if x.sign() == Sign::Minus {
            p = -p;
            q = -q;
        }
        if !(&d - &p * &p).is_multiple_of(&q) {
            let qa = q.abs();
            p *= &qa;
            d *= &q * &q;
            q *= &qa;
        }
        SurdState { p, q, d }
    }

    /// `⌊(P + √D)/Q⌋`, exact.
    pub fn floor(&self) -> BigInt {
        let (t, _) = isqrt(&self.d);
        if self.q.is_positive() {
            (&self.p + t).div_floor(&self.q)
        } else {
            // (P + √D)/Q = (−P − √D)/|Q| and ⌊−P − √D⌋ = −P − t − 1
            let num: BigInt = -&self.p - t - 1;
            num.div_floor(&-&self.q)
        }
    }

    /// Advance past `digit`: `P' = digit·Q − P`, `Q' = (D − P'²)/Q`.
    fn step(&self, digit: &BigInt) -> SurdState {
        let p = digit * &self.q - &self.p;
        let q = (&self.d - &p * &p) / &self.q;
        SurdState { p, q, d: self.d.clone() }
    }
}

pub fn exact_floor(s: &SurdState) -> BigInt {
    s.floor()
}

/// Canonical periodic expansion of `x`; fails with `PeriodTooLong` if no
/// state repeats within `max_steps` digits.
pub fn expand(x: &QuadIrr, max_steps: usize) -> Result<CFExpansion> {
    let mut state = SurdState::from_quad(x);
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut digits = Vec::new();
    for step in 0..=max_steps {
        if let Some(&start) = seen.get(&(state.p.clone(), state.q.clone())) {
            let repeating = digits.split_off(start);
            return Ok(canonicalize(&CFExpansion { initial: digits, repeating }));
        }
        if step == max_steps {
            break;
        }
        seen.insert((state.p.clone(), state.q.clone()), step);
        let digit = state.floor();
        state = state.step(&digit);
        digits.push(digit);
    }
    Err(Error::PeriodTooLong(max_steps))
}

/// Minimal period, then minimal preperiod, keeping at least the leading
/// digit in the initial block. The digit stream is unchanged.
pub fn canonicalize(cf: &CFExpansion) -> CFExpansion {
    let mut initial = cf.initial.clone();
    let mut repeating = cf.repeating.clone();
    if repeating.is_empty() {
        return cf.clone();
    }
    let n = repeating.len();
    if let Some(d) = (1..n).find(|&d| n % d == 0 && (d..n).all(|i| repeating[i] == repeating[i - d])) {
        repeating.truncate(d);
    }
    if initial.is_empty() {
        initial.push(repeating[0].clone());
        repeating.rotate_left(1);
    }
    while initial.len() > 1 && initial.last() == repeating.last() {
        initial.pop();
        repeating.rotate_right(1);
    }
    CFExpansion { initial, repeating }
}

impl SurdState {
    pub fn is_valid(&self) -> bool {
        !self.q.is_zero()
            && self.d.is_positive()
            && !isqrt(&self.d).1
            && (&self.d - &self.p * &self.p).is_multiple_of(&self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::{evaluate_general, evaluate_zero_periodic, to_digits};
    use crate::number::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn st(p: i64, q: i64, d: i64) -> SurdState {
        SurdState { p: p.into(), q: q.into(), d: d.into() }
    }

    /// ⌊(P + √D)/Q⌋ by bisection on rationals m: compare (P + √D)/Q with m
    /// via √D vs m·Q − P, squared with signs tracked.
    fn floor_oracle(s: &SurdState) -> i64 {
        let (p, q, d) = (i128::try_from(&s.p).unwrap(), i128::try_from(&s.q).unwrap(), i128::try_from(&s.d).unwrap());
        // value >= m  ⇔  (P + √D)/Q >= m
        let ge = |m: i128| -> bool {
            // √D >= m·Q − P when Q > 0, √D <= m·Q − P when Q < 0
            let rhs = m * q - p;
            let sqrt_ge_rhs = rhs < 0 || d >= rhs * rhs;
            if q > 0 { sqrt_ge_rhs } else { !sqrt_ge_rhs || (rhs >= 0 && d == rhs * rhs) }
        };
        let (mut lo, mut hi) = (-1_000_000i128, 1_000_000i128);
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if ge(mid) { lo = mid } else { hi = mid }
        }
        lo as i64
    }

    #[test]
    fn floor_cases() {
        assert_eq!(exact_floor(&st(0, 1, 2)), 1.into());
        assert_eq!(exact_floor(&st(-19, 14, 837)), 0.into());
        assert_eq!(exact_floor(&st(19, -14, 837)), (-4).into());
        for (p, q, d) in [(0, 1, 2), (-19, 14, 837), (19, -14, 837), (3, -7, 5), (-40, -3, 13), (7, 2, 3)] {
            let s = st(p, q, d);
            assert_eq!(exact_floor(&s), floor_oracle(&s).into(), "{s:?}");
        }
    }

    #[test]
    fn floor_matches_oracle_on_grid() {
        for p in -30..30 {
            for q in (-12..12).filter(|q| *q != 0) {
                for d in [2, 3, 5, 7, 10, 837] {
                    let s = st(p, q, d);
                    assert_eq!(exact_floor(&s), floor_oracle(&s).into(), "{s:?}");
                }
            }
        }
    }

    #[test]
    fn state_of_sqrt_39_44() {
        let x = QuadIrr::new(Rational::zero(), Sign::Plus, r(39, 44)).unwrap();
        let s = SurdState::from_quad(&x);
        assert!(s.is_valid());
        let d0 = s.floor();
        let d1 = s.step(&d0).floor();
        assert_eq!((d0, d1), (0.into(), 1.into()));
    }

    #[test]
    fn expand_examples() {
        let x = QuadIrr::new(Rational::zero(), Sign::Plus, r(39, 44)).unwrap();
        let cf = expand(&x, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(cf.initial, to_digits(&[0, 1]));
        assert_eq!(cf.repeating, to_digits(&[16, 11, 1, 3, 2, 3, 1, 11, 16, 2]));

        let x = QuadIrr::new(r(-19, 14), Sign::Plus, r(837, 196)).unwrap();
        let cf = expand(&x, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(cf, CFExpansion::zero_periodic(to_digits(&[1, 2, 2, 3])).unwrap());

        let x = QuadIrr::new(Rational::zero(), Sign::Plus, r(2, 1)).unwrap();
        let cf = expand(&x, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!((cf.initial, cf.repeating), (to_digits(&[1]), to_digits(&[2])));
    }

    #[test]
    fn expand_negative_and_conjugate_values() {
        for x in [
            QuadIrr::new(r(-19, 14), Sign::Minus, r(837, 196)).unwrap(),
            QuadIrr::new(r(7, 3), Sign::Minus, r(5, 11)).unwrap(),
            QuadIrr::new(r(-100, 1), Sign::Plus, r(3, 1)).unwrap(),
        ] {
            let cf = expand(&x, DEFAULT_MAX_STEPS).unwrap();
            assert_eq!(evaluate_general(&cf).unwrap(), x);
        }
    }

    #[test]
    fn period_guard() {
        let x = QuadIrr::new(Rational::zero(), Sign::Plus, r(39, 44)).unwrap();
        assert_eq!(expand(&x, 5), Err(Error::PeriodTooLong(5)));
    }

    #[test]
    fn canonical_forms() {
        let cf = |i: &[i64], p: &[i64]| CFExpansion { initial: to_digits(i), repeating: to_digits(p) };
        assert_eq!(canonicalize(&cf(&[0], &[1, 1])), cf(&[0], &[1]));
        let c = canonicalize(&cf(&[0, 3], &[1, 2, 3]));
        assert_eq!(c, cf(&[0], &[3, 1, 2]));
        let a: Vec<_> = cf(&[0, 3], &[1, 2, 3]).digits().take(50).cloned().collect();
        let b: Vec<_> = c.digits().take(50).cloned().collect();
        assert_eq!(a, b);
        for fixed in [cf(&[0], &[1, 2, 2, 3]), cf(&[1], &[2]), cf(&[0, 1], &[16, 11, 1, 3, 2, 3, 1, 11, 16, 2])] {
            assert_eq!(canonicalize(&fixed), fixed);
        }
        assert_eq!(canonicalize(&cf(&[], &[1, 2, 1, 2])), cf(&[1], &[2, 1]));
    }

    #[test]
    fn round_trip_zero_periodic() {
        let b = to_digits(&[2, 3, 1, 3, 2, 1]);
        let x = evaluate_zero_periodic(&b).unwrap();
        assert_eq!(expand(&x, DEFAULT_MAX_STEPS).unwrap(), CFExpansion::zero_periodic(b).unwrap());
    }
}
