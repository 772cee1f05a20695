//! Decimal approximations of quadratic irrationals, exact to the last digit.

use num_bigint::BigInt;
use num_traits::{Pow, Signed};

use crate::cf::SurdState;
use crate::number::{QuadIrr, Rational};

/// `⌊x · 10^digits⌋`.
pub fn scaled_floor(x: &QuadIrr, digits: u32) -> BigInt {
    let scale = Rational::from(BigInt::from(10).pow(digits));
    let scaled = x.scale(&scale).expect("nonzero scale");
    SurdState::from_quad(&scaled).floor()
}

/// Rational bounds `lo < x < hi` with `hi − lo = 10^-digits`.
pub fn enclose(x: &QuadIrr, digits: u32) -> (Rational, Rational) {
    let n = scaled_floor(x, digits);
    let den = BigInt::from(10).pow(digits);
    let lo = Rational::new(n.clone(), den.clone()).expect("nonzero");
    let hi = Rational::new(n + 1, den).expect("nonzero");
    (lo, hi)
}

/// `x` truncated toward zero to `digits` decimal places.
pub fn to_decimal(x: &QuadIrr, digits: u32) -> String {
    let negative = x.signum() < 0;
    let magnitude = if negative { x.negate() } else { x.clone() };
    let n = scaled_floor(&magnitude, digits).abs().to_string();
    let width = digits as usize + 1;
    let padded = format!("{n:0>width$}");
    let (int_part, frac_part) = padded.split_at(padded.len() - digits as usize);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}
