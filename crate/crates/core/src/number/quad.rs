//! Quadratic irrationals `a ± √r` with rational `a` and `r`.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Sign in front of the square root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn of_i8(s: i8) -> Sign {
        if s < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The real number `rat + sign·√radicand`.
///
/// `radicand` is a positive rational that is not a rational square. Since
/// `√radicand` is the absolute value of the irrational part, the triple is
/// unique for a given real number and derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadIrr {
    rat: Rational,
    radicand: Rational,
    sign: Sign,
}

/// Result of arithmetic that may collapse to a rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Number {
    Rational(Rational),
    Quad(QuadIrr),
}

impl QuadIrr {
    pub fn new(rat: Rational, sign: Sign, radicand: Rational) -> Result<Self> {
        if !radicand.is_positive() {
            return Err(Error::NonPositiveRadicand);
        }
        if radicand.sqrt_exact().is_some() {
            return Err(Error::DegenerateRadicand);
        }
        Ok(QuadIrr { rat, radicand, sign })
    }

    /// `rat + coef·√radicand` for a nonzero rational `coef`.
    pub fn from_coefficient(rat: Rational, coef: &Rational, radicand: &Rational) -> Result<Self> {
        match coef.signum() {
            0 => Err(Error::DegenerateRadicand),
            s => QuadIrr::new(rat, Sign::of_i8(s), coef.square() * radicand),
        }
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn conjugate(&self) -> QuadIrr {
        QuadIrr { sign: self.sign.flip(), ..self.clone() }
    }

    pub fn negate(&self) -> QuadIrr {
        QuadIrr { rat: -&self.rat, radicand: self.radicand.clone(), sign: self.sign.flip() }
    }

    /// `self + t`.
    pub fn shift(&self, t: &Rational) -> QuadIrr {
        QuadIrr { rat: &self.rat + t, ..self.clone() }
    }

    /// `self · k` for nonzero rational `k`.
    pub fn scale(&self, k: &Rational) -> Result<QuadIrr> {
        let coef = Rational::from(self.sign.as_i8() as i64) * k;
        QuadIrr::from_coefficient(&self.rat * k, &coef, &self.radicand)
    }

    /// Exact sign of the value; never zero.
    pub fn signum(&self) -> i8 {
        let s = self.sign.as_i8();
        let a = self.rat.signum();
        if a == 0 || a == s {
            return s;
        }
        // opposite signs: the larger magnitude wins; equality is impossible
        // because the radicand is not a rational square
        if self.radicand > self.rat.square() {
            s
        } else {
            a
        }
    }

    /// Exact order against a rational. Never `Equal`.
    pub fn cmp_rational(&self, t: &Rational) -> Ordering {
        match self.shift(&-t).signum() {
            1 => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// Irrational part of `other` as a rational multiple of `√self.radicand`,
    /// when both live in the same quadratic field.
    fn coefficient_in_field(&self, other: &QuadIrr) -> Option<Rational> {
        let ratio = other.radicand.checked_div(&self.radicand).ok()?;
        let k = ratio.sqrt_exact()?;
        Some(k * Rational::from(other.sign.as_i8() as i64))
    }

    /// Exact product, or `None` when the operands lie in different fields.
    pub fn checked_mul(&self, other: &QuadIrr) -> Option<Number> {
        let k = self.coefficient_in_field(other)?;
        let h = Rational::from(self.sign.as_i8() as i64);
        let a = &self.rat;
        let b = &other.rat;
        let rat = a * b + &h * &k * &self.radicand;
        let coef = a * &k + &h * b;
        if coef.is_zero() {
            Some(Number::Rational(rat))
        } else {
            QuadIrr::from_coefficient(rat, &coef, &self.radicand).ok().map(Number::Quad)
        }
    }

    /// Exact sum, or `None` when the operands lie in different fields.
    pub fn checked_add(&self, other: &QuadIrr) -> Option<Number> {
        let k = self.coefficient_in_field(other)?;
        let coef = Rational::from(self.sign.as_i8() as i64) + k;
        let rat = &self.rat + &other.rat;
        if coef.is_zero() {
            Some(Number::Rational(rat))
        } else {
            QuadIrr::from_coefficient(rat, &coef, &self.radicand).ok().map(Number::Quad)
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.rat.to_f64() + self.sign.as_i8() as f64 * self.radicand.to_f64().sqrt()
    }
}

impl fmt::Display for QuadIrr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} sqrt({})", self.rat, self.sign.symbol(), self.radicand)
    }
}

impl fmt::Debug for QuadIrr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadIrr({self})")
    }
}
