//! Linear fractional maps `t ↦ (p·t + p_prev)/(q·t + q_prev)` over the integers.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::quad::{QuadIrr, Sign};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusMap {
    pub p: BigInt,
    pub p_prev: BigInt,
    pub q: BigInt,
    pub q_prev: BigInt,
}

/// Open interval `(lower, upper)`; `upper = None` means `+∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub lower: Rational,
    pub upper: Option<Rational>,
}

impl Window {
    pub fn unit() -> Self {
        Window { lower: Rational::zero(), upper: Some(Rational::one()) }
    }

    pub fn above_one() -> Self {
        Window { lower: Rational::one(), upper: None }
    }

    pub fn contains(&self, x: &QuadIrr) -> bool {
        x.cmp_rational(&self.lower) == Ordering::Greater
            && self.upper.as_ref().map_or(true, |u| x.cmp_rational(u) == Ordering::Less)
    }
}

impl MobiusMap {
    pub fn new(
        p: impl Into<BigInt>,
        p_prev: impl Into<BigInt>,
        q: impl Into<BigInt>,
        q_prev: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = MobiusMap { p: p.into(), p_prev: p_prev.into(), q: q.into(), q_prev: q_prev.into() };
        if m.determinant().is_zero() {
            return Err(Error::SingularMap);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        MobiusMap { p: BigInt::one(), p_prev: BigInt::zero(), q: BigInt::zero(), q_prev: BigInt::one() }
    }

    /// `t ↦ 1/t`.
    pub fn reciprocal() -> Self {
        MobiusMap { p: BigInt::zero(), p_prev: BigInt::one(), q: BigInt::one(), q_prev: BigInt::zero() }
    }

    pub fn determinant(&self) -> BigInt {
        &self.p * &self.q_prev - &self.q * &self.p_prev
    }

    /// `self ∘ inner`, i.e. apply `inner` first.
    pub fn compose(&self, inner: &MobiusMap) -> MobiusMap {
        MobiusMap {
            p: &self.p * &inner.p + &self.p_prev * &inner.q,
            p_prev: &self.p * &inner.p_prev + &self.p_prev * &inner.q_prev,
            q: &self.q * &inner.p + &self.q_prev * &inner.q,
            q_prev: &self.q * &inner.p_prev + &self.q_prev * &inner.q_prev,
        }
    }

    /// Exact image of an irrational point, with the denominator rationalized.
    pub fn apply(&self, x: &QuadIrr) -> Result<QuadIrr> {
        if self.determinant().is_zero() {
            return Err(Error::SingularMap);
        }
        let p = Rational::from(self.p.clone());
        let q = Rational::from(self.q.clone());
        let h = Rational::from(x.sign().as_i8() as i64);
        let r = x.radicand();
        // (n0 + n1·w)/(m0 + m1·w) with w = √r
        let n0 = &p * x.rat() + Rational::from(self.p_prev.clone());
        let n1 = &p * &h;
        let m0 = &q * x.rat() + Rational::from(self.q_prev.clone());
        let m1 = &q * &h;
        let norm = m0.square() - m1.square() * r;
        let rat = (&n0 * &m0 - &n1 * &m1 * r).checked_div(&norm)?;
        let coef = (&n1 * &m0 - &n0 * &m1).checked_div(&norm)?;
        QuadIrr::from_coefficient(rat, &coef, r)
    }

    /// The unique fixed point in `window`, i.e. the root there of
    /// `q·t² + (q_prev − p)·t − p_prev = 0`.
    pub fn fixed_point(&self, window: &Window) -> Result<QuadIrr> {
        if self.q.is_zero() {
            return Err(Error::RationalFixedPoint);
        }
        let b = &self.q_prev - &self.p;
        let disc = &b * &b + BigInt::from(4) * &self.q * &self.p_prev;
        if !disc.is_positive() || crate::number::exact_sqrt(&disc).is_some() {
            return Err(Error::RationalFixedPoint);
        }
        let two_q = BigInt::from(2) * &self.q;
        let rat = Rational::new(-b, two_q.clone())?;
        let radicand = Rational::new(disc, &two_q * &two_q)?;
        let roots = [
            QuadIrr::new(rat.clone(), Sign::Plus, radicand.clone())?,
            QuadIrr::new(rat, Sign::Minus, radicand)?,
        ];
        let mut inside = roots.into_iter().filter(|t| window.contains(t));
        match (inside.next(), inside.next()) {
            (Some(t), None) => Ok(t),
            (None, _) => Err(Error::NoRootInWindow),
            (Some(_), Some(_)) => Err(Error::TwoRootsInWindow),
        }
    }
}
