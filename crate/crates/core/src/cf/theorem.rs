//! The rational part of `[0; (c_1,…,c_n)]` and its dependence on the block.
//!
//! For `x = [0; (c_1,…,c_n)]` with convergents over `0, c_1, …, c_n`:
//!
//! ```text
//! 2·rat(x) = −c_n + ε,   ε = (p_{n-1} − q_{n-2}) / q_{n-1},   |ε| < 1
//! ```
//!
//! `ε` only involves `c_1,…,c_{n-1}`, and `ε = 0` exactly when
//! `c_1,…,c_{n-1}` reads the same backwards, which in turn is equivalent to
//! `p_{n-1}² ≡ (−1)^n (mod q_{n-1})`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::convergents::ConvergentTable;
use crate::error::{Error, Result};
use crate::number::Rational;

/// Which branch produced the fractional part of `2·rat(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EpsilonCase {
    /// `p_{n-1} >= q_{n-2}`: `{2a} = ε`.
    PGeQ,
    /// `p_{n-1} < q_{n-2}`: `{2a} = ε + 1`.
    PLtQ,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub block: Vec<BigInt>,
    pub epsilon: Rational,
    pub two_a: Rational,
    pub frac_two_a: Rational,
    pub case_flag: EpsilonCase,
    pub palindromic: bool,
    pub congruence_holds: bool,
    pub epsilon_zero: bool,
}

/// The three equivalent assertions about `2·rat(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Theorem2 {
    /// `2·rat(x)` is an integer.
    pub int_two_a: bool,
    /// `2·rat(x) = −c_n`.
    pub neg_cn: bool,
    /// `c_1,…,c_{n-1}` is a palindrome.
    pub palindrome: bool,
}

impl Theorem2 {
    pub fn consistent(&self) -> bool {
        self.int_two_a == self.neg_cn && self.neg_cn == self.palindrome
    }
}

/// Convergents over `[0, c_1, …, c_n]`.
pub fn zero_block_table(block: &[BigInt]) -> Result<ConvergentTable> {
    if block.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let mut digits = Vec::with_capacity(block.len() + 1);
    digits.push(BigInt::zero());
    digits.extend_from_slice(block);
    ConvergentTable::build(&digits)
}

fn epsilon_parts(t: &ConvergentTable) -> (BigInt, BigInt, BigInt) {
    let n = t.last() as isize;
    (t.p(n - 1).clone(), t.q(n - 2).clone(), t.q(n - 1).clone())
}

pub fn epsilon(block: &[BigInt]) -> Result<Rational> {
    let t = zero_block_table(block)?;
    let (p1, q2, q1) = epsilon_parts(&t);
    Rational::new(p1 - q2, q1)
}

pub fn is_palindromic_prefix(block: &[BigInt]) -> bool {
    match block.split_last() {
        Some((_, prefix)) => prefix.iter().eq(prefix.iter().rev()),
        None => true,
    }
}

/// `p_{n-1}² ≡ (−1)^n (mod q_{n-1})`, both sides reduced into `[0, q_{n-1})`.
pub fn congruence_check(block: &[BigInt]) -> Result<bool> {
    let t = zero_block_table(block)?;
    Ok(congruence_from_table(&t))
}

fn congruence_from_table(t: &ConvergentTable) -> bool {
    let n = t.last() as isize;
    let m = t.q(n - 1);
    let lhs = (t.p(n - 1) * t.p(n - 1)).mod_floor(m);
    let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    lhs == sign.mod_floor(m)
}

/// `p_{n-1}·q_{n-2} ≡ (−1)^n (mod q_{n-1})`.
pub fn determinant_congruence(block: &[BigInt]) -> Result<bool> {
    let t = zero_block_table(block)?;
    let n = t.last() as isize;
    let m = t.q(n - 1);
    let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    Ok((t.p(n - 1) * t.q(n - 2)).mod_floor(m) == sign.mod_floor(m))
}

pub fn theorem1_report(block: &[BigInt]) -> Result<TheoremReport> {
    let t = zero_block_table(block)?;
    let (p1, q2, q1) = epsilon_parts(&t);
    let case_flag = if p1 >= q2 { EpsilonCase::PGeQ } else { EpsilonCase::PLtQ };
    let epsilon = Rational::new(&p1 - &q2, q1)?;
    let cn = Rational::from(block.last().expect("nonempty").clone());
    let two_a = &epsilon - &cn;
    let frac_two_a = match case_flag {
        EpsilonCase::PGeQ => epsilon.clone(),
        EpsilonCase::PLtQ => &epsilon + &Rational::one(),
    };
    Ok(TheoremReport {
        block: block.to_vec(),
        epsilon_zero: epsilon.is_zero(),
        palindromic: is_palindromic_prefix(block),
        congruence_holds: congruence_from_table(&t),
        epsilon,
        two_a,
        frac_two_a,
        case_flag,
    })
}

pub fn theorem2_report(block: &[BigInt]) -> Result<Theorem2> {
    let rep = theorem1_report(block)?;
    let cn = Rational::from(block.last().expect("nonempty").clone());
    Ok(Theorem2 {
        int_two_a: rep.two_a.is_integer(),
        neg_cn: rep.two_a == -cn,
        palindrome: rep.palindromic,
    })
}

/// Coefficients `(a2, a1, a0)` of `q_{n-1}x² + (q_n − p_{n-1})x − p_n = 0`,
/// the quadratic satisfied by `[0; (block)]`.
pub fn quadratic_equation(block: &[BigInt]) -> Result<(BigInt, BigInt, BigInt)> {
    let t = zero_block_table(block)?;
    let n = t.last() as isize;
    Ok((t.q(n - 1).clone(), t.q(n) - t.p(n - 1), -t.p(n).clone()))
}

/// Discriminant of `[0; (block)]`'s quadratic as a polynomial in `c_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantPoly {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    /// `2·q_{n-1}`; the irrational part is `√disc(c_n) / denominator`.
    pub denominator: BigInt,
}

impl DiscriminantPoly {
    pub fn at(&self, cn: &BigInt) -> BigInt {
        &self.a * cn * cn + &self.b * cn + &self.c
    }
}

/// For the prefix `c_1,…,c_{n-1}` (possibly empty): `A = q_{n-1}²`,
/// `B = 2 q_{n-1}(q_{n-2} + p_{n-1})`, `C = (q_{n-2} − p_{n-1})² + 4 q_{n-1} p_{n-2}`.
pub fn discriminant_poly_in_cn(prefix: &[BigInt]) -> Result<DiscriminantPoly> {
    let mut digits = Vec::with_capacity(prefix.len() + 1);
    digits.push(BigInt::zero());
    digits.extend_from_slice(prefix);
    let t = ConvergentTable::build(&digits)?;
    let m = t.last() as isize;
    let (q1, q2, p1, p2) = (t.q(m), t.q(m - 1), t.p(m), t.p(m - 1));
    let diff = q2 - p1;
    Ok(DiscriminantPoly {
        a: q1 * q1,
        b: BigInt::from(2) * q1 * (q2 + p1),
        c: &diff * &diff + BigInt::from(4) * q1 * p2,
        denominator: BigInt::from(2) * q1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::to_digits;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(&to_digits(&[1, 2, 2, 3])).unwrap(), r(2, 7));
        assert_eq!(epsilon(&to_digits(&[2, 3, 1, 3, 2, 1])).unwrap(), Rational::zero());
        assert_eq!(epsilon(&to_digits(&[1])).unwrap(), Rational::zero());
        assert_eq!(epsilon(&[]), Err(Error::EmptyPeriod));
        assert!(matches!(epsilon(&to_digits(&[1, 0])), Err(Error::InvalidDigit { .. })));
    }

    #[test]
    fn theorem1_first_example() {
        let rep = theorem1_report(&to_digits(&[1, 2, 2, 3])).unwrap();
        assert_eq!(rep.two_a, r(-19, 7));
        assert_eq!(rep.frac_two_a, r(2, 7));
        assert_eq!(rep.case_flag, EpsilonCase::PGeQ);
        assert!(!rep.palindromic && !rep.congruence_holds && !rep.epsilon_zero);
        let rep5 = theorem1_report(&to_digits(&[1, 2, 2, 5])).unwrap();
        assert_eq!(rep5.two_a, r(-33, 7));
        assert_eq!(rep5.frac_two_a, r(2, 7));
    }

    #[test]
    fn theorem1_negative_epsilon() {
        let rep = theorem1_report(&to_digits(&[2, 1, 1])).unwrap();
        assert_eq!(rep.epsilon, r(-1, 3));
        assert_eq!(rep.two_a, r(-4, 3));
        assert_eq!(rep.frac_two_a, r(2, 3));
        assert_eq!(rep.case_flag, EpsilonCase::PLtQ);
    }

    #[test]
    fn palindromes() {
        assert!(is_palindromic_prefix(&to_digits(&[2, 3, 1, 3, 2, 1])));
        assert!(!is_palindromic_prefix(&to_digits(&[1, 2, 2, 3])));
        assert!(is_palindromic_prefix(&to_digits(&[7])));
    }

    #[test]
    fn congruences() {
        assert!(congruence_check(&to_digits(&[2, 3, 1, 3, 2, 1])).unwrap());
        assert!(!congruence_check(&to_digits(&[1, 2, 2, 3])).unwrap());
        assert!(congruence_check(&to_digits(&[1])).unwrap());
        assert!(determinant_congruence(&to_digits(&[1, 2, 2, 3])).unwrap());
    }

    #[test]
    fn theorem2_examples() {
        let t = theorem2_report(&to_digits(&[2, 3, 1, 3, 2, 1])).unwrap();
        assert_eq!(t, Theorem2 { int_two_a: true, neg_cn: true, palindrome: true });
        assert_eq!(theorem1_report(&to_digits(&[2, 3, 1, 3, 2, 1])).unwrap().two_a, r(-1, 1));
        let f = theorem2_report(&to_digits(&[1, 2, 2, 3])).unwrap();
        assert_eq!(f, Theorem2 { int_two_a: false, neg_cn: false, palindrome: false });
        for c in 1..=9 {
            let t = theorem2_report(&to_digits(&[c])).unwrap();
            assert!(t.int_two_a && t.neg_cn && t.palindrome);
            assert_eq!(theorem1_report(&to_digits(&[c])).unwrap().two_a, r(-c, 1));
        }
    }

    #[test]
    fn equations() {
        let (a2, a1, a0) = quadratic_equation(&to_digits(&[1, 2, 2, 3])).unwrap();
        assert_eq!((a2, a1, a0), (7.into(), 19.into(), (-17).into()));
        let (a2, a1, a0) = quadratic_equation(&to_digits(&[2, 3, 1, 3, 2, 1])).unwrap();
        assert_eq!((a2, a1, a0), (77.into(), 77.into(), (-49).into()));
    }

    #[test]
    fn discriminant_examples() {
        let d = discriminant_poly_in_cn(&to_digits(&[1, 2, 2])).unwrap();
        assert_eq!((d.a.clone(), d.b.clone(), d.c.clone()), (49.into(), 112.into(), 60.into()));
        assert_eq!(d.at(&3.into()), 837.into());
        assert_eq!(d.at(&5.into()), 1845.into());
        assert_eq!(d.denominator, 14.into());

        let e = discriminant_poly_in_cn(&[]).unwrap();
        assert_eq!((e.a.clone(), e.b.clone(), e.c.clone()), (1.into(), 0.into(), 4.into()));
        assert_eq!(e.at(&2.into()), 8.into());

        let p = discriminant_poly_in_cn(&to_digits(&[2, 3, 1, 3, 2])).unwrap();
        assert_eq!(p.at(&1.into()), 21021.into());
    }
}
