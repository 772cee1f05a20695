use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Numerators `p_{-1}…p_k` and denominators `q_{-1}…q_k` of the convergents
/// of a digit list, from `p_k = c_k p_{k-1} + p_{k-2}` and
/// `q_k = c_k q_{k-1} + q_{k-2}` with `p_{-1} = 1`, `q_{-1} = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable {
    digits: Vec<BigInt>,
    // p[i] holds p_{i-1}
    p: Vec<BigInt>,
    q: Vec<BigInt>,
}

impl ConvergentTable {
    pub fn build(digits: &[BigInt]) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::EmptyExpansion);
        }
        if let Some((pos, d)) = digits.iter().enumerate().skip(1).find(|(_, d)| **d < BigInt::one()) {
            return Err(Error::InvalidDigit { position: pos, value: d.to_string() });
        }
        let mut p = Vec::with_capacity(digits.len() + 1);
        let mut q = Vec::with_capacity(digits.len() + 1);
        p.push(BigInt::one());
        q.push(BigInt::zero());
        let (mut p2, mut q2) = (BigInt::zero(), BigInt::one());
        for c in digits {
            let (p1, q1) = (p.last().unwrap().clone(), q.last().unwrap().clone());
            let pk = c * &p1 + &p2;
            let qk = c * &q1 + &q2;
            p.push(pk);
            q.push(qk);
            p2 = p1;
            q2 = q1;
        }
        Ok(ConvergentTable { digits: digits.to_vec(), p, q })
    }

    pub fn digits(&self) -> &[BigInt] {
        &self.digits
    }

    /// Index of the last convergent.
    pub fn last(&self) -> usize {
        self.digits.len() - 1
    }

    /// `p_k` for `-1 <= k <= last`.
    pub fn p(&self, k: isize) -> &BigInt {
        &self.p[(k + 1) as usize]
    }

    /// `q_k` for `-1 <= k <= last`.
    pub fn q(&self, k: isize) -> &BigInt {
        &self.q[(k + 1) as usize]
    }

    /// `p_k q_{k-1} − q_k p_{k-1}` for `k >= 0`.
    pub fn determinant(&self, k: isize) -> BigInt {
        self.p(k) * self.q(k - 1) - self.q(k) * self.p(k - 1)
    }

    /// Checks `p_k q_{k-1} − q_k p_{k-1} = (−1)^{k+1}` for every `k`.
    pub fn determinants_hold(&self) -> bool {
        (0..=self.last() as isize).all(|k| {
            let expected = if k % 2 == 0 { -BigInt::one() } else { BigInt::one() };
            self.determinant(k) == expected
        })
    }

    /// Checks `gcd(p_k, q_k) = 1` for every `k >= 0`.
    pub fn coprime(&self) -> bool {
        (0..=self.last() as isize).all(|k| self.p(k).gcd(self.q(k)).is_one())
    }
}
