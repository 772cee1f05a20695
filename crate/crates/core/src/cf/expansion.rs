use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Eventually periodic continued fraction `[initial..., (repeating...)]`.
///
/// Every digit other than `initial[0]` must be at least 1. An empty
/// `repeating` block denotes a finite expansion, which evaluation rejects.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CFExpansion {
    pub initial: Vec<BigInt>,
    pub repeating: Vec<BigInt>,
}

impl CFExpansion {
    pub fn new(initial: Vec<BigInt>, repeating: Vec<BigInt>) -> Result<Self> {
        let cf = CFExpansion { initial, repeating };
        cf.validate()?;
        Ok(cf)
    }

    /// `[0; (block)]`
    pub fn zero_periodic(block: Vec<BigInt>) -> Result<Self> {
        CFExpansion::new(vec![BigInt::from(0)], block)
    }

    pub fn validate(&self) -> Result<()> {
        let tail = self.initial.iter().chain(&self.repeating).enumerate();
        let first_free = !self.initial.is_empty();
        for (pos, d) in tail {
            if pos == 0 && first_free {
                continue;
            }
            if *d < BigInt::one() {
                return Err(Error::InvalidDigit { position: pos, value: d.to_string() });
            }
        }
        Ok(())
    }

    /// The digit stream `c_0, c_1, …`; infinite unless `repeating` is empty.
    pub fn digits(&self) -> impl Iterator<Item = &BigInt> + '_ {
        let cycle = std::iter::repeat(&self.repeating).flat_map(|blk| blk.iter());
        let cycle: Box<dyn Iterator<Item = &BigInt>> =
            if self.repeating.is_empty() { Box::new(std::iter::empty()) } else { Box::new(cycle) };
        self.initial.iter().chain(cycle)
    }

    pub fn is_zero_periodic(&self) -> bool {
        self.initial.len() == 1 && self.initial[0] == BigInt::from(0) && !self.repeating.is_empty()
    }
}

/// Convert small integers into digits.
pub fn to_digits(ds: &[i64]) -> Vec<BigInt> {
    ds.iter().map(|&d| BigInt::from(d)).collect()
}
