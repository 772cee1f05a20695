use num_bigint::BigInt;

use super::convergents::ConvergentTable;
use super::expansion::CFExpansion;
use super::theorem::zero_block_table;
use crate::error::{Error, Result};
use crate::number::{MobiusMap, QuadIrr, Window};

/// `[0; (c_1,…,c_n)]`, the root in `(0, 1)` of
/// `q_{n-1}x² + (q_n − p_{n-1})x − p_n = 0`.
pub fn evaluate_zero_periodic(block: &[BigInt]) -> Result<QuadIrr> {
    let t = zero_block_table(block)?;
    let n = t.last() as isize;
    // x = (p_n + p_{n-1} x)/(q_n + q_{n-1} x)
    let m = MobiusMap::new(t.p(n - 1).clone(), t.p(n).clone(), t.q(n - 1).clone(), t.q(n).clone())?;
    m.fixed_point(&Window::unit())
}

/// `[(c_1,…,c_n)]`, the root above 1 of `y = (p_{n-1} y + p_{n-2})/(q_{n-1} y + q_{n-2})`
/// with convergents indexed from `c_1` at position 0.
pub fn evaluate_purely_periodic(block: &[BigInt]) -> Result<QuadIrr> {
    if block.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let t = ConvergentTable::build(block)?;
    if let Some(d) = block.first().filter(|d| **d < BigInt::from(1)) {
        return Err(Error::InvalidDigit { position: 0, value: d.to_string() });
    }
    let n = t.last() as isize;
    let m = MobiusMap::new(t.p(n).clone(), t.p(n - 1).clone(), t.q(n).clone(), t.q(n - 1).clone())?;
    m.fixed_point(&Window::above_one())
}

/// `[b_0,…,b_m; (c_1,…,c_n)]`: the purely periodic tail pushed through the
/// map built from the convergents of the initial block.
pub fn evaluate_general(cf: &CFExpansion) -> Result<QuadIrr> {
    cf.validate()?;
    let tail = evaluate_purely_periodic(&cf.repeating)?;
    if cf.initial.is_empty() {
        return Ok(tail);
    }
    let t = ConvergentTable::build(&cf.initial)?;
    let m = t.last() as isize;
    let map = MobiusMap::new(t.p(m).clone(), t.p(m - 1).clone(), t.q(m).clone(), t.q(m - 1).clone())?;
    map.apply(&tail)
}
