//! Exact scalar arithmetic: rationals, integer square roots, quadratic
//! irrationals and Möbius maps acting on them.

mod isqrt;
mod mobius;
mod quad;
mod rational;

pub use isqrt::{exact_sqrt, isqrt};
pub use mobius::{MobiusMap, Window};
pub use quad::{Number, QuadIrr, Sign};
pub use rational::Rational;
