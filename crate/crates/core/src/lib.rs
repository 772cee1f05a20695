//! Exact arithmetic for periodic continued fractions and the quadratic
//! irrationals they represent.
//!
//! ```
//! use surdcf::cf::{evaluate_zero_periodic, theorem1_report, to_digits};
//!
//! let block = to_digits(&[1, 2, 2, 3]);
//! let x = evaluate_zero_periodic(&block).unwrap();
//! assert_eq!(x.to_string(), "-19/14 + sqrt(837/196)");
//! assert_eq!(theorem1_report(&block).unwrap().two_a.to_string(), "-19/7");
//! ```

pub mod approx;
pub mod cf;
mod error;
pub mod notation;
pub mod number;

pub use error::{Error, Result};
