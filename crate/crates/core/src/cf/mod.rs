//! Continued fractions: convergents, evaluation of periodic expansions,
//! the rational-part identities and the inverse expansion.

mod convergents;
mod evaluate;
mod expand;
mod expansion;
mod theorem;

pub use convergents::ConvergentTable;
pub use evaluate::{evaluate_general, evaluate_purely_periodic, evaluate_zero_periodic};
pub use expand::{canonicalize, exact_floor, expand, SurdState, DEFAULT_MAX_STEPS};
pub use expansion::{to_digits, CFExpansion};
pub use theorem::{
    congruence_check, determinant_congruence, discriminant_poly_in_cn, epsilon, is_palindromic_prefix,
    quadratic_equation, theorem1_report, theorem2_report, zero_block_table, DiscriminantPoly, EpsilonCase,
    Theorem2, TheoremReport,
};
