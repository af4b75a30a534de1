//! Exact arithmetic: rationals, sparse multivariate polynomials and the
//! rational function field ℚ(t, parameters).

mod field;
pub mod gcd;
mod mpoly;
mod parse;
mod rat;
mod ratfunc;
pub mod serial;
mod var;

pub use field::Field;
pub use gcd::gcd;
pub use mpoly::{MPoly, Monomial};
pub use parse::{parse_poly, parse_ratfunc};
pub use rat::{int, parse_rat, rat, rat_sqrt, rat_to_string, Rat};
pub use ratfunc::RatFunc;
pub use var::Var;

/// Parses an infix expression, panicking on malformed input.
///
/// Meant for literals in tests and examples.
pub fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap_or_else(|e| panic!("bad expression `{s}`: {e}"))
}
