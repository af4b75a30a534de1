//! Exact projective invariants of Legendrian curves in ℙ³, Tanaka
//! prolongation of Heisenberg algebras, and the curves induced by the
//! multiply-transitive (2,3,5) distributions. See the guide in `book/`.

pub mod error;
pub mod exact;
pub mod exppoly;
pub mod legcurve;
pub mod liealg;
pub mod linalg;
pub mod models235;
pub mod ode4;
pub mod verify;

pub use error::{Error, Result};

// The guide's code blocks run as doctests, one module per chapter.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/overview.md")]
mod book_overview {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/exact.md")]
mod book_exact {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/invariants.md")]
mod book_invariants {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/curves.md")]
mod book_curves {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/prolongation.md")]
mod book_prolongation {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/models.md")]
mod book_models {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
