//! Dense exact linear algebra: elimination, nullspaces, linear solves,
//! characteristic and minimal polynomials.

mod mat;
mod polys;

pub use mat::{nullspace_of_rows, rank_nullspace, solve_linear, Mat, MatF, MatQ, Solution};
pub use polys::{charpoly, charpoly_minpoly, minpoly, PolyInS};
