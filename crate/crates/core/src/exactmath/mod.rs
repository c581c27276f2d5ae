//! Exact arithmetic: rationals, univariate polynomials and formal series,
//! graded multivariate polynomials, and exact linear solving.

mod graded;
mod matrix;
mod rational;
mod series;
mod unipoly;

pub use graded::{apply_iota, GradedPolynomial, Monomial, VarFamily};
pub use matrix::{modular_rank, solve_exact, RationalMatrix, SolveFailure};
pub use rational::{falling_factorial, int, rat, to_integer, Rational};
pub use series::{series_expand_at_infinity, series_mul, series_reciprocal, series_reversion};
pub use unipoly::UniPoly;
