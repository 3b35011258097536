//! Exact arithmetic substrate.
//!
//! Big integers and rationals come from `num-bigint` / `num-rational`. On top of
//! them this module provides univariate and multivariate Laurent polynomials
//! with integer coefficients, truncated power series over the rationals, and
//! determinant routines that run over any [`Ring`].

mod matrix;
mod multilaurent;
mod ring;
mod series;
mod unilaurent;

pub use matrix::{bareiss_determinant, determinant};
pub use multilaurent::MultiLaurent;
pub use ring::{int, rat, Int, Rat, Ring};
pub use series::{trunc_mul, trunc_pow, Series};
pub use unilaurent::UniLaurent;
