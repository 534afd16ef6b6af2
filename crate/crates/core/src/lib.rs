//! Exact counting of monotone triangles with prescribed bottom row.
//!
//! A monotone triangle of order `n` is a triangular array of integers
//! `a[i][j]` (`1 <= j <= i <= n`) whose rows strictly increase and whose
//! north-east and south-east diagonals weakly increase.  Monotone triangles
//! with bottom row `(1, ..., n)` are in bijection with `n x n` alternating
//! sign matrices.
//!
//! The number of monotone triangles with bottom row `(k_1 < ... < k_n)` is a
//! polynomial function `alpha(n; k_1, ..., k_n)`, and this crate computes it
//! exactly, by several independent routes that are tested against each other:
//!
//! * direct enumeration of the triangles ([`enumerate`]),
//! * a row-insertion recursion evaluated with symbolic interval sums
//!   ([`summation`]),
//! * products of shift-operator factors applied to a known polynomial
//!   ([`operator`], [`counting`]).
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals
//! and counts are arbitrary-precision integers.  There are no floats and no
//! rounding anywhere in the crate.

pub mod checks;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod golden;
pub mod number;
pub mod operator;
pub mod poly;
pub mod summation;
pub mod text;

pub use error::{Error, Result};
pub use poly::{MultiPoly, Var};
