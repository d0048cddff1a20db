//! Exact arithmetic for the effective arithmetic Nullstellensatz over Q.
//!
//! * [`poly`]: sparse multivariate polynomials with rational coefficients.
//! * [`heights`]: local and global heights, Mahler measures, and executable
//!   forms of the standard height inequalities.
//! * [`geometry`]: supports, normalized volumes, Canny–Emiris matrices, and
//!   the bound calculators.
//! * [`quotient`]: zero-dimensional quotient algebras, norms, traces, and
//!   division through the trace formula.
//! * [`nullsatz`]: Bézout certificate search, verification, and fixtures.
//! * [`cli`]: the `arithnull` command-line front end.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod heights;
pub mod linalg;
pub mod logexpr;
pub mod nullsatz;
pub mod poly;
pub mod quotient;
pub mod selftest;

pub use error::{Error, Result};

/// Arbitrary-precision integer scalar.
pub type Integer = num_bigint::BigInt;
/// Reduced arbitrary-precision rational with positive denominator.
pub type Rational = num_rational::BigRational;
