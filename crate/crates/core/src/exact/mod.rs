//! Exact scalars, matrices and linear algebra.

mod laurent;
pub mod linalg;
mod matrix;
mod rational;
mod scalar;
mod span;

pub use laurent::LaurentPoly;
pub use linalg::{determinant, exp_nilpotent, inverse, nullspace, rank, rref, solve, t_power, Solve};
pub use matrix::{ExactMatrix, InvertibleMatrix};
pub use rational::{binomial, factorial, floor_div, gcd, mod_inverse, modulo, Rational};
pub use scalar::Scalar;
pub use span::{sparse_rank, SpanBasis, SparseVec};
