//! Exact construction and verification of classical r-matrices on `sl_n`.

pub mod error;
pub mod exact;
pub mod lie;
pub mod report;
pub mod belavindrinfeld;
pub mod frobenius;
pub mod yangbaxter;
pub mod subprime;
pub mod case512;

pub use error::{Error, Result};
pub use exact::{ExactMatrix, InvertibleMatrix, LaurentPoly, Rational, Scalar};
