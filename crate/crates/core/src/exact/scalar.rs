use std::fmt;

use super::{LaurentPoly, Rational};
use crate::error::Result;

/// A commutative ring of exact scalars containing the rationals.
///
/// Implemented by [`Rational`] and [`LaurentPoly`]; all tensor and matrix
/// containers are generic over it.
pub trait Scalar:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Ring tag used in interchange files: `"Q"` or `"Qt"`.
    const RING: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: Rational) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, q: &Rational) -> Self;
    fn add_assign(&mut self, rhs: &Self) {
        *self = Scalar::add(self, rhs);
    }
    /// Exact quotient `self / rhs`; `None` when it does not exist in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    fn parse(s: &str) -> Result<Self>;
}

impl Scalar for Rational {
    const RING: &'static str = "Q";

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs).ok()
    }
    fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl Scalar for LaurentPoly {
    const RING: &'static str = "Qt";

    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn from_rational(q: Rational) -> Self {
        LaurentPoly::constant(q)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Rational) -> Self {
        LaurentPoly::scale(self, q)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, rhs)
    }
    fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}
