//! Laurent polynomials in one variable `t` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::Rational;
use crate::error::{Error, Result};

/// Terms are stored in ascending exponent order with no zero coefficients,
/// so derived equality is equality of polynomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i64, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// `t^e`.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut v: Vec<(i64, Rational)> = terms.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, Rational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i64, Rational)] {
        &self.terms
    }

    /// Coefficient of `t^k`; zero for absent exponents.
    pub fn coeff(&self, k: i64) -> Rational {
        self.terms
            .binary_search_by_key(&k, |(e, _)| *e)
            .map(|ix| self.terms[ix].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// `Some((c, p))` when the polynomial is a single term `c * t^p`.
    pub fn as_monomial(&self) -> Option<(&Rational, i64)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c, *e)),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `t -> 1/t`.
    pub fn invert_variable(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        Self { terms }
    }

    pub fn eval_at_one(&self) -> Rational {
        self.terms.iter().map(|(_, c)| c.clone()).sum()
    }

    /// Evaluates at a rational point; `t = 0` is an error when negative
    /// exponents are present.
    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                t.pow(*e as u32)
            } else {
                t.recip()?.pow((-e) as u32)
            };
            acc += &(c * &p);
        }
        Ok(acc)
    }

    /// Exact quotient in the Laurent ring, or `None` if `rhs` does not divide.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (&(rtop, ref rtop_c), &(rbot, _)) = (rhs.terms.last()?, rhs.terms.first()?);
        let Some(self_bot) = self.min_degree() else {
            return Some(Self::zero());
        };
        let qbot = self_bot - rbot;
        let inv = rtop_c.recip().ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((dtop, ctop)) = rem.terms.last().cloned() {
            let qe = dtop - rtop;
            if qe < qbot {
                return None;
            }
            let qc = &ctop * &inv;
            rem = &rem - &(rhs.shift(qe).scale(&qc));
            quot.push((qe, qc));
        }
        Some(Self::from_terms(quot))
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), rhs.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ea, ca)), Some((eb, cb))) => {
                    if ea < eb {
                        out.push((*ea, ca.clone()));
                        a.next();
                    } else if eb < ea {
                        out.push((*eb, if negate_rhs { -cb } else { cb.clone() }));
                        b.next();
                    } else {
                        let c = if negate_rhs { ca - cb } else { ca + cb };
                        if !c.is_zero() {
                            out.push((*ea, c));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ea, ca)), None) => {
                    out.push((*ea, ca.clone()));
                    a.next();
                }
                (None, Some((eb, cb))) => {
                    out.push((*eb, if negate_rhs { -cb } else { cb.clone() }));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { terms: out }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        match (self.terms.as_slice(), rhs.terms.as_slice()) {
            ([], _) | (_, []) => Self::zero(),
            ([(ea, ca)], _) => Self {
                terms: rhs.terms.iter().map(|(e, c)| (e + ea, c * ca)).collect(),
            },
            (_, [(eb, cb)]) => Self {
                terms: self.terms.iter().map(|(e, c)| (e + eb, c * cb)).collect(),
            },
            _ => Self::from_terms(
                self.terms
                    .iter()
                    .flat_map(|(ea, ca)| rhs.terms.iter().map(move |(eb, cb)| (ea + eb, ca * cb))),
            ),
        }
    }
}

impl From<Rational> for LaurentPoly {
    fn from(q: Rational) -> Self {
        Self::constant(q)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (ix, (e, c)) in self.terms.iter().enumerate() {
            if ix > 0 {
                write!(f, "+")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let bad = || Error::Parse(format!("invalid Laurent polynomial {s:?}"));
        let mut terms = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let (c, e) = match term.split_once("*t") {
                None => (term.parse::<Rational>()?, 0),
                Some((c, "")) => (c.parse()?, 1),
                Some((c, rest)) => {
                    let e = rest.strip_prefix('^').ok_or_else(bad)?;
                    (c.parse()?, e.parse::<i64>().map_err(|_| bad())?)
                }
            };
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn exponent_cancellation() {
        assert_eq!(LaurentPoly::t_pow(2) * LaurentPoly::t_pow(-2), LaurentPoly::one());
    }

    #[test]
    fn binomial_product() {
        let a = LaurentPoly::from_terms([(0, q(1)), (1, q(1))]);
        let b = LaurentPoly::from_terms([(0, q(1)), (1, q(-1))]);
        assert_eq!(a * b, LaurentPoly::from_terms([(0, q(1)), (2, q(-1))]));
    }

    #[test]
    fn coefficient_extraction() {
        let p = LaurentPoly::from_terms([(-3, q(2)), (4, q(5))]);
        assert_eq!(p.coeff(-3), q(2));
        assert_eq!(p.coeff(0), q(0));
        assert_eq!(p.eval_at_one(), q(7));
        assert_eq!(p.eval(&q(2)).unwrap(), Rational::new(2, 8) + q(80));
        assert!(p.eval(&q(0)).is_err());
    }

    #[test]
    fn serialization_format() {
        let p = LaurentPoly::from_terms([(-2, q(-2)), (0, Rational::new(1, 3)), (1, q(4)), (5, q(1))]);
        assert_eq!(p.to_string(), "-2*t^-2+1/3+4*t+1*t^5");
        assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert!("3*x".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::from_terms([(-1, q(1)), (1, q(1))]);
        let b = LaurentPoly::from_terms([(0, q(1)), (3, q(-2))]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        let c = LaurentPoly::from_terms([(0, q(1)), (1, q(1))]);
        assert!(LaurentPoly::one().div_exact(&c).is_none());
        assert_eq!(LaurentPoly::one().div_exact(&LaurentPoly::t_pow(3)).unwrap(), LaurentPoly::t_pow(-3));
        assert!(LaurentPoly::one().div_exact(&LaurentPoly::zero()).is_none());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i64..5, -20i64..20, 1i64..6), 0..5).prop_map(|v| {
            LaurentPoly::from_terms(v.into_iter().map(|(e, n, d)| (e, Rational::new(n, d))))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
            prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
            prop_assert_eq!(&a - &a, LaurentPoly::zero());
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a.clone());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
            }
        }
    }
}
