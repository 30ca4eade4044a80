use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, LaurentPoly, Rational, Scalar};

/// A one-based matrix position `(row, col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub row: u16,
    pub col: u16,
}

impl Pos {
    pub const fn new(row: u16, col: u16) -> Self {
        Self { row, col }
    }

    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }

    /// The position if both subscripts lie in `[1, n]`.
    pub fn checked(n: usize, row: i64, col: i64) -> Option<Self> {
        let ok = |v: i64| v >= 1 && v <= n as i64;
        (ok(row) && ok(col)).then(|| Self::new(row as u16, col as u16))
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.row < 10 && self.col < 10 {
            write!(f, "e_{}{}", self.row, self.col)
        } else {
            write!(f, "e_{{{},{}}}", self.row, self.col)
        }
    }
}

/// A sparse element of `gl_n` over an exact scalar ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GlElement<S: Scalar = Rational> {
    n: usize,
    entries: BTreeMap<Pos, S>,
}

pub(crate) fn check_dims(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a, right: b })
    }
}

impl<S: Scalar> GlElement<S> {
    pub fn zero(n: usize) -> Self {
        Self { n, entries: BTreeMap::new() }
    }

    /// `e_{jk}`, or zero when a subscript is outside `[1, n]`.
    pub fn elementary(n: usize, j: i64, k: i64) -> Self {
        let mut out = Self::zero(n);
        if let Some(p) = Pos::checked(n, j, k) {
            out.entries.insert(p, S::one());
        }
        out
    }

    /// `h_j = e_{jj} - e_{j+1,j+1}`.
    pub fn h(n: usize, j: i64) -> Self {
        &Self::elementary(n, j, j) - &Self::elementary(n, j + 1, j + 1)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_entries(n, (1..=n as u16).map(|k| (Pos::new(k, k), S::one())))
    }

    /// Builds an element from entries, summing repeats and dropping zeros.
    /// Panics if a position is outside `[1, n]`.
    pub fn from_entries<I: IntoIterator<Item = (Pos, S)>>(n: usize, entries: I) -> Self {
        let mut out = Self::zero(n);
        for (p, v) in entries {
            assert!(
                p.row >= 1 && p.col >= 1 && p.row as usize <= n && p.col as usize <= n,
                "position {p:?} out of range for n = {n}"
            );
            out.add_at(p, &v);
        }
        out
    }

    pub fn from_matrix(m: &ExactMatrix<S>) -> Self {
        assert!(m.is_square());
        Self::from_entries(
            m.rows(),
            m.nonzero().map(|(r, c, v)| (Pos::new(r as u16 + 1, c as u16 + 1), v.clone())),
        )
    }

    pub fn to_matrix(&self) -> ExactMatrix<S> {
        let mut m = ExactMatrix::zeros(self.n, self.n);
        for (p, v) in &self.entries {
            m.set(p.row as usize - 1, p.col as usize - 1, v.clone());
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &BTreeMap<Pos, S> {
        &self.entries
    }

    pub fn get(&self, j: u16, k: u16) -> S {
        self.entries.get(&Pos::new(j, k)).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|p| p.is_diagonal())
    }

    pub fn trace(&self) -> S {
        self.entries
            .iter()
            .filter(|(p, _)| p.is_diagonal())
            .fold(S::zero(), |acc, (_, v)| acc.add(v))
    }

    pub(crate) fn add_at(&mut self, p: Pos, v: &S) {
        if v.is_zero() {
            return;
        }
        match self.entries.get_mut(&p) {
            Some(x) => {
                x.add_assign(v);
                if x.is_zero() {
                    self.entries.remove(&p);
                }
            }
            None => {
                self.entries.insert(p, v.clone());
            }
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            entries: self.entries.iter().map(|(p, v)| (*p, v.scale(q))).collect(),
        }
    }

    pub fn scale_by(&self, s: &S) -> Self {
        Self::from_entries(self.n, self.entries.iter().map(|(p, v)| (*p, v.mul(s))))
    }

    /// Matrix product.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut by_row: BTreeMap<u16, Vec<(u16, &S)>> = BTreeMap::new();
        for (p, v) in &rhs.entries {
            by_row.entry(p.row).or_default().push((p.col, v));
        }
        let mut out = Self::zero(self.n);
        for (p, a) in &self.entries {
            if let Some(row) = by_row.get(&p.col) {
                for (c, b) in row {
                    out.add_at(Pos::new(p.row, *c), &a.mul(b));
                }
            }
        }
        out
    }

    /// `[self, rhs] = self*rhs - rhs*self`; panics on dimension mismatch.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.matmul(rhs) - &rhs.matmul(self)
    }

    /// Iterated adjoint action `(ad self)^k (x)`.
    pub fn ad_pow(&self, x: &Self, k: usize) -> Self {
        (0..k).fold(x.clone(), |acc, _| self.commutator(&acc))
    }
}

impl GlElement<Rational> {
    pub fn lift(&self) -> GlElement<LaurentPoly> {
        GlElement {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(p, v)| (*p, LaurentPoly::constant(v.clone())))
                .collect(),
        }
    }

    /// Entries as integers, if they all are.
    pub fn is_integral(&self) -> bool {
        self.entries.values().all(Rational::is_integer)
    }
}

/// Checked commutator `[a, b]`.
pub fn bracket<S: Scalar>(a: &GlElement<S>, b: &GlElement<S>) -> Result<GlElement<S>> {
    check_dims(a.n, b.n)?;
    Ok(a.commutator(b))
}

impl<'a, S: Scalar> Add<&'a GlElement<S>> for &'a GlElement<S> {
    type Output = GlElement<S>;
    fn add(self, rhs: &'a GlElement<S>) -> GlElement<S> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let mut out = self.clone();
        for (p, v) in &rhs.entries {
            out.add_at(*p, v);
        }
        out
    }
}

impl<'a, S: Scalar> Sub<&'a GlElement<S>> for &'a GlElement<S> {
    type Output = GlElement<S>;
    fn sub(self, rhs: &'a GlElement<S>) -> GlElement<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &GlElement<S> {
    type Output = GlElement<S>;
    fn neg(self) -> GlElement<S> {
        GlElement {
            n: self.n,
            entries: self.entries.iter().map(|(p, v)| (*p, v.neg())).collect(),
        }
    }
}

impl<S: Scalar> std::iter::Sum<GlElement<S>> for Option<GlElement<S>> {
    fn sum<I: Iterator<Item = GlElement<S>>>(mut iter: I) -> Self {
        let first = iter.next()?;
        Some(iter.fold(first, |acc, x| &acc + &x))
    }
}

impl<S: Scalar> fmt::Display for GlElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.entries.iter().map(|(p, v)| format!("({v})*{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar> fmt::Debug for GlElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GlElement(n={}; {})", self.n, self)
    }
}

/// Sums `coeff * element` over an iterator, starting from zero in `gl_n`.
pub fn linear_combination<'a, I>(n: usize, terms: I) -> GlElement
where
    I: IntoIterator<Item = (Rational, &'a GlElement)>,
{
    let mut out = GlElement::zero(n);
    for (c, x) in terms {
        for (p, v) in &x.entries {
            out.add_at(*p, &(v * &c));
        }
    }
    out
}
