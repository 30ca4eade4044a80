use std::fmt;

use super::{LaurentPoly, Rational, Scalar};
use crate::error::{Error, Result};

/// Dense matrix over an exact scalar ring, zero-indexed.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix<S: Scalar = Rational> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, S::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal(entries: Vec<S>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (k, e) in entries.into_iter().enumerate() {
            m.set(k, k, e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &S)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(ix, v)| (ix / self.cols, ix % self.cols, v))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> ExactMatrix<T> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.map(|v| v.scale(q))
    }

    pub fn neg(&self) -> Self {
        self.map(S::neg)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.neg())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * rhs.cols + c].add_assign(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product of square matrices of equal size; panics on mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, k| acc.add(self.get(k, k)))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.nonzero().all(|(r, c, _)| r <= c)
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.nonzero().all(|(r, c, _)| r >= c)
    }

    fn check_same_shape(&self, rhs: &Self) -> Result<()> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch { left: self.rows, right: rhs.rows });
        }
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch { left: self.cols, right: rhs.cols });
        }
        Ok(())
    }
}

impl ExactMatrix<Rational> {
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|v| Rational::from(*v)).collect())
                .collect(),
        )
    }

    pub fn lift(&self) -> ExactMatrix<LaurentPoly> {
        self.map(|q| LaurentPoly::constant(q.clone()))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Rational::is_integer)
    }
}

impl ExactMatrix<LaurentPoly> {
    pub fn eval_at_one(&self) -> ExactMatrix<Rational> {
        self.map(LaurentPoly::eval_at_one)
    }

    pub fn invert_variable(&self) -> Self {
        self.map(LaurentPoly::invert_variable)
    }
}

impl<S: Scalar> fmt::Debug for ExactMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{} x {}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Display for ExactMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// An invertible matrix carried together with its inverse.
///
/// Group actions need `g^{-1}`, which over the Laurent ring is not generally
/// computable by elimination; constructors either compute it (rationals),
/// know it in closed form (exponentials, `t`-powers) or verify a supplied one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvertibleMatrix<S: Scalar = Rational> {
    mat: ExactMatrix<S>,
    inv: ExactMatrix<S>,
}

impl<S: Scalar> InvertibleMatrix<S> {
    pub fn identity(n: usize) -> Self {
        Self {
            mat: ExactMatrix::identity(n),
            inv: ExactMatrix::identity(n),
        }
    }

    /// Pairs `mat` with a claimed inverse, checking both products.
    pub fn with_inverse(mat: ExactMatrix<S>, inv: ExactMatrix<S>) -> Result<Self> {
        let n = mat.rows();
        let id = ExactMatrix::identity(n);
        if !mat.is_square() || mat.try_mul(&inv)? != id || inv.try_mul(&mat)? != id {
            return Err(Error::Singular);
        }
        Ok(Self { mat, inv })
    }

    pub(crate) fn from_parts_unchecked(mat: ExactMatrix<S>, inv: ExactMatrix<S>) -> Self {
        Self { mat, inv }
    }

    pub fn matrix(&self) -> &ExactMatrix<S> {
        &self.mat
    }

    pub fn inverse_matrix(&self) -> &ExactMatrix<S> {
        &self.inv
    }

    pub fn n(&self) -> usize {
        self.mat.rows()
    }

    pub fn inverse(&self) -> Self {
        Self {
            mat: self.inv.clone(),
            inv: self.mat.clone(),
        }
    }

    /// `self * rhs`, with inverse `rhs^{-1} * self^{-1}`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        Ok(Self {
            mat: self.mat.try_mul(&rhs.mat)?,
            inv: rhs.inv.try_mul(&self.inv)?,
        })
    }
}

impl InvertibleMatrix<Rational> {
    pub fn new(mat: ExactMatrix<Rational>) -> Result<Self> {
        let inv = super::linalg::inverse(&mat)?;
        Ok(Self { mat, inv })
    }

    pub fn lift(&self) -> InvertibleMatrix<LaurentPoly> {
        InvertibleMatrix {
            mat: self.mat.lift(),
            inv: self.inv.lift(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_and_identity() {
        let a = ExactMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        let id = ExactMatrix::identity(2);
        assert_eq!(a.mul(&id), a);
        assert_eq!(a.mul(&a), ExactMatrix::from_ints(&[&[7, 10], &[15, 22]]));
        assert_eq!(a.trace(), Rational::from(5));
        assert!(matches!(
            a.try_mul(&ExactMatrix::zeros(3, 1)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn with_inverse_rejects_wrong_inverse() {
        let a = ExactMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        let good = ExactMatrix::from_ints(&[&[1, -1], &[0, 1]]);
        assert!(InvertibleMatrix::with_inverse(a.clone(), good).is_ok());
        assert!(matches!(
            InvertibleMatrix::with_inverse(a.clone(), a),
            Err(Error::Singular)
        ));
    }
}
