//! Exact linear algebra over the rationals.
//!
//! Pivoting always takes the first nonzero entry in column order, so every
//! result is deterministic.

use std::collections::BTreeSet;

use super::{factorial, ExactMatrix, InvertibleMatrix, LaurentPoly, Rational, Scalar};
use crate::error::{Error, Result};

/// Reduced row-echelon form and the pivot column of each nonzero row.
pub fn rref(a: &ExactMatrix<Rational>) -> (ExactMatrix<Rational>, Vec<usize>) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<Rational>> = (0..rows).map(|r| a.row(r).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        if next == rows {
            break;
        }
        let Some(p) = (next..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(next, p);
        let inv = m[next][c].recip().expect("pivot is nonzero");
        for v in m[next].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[next].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == next || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !pv.is_zero() {
                    *v -= &(&f * pv);
                }
            }
        }
        pivots.push(c);
        next += 1;
    }
    (ExactMatrix::from_fn(rows, cols, |r, c| m[r][c].clone()), pivots)
}

/// Fraction-free (Bareiss) elimination; returns the rank and the last pivot,
/// which equals the determinant up to sign when the matrix is square and full rank.
fn bareiss<S: Scalar>(a: &ExactMatrix<S>) -> (usize, S, bool) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m: Vec<Vec<S>> = (0..rows).map(|r| a.row(r).to_vec()).collect();
    let mut prev = S::one();
    let mut rank = 0;
    let mut negated = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            negated = !negated;
        }
        let pivot = m[rank][c].clone();
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let num = pivot.mul(&m[r][k]).sub(&m[r][c].mul(&m[rank][k]));
                m[r][k] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[r][c] = S::zero();
        }
        prev = pivot;
        rank += 1;
    }
    (rank, prev, negated)
}

pub fn rank(a: &ExactMatrix<Rational>) -> usize {
    bareiss(a).0
}

/// Determinant of a square matrix over any exact integral domain.
pub fn determinant<S: Scalar>(a: &ExactMatrix<S>) -> Result<S> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch { left: a.rows(), right: a.cols() });
    }
    if a.rows() == 0 {
        return Ok(S::one());
    }
    let (rank, last, negated) = bareiss(a);
    if rank < a.rows() {
        return Ok(S::zero());
    }
    Ok(if negated { last.neg() } else { last })
}

/// Basis of the right nullspace `{x : A x = 0}`.
pub fn nullspace(a: &ExactMatrix<Rational>) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(a);
    let cols = a.cols();
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    (0..cols)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free);
            }
            v
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solve {
    /// A particular solution (free variables set to zero).
    Solution(ExactMatrix<Rational>),
    Inconsistent,
}

/// Solves `A X = B` for `X`.
pub fn solve(a: &ExactMatrix<Rational>, b: &ExactMatrix<Rational>) -> Result<Solve> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch { left: a.rows(), right: b.rows() });
    }
    let (n, k) = (a.cols(), b.cols());
    let aug = ExactMatrix::from_fn(a.rows(), n + k, |r, c| {
        if c < n {
            a.get(r, c).clone()
        } else {
            b.get(r, c - n).clone()
        }
    });
    let (red, pivots) = rref(&aug);
    if pivots.iter().any(|&p| p >= n) {
        return Ok(Solve::Inconsistent);
    }
    let mut x = ExactMatrix::zeros(n, k);
    for (row, &pc) in pivots.iter().enumerate() {
        for c in 0..k {
            x.set(pc, c, red.get(row, n + c).clone());
        }
    }
    Ok(Solve::Solution(x))
}

pub fn inverse(a: &ExactMatrix<Rational>) -> Result<ExactMatrix<Rational>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch { left: a.rows(), right: a.cols() });
    }
    let n = a.rows();
    match solve(a, &ExactMatrix::identity(n))? {
        Solve::Solution(x) if rank(a) == n => Ok(x),
        _ => Err(Error::Singular),
    }
}

/// `exp(N) = sum N^k / k!` for nilpotent `N`, returned with its inverse `exp(-N)`.
pub fn exp_nilpotent<S: Scalar>(nil: &ExactMatrix<S>) -> Result<InvertibleMatrix<S>> {
    if !nil.is_square() {
        return Err(Error::DimensionMismatch { left: nil.rows(), right: nil.cols() });
    }
    let n = nil.rows();
    let mut powers = vec![ExactMatrix::identity(n)];
    loop {
        let next = powers.last().unwrap().mul(nil);
        if next.is_zero() {
            break;
        }
        if powers.len() >= n {
            return Err(Error::NotNilpotent);
        }
        powers.push(next);
    }
    let mut exp = ExactMatrix::zeros(n, n);
    let mut exp_neg = ExactMatrix::zeros(n, n);
    for (k, p) in powers.iter().enumerate() {
        let c = factorial(k as u32).recip()?;
        let term = p.scale(&c);
        exp = exp.try_add(&term)?;
        exp_neg = if k % 2 == 0 { exp_neg.try_add(&term)? } else { exp_neg.try_sub(&term)? };
    }
    Ok(InvertibleMatrix::from_parts_unchecked(exp, exp_neg))
}

/// `t^{scale * A}` for a triangular rational matrix whose scaled version is
/// diagonalizable with integer spectrum: `P diag(t^{l_1}, ..., t^{l_n}) P^{-1}`.
pub fn t_power(a: &ExactMatrix<Rational>, scale: i64) -> Result<InvertibleMatrix<LaurentPoly>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch { left: a.rows(), right: a.cols() });
    }
    if !(a.is_upper_triangular() || a.is_lower_triangular()) {
        return Err(Error::NotTExponentiable("input is not triangular".into()));
    }
    let n = a.rows();
    let scaled = a.scale(&Rational::from(scale));
    let mut spectrum = BTreeSet::new();
    for k in 0..n {
        let d = scaled.get(k, k);
        let lambda = d
            .to_i64()
            .ok_or_else(|| Error::NotTExponentiable(format!("eigenvalue {d} is not an integer")))?;
        spectrum.insert(lambda);
    }
    let mut columns: Vec<(i64, Vec<Rational>)> = Vec::with_capacity(n);
    for &lambda in &spectrum {
        let shifted = scaled.try_sub(&ExactMatrix::identity(n).scale(&Rational::from(lambda)))?;
        for v in nullspace(&shifted) {
            columns.push((lambda, v));
        }
    }
    if columns.len() != n {
        return Err(Error::NotTExponentiable("matrix is not diagonalizable".into()));
    }
    let p = ExactMatrix::from_fn(n, n, |r, c| columns[c].1[r].clone());
    let p_inv = inverse(&p)?;
    let (pl, pil) = (p.lift(), p_inv.lift());
    let diag = |sign: i64| {
        ExactMatrix::diagonal(columns.iter().map(|(l, _)| LaurentPoly::t_pow(sign * l)).collect())
    };
    let mat = pl.mul(&diag(1)).mul(&pil);
    let inv = pl.mul(&diag(-1)).mul(&pil);
    Ok(InvertibleMatrix::from_parts_unchecked(mat, inv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    /// Cofactor expansion, used as an independent determinant oracle.
    fn det_cofactor(m: &ExactMatrix<Rational>) -> Rational {
        let n = m.rows();
        if n == 0 {
            return q(1);
        }
        (0..n)
            .map(|c| {
                let minor = ExactMatrix::from_fn(n - 1, n - 1, |r, k| {
                    m.get(r + 1, if k < c { k } else { k + 1 }).clone()
                });
                let s = if c % 2 == 0 { q(1) } else { q(-1) };
                s * m.get(0, c) * det_cofactor(&minor)
            })
            .sum()
    }

    #[test]
    fn rank_and_inverse_basics() {
        assert_eq!(rank(&ExactMatrix::identity(2)), 2);
        let rot = ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]]);
        assert_eq!(inverse(&rot).unwrap(), ExactMatrix::from_ints(&[&[0, -1], &[1, 0]]));
        let sing = ExactMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&sing), 1);
        assert!(matches!(inverse(&sing), Err(Error::Singular)));
    }

    #[test]
    fn solve_reports_inconsistency() {
        let a = ExactMatrix::from_ints(&[&[1, 1], &[2, 2]]);
        let b = ExactMatrix::from_ints(&[&[1], &[3]]);
        assert_eq!(solve(&a, &b).unwrap(), Solve::Inconsistent);
        let b = ExactMatrix::from_ints(&[&[1], &[2]]);
        let Solve::Solution(x) = solve(&a, &b).unwrap() else { panic!() };
        assert_eq!(a.mul(&x), b);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = ExactMatrix::from_ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col = ExactMatrix::from_fn(4, 1, |r, _| v[r].clone());
            assert!(a.mul(&col).is_zero());
        }
    }

    #[test]
    fn determinant_matches_cofactor_oracle() {
        let mats = [
            ExactMatrix::from_ints(&[&[2, -1, 0], &[1, 3, 5], &[4, 0, -2]]),
            ExactMatrix::from_ints(&[&[0, 1, 2, 3], &[1, 0, 1, 1], &[3, 1, 0, 2], &[1, 1, 1, 0]]),
            ExactMatrix::from_ints(&[&[1, 2], &[2, 4]]),
        ];
        for m in &mats {
            assert_eq!(determinant(m).unwrap(), det_cofactor(m));
        }
    }

    #[test]
    fn laurent_determinant() {
        let t = LaurentPoly::t_pow;
        let m = ExactMatrix::from_rows(vec![vec![t(2), t(1)], vec![LaurentPoly::zero(), t(-2)]]);
        assert_eq!(determinant(&m).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn exp_of_zero_and_square_zero() {
        let z = ExactMatrix::<Rational>::zeros(3, 3);
        assert_eq!(exp_nilpotent(&z).unwrap().matrix(), &ExactMatrix::identity(3));
        let e12 = ExactMatrix::from_ints(&[&[0, 1], &[0, 0]]);
        let e = exp_nilpotent(&e12).unwrap();
        assert_eq!(e.matrix(), &ExactMatrix::from_ints(&[&[1, 1], &[0, 1]]));
        assert_eq!(e.matrix().mul(e.inverse_matrix()), ExactMatrix::identity(2));
    }

    #[test]
    fn exp_rejects_non_nilpotent() {
        let m = ExactMatrix::from_ints(&[&[1, 0], &[0, 0]]);
        assert!(matches!(exp_nilpotent(&m), Err(Error::NotNilpotent)));
        let m = ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert!(matches!(exp_nilpotent(&m), Err(Error::NotNilpotent)));
    }

    #[test]
    fn exp_of_strictly_upper_has_unit_determinant() {
        let n = ExactMatrix::from_ints(&[&[0, 2, -1, 3], &[0, 0, 5, 1], &[0, 0, 0, -4], &[0, 0, 0, 0]]);
        let e = exp_nilpotent(&n).unwrap();
        assert_eq!(determinant(e.matrix()).unwrap(), q(1));
        assert_eq!(e.matrix().mul(e.inverse_matrix()), ExactMatrix::identity(4));
    }

    #[test]
    fn t_power_of_diagonal() {
        let a = ExactMatrix::from_ints(&[&[1, 0], &[0, -1]]);
        let tp = t_power(&a, 1).unwrap();
        let expected = ExactMatrix::diagonal(vec![LaurentPoly::t_pow(1), LaurentPoly::t_pow(-1)]);
        assert_eq!(tp.matrix(), &expected);
        assert_eq!(tp.inverse_matrix(), &expected.invert_variable());
    }

    #[test]
    fn t_power_of_triangular() {
        let a = ExactMatrix::from_ints(&[&[2, 3], &[0, -1]]);
        let tp = t_power(&a, 1).unwrap();
        assert_eq!(tp.matrix().eval_at_one(), ExactMatrix::identity(2));
        assert_eq!(tp.matrix().mul(&tp.matrix().invert_variable()), ExactMatrix::identity(2));
        assert_eq!(tp.matrix().mul(tp.inverse_matrix()), ExactMatrix::identity(2));
        // (1,2) entry of P diag(t^2, t^-1) P^{-1} with P = [[1,-1],[0,1]]
        assert_eq!(
            tp.matrix().get(0, 1),
            &LaurentPoly::from_terms([(-1, q(-1)), (2, q(1))])
        );
    }

    #[test]
    fn t_power_errors() {
        let jordan = ExactMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert!(matches!(t_power(&jordan, 1), Err(Error::NotTExponentiable(_))));
        let half = ExactMatrix::diagonal(vec![Rational::new(1, 2), Rational::new(-1, 2)]);
        assert!(matches!(t_power(&half, 1), Err(Error::NotTExponentiable(_))));
        assert!(t_power(&half, 2).is_ok());
        let full = ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert!(matches!(t_power(&full, 1), Err(Error::NotTExponentiable(_))));
    }
}
