use std::collections::{BTreeMap, BTreeSet};

use super::{module_vectors, r_prime, SubprimeContext};
use crate::error::{Error, Result};
use crate::exact::{nullspace, ExactMatrix, Rational, SpanBasis};
use crate::lie::{ad_two, GlElement, Key2, TwoTensor};
use crate::report::Report;

/// Eigenspaces of `ad(H)` on a stable subspace, keyed by eigenvalue.
#[derive(Clone, Debug)]
pub struct Eigenspaces {
    pub spaces: BTreeMap<Rational, Vec<TwoTensor>>,
}

impl Eigenspaces {
    pub fn total_dim(&self) -> usize {
        self.spaces.values().map(Vec::len).sum()
    }

    pub fn dim(&self, lambda: &Rational) -> usize {
        self.spaces.get(lambda).map_or(0, Vec::len)
    }

    /// Dimensions for the integer eigenvalues `0..=top`.
    pub fn dims_up_to(&self, top: i64) -> Vec<usize> {
        (0..=top).map(|l| self.dim(&Rational::from(l))).collect()
    }

    pub fn eigenvalues(&self) -> Vec<Rational> {
        self.spaces.keys().cloned().collect()
    }
}

fn candidate_eigenvalues(h: &GlElement) -> BTreeSet<Rational> {
    let n = h.n() as u16;
    let diag: BTreeSet<Rational> = (1..=n).map(|k| h.get(k, k)).collect();
    let diffs: BTreeSet<Rational> = diag.iter().flat_map(|a| diag.iter().map(move |b| a - b)).collect();
    diffs.iter().flat_map(|a| diffs.iter().map(move |b| a + b)).collect()
}

/// Decompose `span(space)` into `ad(H)`-eigenspaces. `H` must be triangular,
/// so the spectrum of `ad(H)` on two-tensors is read off its diagonal.
pub fn eigen_decompose(h: &GlElement, space: &[TwoTensor]) -> Result<Eigenspaces> {
    let n = h.n();
    let tri = h.to_matrix();
    if !(tri.is_upper_triangular() || tri.is_lower_triangular()) {
        return Err(Error::InvalidArgument("H must be triangular".into()));
    }
    let mut basis: SpanBasis<Key2> = SpanBasis::new();
    for t in space {
        if t.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: t.n() });
        }
        basis.insert(&t.sparse());
    }
    let vecs = basis.vectors();
    let dim = vecs.len();
    let mut cols = Vec::with_capacity(dim);
    for v in vecs {
        let image = ad_two(h, &TwoTensor::from_sparse(n, v))?;
        cols.push(basis.coords(&image.sparse()).ok_or(Error::NotStable)?);
    }
    let resolve = |c: &[Rational]| {
        let mut acc = TwoTensor::zero(n);
        for (v, coeff) in vecs.iter().zip(c) {
            if !coeff.is_zero() {
                acc = acc.plus(&TwoTensor::from_sparse(n, v).scale(coeff));
            }
        }
        acc
    };
    let mat = ExactMatrix::from_fn(dim, dim, |r, c| cols[c][r].clone());
    let mut spaces = BTreeMap::new();
    let mut found = 0;
    for lambda in candidate_eigenvalues(h) {
        let shifted = mat.try_sub(&ExactMatrix::identity(dim).scale(&lambda))?;
        let null = nullspace(&shifted);
        if null.is_empty() {
            continue;
        }
        found += null.len();
        spaces.insert(lambda, null.iter().map(|c| resolve(c)).collect());
    }
    if found != dim {
        return Err(Error::NotStable);
    }
    Ok(Eigenspaces { spaces })
}

/// `H`-weights of `r`, `r'`, `W`, `V_j`, `X`, `Z`, and the eigenspace
/// dimensions of the module.
pub fn eigen_report(ctx: &SubprimeContext) -> Report {
    let mut rep = Report::new();
    let h = ctx.principal();
    let i = ctx.i();
    let m = module_vectors(ctx);
    let act = |t: &TwoTensor| ad_two(&h, t).expect("same n");
    let rp = r_prime(ctx);
    rep.push("H.r' = 0", act(&rp).is_zero());
    rep.push("H.W = W", act(&m.w) == m.w);
    let mut weights = true;
    for (j, v) in m.v.iter().enumerate() {
        weights &= act(v) == v.scale(&Rational::from(j as i64 + 1));
    }
    rep.push("H.V_j = (j+1) V_j", weights);
    rep.push("H.r = -(i+1) V_i", act(&m.r) == m.v[i].scale(&Rational::from(-(i as i64) - 1)));
    rep.push("[H, X] = X", h.commutator(&ctx.x()) == ctx.x());
    rep.push("[H, Z] = Z", h.commutator(&ctx.z()) == ctx.z());
    let space: Vec<TwoTensor> = m.all().into_iter().cloned().collect();
    let dims_ok = match eigen_decompose(&h, &space) {
        Ok(es) => {
            let mut expected = vec![1, 2];
            expected.extend(std::iter::repeat(1).take(i));
            if i == 1 {
                expected = vec![1, 1];
            }
            let top = expected.len() as i64 - 1;
            es.dims_up_to(top) == expected && es.total_dim() == expected.iter().sum::<usize>()
        }
        Err(_) => false,
    };
    rep.push("eigenspace dimensions", dims_ok);
    rep
}

#[cfg(test)]
mod tests {
    use super::super::{context, subprime_pairs};
    use super::*;

    #[test]
    fn dims_at_three_seven() {
        let ctx = context(3, 7).unwrap();
        let m = module_vectors(&ctx);
        let space: Vec<_> = m.all().into_iter().cloned().collect();
        let es = eigen_decompose(&ctx.principal(), &space).unwrap();
        assert_eq!(es.dims_up_to(4), vec![1, 2, 1, 1, 1]);
        assert_eq!(es.total_dim(), 6);
        let zero = &es.spaces[&Rational::zero()];
        let rp = r_prime(&ctx);
        let mut sb: SpanBasis<Key2> = SpanBasis::new();
        sb.insert(&zero[0].sparse());
        assert!(sb.contains(&rp.sparse()));
    }

    #[test]
    fn weights_at_two_five() {
        let rep = eigen_report(&context(2, 5).unwrap());
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn not_stable_detected() {
        let ctx = context(2, 5).unwrap();
        let h = ctx.principal();
        let id = GlElement::identity(5);
        let space = [
            TwoTensor::tensor(&GlElement::elementary(5, 1, 2), &id),
            TwoTensor::tensor(&GlElement::elementary(5, 2, 2), &id),
        ];
        let skew = &h + &GlElement::elementary(5, 2, 5);
        assert!(matches!(eigen_decompose(&skew, &space), Err(Error::NotStable)));
        assert_eq!(eigen_decompose(&h, &space).unwrap().total_dim(), 2);
    }

    #[test]
    fn report_small_pairs() {
        for (i, n) in subprime_pairs(8) {
            let rep = eigen_report(&context(i, n).unwrap());
            assert!(rep.all_pass(), "({i},{n}) {rep}");
        }
    }
}
