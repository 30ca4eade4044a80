use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use super::Rational;

/// A sparse rational vector indexed by an ordered key.
pub type SparseVec<K> = BTreeMap<K, Rational>;

/// An exact basis of a subspace of sparse vectors kept in fully reduced
/// echelon form: every basis vector has coefficient 1 at its pivot key and
/// no other basis vector touches that key.
#[derive(Clone, Debug)]
pub struct SpanBasis<K: Ord + Clone + Hash> {
    vectors: Vec<SparseVec<K>>,
    pivots: Vec<K>,
    pivot_of: HashMap<K, usize>,
}

impl<K: Ord + Clone + Hash> Default for SpanBasis<K> {
    fn default() -> Self {
        Self {
            vectors: Vec::new(),
            pivots: Vec::new(),
            pivot_of: HashMap::new(),
        }
    }
}

fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, coeff: &Rational, v: &SparseVec<K>) {
    for (k, x) in v {
        let d = coeff * x;
        match target.get_mut(k) {
            Some(t) => {
                *t -= &d;
                if t.is_zero() {
                    target.remove(k);
                }
            }
            None => {
                target.insert(k.clone(), -d);
            }
        }
    }
}

impl<K: Ord + Clone + Hash> SpanBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[SparseVec<K>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[K] {
        &self.pivots
    }

    /// Coordinates of `v` against the current basis, read off the pivots.
    fn raw_coords(&self, v: &SparseVec<K>) -> Vec<(usize, Rational)> {
        v.iter()
            .filter_map(|(k, c)| self.pivot_of.get(k).map(|&ix| (ix, c.clone())))
            .collect()
    }

    /// The component of `v` outside the span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out = v.clone();
        for (ix, c) in self.raw_coords(v) {
            axpy(&mut out, &c, &self.vectors[ix]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` in basis order, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &SparseVec<K>) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        let mut out = vec![Rational::zero(); self.dim()];
        for (ix, c) in self.raw_coords(v) {
            out[ix] = c;
        }
        Some(out)
    }

    /// Adds `v` to the span; returns `false` if it was already contained.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut w = self.reduce(v);
        let Some((pivot, lead)) = w.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.recip().expect("nonzero lead");
        for c in w.values_mut() {
            *c *= &inv;
        }
        for u in &mut self.vectors {
            if let Some(c) = u.get(&pivot).cloned() {
                axpy(u, &c, &w);
            }
        }
        self.pivot_of.insert(pivot.clone(), self.vectors.len());
        self.pivots.push(pivot);
        self.vectors.push(w);
        true
    }

    /// Basis vectors ordered by pivot key (reduced row-echelon order).
    pub fn sorted_vectors(&self) -> Vec<SparseVec<K>> {
        let mut ix: Vec<usize> = (0..self.dim()).collect();
        ix.sort_by(|&a, &b| self.pivots[a].cmp(&self.pivots[b]));
        ix.into_iter().map(|i| self.vectors[i].clone()).collect()
    }
}

/// Exact rank of a family of sparse vectors.
pub fn sparse_rank<'a, K: Ord + Clone + Hash + 'a>(vs: impl IntoIterator<Item = &'a SparseVec<K>>) -> usize {
    let mut b = SpanBasis::new();
    for v in vs {
        b.insert(v);
    }
    b.dim()
}
