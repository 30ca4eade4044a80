//! Sparse two- and three-fold tensors over `gl_n`.
//!
//! Wedges are stored expanded: `u ^ v = (u (x) v - v (x) u) / 2`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use super::element::{check_dims, GlElement, Pos};
use crate::error::Result;
use crate::exact::{LaurentPoly, Rational, Scalar, SparseVec};

pub type Key2 = (Pos, Pos);
pub type Key3 = (Pos, Pos, Pos);

/// Accumulates terms with exact addition; zeros are dropped on `finish`.
pub(crate) struct Accumulator<K, S> {
    map: HashMap<K, S>,
}

impl<K: Hash + Eq + Ord, S: Scalar> Accumulator<K, S> {
    pub fn new() -> Self {
        Self { map: HashMap::new() }
    }

    pub fn add(&mut self, k: K, v: S) {
        use std::collections::hash_map::Entry;
        match self.map.entry(k) {
            Entry::Occupied(mut e) => e.get_mut().add_assign(&v),
            Entry::Vacant(e) => {
                e.insert(v);
            }
        }
    }

    pub fn finish(self) -> BTreeMap<K, S> {
        self.map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }
}

fn merge_into<K: Ord + Clone, S: Scalar>(target: &mut BTreeMap<K, S>, k: &K, v: &S) {
    if v.is_zero() {
        return;
    }
    match target.get_mut(k) {
        Some(x) => {
            x.add_assign(v);
            if x.is_zero() {
                target.remove(k);
            }
        }
        None => {
            target.insert(k.clone(), v.clone());
        }
    }
}

macro_rules! tensor_common {
    ($name:ident, $key:ty) => {
        impl<S: Scalar> $name<S> {
            pub fn zero(n: usize) -> Self {
                Self { n, terms: BTreeMap::new() }
            }

            pub fn n(&self) -> usize {
                self.n
            }

            pub fn terms(&self) -> &BTreeMap<$key, S> {
                &self.terms
            }

            pub fn len(&self) -> usize {
                self.terms.len()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn is_empty(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn get(&self, k: &$key) -> S {
                self.terms.get(k).cloned().unwrap_or_else(S::zero)
            }

            /// Builds a tensor from terms, summing repeats and dropping zeros.
            pub fn from_terms<I: IntoIterator<Item = ($key, S)>>(n: usize, terms: I) -> Self {
                let mut acc = Accumulator::new();
                for (k, v) in terms {
                    acc.add(k, v);
                }
                Self { n, terms: acc.finish() }
            }

            pub fn add_term(&mut self, k: $key, v: &S) {
                merge_into(&mut self.terms, &k, v);
            }

            pub fn try_add(&self, rhs: &Self) -> Result<Self> {
                check_dims(self.n, rhs.n)?;
                let mut out = self.clone();
                for (k, v) in &rhs.terms {
                    merge_into(&mut out.terms, k, v);
                }
                Ok(out)
            }

            pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
                self.try_add(&rhs.neg())
            }

            /// Sum; panics on dimension mismatch.
            pub fn plus(&self, rhs: &Self) -> Self {
                self.try_add(rhs).expect("dimension mismatch")
            }

            /// Difference; panics on dimension mismatch.
            pub fn minus(&self, rhs: &Self) -> Self {
                self.try_sub(rhs).expect("dimension mismatch")
            }

            pub fn neg(&self) -> Self {
                Self {
                    n: self.n,
                    terms: self.terms.iter().map(|(k, v)| (*k, v.neg())).collect(),
                }
            }

            pub fn scale(&self, q: &Rational) -> Self {
                if q.is_zero() {
                    return Self::zero(self.n);
                }
                Self {
                    n: self.n,
                    terms: self.terms.iter().map(|(k, v)| (*k, v.scale(q))).collect(),
                }
            }

            pub fn scale_by(&self, s: &S) -> Self {
                Self::from_terms(self.n, self.terms.iter().map(|(k, v)| (*k, v.mul(s))))
            }
        }

        impl $name<Rational> {
            pub fn lift(&self) -> $name<LaurentPoly> {
                $name {
                    n: self.n,
                    terms: self
                        .terms
                        .iter()
                        .map(|(k, v)| (*k, LaurentPoly::constant(v.clone())))
                        .collect(),
                }
            }

            pub fn from_sparse(n: usize, v: &SparseVec<$key>) -> Self {
                Self {
                    n,
                    terms: v.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (*k, c.clone())).collect(),
                }
            }

            pub fn sparse(&self) -> SparseVec<$key> {
                self.terms.clone()
            }
        }

        impl $name<LaurentPoly> {
            /// Coefficient of `t^k`, a rational tensor.
            pub fn coeff(&self, k: i64) -> $name<Rational> {
                $name {
                    n: self.n,
                    terms: self
                        .terms
                        .iter()
                        .map(|(key, v)| (*key, v.coeff(k)))
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                }
            }

            /// All exponents carrying a nonzero coefficient somewhere.
            pub fn exponents(&self) -> std::collections::BTreeSet<i64> {
                self.terms.values().flat_map(|v| v.terms().iter().map(|(e, _)| *e)).collect()
            }

            pub fn eval_at_one(&self) -> $name<Rational> {
                $name::<Rational>::from_terms(self.n, self.terms.iter().map(|(k, v)| (*k, v.eval_at_one())))
            }
        }
    };
}

/// A sparse element of `gl_n (x) gl_n`: `sum c * e_a (x) e_b`.
#[derive(Clone, PartialEq, Eq)]
pub struct TwoTensor<S: Scalar = Rational> {
    n: usize,
    terms: BTreeMap<Key2, S>,
}

/// A sparse element of `gl_n (x) gl_n (x) gl_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct ThreeTensor<S: Scalar = Rational> {
    n: usize,
    terms: BTreeMap<Key3, S>,
}

tensor_common!(TwoTensor, Key2);
tensor_common!(ThreeTensor, Key3);

impl<S: Scalar> TwoTensor<S> {
    /// `a (x) b`.
    pub fn tensor(a: &GlElement<S>, b: &GlElement<S>) -> Self {
        assert_eq!(a.n(), b.n(), "dimension mismatch");
        let mut acc = Accumulator::new();
        for (pa, va) in a.entries() {
            for (pb, vb) in b.entries() {
                acc.add((*pa, *pb), va.mul(vb));
            }
        }
        Self { n: a.n(), terms: acc.finish() }
    }

    /// Exchanges the two tensor slots.
    pub fn flip(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|((a, b), v)| ((*b, *a), v.clone())).collect(),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.plus(&self.flip()).is_zero()
    }

    /// Contraction with the trace on slot one: `sum_j T[(j,j), .]`.
    pub fn trace_slot_one(&self) -> GlElement<S> {
        GlElement::from_entries(
            self.n,
            self.terms.iter().filter(|((a, _), _)| a.is_diagonal()).map(|((_, b), v)| (*b, v.clone())),
        )
    }

    pub fn trace_slot_two(&self) -> GlElement<S> {
        GlElement::from_entries(
            self.n,
            self.terms.iter().filter(|((_, b), _)| b.is_diagonal()).map(|((a, _), v)| (*a, v.clone())),
        )
    }

    /// `(1 (x) phi) T` for a linear functional given by its values on matrix units.
    pub fn contract_slot_two(&self, phi: impl Fn(Pos) -> Rational) -> GlElement<S> {
        GlElement::from_entries(
            self.n,
            self.terms.iter().map(|((a, b), v)| (*a, v.scale(&phi(*b)))),
        )
    }

    /// Rows of the coefficient matrix: first-slot position to second-slot vector.
    pub fn slot_one_rows(&self) -> BTreeMap<Pos, Vec<(Pos, &S)>> {
        let mut rows: BTreeMap<Pos, Vec<(Pos, &S)>> = BTreeMap::new();
        for ((a, b), v) in &self.terms {
            rows.entry(*a).or_default().push((*b, v));
        }
        rows
    }

    /// Whether every factor of every term is supported in `allowed`.
    pub fn supported_in(&self, allowed: impl Fn(Pos) -> bool) -> bool {
        self.terms.keys().all(|(a, b)| allowed(*a) && allowed(*b))
    }
}

impl<S: Scalar> ThreeTensor<S> {
    /// `a (x) b (x) c`.
    pub fn tensor3(a: &GlElement<S>, b: &GlElement<S>, c: &GlElement<S>) -> Self {
        let mut acc = Accumulator::new();
        for (pa, va) in a.entries() {
            for (pb, vb) in b.entries() {
                let vab = va.mul(vb);
                for (pc, vc) in c.entries() {
                    acc.add((*pa, *pb, *pc), vab.mul(vc));
                }
            }
        }
        Self { n: a.n(), terms: acc.finish() }
    }

    pub(crate) fn from_map(n: usize, terms: BTreeMap<Key3, S>) -> Self {
        Self { n, terms }
    }
}

impl<S: Scalar> TwoTensor<S> {
    pub(crate) fn from_map(n: usize, terms: BTreeMap<Key2, S>) -> Self {
        Self { n, terms }
    }
}

/// `u ^ v = (u (x) v - v (x) u) / 2`.
pub fn wedge<S: Scalar>(a: &GlElement<S>, b: &GlElement<S>) -> Result<TwoTensor<S>> {
    check_dims(a.n(), b.n())?;
    let half = Rational::new(1, 2);
    Ok(TwoTensor::tensor(a, b).minus(&TwoTensor::tensor(b, a)).scale(&half))
}

/// Shorthand for `c * (a ^ b)`; panics on dimension mismatch.
pub fn wedge_scaled(c: &Rational, a: &GlElement, b: &GlElement) -> TwoTensor {
    wedge(a, b).expect("dimension mismatch").scale(c)
}

/// Whether both partial traces vanish, i.e. the tensor lies in `sl_n (x) sl_n`.
pub fn sl_membership<S: Scalar>(t: &TwoTensor<S>) -> bool {
    t.trace_slot_one().is_zero() && t.trace_slot_two().is_zero()
}

impl<S: Scalar> fmt::Debug for TwoTensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoTensor(n={}; ", self.n)?;
        for ((a, b), v) in &self.terms {
            write!(f, "[{v}]{a}(x){b} ")?;
        }
        write!(f, ")")
    }
}

impl<S: Scalar> fmt::Debug for ThreeTensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThreeTensor(n={}; ", self.n)?;
        for ((a, b, c), v) in &self.terms {
            write!(f, "[{v}]{a}(x){b}(x){c} ")?;
        }
        write!(f, ")")
    }
}

impl<S: Scalar> fmt::Display for TwoTensor<S> {
    /// Pairs antisymmetric terms back into `c*e_ab^e_cd`; leftover terms are
    /// printed as raw tensors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let two = Rational::from(2);
        let mut parts = Vec::new();
        for ((a, b), v) in &self.terms {
            let partner = self.get(&(*b, *a));
            if a < b && partner == v.neg() {
                parts.push(format!("{}*{a}^{b}", v.scale(&two)));
            } else if a > b && self.get(&(*b, *a)) == v.neg() {
                continue;
            } else {
                parts.push(format!("{v}*{a}(x){b}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar> fmt::Display for ThreeTensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((a, b, c), v)| format!("{v}*{a}(x){b}(x){c}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Sums a sequence of tensors of the same size.
pub fn sum_two<I: IntoIterator<Item = TwoTensor>>(n: usize, items: I) -> TwoTensor {
    let mut acc = Accumulator::new();
    for t in items {
        assert_eq!(t.n, n, "dimension mismatch");
        for (k, v) in t.terms {
            acc.add(k, v);
        }
    }
    TwoTensor { n, terms: acc.finish() }
}
