//! Belavin-Drinfeld triples for `sl_n` and the parts of the Cremmer-Gervais
//! r-matrix.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::{gcd, mod_inverse, modulo, Rational};
use crate::lie::{sum_two, wedge_scaled, xi, eta, GlElement, Pos, TwoTensor};

/// A partial map `T: S1 -> [1, n-1]` on the simple roots of `sl_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BDTriple {
    n: usize,
    map: BTreeMap<usize, usize>,
}

/// The first condition a candidate triple fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Adjacency { j: usize, k: usize },
    Nilpotency { j: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Adjacency { j, k } => write!(f, "adjacency not preserved by {j} and {k}"),
            Self::Nilpotency { j } => write!(f, "orbit of {j} never leaves S1"),
        }
    }
}

impl BDTriple {
    /// Builds the map from edges `j -> T(j)`; rejects out-of-range or
    /// non-injective input. The BD conditions are checked by [`validate_triple`].
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut image = BTreeSet::new();
        for (j, tj) in edges {
            let ok = |v: usize| v >= 1 && v < n;
            if !ok(j) || !ok(tj) {
                return Err(Error::InvalidTriple(format!("edge {j} -> {tj} outside [1, {}]", n.saturating_sub(1))));
            }
            if map.insert(j, tj).is_some() {
                return Err(Error::InvalidTriple(format!("vertex {j} has two images")));
            }
            if !image.insert(tj) {
                return Err(Error::InvalidTriple(format!("T is not injective at {tj}")));
            }
        }
        Ok(Self { n, map })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, map: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.map.keys().copied()
    }

    pub fn apply(&self, j: usize) -> Option<usize> {
        self.map.get(&j).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map.iter().map(|(a, b)| (*a, *b))
    }

    /// The triple with the given vertices removed from `S1`.
    pub fn without(&self, removed: &BTreeSet<usize>) -> Result<Self> {
        if let Some(j) = removed.iter().find(|j| !self.map.contains_key(j)) {
            return Err(Error::InvalidArgument(format!("{j} is not in S1")));
        }
        Ok(Self {
            n: self.n,
            map: self.map.iter().filter(|(j, _)| !removed.contains(j)).map(|(a, b)| (*a, *b)).collect(),
        })
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(TripleJson { v: 1, n: self.n, edges: self.edges().map(|(a, b)| [a, b]).collect() })
            .expect("serializable")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let t: TripleJson = serde_json::from_value(v.clone())?;
        Self::new(t.n, t.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

#[derive(Serialize, Deserialize)]
struct TripleJson {
    #[serde(default = "one")]
    v: u32,
    n: usize,
    edges: Vec<[usize; 2]>,
}

fn one() -> u32 {
    1
}

/// Checks adjacency preservation and local nilpotency, in that order.
pub fn validate_triple(t: &BDTriple) -> std::result::Result<(), Violation> {
    for (&j, &tj) in &t.map {
        for (&k, &tk) in &t.map {
            if (j.abs_diff(k) == 1) != (tj.abs_diff(tk) == 1) {
                return Err(Violation::Adjacency { j, k });
            }
        }
    }
    for &j in t.map.keys() {
        let mut cur = j;
        let mut escaped = false;
        for _ in 0..=t.map.len() {
            match t.apply(cur) {
                Some(next) => cur = next,
                None => {
                    escaped = true;
                    break;
                }
            }
        }
        if !escaped {
            return Err(Violation::Nilpotency { j });
        }
    }
    Ok(())
}

/// The order on simple indices and its extension to positive root vectors.
#[derive(Clone, Debug)]
pub struct RootOrder {
    n: usize,
    simple: Vec<Vec<bool>>,
    pairs: BTreeSet<(Pos, Pos)>,
}

impl RootOrder {
    /// `j < k` on simple indices: `T^N(j) = k` for some `N >= 1`.
    pub fn simple_less(&self, j: usize, k: usize) -> bool {
        j >= 1 && k >= 1 && j < self.n && k < self.n && self.simple[j][k]
    }

    pub fn less(&self, a: Pos, b: Pos) -> bool {
        self.pairs.contains(&(a, b))
    }

    /// All pairs `e_jk < e_lm` of positive root vectors.
    pub fn pairs(&self) -> &BTreeSet<(Pos, Pos)> {
        &self.pairs
    }

    /// `e_jk <= e_lm`: equal, or strictly below.
    pub fn less_eq_pairs(&self) -> Vec<(Pos, Pos)> {
        let n = self.n as u16;
        let mut out: Vec<(Pos, Pos)> =
            (1..=n).flat_map(|j| (j + 1..=n).map(move |k| (Pos::new(j, k), Pos::new(j, k)))).collect();
        out.extend(self.pairs.iter().copied());
        out.sort();
        out
    }

    /// The chain of simple indices when the order is total on its support.
    pub fn simple_chain(&self) -> Vec<usize> {
        let mut support: Vec<usize> =
            (1..self.n).filter(|&j| (1..self.n).any(|k| self.simple[j][k] || self.simple[k][j])).collect();
        support.sort_by_key(|&j| std::cmp::Reverse((1..self.n).filter(|&k| self.simple[j][k]).count()));
        support
    }
}

pub fn root_order(t: &BDTriple) -> RootOrder {
    let n = t.n;
    let mut simple = vec![vec![false; n.max(1)]; n.max(1)];
    for j in 1..n {
        let mut cur = j;
        let mut steps = 0;
        while let Some(next) = t.apply(cur) {
            simple[j][next] = true;
            cur = next;
            steps += 1;
            if steps > n {
                break;
            }
        }
    }
    let mut pairs = BTreeSet::new();
    for j in 1..n {
        for k in j + 1..=n {
            let len = k - j;
            for l in 1..=n - len {
                let m = l + len;
                if (0..len).all(|s| simple[j + s][l + s]) {
                    pairs.insert((Pos::new(j as u16, k as u16), Pos::new(l as u16, m as u16)));
                }
            }
        }
    }
    RootOrder { n, simple, pairs }
}

/// `alpha = 2 sum e_jk ^ e_ml` over `e_jk < e_lm`.
pub fn alpha(t: &BDTriple) -> TwoTensor {
    let n = t.n;
    let two = Rational::from(2);
    let order = root_order(t);
    sum_two(
        n,
        order.pairs.iter().map(|(a, b)| {
            wedge_scaled(
                &two,
                &GlElement::elementary(n, a.row as i64, a.col as i64),
                &GlElement::elementary(n, b.col as i64, b.row as i64),
            )
        }),
    )
}

pub fn alpha_sub(t: &BDTriple, removed: &BTreeSet<usize>) -> Result<TwoTensor> {
    let smaller = t.without(removed)?;
    Ok(alpha(t).minus(&alpha(&smaller)))
}

/// `gamma = sum_{k<l} e_kl ^ e_lk`.
pub fn gamma(n: usize) -> TwoTensor {
    let one = Rational::one();
    let n_i = n as i64;
    sum_two(
        n,
        (1..=n_i).flat_map(|k| (k + 1..=n_i).map(move |l| (k, l))).map(|(k, l)| {
            wedge_scaled(&one, &GlElement::elementary(n, k, l), &GlElement::elementary(n, l, k))
        }),
    )
}

pub(crate) fn check_coprime(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n || gcd(i as i64, n as i64) != 1 {
        return Err(Error::NotCoprime { i: i as i64, n: n as i64 });
    }
    Ok(())
}

/// `T_{i,n}(j) = (j + i) mod n` on `[1, n-i-1] u [n-i+1, n-1]`.
pub fn cg_triple(i: usize, n: usize) -> Result<BDTriple> {
    check_coprime(i, n)?;
    let edges = (1..n).filter(|&j| j != n - i).map(|j| (j, (j + i) % n));
    BDTriple::new(n, edges)
}

/// `2 sum_{k<l<=n-i} e_kl ^ eta_{l+i,k+i}`.
pub fn alpha_forward(i: usize, n: usize) -> Result<TwoTensor> {
    check_coprime(i, n)?;
    let two = Rational::from(2);
    let top = (n - i) as i64;
    let i_s = i as i64;
    Ok(sum_two(
        n,
        (1..=top).flat_map(|k| (k + 1..=top).map(move |l| (k, l))).map(|(k, l)| {
            wedge_scaled(&two, &GlElement::elementary(n, k, l), &eta(n, i, l + i_s, k + i_s))
        }),
    ))
}

/// `2 sum xi_{j+r,k+r} ^ xi_{ml}` over `e_jk <= e_lm` in the order of
/// `T_{i-r,i}`, where `r = n mod i`; zero when `i = 1`.
pub fn alpha_backward(i: usize, n: usize) -> Result<TwoTensor> {
    check_coprime(i, n)?;
    if i == 1 {
        return Ok(TwoTensor::zero(n));
    }
    let r = n % i;
    let order = root_order(&cg_triple(i - r, i)?);
    let two = Rational::from(2);
    let r = r as i64;
    Ok(sum_two(
        n,
        order.less_eq_pairs().into_iter().map(|(a, b)| {
            let (j, k) = (a.row as i64, a.col as i64);
            let (l, m) = (b.row as i64, b.col as i64);
            wedge_scaled(&two, &xi(n, i, j + r, k + r), &xi(n, i, m, l))
        }),
    ))
}

/// `sum_{j<l} (-1 + (2/n)((j-l) i^{-1} mod n)) e_jj ^ e_ll`.
pub fn beta_point(i: usize, n: usize) -> Result<TwoTensor> {
    check_coprime(i, n)?;
    let n_i = n as i64;
    let inv = mod_inverse(i as i64, n_i).ok_or(Error::NotCoprime { i: i as i64, n: n as i64 })?;
    let one = Rational::one();
    Ok(sum_two(
        n,
        (1..=n_i).flat_map(|j| (j + 1..=n_i).map(move |l| (j, l))).map(|(j, l)| {
            let c = Rational::new(2 * modulo((j - l) * inv, n_i), n_i) - &one;
            wedge_scaled(&c, &GlElement::elementary(n, j, j), &GlElement::elementary(n, l, l))
        }),
    ))
}

/// Whether `(1 (x) (a_{T(j)} - a_j)) beta = (h_{T(j)} + h_j) / 2` for every
/// `j` in `S1`, where `a_k(diag x) = x_k - x_{k+1}` is the simple root.
pub fn beta_member(beta: &TwoTensor, t: &BDTriple) -> Result<bool> {
    if beta.n() != t.n() {
        return Err(Error::DimensionMismatch { left: beta.n(), right: t.n() });
    }
    if !beta.supported_in(Pos::is_diagonal) {
        return Err(Error::InvalidArgument("beta must lie in h ^ h".into()));
    }
    let n = t.n();
    let half = Rational::new(1, 2);
    for (j, tj) in t.edges() {
        let root = |k: usize, p: Pos| -> Rational {
            let d = p.row as usize;
            if d == k {
                Rational::one()
            } else if d == k + 1 {
                -Rational::one()
            } else {
                Rational::zero()
            }
        };
        let lhs = beta.contract_slot_two(|p| root(tj, p) - root(j, p));
        let rhs = (&GlElement::h(n, tj as i64) + &GlElement::h(n, j as i64)).scale(&half);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `r_CG(i, n) = alpha_fwd + alpha_bwd + beta + gamma`.
pub fn r_cg(i: usize, n: usize) -> Result<TwoTensor> {
    Ok(alpha_forward(i, n)?
        .plus(&alpha_backward(i, n)?)
        .plus(&beta_point(i, n)?)
        .plus(&gamma(n)))
}
