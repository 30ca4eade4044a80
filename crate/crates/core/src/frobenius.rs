//! Maximal parabolic subalgebras, Frobenius functionals and principal elements.

use std::collections::BTreeMap;

use petgraph::algo::connected_components;
use petgraph::graph::UnGraph;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::{inverse, modulo, rank, solve, ExactMatrix, Rational, Solve};
use crate::lie::{GlElement, Pos, TwoTensor};
use crate::yangbaxter::Subspace;

/// The ordered basis of `p(i, n)`: the strictly upper matrix units, then
/// `h_1..h_{n-1}`, then the allowed strictly lower units.
#[derive(Clone, Debug)]
pub struct ParabolicBasis {
    i: usize,
    n: usize,
    basis: Vec<GlElement>,
}

/// `p(i, n)` omits rows `i+1..n` of columns `1..i`.
pub fn in_parabolic(i: usize, p: Pos) -> bool {
    !(p.row as usize > i && (p.col as usize) <= i)
}

pub fn parabolic_basis(i: usize, n: usize) -> Result<ParabolicBasis> {
    if i == 0 || i >= n {
        return Err(Error::InvalidArgument(format!("need 0 < i < n (got i = {i}, n = {n})")));
    }
    let n_i = n as i64;
    let mut basis = Vec::with_capacity(n * n - 1 - i * (n - i));
    for j in 1..=n_i {
        for k in j + 1..=n_i {
            basis.push(GlElement::elementary(n, j, k));
        }
    }
    for j in 1..n_i {
        basis.push(GlElement::h(n, j));
    }
    for j in 1..=n_i {
        for k in 1..j {
            if in_parabolic(i, Pos::new(j as u16, k as u16)) {
                basis.push(GlElement::elementary(n, j, k));
            }
        }
    }
    Ok(ParabolicBasis { i, n, basis })
}

impl ParabolicBasis {
    pub fn i(&self) -> usize {
        self.i
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[GlElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn subspace(&self) -> Subspace {
        Subspace::spanned_by(self.n, &self.basis)
    }

    pub fn contains_pattern(&self, p: Pos) -> bool {
        in_parabolic(self.i, p)
    }
}

/// `sum c * e*_{jk}`, reading the `(j, k)` entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunctional {
    n: usize,
    coords: BTreeMap<Pos, Rational>,
}

impl LinearFunctional {
    pub fn new(n: usize, coords: impl IntoIterator<Item = (Pos, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<Pos, Rational> = BTreeMap::new();
        for (p, c) in coords {
            if Pos::checked(n, p.row as i64, p.col as i64).is_none() {
                return Err(Error::InvalidArgument(format!("{p} out of range for n = {n}")));
            }
            *map.entry(p).or_insert_with(Rational::zero) += &c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { n, coords: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &BTreeMap<Pos, Rational> {
        &self.coords
    }

    pub fn support_size(&self) -> usize {
        self.coords.len()
    }

    pub fn eval(&self, x: &GlElement) -> Rational {
        if x.entries().len() < self.coords.len() {
            x.entries().iter().filter_map(|(p, v)| self.coords.get(p).map(|c| c * v)).sum()
        } else {
            self.coords.iter().map(|(p, c)| c * &x.get(p.row, p.col)).sum()
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.n, self.coords.iter().map(|(p, c)| (*p, c * q))).expect("same positions")
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        crate::lie::check_dims(self.n, other.n)?;
        Self::new(self.n, self.coords.iter().chain(other.coords.iter()).map(|(p, c)| (*p, c.clone())))
    }

    pub fn to_json(&self) -> Value {
        let terms = self.coords.iter().map(|(p, c)| FunctionalTerm { pos: [p.row, p.col], c: c.to_string() }).collect();
        serde_json::to_value(FunctionalJson { v: 1, n: self.n, terms }).expect("serializable")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let f: FunctionalJson = serde_json::from_value(v.clone())?;
        let mut coords = Vec::with_capacity(f.terms.len());
        for t in f.terms {
            coords.push((Pos::new(t.pos[0], t.pos[1]), t.c.parse()?));
        }
        Self::new(f.n, coords)
    }
}

#[derive(Serialize, Deserialize)]
struct FunctionalTerm {
    pos: [u16; 2],
    c: String,
}

#[derive(Serialize, Deserialize)]
struct FunctionalJson {
    #[serde(default = "one")]
    v: u32,
    n: usize,
    terms: Vec<FunctionalTerm>,
}

fn one() -> u32 {
    1
}

/// `+1` when `n mod i = 1`, otherwise `-1`.
pub fn epsilon(i: usize, n: usize) -> i64 {
    if modulo(n as i64, i as i64) == 1 {
        1
    } else {
        -1
    }
}

/// `sum_{i<j<=n} e*_{j-i,j} + sum_{1<=j<i} e*_{j+1,j}`.
pub fn subprime_functional(i: usize, n: usize) -> Result<LinearFunctional> {
    f_rho_mu(i, n, &Rational::from(-1), &Rational::from(epsilon(i, n)))
}

/// `-rho^{-1} sum e*_{j-i,j} + eps mu^{-1} sum e*_{j+1,j}`.
pub fn f_rho_mu(i: usize, n: usize, rho: &Rational, mu: &Rational) -> Result<LinearFunctional> {
    if i == 0 || i >= n {
        return Err(Error::InvalidArgument(format!("need 0 < i < n (got i = {i}, n = {n})")));
    }
    let upper = -rho.recip().map_err(|_| Error::InvalidArgument("rho must be nonzero".into()))?;
    let lower = Rational::from(epsilon(i, n)) * mu.recip().map_err(|_| Error::InvalidArgument("mu must be nonzero".into()))?;
    let p = |j: usize, k: usize| Pos::new(j as u16, k as u16);
    LinearFunctional::new(
        n,
        (i + 1..=n).map(|j| (p(j - i, j), upper.clone())).chain((1..i).map(|j| (p(j + 1, j), lower.clone()))),
    )
}

/// `B_jk = f([x_j, x_k])`.
pub fn frobenius_form(f: &LinearFunctional, p: &ParabolicBasis) -> ExactMatrix {
    let d = p.dim();
    let mut m = ExactMatrix::zeros(d, d);
    for j in 0..d {
        for k in j + 1..d {
            let v = f.eval(&p.basis[j].commutator(&p.basis[k]));
            if !v.is_zero() {
                m.set(k, j, -v.clone());
                m.set(j, k, v);
            }
        }
    }
    m
}

pub fn is_frobenius(f: &LinearFunctional, p: &ParabolicBasis) -> bool {
    rank(&frobenius_form(f, p)) == p.dim()
}

/// The unique `H` in `p` with `f([H, x]) = f(x)` for all `x` in `p`.
pub fn principal_element(f: &LinearFunctional, p: &ParabolicBasis) -> Result<GlElement> {
    let b = frobenius_form(f, p);
    if rank(&b) != p.dim() {
        return Err(Error::NotFrobenius);
    }
    let d = p.dim();
    let rhs = ExactMatrix::from_fn(d, 1, |k, _| f.eval(&p.basis[k]));
    let Solve::Solution(h) = solve(&b.transpose(), &rhs)? else {
        return Err(Error::NotFrobenius);
    };
    let h_elt = crate::lie::linear_combination(p.n, (0..d).map(|a| (h.get(a, 0).clone(), &p.basis[a])));
    if p.basis.iter().any(|x| f.eval(&h_elt.commutator(x)) != f.eval(x)) {
        return Err(Error::NotFrobenius);
    }
    Ok(h_elt)
}

/// Whether `n = +-1 (mod i)`.
pub fn is_subprime(i: usize, n: usize) -> bool {
    let r = modulo(n as i64, i as i64);
    i == 1 || r == 1 || r == i as i64 - 1
}

/// The diagonal element whose entry at `m` is `((m-1) mod i) - floor((m-1)/i)`,
/// shifted by `theta = (n-1)/(2n) ((n+1)/i - i)`.
pub fn principal_closed_form(i: usize, n: usize) -> Result<GlElement> {
    if i == 0 || i >= n {
        return Err(Error::InvalidArgument(format!("need 0 < i < n (got i = {i}, n = {n})")));
    }
    if !is_subprime(i, n) {
        return Err(Error::NotSubprime { i: i as i64, n: n as i64 });
    }
    let (i_s, n_s) = (i as i64, n as i64);
    let theta = Rational::new(n_s - 1, 2 * n_s) * (Rational::new(n_s + 1, i_s) - Rational::from(i_s));
    Ok(GlElement::from_entries(
        n,
        (0..n_s).map(|m| {
            let v = Rational::from(m % i_s - m / i_s) + &theta;
            (Pos::new(m as u16 + 1, m as u16 + 1), v)
        }),
    ))
}

/// `r_f = sum_{jk} (B^{-1})_{jk} x_k ^ x_j`, the tensor whose cocycle is `B`.
pub fn r_from_functional(f: &LinearFunctional, p: &ParabolicBasis) -> Result<TwoTensor> {
    let b = frobenius_form(f, p);
    let inv = inverse(&b).map_err(|_| Error::NotFrobenius)?;
    let d = p.dim();
    let mut out = TwoTensor::zero(p.n);
    for j in 0..d {
        for k in 0..d {
            let c = inv.get(k, j);
            if !c.is_zero() {
                out = out.plus(&TwoTensor::tensor(&p.basis[j], &p.basis[k]).scale(c));
            }
        }
    }
    Ok(out)
}

/// The graph on `1..n` with an edge `j - k` per support position `(j, k)`.
pub fn support_graph(f: &LinearFunctional) -> UnGraph<usize, ()> {
    let mut g = UnGraph::new_undirected();
    let nodes: Vec<_> = (1..=f.n).map(|v| g.add_node(v)).collect();
    for p in f.coords.keys() {
        g.add_edge(nodes[p.row as usize - 1], nodes[p.col as usize - 1], ());
    }
    g
}

/// Whether the support graph is a tree.
pub fn is_small(f: &LinearFunctional) -> bool {
    let g = support_graph(f);
    g.edge_count() + 1 == f.n && connected_components(&g) == 1
}
