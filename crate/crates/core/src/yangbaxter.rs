//! Schouten brackets, Yang-Baxter classification, carriers and cocycles.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{inverse, ExactMatrix, Rational, Scalar, SpanBasis, SparseVec};
use crate::frobenius::LinearFunctional;
use crate::lie::{ad_three, Accumulator, GlElement, Key3, Pos, ThreeTensor, TwoTensor};

struct TermIndex<'a, S: Scalar> {
    terms: Vec<(Pos, Pos, &'a S)>,
    by_a_row: BTreeMap<u16, Vec<usize>>,
    by_a_col: BTreeMap<u16, Vec<usize>>,
    by_b_row: BTreeMap<u16, Vec<usize>>,
    by_b_col: BTreeMap<u16, Vec<usize>>,
}

impl<'a, S: Scalar> TermIndex<'a, S> {
    fn new(t: &'a TwoTensor<S>) -> Self {
        let terms: Vec<(Pos, Pos, &S)> = t.terms().iter().map(|((a, b), v)| (*a, *b, v)).collect();
        let mut ix = Self {
            terms,
            by_a_row: BTreeMap::new(),
            by_a_col: BTreeMap::new(),
            by_b_row: BTreeMap::new(),
            by_b_col: BTreeMap::new(),
        };
        for (u, (a, b, _)) in ix.terms.iter().enumerate() {
            ix.by_a_row.entry(a.row).or_default().push(u);
            ix.by_a_col.entry(a.col).or_default().push(u);
            ix.by_b_row.entry(b.row).or_default().push(u);
            ix.by_b_col.entry(b.col).or_default().push(u);
        }
        ix
    }
}

fn lookup(map: &BTreeMap<u16, Vec<usize>>, k: u16) -> &[usize] {
    map.get(&k).map(Vec::as_slice).unwrap_or(&[])
}

/// The bilinear form behind the Schouten bracket: with `r = sum a_u (x) b_u`
/// and `s = sum c_v (x) d_v`,
/// `sum [a_u,c_v] (x) b_u (x) d_v + a_u (x) [b_u,c_v] (x) d_v + a_u (x) c_v (x) [b_u,d_v]`.
pub fn schouten_bilinear<S: Scalar>(r: &TwoTensor<S>, s: &TwoTensor<S>) -> Result<ThreeTensor<S>> {
    crate::lie::check_dims(r.n(), s.n())?;
    let ri = TermIndex::new(r);
    let si = TermIndex::new(s);
    let mut acc: Accumulator<Key3, S> = Accumulator::new();
    for &(a, b, x) in &ri.terms {
        // [a, c]: c.row == a.col gives e_{a.row, c.col}; c.col == a.row gives -e_{c.row, a.col}
        for &v in lookup(&si.by_a_row, a.col) {
            let (c, d, y) = si.terms[v];
            acc.add((Pos::new(a.row, c.col), b, d), x.mul(y));
        }
        for &v in lookup(&si.by_a_col, a.row) {
            let (c, d, y) = si.terms[v];
            acc.add((Pos::new(c.row, a.col), b, d), x.mul(y).neg());
        }
        // [b, c]
        for &v in lookup(&si.by_a_row, b.col) {
            let (c, d, y) = si.terms[v];
            acc.add((a, Pos::new(b.row, c.col), d), x.mul(y));
        }
        for &v in lookup(&si.by_a_col, b.row) {
            let (c, d, y) = si.terms[v];
            acc.add((a, Pos::new(c.row, b.col), d), x.mul(y).neg());
        }
        // [b, d]
        for &v in lookup(&si.by_b_row, b.col) {
            let (c, d, y) = si.terms[v];
            acc.add((a, c, Pos::new(b.row, d.col)), x.mul(y));
        }
        for &v in lookup(&si.by_b_col, b.row) {
            let (c, d, y) = si.terms[v];
            acc.add((a, c, Pos::new(d.row, b.col)), x.mul(y).neg());
        }
    }
    Ok(ThreeTensor::from_terms(r.n(), acc.finish()))
}

/// `<r, r> = [r12, r13] + [r12, r23] + [r13, r23]`.
pub fn schouten<S: Scalar>(r: &TwoTensor<S>) -> ThreeTensor<S> {
    schouten_bilinear(r, r).expect("same tensor")
}

/// The Chevalley generators `e_{j,j+1}`, `e_{j+1,j}` of `sl_n`.
pub fn chevalley_generators<S: Scalar>(n: usize) -> Vec<GlElement<S>> {
    (1..n as i64)
        .flat_map(|j| [GlElement::elementary(n, j, j + 1), GlElement::elementary(n, j + 1, j)])
        .collect()
}

pub fn is_invariant<S: Scalar>(t: &ThreeTensor<S>) -> bool {
    chevalley_generators::<S>(t.n()).iter().all(|x| ad_three(x, t).expect("same n").is_zero())
}

pub fn is_invariant_two<S: Scalar>(t: &TwoTensor<S>) -> bool {
    chevalley_generators::<S>(t.n())
        .iter()
        .all(|x| crate::lie::ad_two(x, t).expect("same n").is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum YbTag {
    Cybe,
    Mcybe,
    Neither,
}

impl fmt::Display for YbTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Cybe => "CYBE",
            Self::Mcybe => "MCYBE",
            Self::Neither => "NEITHER",
        })
    }
}

#[derive(Clone, Debug)]
pub struct YbClass<S: Scalar = Rational> {
    pub tag: YbTag,
    pub witness: ThreeTensor<S>,
}

pub fn classify<S: Scalar>(r: &TwoTensor<S>) -> YbClass<S> {
    let witness = schouten(r);
    let tag = if witness.is_zero() {
        YbTag::Cybe
    } else if is_invariant(&witness) {
        YbTag::Mcybe
    } else {
        YbTag::Neither
    };
    YbClass { tag, witness }
}

fn element_vec(x: &GlElement) -> SparseVec<Pos> {
    x.entries().clone()
}

fn vec_element(n: usize, v: &SparseVec<Pos>) -> GlElement {
    GlElement::from_entries(n, v.iter().map(|(p, c)| (*p, c.clone())))
}

/// An exact basis of a subspace of `gl_n` in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    n: usize,
    span: SpanBasis<Pos>,
}

impl Subspace {
    pub fn new(n: usize) -> Self {
        Self { n, span: SpanBasis::new() }
    }

    pub fn spanned_by<'a>(n: usize, xs: impl IntoIterator<Item = &'a GlElement>) -> Self {
        let mut out = Self::new(n);
        for x in xs {
            out.insert(x);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn insert(&mut self, x: &GlElement) -> bool {
        self.span.insert(&element_vec(x))
    }

    pub fn contains(&self, x: &GlElement) -> bool {
        self.span.contains(&element_vec(x))
    }

    /// Basis vectors ordered by pivot position.
    pub fn basis(&self) -> Vec<GlElement> {
        self.span.sorted_vectors().iter().map(|v| vec_element(self.n, v)).collect()
    }

    /// Pivot positions matching [`Subspace::basis`].
    pub fn pivots(&self) -> Vec<Pos> {
        let mut p = self.span.pivots().to_vec();
        p.sort();
        p
    }

    /// Coordinates in the order of [`Subspace::basis`].
    pub fn coords(&self, x: &GlElement) -> Option<Vec<Rational>> {
        if !self.contains(x) {
            return None;
        }
        Some(self.pivots().iter().map(|p| x.get(p.row, p.col)).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|x| other.contains(x))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    pub fn is_subalgebra(&self) -> bool {
        let b = self.basis();
        b.iter().enumerate().all(|(j, x)| b[j + 1..].iter().all(|y| self.contains(&x.commutator(y))))
    }
}

/// The span of `(phi (x) 1) r` over functionals `phi` on the first slot.
pub fn carrier(r: &TwoTensor) -> Subspace {
    let mut out = Subspace::new(r.n());
    for row in r.slot_one_rows().values() {
        let v: SparseVec<Pos> = row.iter().map(|(p, c)| (*p, (*c).clone())).collect();
        out.span.insert(&v);
    }
    out
}

/// The form `B(x_j, x_k)` on a carrier basis induced by a CYBE solution.
#[derive(Clone, Debug)]
pub struct CocycleForm {
    pub basis: Vec<GlElement>,
    pub matrix: ExactMatrix,
    carrier: Subspace,
}

impl CocycleForm {
    pub fn is_antisymmetric(&self) -> bool {
        self.matrix.transpose() == self.matrix.neg()
    }

    fn pair(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let d = self.basis.len();
        let mut s = Rational::zero();
        for j in 0..d {
            if x[j].is_zero() {
                continue;
            }
            for k in 0..d {
                if !y[k].is_zero() {
                    s += &(&(&x[j] * &y[k]) * self.matrix.get(j, k));
                }
            }
        }
        s
    }

    /// `B([x,y],z) + B([y,z],x) + B([z,x],y) = 0` on all basis triples.
    pub fn satisfies_cocycle_identity(&self) -> bool {
        let d = self.basis.len();
        let unit = |j: usize| -> Vec<Rational> {
            (0..d).map(|k| if k == j { Rational::one() } else { Rational::zero() }).collect()
        };
        let mut brackets = vec![vec![Vec::new(); d]; d];
        for j in 0..d {
            for k in 0..d {
                match self.carrier.coords(&self.basis[j].commutator(&self.basis[k])) {
                    Some(c) => brackets[j][k] = c,
                    None => return false,
                }
            }
        }
        for x in 0..d {
            for y in x + 1..d {
                for z in y + 1..d {
                    let s = self.pair(&brackets[x][y], &unit(z))
                        + self.pair(&brackets[y][z], &unit(x))
                        + self.pair(&brackets[z][x], &unit(y));
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Writes `r = sum R_jk x_j (x) x_k` over the carrier basis. The form pairs
/// `x` with `r^{-1}(x)` for the map `xi -> (1 (x) xi) r`, so its matrix is `R^{-T}`.
pub fn cocycle(r: &TwoTensor) -> Result<CocycleForm> {
    let car = carrier(r);
    let basis = car.basis();
    let pivots = car.pivots();
    let d = basis.len();
    let coeff = ExactMatrix::from_fn(d, d, |j, k| r.get(&(pivots[j], pivots[k])));
    let mut rebuilt = TwoTensor::zero(r.n());
    for j in 0..d {
        for k in 0..d {
            let c = coeff.get(j, k);
            if !c.is_zero() {
                rebuilt = rebuilt.plus(&TwoTensor::tensor(&basis[j], &basis[k]).scale(c));
            }
        }
    }
    if &rebuilt != r {
        return Err(Error::Degenerate);
    }
    let matrix = inverse(&coeff.transpose()).map_err(|_| Error::Degenerate)?;
    Ok(CocycleForm { basis, matrix, carrier: car })
}

/// Whether the cocycle of `r` is `f([x, y])`.
pub fn admits(r: &TwoTensor, f: &LinearFunctional) -> Result<bool> {
    let form = cocycle(r)?;
    let d = form.basis.len();
    for j in 0..d {
        for k in 0..d {
            if form.matrix.get(j, k) != &f.eval(&form.basis[j].commutator(&form.basis[k])) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of checking that `<r_t, r_t>` is independent of `t`.
#[derive(Clone, Debug)]
pub struct BoundaryCheck {
    pub holds: bool,
    pub top: TwoTensor,
    /// The first positive degree with a nonzero coefficient, if any.
    pub first_nonzero: Option<(usize, ThreeTensor)>,
}

/// For `r_t = sum_k t^k r_k`, verifies that every positive-degree coefficient
/// of `<r_t, r_t>` vanishes.
pub fn boundary_family_check(coeffs: &[TwoTensor]) -> Result<BoundaryCheck> {
    let m = coeffs.len().checked_sub(1).filter(|&m| m >= 1).ok_or_else(|| {
        Error::InvalidArgument("need at least two coefficients".into())
    })?;
    if coeffs[m].is_zero() {
        return Err(Error::InvalidArgument("top coefficient is zero".into()));
    }
    let n = coeffs[0].n();
    let nonzero: Vec<usize> = (0..=m).filter(|&k| !coeffs[k].is_zero()).collect();
    let mut by_degree: BTreeMap<usize, ThreeTensor> = BTreeMap::new();
    for &k in &nonzero {
        for &l in &nonzero {
            if k + l == 0 || l < k {
                continue;
            }
            let mut s = schouten_bilinear(&coeffs[k], &coeffs[l])?;
            if k != l {
                s = s.plus(&schouten_bilinear(&coeffs[l], &coeffs[k])?);
            }
            let slot = by_degree.entry(k + l).or_insert_with(|| ThreeTensor::zero(n));
            *slot = slot.plus(&s);
        }
    }
    let first_nonzero = by_degree.into_iter().find(|(_, t)| !t.is_zero());
    Ok(BoundaryCheck { holds: first_nonzero.is_none(), top: coeffs[m].clone(), first_nonzero })
}
