//! Adjoint and group actions on tensors.

use std::collections::{BTreeMap, HashMap};

use super::element::{check_dims, GlElement, Pos};
use super::tensor::{Accumulator, ThreeTensor, TwoTensor};
use crate::error::Result;
use crate::exact::{InvertibleMatrix, Scalar};

/// Precomputed sparse rows and columns of `x` for fast `[x, e_pq]`.
struct AdTable<'a, S: Scalar> {
    by_col: BTreeMap<u16, Vec<(u16, &'a S)>>,
    by_row: BTreeMap<u16, Vec<(u16, &'a S)>>,
}

impl<'a, S: Scalar> AdTable<'a, S> {
    fn new(x: &'a GlElement<S>) -> Self {
        let mut by_col: BTreeMap<u16, Vec<(u16, &S)>> = BTreeMap::new();
        let mut by_row: BTreeMap<u16, Vec<(u16, &S)>> = BTreeMap::new();
        for (p, v) in x.entries() {
            by_col.entry(p.col).or_default().push((p.row, v));
            by_row.entry(p.row).or_default().push((p.col, v));
        }
        Self { by_col, by_row }
    }

    /// `[x, e_pq] = sum_r x_rp e_rq - sum_s x_qs e_ps`.
    fn ad_unit(&self, p: Pos) -> Vec<(Pos, S)> {
        let mut out = Vec::new();
        if let Some(col) = self.by_col.get(&p.row) {
            out.extend(col.iter().map(|(r, v)| (Pos::new(*r, p.col), (*v).clone())));
        }
        if let Some(row) = self.by_row.get(&p.col) {
            out.extend(row.iter().map(|(s, v)| (Pos::new(p.row, *s), v.neg())));
        }
        out
    }
}

/// `x.(a (x) b) = [x,a] (x) b + a (x) [x,b]`.
pub fn ad_two<S: Scalar>(x: &GlElement<S>, t: &TwoTensor<S>) -> Result<TwoTensor<S>> {
    check_dims(x.n(), t.n())?;
    let table = AdTable::new(x);
    let mut acc = Accumulator::new();
    for ((a, b), v) in t.terms() {
        for (pa, c) in table.ad_unit(*a) {
            acc.add((pa, *b), c.mul(v));
        }
        for (pb, c) in table.ad_unit(*b) {
            acc.add((*a, pb), c.mul(v));
        }
    }
    Ok(TwoTensor::from_map(t.n(), acc.finish()))
}

pub fn ad_three<S: Scalar>(x: &GlElement<S>, t: &ThreeTensor<S>) -> Result<ThreeTensor<S>> {
    check_dims(x.n(), t.n())?;
    let table = AdTable::new(x);
    let mut acc = Accumulator::new();
    for ((a, b, c), v) in t.terms() {
        for (p, w) in table.ad_unit(*a) {
            acc.add((p, *b, *c), w.mul(v));
        }
        for (p, w) in table.ad_unit(*b) {
            acc.add((*a, p, *c), w.mul(v));
        }
        for (p, w) in table.ad_unit(*c) {
            acc.add((*a, *b, p), w.mul(v));
        }
    }
    Ok(ThreeTensor::from_map(t.n(), acc.finish()))
}

/// Caches `g e_pq g^{-1}` per matrix unit.
struct ConjTable<'a, S: Scalar> {
    g: &'a InvertibleMatrix<S>,
    cache: HashMap<Pos, Vec<(Pos, S)>>,
}

impl<'a, S: Scalar> ConjTable<'a, S> {
    fn new(g: &'a InvertibleMatrix<S>) -> Self {
        Self { g, cache: HashMap::new() }
    }

    fn image(&mut self, p: Pos) -> &[(Pos, S)] {
        let g = self.g;
        self.cache.entry(p).or_insert_with(|| {
            let m = g.matrix();
            let inv = g.inverse_matrix();
            let n = m.rows();
            let (pc, qr) = (p.row as usize - 1, p.col as usize - 1);
            let col: Vec<(usize, &S)> = (0..n).map(|r| (r, m.get(r, pc))).filter(|(_, v)| !v.is_zero()).collect();
            let row: Vec<(usize, &S)> = (0..n).map(|s| (s, inv.get(qr, s))).filter(|(_, v)| !v.is_zero()).collect();
            let mut out = Vec::with_capacity(col.len() * row.len());
            for (r, a) in &col {
                for (s, b) in &row {
                    out.push((Pos::new(*r as u16 + 1, *s as u16 + 1), a.mul(b)));
                }
            }
            out
        })
    }
}

/// `g x g^{-1}`.
pub fn conj_element<S: Scalar>(g: &InvertibleMatrix<S>, x: &GlElement<S>) -> Result<GlElement<S>> {
    check_dims(g.n(), x.n())?;
    let mut table = ConjTable::new(g);
    let mut out = GlElement::zero(x.n());
    for (p, v) in x.entries() {
        for (q, w) in table.image(*p) {
            out.add_at(*q, &w.mul(v));
        }
    }
    Ok(out)
}

/// `a (x) b -> g a g^{-1} (x) g b g^{-1}`, termwise.
pub fn conj_two<S: Scalar>(g: &InvertibleMatrix<S>, t: &TwoTensor<S>) -> Result<TwoTensor<S>> {
    check_dims(g.n(), t.n())?;
    let mut table = ConjTable::new(g);
    let mut acc = Accumulator::new();
    for ((a, b), v) in t.terms() {
        let ia: Vec<(Pos, S)> = table.image(*a).iter().map(|(p, w)| (*p, w.mul(v))).collect();
        let ib = table.image(*b);
        for (pa, wa) in &ia {
            for (pb, wb) in ib {
                acc.add((*pa, *pb), wa.mul(wb));
            }
        }
    }
    Ok(TwoTensor::from_map(t.n(), acc.finish()))
}

pub fn conj_three<S: Scalar>(g: &InvertibleMatrix<S>, t: &ThreeTensor<S>) -> Result<ThreeTensor<S>> {
    check_dims(g.n(), t.n())?;
    let mut table = ConjTable::new(g);
    let mut acc = Accumulator::new();
    for ((a, b, c), v) in t.terms() {
        let ia: Vec<(Pos, S)> = table.image(*a).iter().map(|(p, w)| (*p, w.mul(v))).collect();
        let ib: Vec<(Pos, S)> = table.image(*b).to_vec();
        let ic = table.image(*c);
        for (pa, wa) in &ia {
            for (pb, wb) in &ib {
                let wab = wa.mul(wb);
                for (pc, wc) in ic {
                    acc.add((*pa, *pb, *pc), wab.mul(wc));
                }
            }
        }
    }
    Ok(ThreeTensor::from_map(t.n(), acc.finish()))
}
