//! The boundary solution with carrier `p(5, 12)`, where the subprime
//! functional is no longer Frobenius.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::belavindrinfeld::{alpha_sub, cg_triple, r_cg};
use crate::error::{Error, Result};
use crate::exact::{exp_nilpotent, t_power, ExactMatrix, InvertibleMatrix, LaurentPoly, Rational, SpanBasis};
use crate::frobenius::{is_frobenius, parabolic_basis, LinearFunctional};
use crate::lie::{ad_two, conj_two, GlElement, Key2, Pos, TwoTensor};
use crate::report::Report;
use crate::subprime::{eigen_decompose, Eigenspaces};
use crate::yangbaxter::{admits, boundary_family_check, carrier, classify, YbTag};

const N: usize = 12;
const I: usize = 5;

/// Sources removed from the triple to isolate `alpha_0`.
pub const ALPHA0_EDGES: [usize; 2] = [5, 6];

/// Closure iterations allowed before giving up.
pub const CLOSURE_CAP: usize = 200;

#[derive(Clone, Debug)]
pub struct Case512Data {
    pub x7: GlElement,
    pub x4: GlElement,
    pub x1: GlElement,
    pub xm2: GlElement,
    pub x: GlElement,
    pub y: GlElement,
    pub h: GlElement,
    pub f: LinearFunctional,
    pub g: ExactMatrix<Rational>,
}

fn e(j: i64, k: i64) -> GlElement {
    GlElement::elementary(N, j, k)
}

fn combo(terms: &[(i64, i64, i64)]) -> GlElement {
    terms.iter().fold(GlElement::zero(N), |acc, &(c, j, k)| &acc + &e(j, k).scale(&Rational::from(c)))
}

fn exp_of(x: &GlElement) -> InvertibleMatrix<Rational> {
    exp_nilpotent(&x.to_matrix()).expect("nilpotent")
}

pub fn build512() -> Case512Data {
    let x7 = combo(&(1..=5).map(|j| (-1, j, j + 7)).collect::<Vec<_>>());
    let x1 = combo(&[(-1, 1, 2), (-1, 3, 4), (-2, 5, 6), (-1, 6, 7), (-1, 8, 9), (-1, 10, 11)]);
    let x4 = combo(&[(-1, 2, 6), (-1, 3, 7)]);
    let xm2 = (1..=5i64).fold(GlElement::zero(N), |acc, j| {
        let c = Rational::from((7 - j) / 2);
        &acc + &(&e(j, j - 2) + &e(j + 7, j + 5)).scale(&c)
    });
    let x = &(&(&x7 + &x4) + &x1) + &xm2;
    let y = combo(&[(-2, 1, 6), (-1, 2, 6), (3, 3, 6), (2, 4, 6), (1, 5, 6), (-1, 3, 7), (-1, 4, 7), (-1, 5, 7)]);
    let half = [1, -1, 3, 1, 5, -3, -5, -1, -3, 1, -1, 3];
    let diag = GlElement::from_entries(
        N,
        half.iter().enumerate().map(|(k, &v)| (Pos::new(k as u16 + 1, k as u16 + 1), Rational::new(v, 2))),
    );
    let h = &diag + &combo(&[(3, 3, 6), (3, 4, 7), (3, 1, 7)]);
    let one = Rational::from(1);
    let p = |j: usize, k: usize| (Pos::new(j as u16, k as u16), one.clone());
    let mut coords: Vec<_> = (1..=5).flat_map(|j| [p(j, j + 7), p(j + 7, j + 5)]).collect();
    coords.extend([p(6, 7), p(7, 8), p(6, 10), p(7, 11)]);
    let f = LinearFunctional::new(N, coords).expect("valid positions");
    let bracket = xm2.commutator(&x1);
    let g = [&x7, &xm2, &bracket, &x1, &y]
        .into_iter()
        .map(exp_of)
        .reduce(|a, b| a.compose(&b).expect("same n"))
        .expect("nonempty");
    Case512Data { x7, x4, x1, xm2, x, y, h, f, g: g.matrix().clone() }
}

/// Smallest subspace containing `r` and stable under `ad` of each generator.
pub fn module_closure(r: &TwoTensor, generators: &[GlElement]) -> Result<Vec<TwoTensor>> {
    let mut span: SpanBasis<Key2> = SpanBasis::new();
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    if span.insert(&r.sparse()) {
        out.push(r.clone());
        frontier.push(r.clone());
    }
    while let Some(v) = frontier.pop() {
        for g in generators {
            let image = ad_two(g, &v)?;
            if span.insert(&image.sparse()) {
                if out.len() >= CLOSURE_CAP {
                    return Err(Error::IterationCap(CLOSURE_CAP));
                }
                out.push(image.clone());
                frontier.push(image);
            }
        }
    }
    Ok(out)
}

/// `alpha_0 = alpha(T) - alpha(T without sources 5, 6)`.
pub fn alpha_zero512() -> TwoTensor {
    let t = cg_triple(I, N).expect("coprime");
    alpha_sub(&t, &BTreeSet::from(ALPHA0_EDGES)).expect("valid subset")
}

/// `r' = exp(-e_36 - e_47 - e_17).(r - alpha_0)`.
pub fn r_prime512() -> TwoTensor {
    let r = r_cg(I, N).expect("coprime");
    let u = exp_of(&combo(&[(-1, 3, 6), (-1, 4, 7), (-1, 1, 7)]));
    conj_two(&u, &r.minus(&alpha_zero512())).expect("same n")
}

#[derive(Clone, Debug)]
pub struct Report512 {
    pub checks: Report,
    pub module_dim: usize,
    pub eigen_dims: Vec<usize>,
}

impl Report512 {
    pub fn all_pass(&self) -> bool {
        self.checks.all_pass()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "i": I,
            "n": N,
            "module_dim": self.module_dim,
            "eigen_dims": self.eigen_dims,
            "checks": self.checks.to_json_map(),
        })
    }
}

pub const EXPECTED_DIMS: [usize; 10] = [1, 4, 5, 9, 10, 12, 10, 8, 4, 2];

/// The ten checks of the construction.
pub fn verify512() -> Report512 {
    let data = build512();
    let r = r_cg(I, N).expect("coprime");
    let xr = ad_two(&data.x, &r).expect("same n");
    let rp = r_prime512();
    let p = parabolic_basis(I, N).expect("0 < i < n");
    let mut checks = Report::new();

    checks.push("xr_cybe", classify(&xr).tag == YbTag::Cybe);
    checks.push("carrier", carrier(&xr).same_as(&p.subspace()));
    checks.push("admits_f", admits(&xr, &data.f).unwrap_or(false));
    let principal = p.basis().iter().all(|y| data.f.eval(&data.h.commutator(y)) == data.f.eval(y));
    checks.push("principal_element", principal && is_frobenius(&data.f, &p));

    let gens = [data.x7.clone(), data.x4.clone(), data.x1.clone(), data.xm2.clone()];
    let closure = module_closure(&r, &gens);
    let module_dim = closure.as_ref().map_or(0, Vec::len);
    let spaces: Option<Eigenspaces> = closure.ok().and_then(|m| eigen_decompose(&data.h, &m).ok());
    let eigen_dims = spaces.as_ref().map_or_else(Vec::new, |s| s.dims_up_to(9));
    let total = spaces.as_ref().map_or(0, Eigenspaces::total_dim);
    checks.push("eigenspaces", module_dim == 65 && total == 65 && eigen_dims == EXPECTED_DIMS);
    let m0 = spaces.as_ref().and_then(|s| s.spaces.get(&Rational::zero()));
    let m0_ok = m0.is_some_and(|basis| {
        let mut sb: SpanBasis<Key2> = SpanBasis::new();
        basis.iter().for_each(|v| {
            sb.insert(&v.sparse());
        });
        sb.dim() == 1 && !rp.is_zero() && sb.contains(&rp.sparse())
    });
    checks.push("m0_span", m0_ok);

    let g = InvertibleMatrix::new(data.g.clone()).expect("unipotent");
    let gr = conj_two(&g, &r).expect("same n");
    checks.push("g_r_split", gr == rp.plus(&xr));
    let phi = t_power(&data.h.to_matrix(), 2).and_then(|th| th.compose(&g.lift()));
    let phi_ok = phi.is_ok_and(|phi| {
        let lhs = conj_two(&phi, &r.lift()).expect("same n");
        lhs == rp.lift().plus(&xr.lift().scale_by(&LaurentPoly::t_pow(2)))
    });
    checks.push("phi_identity", phi_ok);
    checks.push("r_prime_mcybe", classify(&rp).tag == YbTag::Mcybe);
    let family = [rp.clone(), TwoTensor::zero(N), xr.clone()];
    checks.push("schouten_family", boundary_family_check(&family).is_ok_and(|c| c.holds));
    Report512 { checks, module_dim, eigen_dims }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::{in_parabolic, is_small, subprime_functional};

    #[test]
    fn transcriptions() {
        let d = build512();
        assert_eq!(d.xm2.get(3, 1), Rational::from(2));
        assert_eq!(d.xm2.get(8, 6), Rational::from(3));
        assert_eq!(d.xm2.entries().len(), 8);
        assert!(d.h.trace().is_zero());
        for m in [&d.x7, &d.x4, &d.x1, &d.xm2, &d.x, &d.y, &d.h] {
            assert!(m.entries().keys().all(|&p| in_parabolic(I, p)));
        }
        assert_eq!(d.f.support_size(), 14);
        assert!(!is_small(&d.f));
        assert!(d.g.is_integral());
        let p = parabolic_basis(I, N).unwrap();
        assert!(!is_frobenius(&subprime_functional(I, N).unwrap(), &p));
    }

    #[test]
    fn closure_examples() {
        let e = GlElement::elementary(2, 1, 2);
        let f = GlElement::elementary(2, 2, 1);
        let r = crate::lie::wedge(&e, &f).unwrap();
        let m = module_closure(&r, &[e.clone()]).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(module_closure(&r, &[]).unwrap().len(), 1);
    }

    #[test]
    fn all_checks_pass() {
        let rep = verify512();
        assert!(rep.all_pass(), "{}", rep.checks);
        assert_eq!(rep.module_dim, 65);
        assert_eq!(rep.checks.len(), 10);
    }

    #[test]
    fn alpha_zero_is_nonzero_part_of_alpha() {
        let a0 = alpha_zero512();
        assert!(!a0.is_zero());
        assert!(a0.is_antisymmetric());
    }
}
