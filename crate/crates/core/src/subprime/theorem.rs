use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::{module_vectors, v_ell, SubprimeContext};
use crate::belavindrinfeld::{alpha_sub, cg_triple};
use crate::exact::{binomial, exp_nilpotent, modulo, t_power, ExactMatrix, InvertibleMatrix, LaurentPoly, Rational};
use crate::frobenius::parabolic_basis;
use crate::lie::{ad_two, conj_two, GlElement, TwoTensor};
use crate::report::Report;
use crate::yangbaxter::{boundary_family_check, carrier, classify, YbTag};

fn exp_of(x: &GlElement) -> InvertibleMatrix<Rational> {
    exp_nilpotent(&x.to_matrix()).expect("nilpotent")
}

/// `g = e^{-Z} e^{-X} exp(-sum_{k<i} C(i,k) E_ki)`, with its inverse.
pub fn g_invertible(ctx: &SubprimeContext) -> InvertibleMatrix<Rational> {
    let i = ctx.si();
    let mut third = GlElement::zero(ctx.n);
    for k in 1..i {
        third = &third + &ctx.ecal(k, i).scale(&Rational::from(binomial(i, k)));
    }
    exp_of(&-&ctx.z())
        .compose(&exp_of(&-&ctx.x()))
        .and_then(|g| g.compose(&exp_of(&-&third)))
        .expect("same n")
}

pub fn g_matrix(ctx: &SubprimeContext) -> ExactMatrix<Rational> {
    g_invertible(ctx).matrix().clone()
}

/// `Phi(t) = t^{2nH} g`, with its inverse.
pub fn phi_invertible(ctx: &SubprimeContext) -> InvertibleMatrix<LaurentPoly> {
    let th = t_power(&ctx.principal().to_matrix(), 2 * ctx.sn()).expect("integral weights");
    th.compose(&g_invertible(ctx).lift()).expect("same n")
}

pub fn phi(ctx: &SubprimeContext) -> ExactMatrix<LaurentPoly> {
    phi_invertible(ctx).matrix().clone()
}

/// `r' = r + V_i`.
pub fn r_prime(ctx: &SubprimeContext) -> TwoTensor {
    ctx.r().plus(&v_ell(ctx, ctx.si()))
}

/// `b = -V_0 - W`.
pub fn b(ctx: &SubprimeContext) -> TwoTensor {
    let m = module_vectors(ctx);
    m.v[0].plus(&m.w).neg()
}

/// `(rho X + mu Z).r`.
pub fn b_rho_mu(ctx: &SubprimeContext, rho: &Rational, mu: &Rational) -> TwoTensor {
    let y = &ctx.x().scale(rho) + &ctx.z().scale(mu);
    ad_two(&y, &ctx.r()).expect("same n")
}

/// `alpha_0`: the part of `alpha` lost by removing `n - (n mod i)` from the triple.
pub fn alpha_zero(ctx: &SubprimeContext) -> TwoTensor {
    if ctx.i == 1 {
        return TwoTensor::zero(ctx.n);
    }
    let t = cg_triple(ctx.i, ctx.n).expect("coprime");
    let removed = (ctx.sn() - modulo(ctx.sn(), ctx.si())) as usize;
    alpha_sub(&t, &BTreeSet::from([removed])).expect("valid subset")
}

#[derive(Clone, Debug)]
pub struct MainReport {
    pub i: usize,
    pub n: usize,
    pub checks: Report,
}

impl MainReport {
    pub fn all_pass(&self) -> bool {
        self.checks.all_pass()
    }

    pub fn to_json(&self) -> Value {
        json!({ "i": self.i, "n": self.n, "checks": self.checks.to_json_map() })
    }
}

/// The six checks of the main construction at `(i, n)`.
pub fn verify_main(ctx: &SubprimeContext) -> MainReport {
    let r = ctx.r();
    let rp = r_prime(ctx);
    let bb = b(ctx);
    let gap = 2 * ctx.sn();
    let mut checks = Report::new();

    let lhs = conj_two(&phi_invertible(ctx), &r.lift()).expect("same n");
    let rhs = rp.lift().plus(&bb.lift().scale_by(&LaurentPoly::t_pow(gap)));
    checks.push("phi_identity", lhs == rhs);

    checks.push("b_cybe", classify(&bb).tag == YbTag::Cybe);
    let p = parabolic_basis(ctx.i, ctx.n).expect("0 < i < n");
    checks.push("carrier", carrier(&bb).same_as(&p.subspace()));

    let mut family = vec![rp.clone()];
    family.extend(std::iter::repeat(TwoTensor::zero(ctx.n)).take(gap as usize - 1));
    family.push(bb.clone());
    checks.push("schouten_family", boundary_family_check(&family).map(|c| c.holds).unwrap_or(false));

    let gr = conj_two(&g_invertible(ctx), &r).expect("same n");
    checks.push("g_r_split", gr == rp.plus(&bb));

    checks.push("Vi_alpha0", v_ell(ctx, ctx.si()) == alpha_zero(ctx).neg());
    MainReport { i: ctx.i, n: ctx.n, checks }
}
