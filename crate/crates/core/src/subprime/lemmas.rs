use super::{module_vectors, SubprimeContext};
use crate::belavindrinfeld::{alpha_backward, alpha_forward, beta_point, gamma};
use crate::exact::{factorial, modulo, sparse_rank, Rational};
use crate::lie::{ad_two, bracket, GlElement, TwoTensor};
use crate::report::Report;

fn q(v: i64) -> Rational {
    Rational::from(v)
}

fn act(x: &GlElement, t: &TwoTensor) -> TwoTensor {
    ad_two(x, t).expect("same n")
}

/// The six actions of `X` and `Z` on the module spanning set.
pub fn verify_module_actions(ctx: &SubprimeContext) -> Report {
    let m = module_vectors(ctx);
    let (x, z) = (ctx.x(), ctx.z());
    let i = ctx.i;
    let mut rep = Report::new();
    rep.push("Z.r = W", act(&z, &m.r) == m.w);
    rep.push("X.r = V_0", act(&x, &m.r) == m.v[0]);
    rep.push("Z.W = 0", act(&z, &m.w).is_zero());
    for l in 0..=i {
        let rhs = m.v_at(l + 1).scale(&q(l as i64 + 1));
        rep.push(format!("Z.V_{l} = {}V_{}", l + 1, l + 1), act(&z, &m.v[l]) == rhs);
    }
    rep.push("X.W = V_1/i", act(&x, &m.w) == m.v_at(1).scale(&Rational::new(1, i as i64)));
    for l in 0..=i {
        rep.push(format!("X.V_{l} = 0"), act(&x, &m.v[l]).is_zero());
    }
    rep
}

/// The bracket identities for `X`, `Z`, `eta`, `e`, `E` and `d`, and the
/// actions of `X`, `Z` on the four parts of `r`.
pub fn lemma_identities(ctx: &SubprimeContext) -> Report {
    let mut rep = Report::new();
    let (n, i) = (ctx.sn(), ctx.si());
    let (x, z) = (ctx.x(), ctx.z());
    let br = |a: &GlElement, b: &GlElement| bracket(a, b).expect("same n");
    let c = |k| q(ctx.c(k));
    let a = |k| q(ctx.a(k));

    let (mut x_eta, mut x_e, mut z_eta, mut z_e) = (true, true, true, true);
    for k in 1..=n {
        for l in 1..=n {
            let rhs = &ctx.eta(k, l + i).scale(&(c(k) - c(l))) + &ctx.e(k - i, l).scale(&(c(k) + q(1)));
            x_eta &= br(&x, &ctx.eta(k, l)) == rhs;
            let rhs = &ctx.e(k - i, l).scale(&(c(k) + q(1))) - &ctx.e(k, l + i).scale(&c(l));
            x_e &= br(&x, &ctx.e(k, l)) == rhs;
            let delta = if modulo(n - l, i) == i - 1 { a(l - 1) } else { q(0) };
            let rhs = &(&ctx.eta(k + 1, l).scale(&a(k)) - &ctx.eta(k, l - 1).scale(&a(l - 1)))
                + &ctx.e(n + k - l + 1, n).scale(&delta);
            z_eta &= br(&z, &ctx.eta(k, l)) == rhs;
            let rhs = &ctx.e(k + 1, l).scale(&a(k)) - &ctx.e(k, l - 1).scale(&a(l - 1));
            z_e &= br(&z, &ctx.e(k, l)) == rhs;
        }
    }
    rep.push("[X, eta_kl]", x_eta);
    rep.push("[X, e_kl]", x_e);
    rep.push("[Z, eta_kl]", z_eta);
    rep.push("[Z, e_kl]", z_e);

    let (mut z_ecal, mut x_ecal) = (true, true);
    for k in 1..i {
        for l in 0..=i {
            let rhs = &ctx.ecal(k + 1, l).scale(&q(i - 1 - k)) - &ctx.ecal(k, l - 1).scale(&q(modulo(-l, i)));
            z_ecal &= br(&z, &ctx.ecal(k, l)) == rhs;
            let rhs = if l == 0 { -&ctx.ecal(k, i) } else { GlElement::zero(ctx.n) };
            x_ecal &= br(&x, &ctx.ecal(k, l)) == rhs;
        }
    }
    rep.push("[Z, E_kl]", z_ecal);
    rep.push("[X, E_kl]", x_ecal);

    let (mut x_d, mut z_d) = (true, true);
    for l in 1..=i {
        x_d &= br(&x, &ctx.d(l)).is_zero();
        z_d &= br(&z, &ctx.d(l)) == -&ctx.ecal(l, l - 1).scale(&q(i - l));
    }
    rep.push("[X, d_l] = 0", x_d);
    rep.push("[Z, d_l]", z_d);

    let mut z_alt = GlElement::zero(ctx.n);
    for j in 1..i {
        z_alt = &z_alt + &ctx.ecal(j, j - 1).scale(&q(i - j));
    }
    rep.push("Z via E", z_alt == z);
    let mut back = TwoTensor::zero(ctx.n);
    for l in 1..=i {
        for j in l..=i {
            for k in j + 1..=i {
                back = back.plus(&ctx.w2(2, &ctx.ecal(j, k), &ctx.ecal(k - j + l - 1, l - 1)));
            }
        }
    }
    let fwd = alpha_forward(ctx.i, ctx.n).expect("coprime");
    let bwd = alpha_backward(ctx.i, ctx.n).expect("coprime");
    let beta = beta_point(ctx.i, ctx.n).expect("coprime");
    let gam = gamma(ctx.n);
    rep.push("alpha_back via E", back == bwd);

    rep.extend(r_part_actions(ctx, &fwd, &bwd, &beta, &gam));
    rep
}

fn r_part_actions(ctx: &SubprimeContext, fwd: &TwoTensor, bwd: &TwoTensor, beta: &TwoTensor, gam: &TwoTensor) -> Report {
    let mut rep = Report::new();
    let (n, i) = (ctx.sn(), ctx.si());
    let (x, z) = (ctx.x(), ctx.z());
    let id = ctx.identity();
    let mut zero = TwoTensor::zero(ctx.n);

    let mut rhs = zero.clone();
    for k in 1..=n {
        for l in k + 1..=n {
            if ctx.c(k) > ctx.c(l) {
                rhs = rhs.minus(&ctx.w2(2, &ctx.e(k, l), &ctx.eta(l, k + i)));
            }
        }
    }
    for j in 1..=n - i {
        for s in j + 1..=j + i {
            rhs = rhs.plus(&ctx.w2(2 * ctx.c(j), &ctx.e(j, s), &ctx.e(s, j + i)));
        }
    }
    rep.push("X.alpha_fwd", act(&x, fwd) == rhs);

    rhs = zero.clone();
    for k in 1..i {
        for l in k + 1..i {
            rhs = rhs.minus(&ctx.w2(2, &ctx.ecal(k, l), &ctx.ecal(l - k, i)));
        }
    }
    rep.push("X.alpha_back", act(&x, bwd) == rhs);

    rhs = zero.clone();
    let two_over_n = id.scale(&Rational::new(2, n));
    for j in 1..=n {
        let diag = &(&two_over_n - &ctx.e(j, j)) - &ctx.e(j + i, j + i);
        rhs = rhs.plus(&ctx.w2(ctx.c(j), &ctx.e(j, j + i), &diag));
    }
    rep.push("X.beta", act(&x, beta) == rhs);

    rhs = zero.clone();
    for j in 1..=n {
        rhs = rhs.plus(&ctx.w2(ctx.c(j), &ctx.e(j, j + i), &(&ctx.e(j, j) - &ctx.e(j + i, j + i))));
        for s in j + 1..j + i {
            rhs = rhs.minus(&ctx.w2(2 * ctx.c(j), &ctx.e(j, s), &ctx.e(s, j + i)));
        }
    }
    rep.push("X.gamma", act(&x, gam) == rhs);

    rhs = zero.clone();
    for j in 1..n {
        rhs = rhs.plus(&ctx.w2(2 * ctx.a(j), &ctx.eta(j + i + 1, j + i), &ctx.h(j)));
    }
    rep.push("Z.alpha_fwd", act(&z, fwd) == rhs);

    rhs = zero.clone();
    for j in 1..i {
        rhs = rhs.plus(&ctx.w2(2 * (i - j), &ctx.ecal(j, j - 1), &ctx.ecal(j, j)));
    }
    for l in 1..=i {
        for j in l + 1..=i {
            for k in j..=i {
                rhs = rhs.plus(&ctx.w2(2, &ctx.ecal(j - 1, k - 1), &ctx.ecal(k - j + l, l - 1)));
            }
        }
    }
    rep.push("Z.alpha_back", act(&z, bwd) == rhs);

    rhs = zero.clone();
    for j in 1..i {
        rhs = rhs.minus(&ctx.w2(2 * (i - j), &ctx.ecal(j, j - 1), &(&ctx.d(j) - &ctx.d(j + 1))));
    }
    for l in 1..n {
        rhs = rhs.minus(&ctx.w2(ctx.a(l), &(&ctx.eta(l + 1, l) + &ctx.eta(l + i + 1, l + i)), &ctx.h(l)));
    }
    rep.push("Z.beta", act(&z, beta) == rhs);

    zero = TwoTensor::zero(ctx.n);
    rhs = zero;
    for j in 1..n {
        rhs = rhs.plus(&ctx.w2(ctx.a(j), &ctx.e(j + 1, j), &ctx.h(j)));
    }
    rep.push("Z.gamma", act(&z, gam) == rhs);
    rep
}

/// Structure of the algebra generated by `X` and `Z`.
pub fn nilpotent_algebra_checks(ctx: &SubprimeContext) -> Report {
    let mut rep = Report::new();
    let (x, z) = (ctx.x(), ctx.z());
    let i = ctx.i;
    let powers: Vec<GlElement> = (0..=i).map(|k| z.ad_pow(&x, k)).collect();
    rep.push("(ad Z)^i X = 0", powers[i].is_zero());
    if i == 1 {
        rep.push("n = F X", z.is_zero() && !x.is_zero());
        return rep;
    }
    let mut family: Vec<GlElement> = vec![z.clone()];
    family.extend(powers[..i].iter().cloned());
    let vecs: Vec<_> = family.iter().map(|g| g.entries().clone()).collect();
    rep.push("Z, X, ..., (ad Z)^{i-1} X independent", sparse_rank(vecs.iter()) == i + 1);
    let mut abelian = true;
    for a in &powers[..i] {
        for b in &powers[..i] {
            abelian &= a.commutator(b).is_zero();
        }
    }
    rep.push("span of (ad Z)^k X abelian", abelian);
    let mut closed = true;
    for a in &family {
        for b in &family {
            let mut all: Vec<_> = vecs.clone();
            all.push(a.commutator(b).entries().clone());
            closed &= sparse_rank(all.iter()) == i + 1;
        }
    }
    rep.push("span closed under bracket", closed);
    let mut closed_form = true;
    for k in 1..i {
        let coeff = factorial(i as u32 - 1) * factorial((i - k - 1) as u32).recip().expect("nonzero");
        closed_form &= powers[k] == ctx.ecal(k as i64, i as i64).scale(&coeff);
    }
    rep.push("(ad Z)^k X = (i-1)!/(i-k-1)! E_ki", closed_form);
    rep
}

#[cfg(test)]
mod tests {
    use super::super::{context, subprime_pairs};
    use super::*;

    #[test]
    fn all_identities_small_pairs() {
        for (i, n) in [(1, 3), (2, 5), (3, 7), (3, 8)] {
            let ctx = context(i, n).unwrap();
            for rep in [verify_module_actions(&ctx), lemma_identities(&ctx), nilpotent_algebra_checks(&ctx)] {
                assert!(rep.all_pass(), "({i},{n}) failed {:?}", rep.failures());
            }
        }
    }

    #[test]
    fn spot_checks() {
        let ctx = context(3, 7).unwrap();
        let x = ctx.x();
        let lhs = x.commutator(&ctx.eta(4, 1));
        let rhs = &ctx.e(1, 1).scale(&q(ctx.c(4) + 1)) + &ctx.eta(4, 4).scale(&q(ctx.c(4) - ctx.c(1)));
        assert_eq!(lhs, rhs);
        let m = super::super::module_vectors(&ctx);
        assert_eq!(act(&ctx.z(), &m.v[0]), m.v[1]);
        let c = context(2, 5).unwrap();
        let z2x = c.z().ad_pow(&c.x(), 2);
        assert!(z2x.is_zero());
        let c = context(1, 3).unwrap();
        let m = super::super::module_vectors(&c);
        assert!(act(&c.z(), &m.r).is_zero());
        assert_eq!(act(&c.x(), &m.r), m.v[0]);
    }

    #[test]
    fn all_identities_up_to_twelve() {
        for (i, n) in subprime_pairs(12) {
            let ctx = context(i, n).unwrap();
            for rep in [verify_module_actions(&ctx), lemma_identities(&ctx), nilpotent_algebra_checks(&ctx)] {
                assert!(rep.all_pass(), "({i},{n}) failed {:?}", rep.failures());
            }
        }
    }
}
