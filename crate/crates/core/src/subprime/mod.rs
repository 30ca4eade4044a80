//! The nilpotent algebra generated by `X` and `Z`, the module it generates
//! from the Cremmer-Gervais r-matrix, and the boundary solution `b`.

mod eigen;
mod lemmas;
mod theorem;

pub use eigen::{eigen_decompose, eigen_report, Eigenspaces};
pub use lemmas::{lemma_identities, nilpotent_algebra_checks, verify_module_actions};
pub use theorem::{alpha_zero, b, b_rho_mu, g_invertible, g_matrix, phi, phi_invertible, r_prime, verify_main, MainReport};

use crate::belavindrinfeld::{check_coprime, r_cg};
use crate::error::{Error, Result};
use crate::exact::{binomial, floor_div, modulo, Rational};
use crate::frobenius::{is_subprime, principal_closed_form};
use crate::lie::{self, wedge_scaled, GlElement, TwoTensor};

/// A pair `(i, n)` with `gcd(i, n) = 1` and `n = +-1 (mod i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubprimeContext {
    i: usize,
    n: usize,
    eps: i64,
}

pub fn context(i: usize, n: usize) -> Result<SubprimeContext> {
    check_coprime(i, n)?;
    if !is_subprime(i, n) {
        return Err(Error::NotSubprime { i: i as i64, n: n as i64 });
    }
    let eps = if modulo(n as i64, i as i64) == 1 { 1 } else { -1 };
    Ok(SubprimeContext { i, n, eps })
}

/// All subprime pairs with `i < n <= max_n`.
pub fn subprime_pairs(max_n: usize) -> Vec<(usize, usize)> {
    (2..=max_n)
        .flat_map(|n| (1..n).map(move |i| (i, n)))
        .filter(|&(i, n)| context(i, n).is_ok())
        .collect()
}

impl SubprimeContext {
    pub fn i(&self) -> usize {
        self.i
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eps(&self) -> i64 {
        self.eps
    }

    fn si(&self) -> i64 {
        self.i as i64
    }

    fn sn(&self) -> i64 {
        self.n as i64
    }

    /// `c_k = floor((n - k) / i)`.
    pub fn c(&self, k: i64) -> i64 {
        floor_div(self.sn() - k, self.si())
    }

    /// `a_k = eps * ((-nk) mod i)`.
    pub fn a(&self, k: i64) -> i64 {
        self.eps * modulo(-self.sn() * k, self.si())
    }

    pub fn e(&self, j: i64, k: i64) -> GlElement {
        GlElement::elementary(self.n, j, k)
    }

    pub fn h(&self, j: i64) -> GlElement {
        GlElement::h(self.n, j)
    }

    pub fn identity(&self) -> GlElement {
        GlElement::identity(self.n)
    }

    pub fn xi(&self, k: i64, l: i64) -> GlElement {
        lie::xi(self.n, self.i, k, l)
    }

    pub fn eta(&self, k: i64, l: i64) -> GlElement {
        lie::eta(self.n, self.i, k, l)
    }

    pub fn ecal(&self, k: i64, l: i64) -> GlElement {
        lie::ecal(self.n, self.i, k, l)
    }

    pub fn d(&self, l: i64) -> GlElement {
        lie::d_ell(self.n, self.i, l)
    }

    /// `X = sum_{j <= n-i} c_j e_{j,j+i}`.
    pub fn x(&self) -> GlElement {
        let mut out = GlElement::zero(self.n);
        for j in 1..=self.sn() - self.si() {
            out = &out + &self.e(j, j + self.si()).scale(&Rational::from(self.c(j)));
        }
        out
    }

    /// `Z = sum_{j < i} a_j xi_{j+1,j}`.
    pub fn z(&self) -> GlElement {
        let mut out = GlElement::zero(self.n);
        for j in 1..self.si() {
            out = &out + &self.xi(j + 1, j).scale(&Rational::from(self.a(j)));
        }
        out
    }

    /// The principal element of the subprime functional.
    pub fn principal(&self) -> GlElement {
        principal_closed_form(self.i, self.n).expect("subprime")
    }

    pub fn r(&self) -> TwoTensor {
        r_cg(self.i, self.n).expect("coprime")
    }

    pub(crate) fn w2(&self, c: i64, a: &GlElement, b: &GlElement) -> TwoTensor {
        wedge_scaled(&Rational::from(c), a, b)
    }
}

/// The spanning set `r, W, V_0, ..., V_i` of the module.
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    pub r: TwoTensor,
    pub w: TwoTensor,
    pub v: Vec<TwoTensor>,
}

impl ModuleBasis {
    pub fn all(&self) -> Vec<&TwoTensor> {
        let mut out = vec![&self.r, &self.w];
        out.extend(self.v.iter());
        out
    }

    /// `V_l`, zero outside `[0, i]`.
    pub fn v_at(&self, l: usize) -> TwoTensor {
        self.v.get(l).cloned().unwrap_or_else(|| TwoTensor::zero(self.r.n()))
    }
}

/// `V_0 = (2/n) X ^ I - 2 sum_{k<l, c_k>c_l} e_kl ^ eta_{l,k+i} - 2 sum_{k<l<i} E_kl ^ E_{l-k,i}`.
pub fn v0(ctx: &SubprimeContext) -> TwoTensor {
    let (n, i) = (ctx.sn(), ctx.si());
    let mut out = wedge_scaled(&Rational::new(2, n), &ctx.x(), &ctx.identity());
    for k in 1..=n {
        for l in k + 1..=n {
            if ctx.c(k) > ctx.c(l) {
                out = out.minus(&ctx.w2(2, &ctx.e(k, l), &ctx.eta(l, k + i)));
            }
        }
    }
    for k in 1..i {
        for l in k + 1..i {
            out = out.minus(&ctx.w2(2, &ctx.ecal(k, l), &ctx.ecal(l - k, i)));
        }
    }
    out
}

/// `W = 2 (sum_{l<i} d_l ^ E_{l,l-1} + sum_{l<j<k<=i} E_{j-1,k-1} ^ E_{k-j+l,l-1})`.
pub fn w(ctx: &SubprimeContext) -> TwoTensor {
    let i = ctx.si();
    let mut out = TwoTensor::zero(ctx.n);
    for l in 1..i {
        out = out.plus(&ctx.w2(2, &ctx.d(l), &ctx.ecal(l, l - 1)));
        for j in l + 1..=i {
            for k in j + 1..=i {
                out = out.plus(&ctx.w2(2, &ctx.ecal(j - 1, k - 1), &ctx.ecal(k - j + l, l - 1)));
            }
        }
    }
    out
}

/// `V_l = -2 C(i,l) (d_l ^ E_{li} + sum_{l<=j<k<i} E_jk ^ E_{k-j+l,i}
/// - sum_{0<=k<j<l} E_jk ^ E_{k-j+l,i})` for `l` in `[1, i]`.
pub fn v_ell(ctx: &SubprimeContext, l: i64) -> TwoTensor {
    let i = ctx.si();
    assert!((1..=i).contains(&l), "V_l is defined for l in [1, i]");
    let mut inner = ctx.w2(1, &ctx.d(l), &ctx.ecal(l, i));
    for j in l..i {
        for k in j + 1..i {
            inner = inner.plus(&ctx.w2(1, &ctx.ecal(j, k), &ctx.ecal(k - j + l, i)));
        }
    }
    for j in 0..l {
        for k in 0..j {
            inner = inner.minus(&ctx.w2(1, &ctx.ecal(j, k), &ctx.ecal(k - j + l, i)));
        }
    }
    inner.scale(&Rational::from(-2 * binomial(i, l)))
}

pub fn module_vectors(ctx: &SubprimeContext) -> ModuleBasis {
    let mut v = vec![v0(ctx)];
    v.extend((1..=ctx.si()).map(|l| v_ell(ctx, l)));
    ModuleBasis { r: ctx.r(), w: w(ctx), v }
}
