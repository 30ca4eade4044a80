//! Periodic sums of matrix units and the derived families used by the
//! subprime construction.

use super::element::{GlElement, Pos};
use crate::exact::{modulo, Rational};

/// `xi_{kl} = sum_{p in Z} e_{k+ip, l+ip}`, keeping in-range summands.
pub fn xi(n: usize, i: usize, k: i64, l: i64) -> GlElement {
    periodic(n, i, k, l, false)
}

/// `eta_{kl} = sum_{p >= 0} e_{k+ip, l+ip}`.
pub fn eta(n: usize, i: usize, k: i64, l: i64) -> GlElement {
    periodic(n, i, k, l, true)
}

fn periodic(n: usize, i: usize, k: i64, l: i64, forward_only: bool) -> GlElement {
    assert!(i >= 1, "step must be positive");
    let step = i as i64;
    let n_i = n as i64;
    let lo = if forward_only { 0 } else { -(k.max(l) + step).div_euclid(step) - 1 };
    let hi = (n_i - k.min(l)).div_euclid(step) + 1;
    GlElement::from_entries(
        n,
        (lo..=hi).filter_map(|p| Pos::checked(n, k + step * p, l + step * p).map(|q| (q, Rational::one()))),
    )
}

/// `E_{kl}`: `xi_{k+1,l+1}` when `n mod i = 1`, otherwise `-xi_{i-l,i-k}`.
pub fn ecal(n: usize, i: usize, k: i64, l: i64) -> GlElement {
    let i_s = i as i64;
    if modulo(n as i64, i_s) == 1 {
        xi(n, i, k + 1, l + 1)
    } else {
        -&xi(n, i, i_s - l, i_s - k)
    }
}

/// `d_l = sum_{l <= j < i} E_{jj} + theta * I`, with `theta` making it traceless.
pub fn d_ell(n: usize, i: usize, l: i64) -> GlElement {
    let mut out = GlElement::zero(n);
    for j in l..i as i64 {
        out = &out + &ecal(n, i, j, j);
    }
    let theta = -(out.trace()) / Rational::from(n as i64);
    &out + &GlElement::identity(n).scale(&theta)
}
