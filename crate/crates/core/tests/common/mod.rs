//! Random inputs and single-trial property checks shared by the integration
//! tests and the acceptance run.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rmatrix_core::belavindrinfeld::r_cg;
use rmatrix_core::exact::{exp_nilpotent, factorial};
use rmatrix_core::frobenius::{parabolic_basis, r_from_functional, subprime_functional};
use rmatrix_core::lie::{ad_three, ad_two, bracket, conj_element, conj_three, conj_two, wedge, GlElement, Pos, TwoTensor};
use rmatrix_core::yangbaxter::{classify, schouten, schouten_bilinear};
use rmatrix_core::{InvertibleMatrix, Rational};

pub const SEED: u64 = 0x5eed_cafe;
pub const TRIALS: usize = 200;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn random_n(rng: &mut ChaCha8Rng) -> usize {
    rng.gen_range(2..=6)
}

pub fn random_element(rng: &mut ChaCha8Rng, n: usize, nnz: usize) -> GlElement {
    GlElement::from_entries(
        n,
        (0..nnz).map(|_| {
            let p = Pos::new(rng.gen_range(1..=n as u16), rng.gen_range(1..=n as u16));
            (p, Rational::from(rng.gen_range(-3i64..=3)))
        }),
    )
}

fn random_strict(rng: &mut ChaCha8Rng, n: usize, upper: bool) -> GlElement {
    let mut entries = Vec::new();
    for j in 1..=n as u16 {
        for k in j + 1..=n as u16 {
            let c = rng.gen_range(-2i64..=2);
            if c != 0 && rng.gen_bool(0.4) {
                let p = if upper { Pos::new(j, k) } else { Pos::new(k, j) };
                entries.push((p, Rational::from(c)));
            }
        }
    }
    GlElement::from_entries(n, entries)
}

pub fn random_nilpotent(rng: &mut ChaCha8Rng, n: usize) -> GlElement {
    let upper = rng.gen_bool(0.5);
    random_strict(rng, n, upper)
}

/// A product of an upper and a lower unipotent matrix.
pub fn random_group_element(rng: &mut ChaCha8Rng, n: usize) -> InvertibleMatrix<Rational> {
    let u = exp_nilpotent(&random_strict(rng, n, true).to_matrix()).unwrap();
    let l = exp_nilpotent(&random_strict(rng, n, false).to_matrix()).unwrap();
    u.compose(&l).unwrap()
}

pub fn random_tensor(rng: &mut ChaCha8Rng, n: usize) -> TwoTensor {
    let mut t = TwoTensor::zero(n);
    for _ in 0..rng.gen_range(1..=4) {
        let a = random_element(rng, n, 2);
        let b = random_element(rng, n, 2);
        t = t.plus(&wedge(&a, &b).unwrap());
    }
    t
}

/// An r-matrix of a random kind: a Cremmer-Gervais r-matrix, an `r_f`, or a
/// random wedge sum.
pub fn random_r_matrix(rng: &mut ChaCha8Rng, n: usize) -> TwoTensor {
    let coprime: Vec<usize> = (1..n).filter(|&i| rmatrix_core::exact::gcd(i as i64, n as i64) == 1).collect();
    let i = coprime[rng.gen_range(0..coprime.len())];
    match rng.gen_range(0..3) {
        0 => r_cg(i, n).unwrap(),
        1 => {
            let f = subprime_functional(i, n).unwrap();
            let p = parabolic_basis(i, n).unwrap();
            r_from_functional(&f, &p).unwrap_or_else(|_| r_cg(i, n).unwrap())
        }
        _ => random_tensor(rng, n),
    }
}

pub fn jacobi_trial(rng: &mut ChaCha8Rng) -> bool {
    let n = random_n(rng);
    let (x, y, z) = (random_element(rng, n, 4), random_element(rng, n, 4), random_element(rng, n, 4));
    let br = |a: &GlElement, b: &GlElement| bracket(a, b).unwrap();
    let sum = &(&br(&x, &br(&y, &z)) + &br(&y, &br(&z, &x))) + &br(&z, &br(&x, &y));
    sum.is_zero()
}

/// `ad x` is a derivation of `ad y` acting on two-tensors: `[ad x, ad y] = ad [x, y]`.
pub fn leibniz_trial(rng: &mut ChaCha8Rng) -> bool {
    let n = random_n(rng);
    let (x, y) = (random_element(rng, n, 3), random_element(rng, n, 3));
    let t = random_tensor(rng, n);
    let xy = ad_two(&x, &ad_two(&y, &t).unwrap()).unwrap();
    let yx = ad_two(&y, &ad_two(&x, &t).unwrap()).unwrap();
    let direct = ad_two(&bracket(&x, &y).unwrap(), &t).unwrap();
    let a = random_element(rng, n, 3);
    let b = random_element(rng, n, 3);
    let split = ad_two(&x, &TwoTensor::tensor(&a, &b)).unwrap()
        == TwoTensor::tensor(&bracket(&x, &a).unwrap(), &b).plus(&TwoTensor::tensor(&a, &bracket(&x, &b).unwrap()));
    xy.minus(&yx) == direct && split
}

pub fn ad_exp_trial(rng: &mut ChaCha8Rng) -> bool {
    let n = random_n(rng);
    let nil = random_nilpotent(rng, n);
    let y = random_element(rng, n, 4);
    let g = exp_nilpotent(&nil.to_matrix()).unwrap();
    let lhs = conj_element(&g, &y).unwrap();
    let mut rhs = GlElement::zero(n);
    for k in 0..2 * n {
        let c = factorial(k as u32).recip().unwrap();
        rhs = &rhs + &nil.ad_pow(&y, k).scale(&c);
    }
    lhs == rhs
}

pub fn schouten_equivariance_trial(rng: &mut ChaCha8Rng) -> bool {
    let n = random_n(rng);
    let r = random_tensor(rng, n);
    let g = random_group_element(rng, n);
    let group = schouten(&conj_two(&g, &r).unwrap()) == conj_three(&g, &schouten(&r)).unwrap();
    let x = random_element(rng, n, 3);
    let xr = ad_two(&x, &r).unwrap();
    let lie = ad_three(&x, &schouten(&r)).unwrap()
        == schouten_bilinear(&xr, &r).unwrap().plus(&schouten_bilinear(&r, &xr).unwrap());
    group && lie
}

pub fn classification_invariance_trial(rng: &mut ChaCha8Rng) -> bool {
    let n = random_n(rng);
    let r = random_r_matrix(rng, n);
    let g = random_group_element(rng, n);
    classify(&conj_two(&g, &r).unwrap()).tag == classify(&r).tag
}

pub fn run_trials(trial: fn(&mut ChaCha8Rng) -> bool) -> usize {
    let mut rng = rng();
    (0..TRIALS).filter(|_| !trial(&mut rng)).count()
}
