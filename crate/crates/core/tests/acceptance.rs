//! One line per acceptance criterion, with timings. Exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rmatrix_core::belavindrinfeld::{alpha, alpha_backward, alpha_forward, beta_member, beta_point, cg_triple, r_cg};
use rmatrix_core::case512::verify512;
use rmatrix_core::exact::{determinant, gcd};
use rmatrix_core::frobenius::{
    f_rho_mu, is_frobenius, is_subprime, parabolic_basis, principal_closed_form, principal_element, subprime_functional,
};
use rmatrix_core::lie::{conj_two, wedge, wedge_scaled, GlElement, TwoTensor};
use rmatrix_core::subprime::{
    context, eigen_report, g_matrix, lemma_identities, nilpotent_algebra_checks, phi, subprime_pairs,
    verify_main, verify_module_actions,
};
use rmatrix_core::yangbaxter::{carrier, schouten, Subspace};
use rmatrix_core::{ExactMatrix, InvertibleMatrix, LaurentPoly, Rational};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(v: i64) -> Rational {
    Rational::from(v)
}

fn golden_r_cg_one_three() -> Outcome {
    let e = |j, k| GlElement::elementary(3, j, k);
    let w = |a: &GlElement, b: &GlElement| wedge(a, b).unwrap();
    let display = wedge_scaled(&q(2), &e(1, 2), &e(3, 2))
        .plus(&w(&e(1, 2), &e(2, 1)))
        .plus(&w(&e(1, 3), &e(3, 1)))
        .plus(&w(&e(2, 3), &e(3, 2)))
        .plus(&wedge_scaled(&Rational::new(1, 3), &(&e(1, 1) - &e(2, 2)), &(&e(2, 2) - &e(3, 3))));
    let r = r_cg(1, 3).map_err(|e| e.to_string())?;
    ensure(r == display, || format!("r_cg(1,3) = {r}"))
}

fn golden_phi_three_seven() -> Outcome {
    let m = |c: i64, p: i64| LaurentPoly::monomial(q(c), p);
    let z = LaurentPoly::zero;
    let rows = vec![
        vec![m(1, -2), z(), z(), m(-2, -2), z(), z(), m(1, -2)],
        vec![m(-2, 12), m(1, 12), z(), m(1, 12), m(-1, 12), z(), m(1, 12)],
        vec![m(1, 26), m(-1, 26), m(1, 26), m(-2, 26), m(1, 26), m(-1, 26), m(1, 26)],
        vec![z(), z(), z(), m(1, -16), z(), z(), m(-1, -16)],
        vec![z(), z(), z(), m(-2, -2), m(1, -2), z(), m(-1, -2)],
        vec![z(), z(), z(), m(1, 12), m(-1, 12), m(1, 12), m(-1, 12)],
        vec![z(), z(), z(), z(), z(), z(), m(1, -30)],
    ];
    let display = ExactMatrix::from_rows(rows);
    let got = phi(&context(3, 7).unwrap());
    ensure(got == display, || "phi(3,7) differs from the displayed matrix".into())
}

const LISTED_PAIRS: &[(usize, usize)] = &[
    (1, 2), (1, 12), (2, 3), (2, 11), (3, 4), (3, 5), (3, 7), (3, 8), (3, 10), (3, 11),
    (4, 5), (4, 7), (4, 9), (4, 11), (5, 6), (6, 7),
];

fn main_theorem_sweep() -> Outcome {
    let pairs = subprime_pairs(12);
    for p in LISTED_PAIRS {
        ensure(pairs.contains(p), || format!("{p:?} missing from the sweep"))?;
    }
    for (i, n) in pairs {
        let rep = verify_main(&context(i, n).unwrap());
        ensure(rep.all_pass(), || format!("({i},{n}) failed {:?}", rep.checks.failures()))?;
        ensure(rep.checks.len() == 6, || format!("({i},{n}) ran {} checks", rep.checks.len()))?;
    }
    Ok(())
}

fn frobenius_iff_subprime() -> Outcome {
    let mut pairs: Vec<(usize, usize)> =
        (2..=10).flat_map(|n| (1..n).map(move |i| (i, n))).filter(|&(i, n)| gcd(i as i64, n as i64) == 1).collect();
    pairs.push((5, 12));
    for (i, n) in pairs {
        let p = parabolic_basis(i, n).unwrap();
        let frob = is_frobenius(&subprime_functional(i, n).unwrap(), &p);
        let congruent = n % i == 1 % i || n % i == i - 1;
        ensure(frob == congruent, || format!("({i},{n}): frobenius = {frob}, n = +-1 mod i is {congruent}"))?;
        ensure(is_subprime(i, n) == congruent, || format!("({i},{n}) is_subprime disagrees"))?;
    }
    Ok(())
}

fn principal_elements() -> Outcome {
    for (i, n) in subprime_pairs(10) {
        let p = parabolic_basis(i, n).unwrap();
        let h = principal_element(&subprime_functional(i, n).unwrap(), &p).map_err(|e| e.to_string())?;
        ensure(h == principal_closed_form(i, n).unwrap(), || format!("({i},{n}) solved H differs"))?;
    }
    for (i, n) in [(2, 5), (3, 7)] {
        let p = parabolic_basis(i, n).unwrap();
        for (rho, mu) in [(1, 1), (2, 3)] {
            let f = f_rho_mu(i, n, &q(rho), &q(mu)).unwrap();
            let h = principal_element(&f, &p).map_err(|e| e.to_string())?;
            ensure(h == principal_closed_form(i, n).unwrap(), || format!("({i},{n}) f_{{{rho},{mu}}}"))?;
        }
    }
    Ok(())
}

fn module_identities() -> Outcome {
    for (i, n) in subprime_pairs(12) {
        let ctx = context(i, n).unwrap();
        for rep in [verify_module_actions(&ctx), lemma_identities(&ctx), nilpotent_algebra_checks(&ctx)] {
            ensure(rep.all_pass(), || format!("({i},{n}) failed {:?}", rep.failures()))?;
        }
    }
    Ok(())
}

fn eigenstructure() -> Outcome {
    for (i, n) in subprime_pairs(12) {
        let rep = eigen_report(&context(i, n).unwrap());
        ensure(rep.all_pass(), || format!("({i},{n}) failed {:?}", rep.failures()))?;
    }
    Ok(())
}

fn integer_g() -> Outcome {
    for (i, n) in subprime_pairs(12) {
        let g = g_matrix(&context(i, n).unwrap());
        ensure(g.is_integral(), || format!("({i},{n}) g has a non-integer entry"))?;
        ensure(determinant(&g).unwrap() == q(1), || format!("({i},{n}) det g != 1"))?;
    }
    Ok(())
}

fn case_five_twelve() -> Outcome {
    let rep = verify512();
    ensure(rep.checks.len() == 10, || format!("{} checks ran", rep.checks.len()))?;
    ensure(rep.module_dim == 65, || format!("dim M = {}", rep.module_dim))?;
    ensure(rep.eigen_dims == [1, 4, 5, 9, 10, 12, 10, 8, 4, 2], || format!("dims {:?}", rep.eigen_dims))?;
    ensure(rep.all_pass(), || format!("failed {:?}", rep.checks.failures()))
}

fn bd_cross_construction() -> Outcome {
    for n in 2..=12usize {
        for i in (1..n).filter(|&i| gcd(i as i64, n as i64) == 1) {
            let t = cg_triple(i, n).unwrap();
            let split = alpha_forward(i, n).unwrap().plus(&alpha_backward(i, n).unwrap());
            ensure(alpha(&t) == split, || format!("({i},{n}) alpha split"))?;
            ensure(beta_member(&beta_point(i, n).unwrap(), &t).unwrap(), || format!("({i},{n}) beta"))?;
        }
    }
    Ok(())
}

fn sl2_boundary_example() -> Outcome {
    let (e, f, h) = (GlElement::elementary(2, 1, 2), GlElement::elementary(2, 2, 1), GlElement::h(2, 1));
    let t = LaurentPoly::t_pow(1);
    let le = e.lift();
    let id = GlElement::<LaurentPoly>::identity(2);
    let g = InvertibleMatrix::with_inverse(
        (&id + &le.scale_by(&t)).to_matrix(),
        (&id - &le.scale_by(&t)).to_matrix(),
    )
    .map_err(|e| e.to_string())?;
    let ef = wedge(&e, &f).unwrap();
    let eh = wedge(&e, &h).unwrap();
    let moved: TwoTensor<LaurentPoly> = conj_two(&g, &ef.lift()).unwrap();
    ensure(moved == ef.lift().plus(&eh.lift().scale_by(&t)), || format!("exp(te).(e^f) = {moved}"))?;
    ensure(schouten(&eh).is_zero(), || "schouten(e^h) != 0".into())?;
    ensure(carrier(&eh).same_as(&Subspace::spanned_by(2, [&e, &h])), || "carrier(e^h) is not the Borel".into())
}

fn property_suites() -> Outcome {
    let suites: [(&str, fn(&mut rand_chacha::ChaCha8Rng) -> bool); 5] = [
        ("jacobi", common::jacobi_trial),
        ("ad-leibniz", common::leibniz_trial),
        ("Ad exp = exp ad", common::ad_exp_trial),
        ("schouten equivariance", common::schouten_equivariance_trial),
        ("classification invariance", common::classification_invariance_trial),
    ];
    for (name, trial) in suites {
        let failed = common::run_trials(trial);
        ensure(failed == 0, || format!("{name}: {failed} of {} trials failed", common::TRIALS))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 12] = [
        ("golden r_CG(1,3)", Duration::from_secs(1), golden_r_cg_one_three),
        ("golden Phi(3,7)", Duration::from_secs(1), golden_phi_three_seven),
        ("main theorem sweep n <= 12", Duration::from_secs(60), main_theorem_sweep),
        ("Frobenius iff subprime n <= 10", Duration::from_secs(30), frobenius_iff_subprime),
        ("principal element closed form", Duration::from_secs(10), principal_elements),
        ("module actions and bracket identities n <= 12", Duration::from_secs(60), module_identities),
        ("H-eigenstructure", Duration::from_secs(10), eigenstructure),
        ("integer g, det 1", Duration::from_secs(5), integer_g),
        ("(5,12) construction", Duration::from_secs(120), case_five_twelve),
        ("BD cross-construction n <= 12", Duration::from_secs(30), bd_cross_construction),
        ("sl_2 boundary example", Duration::from_secs(1), sl2_boundary_example),
        ("property suites, 200 trials each", Duration::from_secs(60), property_suites),
    ];
    let mut failures = 0;
    for (k, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= *budget, || format!("took {elapsed:.2?}, budget {budget:?}"))
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({elapsed:.2?})", k + 1),
            Err(msg) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {msg}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
