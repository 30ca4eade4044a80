mod common;

use common::*;
use rmatrix_core::yangbaxter::{classify, YbTag};

#[test]
fn jacobi() {
    assert_eq!(run_trials(jacobi_trial), 0);
}

#[test]
fn ad_leibniz() {
    assert_eq!(run_trials(leibniz_trial), 0);
}

#[test]
fn ad_of_exp_is_exp_of_ad() {
    assert_eq!(run_trials(ad_exp_trial), 0);
}

#[test]
fn schouten_equivariance() {
    assert_eq!(run_trials(schouten_equivariance_trial), 0);
}

#[test]
fn classification_is_conjugation_invariant() {
    assert_eq!(run_trials(classification_invariance_trial), 0);
}

#[test]
fn generator_covers_every_class() {
    let mut rng = rng();
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..TRIALS {
        let n = random_n(&mut rng);
        seen.insert(classify(&random_r_matrix(&mut rng, n)).tag.to_string());
    }
    for tag in [YbTag::Cybe, YbTag::Mcybe, YbTag::Neither] {
        assert!(seen.contains(&tag.to_string()), "{tag} never generated");
    }
}
