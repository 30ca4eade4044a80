use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rmatrix_bench::cg_series;
use rmatrix_core::case512::{build512, module_closure};
use rmatrix_core::belavindrinfeld::r_cg;
use rmatrix_core::lie::conj_two;
use rmatrix_core::subprime::{context, phi_invertible, verify_main};
use rmatrix_core::yangbaxter::schouten;

fn bench_schouten(c: &mut Criterion) {
    let mut group = c.benchmark_group("schouten");
    for ((i, n), r) in cg_series() {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{i}_{n}")), &r, |b, r| b.iter(|| schouten(r)));
    }
    group.finish();
}

fn bench_phi_action(c: &mut Criterion) {
    let mut group = c.benchmark_group("phi_action");
    for (i, n) in [(2, 5), (3, 7), (4, 9)] {
        let ctx = context(i, n).unwrap();
        let phi = phi_invertible(&ctx);
        let r = ctx.r().lift();
        group.bench_function(format!("{i}_{n}"), |b| b.iter(|| conj_two(&phi, &r).unwrap()));
    }
    group.finish();
}

fn bench_verify_main(c: &mut Criterion) {
    let ctx = context(3, 7).unwrap();
    c.bench_function("verify_main_3_7", |b| b.iter(|| verify_main(&ctx)));
}

fn bench_closure512(c: &mut Criterion) {
    let d = build512();
    let r = r_cg(5, 12).unwrap();
    let gens = [d.x7, d.x4, d.x1, d.xm2];
    let mut group = c.benchmark_group("closure512");
    group.sample_size(10);
    group.bench_function("module", |b| b.iter(|| module_closure(&r, &gens).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_schouten, bench_phi_action, bench_verify_main, bench_closure512);
criterion_main!(benches);
