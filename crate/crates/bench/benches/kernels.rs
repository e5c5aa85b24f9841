use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use plucker_bench::main_vectors;
use plucker_core::fixtures::{d1, w5};
use plucker_core::golden::check_g42;
use plucker_core::*;

fn plucker(c: &mut Criterion) {
    let plane = w5();
    c.bench_function("plucker_of w5", |b| b.iter(|| plucker_of(black_box(&plane))));
    let pvs = main_vectors(6, 8);
    c.bench_function("embed_phi n=6", |b| b.iter(|| pvs.iter().map(|pv| black_box(embed_phi(pv)).n()).sum::<usize>()));
}

fn identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("identity_suite");
    for n in [5, 6, 7] {
        let pv = main_vectors(n, 1).remove(0);
        group.bench_function(format!("n={n}"), |b| b.iter(|| identity_suite(black_box(&pv)).unwrap()));
    }
    group.finish();
}

fn strata(c: &mut Criterion) {
    c.bench_function("enumerate_strata n=6", |b| b.iter(|| enumerate_strata(black_box(6)).unwrap()));
    let sigs = enumerate_strata(5).unwrap();
    c.bench_function("admissible_polytope all n=5", |b| {
        b.iter(|| sigs.iter().map(|s| admissible_polytope(s).unwrap().dim).sum::<usize>())
    });
    c.bench_function("virtual_space_of all n=5", |b| b.iter(|| sigs.iter().map(|s| black_box(virtual_space_of(s).unwrap()).constraints.len()).sum::<usize>()));
}

fn limits(c: &mut Criterion) {
    let family = d1();
    c.bench_function("limit_point d1", |b| b.iter(|| limit_point(black_box(&family)).unwrap()));
    c.bench_function("check_g42", |b| b.iter(|| check_g42(2).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = plucker, identities, strata, limits
}
criterion_main!(benches);
