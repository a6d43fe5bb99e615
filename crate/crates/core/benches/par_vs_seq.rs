//! Grid search and identity checks on the default rayon pool against a
//! single-thread pool. Build with `--no-default-features` to time the plain
//! sequential fallback instead.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use nova_core::algebra::{check_identity, Identity};
use nova_core::fixtures;
use nova_core::kernel::Scalar;
use nova_core::yangbaxter::{grid_search_r, YbeFlavor};

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    let default = rayon::ThreadPoolBuilder::new().build().unwrap();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    vec![("default", default), ("single", single)]
}

fn grid(c: &mut Criterion) {
    let a = fixtures::nf4().algebra;
    let support = [(0, 2), (1, 3), (2, 0), (3, 1), (0, 0)];
    let coeffs: Vec<Scalar> = (-2..=2).map(Scalar::from_int).collect();
    let mut g = c.benchmark_group("grid_search_nf4");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                pool.install(|| grid_search_r(&a, &support, &coeffs, YbeFlavor::Nybe).unwrap())
            })
        });
    }
    g.finish();
}

fn identities(c: &mut Criterion) {
    let a = fixtures::dd4().algebra;
    let mut g = c.benchmark_group("left_novikov_dd4");
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| check_identity(&a, Identity::LeftNovikov)))
        });
    }
    g.finish();
}

criterion_group!(benches, grid, identities);
criterion_main!(benches);
