use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use msd_core::batch::{
    cost_batch, cost_batch_sequential, quadrature_batch, quadrature_batch_sequential,
};
use msd_core::sample::{random_problems, random_state, ProblemRanges};
use msd_core::transport::{ground_cost_matrix, ground_cost_matrix_sequential};
use msd_core::{DiscreteMeasure, Horizon, Route};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn costs(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut group = c.benchmark_group("cost_batch");
    for size in [64, 1024, 8192] {
        let problems = random_problems(&mut rng, size, &ProblemRanges::default());
        group.throughput(Throughput::Elements(size as u64));
        for route in Route::ALL {
            group.bench_with_input(
                BenchmarkId::new(format!("parallel/{route}"), size),
                &problems,
                |b, p| b.iter(|| cost_batch(black_box(p), route)),
            );
            group.bench_with_input(
                BenchmarkId::new(format!("sequential/{route}"), size),
                &problems,
                |b, p| b.iter(|| cost_batch_sequential(black_box(p), route)),
            );
        }
        group.bench_with_input(
            BenchmarkId::new("parallel/quadrature", size),
            &problems,
            |b, p| b.iter(|| quadrature_batch(black_box(p))),
        );
        group.bench_with_input(
            BenchmarkId::new("sequential/quadrature", size),
            &problems,
            |b, p| b.iter(|| quadrature_batch_sequential(black_box(p))),
        );
    }
    group.finish();
}

fn ground_costs(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let h = Horizon::new(1.0).unwrap();
    let mut group = c.benchmark_group("ground_cost_matrix");
    for m in [16, 64, 256] {
        let mut measure = || {
            DiscreteMeasure::new((0..m).map(|_| random_state(&mut rng, 4, 3, 5.0)).collect())
                .unwrap()
        };
        let (mu, nu) = (measure(), measure());
        group.throughput(Throughput::Elements((m * m) as u64));
        group.bench_function(BenchmarkId::new("parallel", m), |b| {
            b.iter(|| ground_cost_matrix(black_box(&mu), black_box(&nu), h))
        });
        group.bench_function(BenchmarkId::new("sequential", m), |b| {
            b.iter(|| ground_cost_matrix_sequential(black_box(&mu), black_box(&nu), h))
        });
    }
    group.finish();
}

criterion_group!(benches, costs, ground_costs);
criterion_main!(benches);
