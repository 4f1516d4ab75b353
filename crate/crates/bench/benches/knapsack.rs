use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use fptas_core::knapsack::{approx2_min, exact_dp_max, exact_dp_min, fptas_max, fptas_min};
use fptas_core::{generate_instance, AnyInstance, GeneratorConfig, ProblemKind, Rational};

fn instance(kind: ProblemKind, n: usize, weight_max: u64) -> AnyInstance {
    generate_instance(&GeneratorConfig {
        kind,
        n,
        weight_max,
        size_max: 100,
        tightness: Rational::new(1, 2).unwrap(),
        seed: 1,
    })
    .unwrap()
}

fn min_knapsack(c: &mut Criterion) {
    let mut group = c.benchmark_group("minkp");
    group.sample_size(10);
    for n in [20usize, 40] {
        let AnyInstance::MinKp(inst) = instance(ProblemKind::MinKp, n, 10_000) else {
            unreachable!()
        };
        group.bench_with_input(BenchmarkId::new("exact_dp", n), &inst, |b, i| {
            b.iter(|| exact_dp_min(black_box(i)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("approx2", n), &inst, |b, i| {
            b.iter(|| approx2_min(black_box(i)).unwrap())
        });
        for eps in ["1/2", "1/10"] {
            let eps: Rational = eps.parse().unwrap();
            group.bench_with_input(
                BenchmarkId::new(format!("fptas_eps_{eps}"), n),
                &inst,
                |b, i| b.iter(|| fptas_min(black_box(i), eps).unwrap()),
            );
        }
    }
    group.finish();
}

fn max_knapsack(c: &mut Criterion) {
    let mut group = c.benchmark_group("maxkp");
    group.sample_size(10);
    let AnyInstance::MaxKp(inst) = instance(ProblemKind::MaxKp, 40, 10_000) else {
        unreachable!()
    };
    group.bench_function("exact_dp/40", |b| {
        b.iter(|| exact_dp_max(black_box(&inst)).unwrap())
    });
    let eps = Rational::new(1, 10).unwrap();
    group.bench_function("fptas_eps_1/10/40", |b| {
        b.iter(|| fptas_max(black_box(&inst), eps).unwrap())
    });
    group.finish();
}

criterion_group!(benches, min_knapsack, max_knapsack);
criterion_main!(benches);
