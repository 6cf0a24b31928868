use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use kirillov::field::FieldCtx;
use kirillov::g2::g2_census;
use kirillov::par::Exec;
use kirillov::typea::{brute_force_census, reducibility_scan};

const BUDGET: u64 = 1 << 40;

fn policies() -> Vec<(&'static str, Exec)> {
    vec![("sequential", Exec::Sequential), ("parallel", Exec::all_cores())]
}

fn g2(c: &mut Criterion) {
    let mut group = c.benchmark_group("g2_census");
    group.sample_size(10);
    for q in [5u64, 7] {
        let ctx = FieldCtx::of_order(q).unwrap();
        for (name, exec) in policies() {
            group.bench_with_input(BenchmarkId::new(name, q), &ctx, |b, ctx| {
                b.iter(|| g2_census(ctx, exec, BUDGET).unwrap())
            });
        }
    }
    group.finish();
}

fn typea(c: &mut Criterion) {
    let mut group = c.benchmark_group("typea_census");
    group.sample_size(10);
    for (n, q) in [(4usize, 5u64), (5, 3)] {
        let ctx = FieldCtx::of_order(q).unwrap();
        for (name, exec) in policies() {
            group.bench_with_input(BenchmarkId::new(name, format!("n{n}_q{q}")), &ctx, |b, ctx| {
                b.iter(|| brute_force_census(n, ctx, exec, BUDGET).unwrap())
            });
        }
    }
    group.finish();
}

fn scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("reducibility_scan");
    group.sample_size(10);
    for (name, exec) in policies() {
        group.bench_function(BenchmarkId::new(name, 8), |b| {
            b.iter(|| reducibility_scan(8, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, g2, typea, scan);
criterion_main!(benches);
