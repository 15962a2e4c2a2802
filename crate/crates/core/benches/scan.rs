use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rsverify::dseries::{scan_positivity, AuxSeries};
use rsverify::ingest::{build_points, delta_eigenvalues, x0_11_eigenvalues, CharacterData};
use rsverify::repalg::Context;
use rsverify::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn eigenvalues(c: &mut Criterion) {
    let mut g = c.benchmark_group("delta_eigenvalues");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 20_000), &exec, |b, &exec| {
            b.iter(|| delta_eigenvalues(20_000, exec).unwrap())
        });
    }
    g.finish();
    let mut g = c.benchmark_group("x0_11_eigenvalues");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 20_000), &exec, |b, &exec| {
            b.iter(|| x0_11_eigenvalues(20_000, exec).unwrap())
        });
    }
    g.finish();
}

fn positivity(c: &mut Criterion) {
    let bound = 10_000;
    let f1 = delta_eigenvalues(bound, Exec::Parallel).unwrap();
    let f2 = x0_11_eigenvalues(bound, Exec::Parallel).unwrap();
    let chi = CharacterData::kronecker(-4).unwrap();
    let (points, skipped) = build_points(&f1, &f2, &chi, bound).unwrap();
    let series = AuxSeries::new(Context::bare());
    let mut g = c.benchmark_group("scan_positivity");
    g.sample_size(20);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, points.len()), &exec, |b, &exec| {
            b.iter(|| scan_positivity(&series, &points, 4, skipped.clone(), exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, eigenvalues, positivity);
criterion_main!(benches);
