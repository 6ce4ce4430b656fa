use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use knomial::identities::expand_power;
use knomial::{make_params, Row};

fn window_vs_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("line_generation");
    group.sample_size(10);
    for (k, n) in [(3, 100), (3, 500), (5, 200), (8, 100)] {
        let params = make_params(k).unwrap();
        let label = format!("k{k}_n{n}");
        group.bench_with_input(BenchmarkId::new("window", &label), &n, |b, &n| {
            b.iter(|| Row::generate(&params, black_box(n)))
        });
        group.bench_with_input(BenchmarkId::new("oracle", &label), &n, |b, &n| {
            b.iter(|| expand_power(&params, black_box(n)))
        });
    }
    group.finish();
}

criterion_group!(benches, window_vs_oracle);
criterion_main!(benches);
