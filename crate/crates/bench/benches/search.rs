use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use signix_core::search::{search_unicyclic, ExactEvaluator};
use signix_core::{canonical_form, enumerate_unicyclic};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_unicyclic");
    for k in [6, 8, 9] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| enumerate_unicyclic(k).unwrap())
        });
    }
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let graphs = enumerate_unicyclic(9).unwrap();
    c.bench_function("canonical_form/unicyclic_9", |b| {
        b.iter(|| graphs.iter().map(|g| canonical_form(g).unwrap()).count())
    });
}

fn maximizer(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_unicyclic");
    group.sample_size(10);
    for (n, k) in [(7, 6), (8, 7), (9, 8)] {
        group.bench_with_input(BenchmarkId::new("n_k", format!("{n}_{k}")), &(n, k), |b, &(n, k)| {
            b.iter(|| search_unicyclic(n, k, &ExactEvaluator).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, canonical, maximizer);
criterion_main!(benches);
