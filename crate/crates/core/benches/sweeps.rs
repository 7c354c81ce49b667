use archcat::semigroup::verify_lemma1_with;
use archcat::thin::{verify_prop1_with, verify_prop2_with};
use archcat::{Analysis, Preorder, PreorderData, Strategy};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn strategies() -> Vec<(&'static str, Strategy)> {
    let mut out = vec![("sequential", Strategy::Sequential)];
    if Strategy::Parallel.is_parallel() {
        out.push(("parallel", Strategy::Parallel));
    }
    out
}

/// Total order on `n` points.
fn chain(n: usize) -> Preorder {
    let elements: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i..n {
            pairs.push([elements[i].clone(), elements[j].clone()]);
        }
    }
    Preorder::new(&PreorderData { elements, pairs }).unwrap()
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (label, strategy) in strategies() {
        group.bench_with_input(BenchmarkId::new("prop1", label), &strategy, |b, &s| {
            b.iter(|| verify_prop1_with(black_box(4), s).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("prop2", label), &strategy, |b, &s| {
            b.iter(|| verify_prop2_with(black_box(4), s).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("lemma1", label), &strategy, |b, &s| {
            b.iter(|| verify_lemma1_with(black_box(3), s).unwrap())
        });
    }
    group.finish();
}

fn analysis(c: &mut Criterion) {
    let cat = chain(8).to_category();
    let mut group = c.benchmark_group("analysis_chain8");
    group.sample_size(10);
    for (label, strategy) in strategies() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &strategy, |b, &s| {
            b.iter(|| Analysis::with_strategy(black_box(&cat), s).archimedean_composition())
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps, analysis);
criterion_main!(benches);
