use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use homlts_core::corpus::regular_lts_corpus;
use homlts_core::derivation::compute_hdr;
use homlts_core::imbedding::{build_ghe, build_universal, compute_a_submodule};

fn constructions(c: &mut Criterion) {
    let corpus = regular_lts_corpus();
    let mut group = c.benchmark_group("constructions");
    group.sample_size(10);
    for entry in &corpus {
        let t = &entry.lts;
        group.bench_with_input(BenchmarkId::new("hdr", entry.name), t, |b, t| {
            b.iter(|| compute_hdr(black_box(t)))
        });
        group.bench_with_input(BenchmarkId::new("ghe", entry.name), t, |b, t| {
            b.iter(|| build_ghe(black_box(t)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("a_submodule", entry.name), t, |b, t| {
            b.iter(|| compute_a_submodule(black_box(t)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("universal", entry.name), t, |b, t| {
            b.iter(|| build_universal(black_box(t)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, constructions);
criterion_main!(benches);
