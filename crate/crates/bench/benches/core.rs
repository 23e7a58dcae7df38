use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use expander_ledger::codes::library;
use expander_ledger::constructions::{bpt_embed, immerse};
use expander_ledger::cuts::find_sparse_cut;
use expander_ledger::graph::h_small_scale;
use expander_ledger::rational::ratio;
use expander_ledger::{generators, Mode, RunConfig};

fn subset_enumeration(c: &mut Criterion) {
    let cfg = RunConfig::default();
    let mut group = c.benchmark_group("h_small_scale");
    group.sample_size(10);
    for n in [14usize, 18, 20] {
        let g = generators::gnp(n, 0.3, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| h_small_scale(black_box(g), n / 2, &cfg).unwrap())
        });
    }
    group.finish();
}

fn spectral_sweep(c: &mut Criterion) {
    let cfg = RunConfig {
        mode: Mode::Heuristic,
        ..RunConfig::default()
    };
    let mut group = c.benchmark_group("sweep_cut");
    group.sample_size(10);
    for n in [100usize, 400] {
        let g = generators::random_regular(n, 3, 2).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| find_sparse_cut(black_box(g), n / 2, ratio(1, 1), &cfg).unwrap())
        });
    }
    group.finish();
}

fn constructions(c: &mut Criterion) {
    let cfg = RunConfig::default();
    let mut group = c.benchmark_group("constructions");
    group.sample_size(10);
    let hamming = library::hamming74();
    for dim in [2usize, 3] {
        group.bench_with_input(BenchmarkId::new("bpt_hamming", dim), &dim, |b, &dim| {
            b.iter(|| bpt_embed(black_box(&hamming), dim, &cfg).unwrap())
        });
    }
    let host = generators::random_regular(400, 3, 3).unwrap();
    let tanner = hamming.tanner_graph();
    group.bench_function("immerse_hamming_400", |b| {
        b.iter(|| immerse(black_box(&host), &tanner.graph, &cfg).unwrap())
    });
    group.finish();
}

criterion_group!(benches, subset_enumeration, spectral_sweep, constructions);
criterion_main!(benches);
