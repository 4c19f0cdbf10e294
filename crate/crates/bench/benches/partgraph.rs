use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use partgraph::invariants::local_complexities;
use partgraph::motifs::{builtin_templates, find_occurrences, Motif};
use partgraph::overlay::verify_induced_embedding;
use partgraph::{build_graph, Caps, Partition};

fn graph_build(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("build_graph");
    for n in [20u32, 30, 40] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| build_graph(black_box(n), &caps).unwrap())
        });
    }
    group.finish();
}

fn local_cliques(c: &mut Criterion) {
    let caps = Caps::default();
    let g = build_graph(20, &caps).unwrap();
    c.bench_function("local_complexities G20", |b| {
        b.iter(|| local_complexities(black_box(&g), &caps).unwrap())
    });
}

fn motif_search(c: &mut Criterion) {
    let caps = Caps::default();
    let g = build_graph(15, &caps).unwrap();
    let Motif::Fixed(rsq) = builtin_templates().get("rsq").unwrap().clone() else {
        unreachable!()
    };
    c.bench_function("find_occurrences rsq G15", |b| {
        b.iter(|| find_occurrences(black_box(&g), &rsq, None))
    });
}

fn overlay_certification(c: &mut Criterion) {
    let caps = Caps::default();
    let tau: Partition = "2,1".parse().unwrap();
    c.bench_function("verify_induced_embedding n=10 tau=2,1", |b| {
        b.iter(|| verify_induced_embedding(black_box(10), &tau, &caps).unwrap())
    });
}

criterion_group!(benches, graph_build, local_cliques, motif_search, overlay_certification);
criterion_main!(benches);
