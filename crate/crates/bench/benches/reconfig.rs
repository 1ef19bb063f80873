use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use domrecon_core::families::{enumerate_graphs, petersen, FamilySpec};
use domrecon_core::{
    build_reconfig_graph, canonical_form, enumerate_mds, enumerate_mds_exhaustive, Graph, Limits,
};

fn family(spec: &str) -> Graph {
    spec.parse::<FamilySpec>().unwrap().generate().unwrap()
}

fn mds(c: &mut Criterion) {
    let mut group = c.benchmark_group("mds");
    for spec in ["petersen", "cycle:16", "gnp:16,0.3:seed=1", "rook:4"] {
        let g = family(spec);
        group.bench_with_input(BenchmarkId::new("pruned", spec), &g, |b, g| {
            b.iter(|| enumerate_mds(black_box(g)).unwrap())
        });
    }
    let g = family("gnp:14,0.3:seed=1");
    group.bench_function("exhaustive/gnp14", |b| {
        b.iter(|| enumerate_mds_exhaustive(black_box(&g), &Limits::default()).unwrap())
    });
    group.finish();
}

fn recon(c: &mut Criterion) {
    let mut group = c.benchmark_group("recon");
    for (name, g) in [
        ("petersen", petersen()),
        ("rook3", family("rook:3")),
        ("k44", family("kmn:4,4")),
        ("tree12", family("tree:12:seed=7")),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| build_reconfig_graph(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn canon(c: &mut Criterion) {
    let mut group = c.benchmark_group("canon");
    let r = build_reconfig_graph(&family("rook:3")).unwrap();
    group.bench_function("r_rook3", |b| b.iter(|| canonical_form(black_box(r.graph())).unwrap()));
    let r = build_reconfig_graph(&petersen()).unwrap();
    group.bench_function("r_petersen", |b| b.iter(|| canonical_form(black_box(r.graph())).unwrap()));
    group.sample_size(10);
    group.bench_function("enumerate_order_6", |b| b.iter(|| enumerate_graphs(black_box(6)).unwrap()));
    group.finish();
}

criterion_group!(benches, mds, recon, canon);
criterion_main!(benches);
