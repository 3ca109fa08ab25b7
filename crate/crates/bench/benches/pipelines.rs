use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use posetlab::construct::{lc_abstract_to_pv, lc_to_pv, pv_to_lc};
use posetlab::graph::{named, Graph};
use posetlab::hom::{conjecture_scan, count_hom, count_mono, MonoMethod};
use posetlab::lattice::{build_folded_lattice, mobius_table, relabel};
use posetlab::poset::{build_edge_poset, build_induced_poset};
use posetlab::search::{lc_collisions, pe_collisions};
use posetlab::symfun::{xg_direct, xg_from_lattice, xg_from_poset, xgt_direct};
use posetlab::tree::xgt_from_symfun_tree;
use posetlab::LabelMode;

fn sample() -> Vec<(&'static str, Graph)> {
    vec![
        ("c6", named::cycle(6)),
        ("paw+k2", named::union(&[named::paw(), named::path(2)])),
        ("k5", named::complete(5)),
    ]
}

fn posets(c: &mut Criterion) {
    let mut group = c.benchmark_group("posets");
    for (name, g) in sample() {
        group.bench_with_input(BenchmarkId::new("induced", name), &g, |b, g| b.iter(|| build_induced_poset(g).unwrap()));
        group.bench_with_input(BenchmarkId::new("edge", name), &g, |b, g| b.iter(|| build_edge_poset(g).unwrap()));
        group.bench_with_input(BenchmarkId::new("lattice", name), &g, |b, g| b.iter(|| build_folded_lattice(g).unwrap()));
    }
    group.finish();
}

fn chromatic(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic");
    for (name, g) in sample() {
        let p = build_induced_poset(&g).unwrap().erased();
        let l = relabel(&build_folded_lattice(&g).unwrap(), LabelMode::Types).unwrap();
        let mu = mobius_table(&l).unwrap();
        group.bench_function(BenchmarkId::new("direct", name), |b| b.iter(|| xg_direct(black_box(&g)).unwrap()));
        group.bench_function(BenchmarkId::new("poset", name), |b| b.iter(|| xg_from_poset(black_box(&p)).unwrap()));
        group.bench_function(BenchmarkId::new("lattice", name), |b| b.iter(|| xg_from_lattice(&l, &mu).unwrap()));
        group.bench_function(BenchmarkId::new("tutte", name), |b| b.iter(|| xgt_direct(black_box(&g)).unwrap()));
    }
    let t = named::star(3).disjoint_union(&named::path(4)).unwrap();
    let t = Graph::from_edges(t.vertex_count(), &[t.edges(), vec![(0, 4)]].concat()).unwrap();
    let x = xg_direct(&t).unwrap();
    group.bench_function("tree-tutte-from-xg", |b| b.iter(|| xgt_from_symfun_tree(black_box(&x)).unwrap()));
    group.finish();
}

fn constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("constructions");
    group.sample_size(20);
    for (name, g) in sample() {
        let p = build_induced_poset(&g).unwrap().erased();
        let full = build_folded_lattice(&g).unwrap();
        let partial = relabel(&full, LabelMode::Partial).unwrap();
        let abs = relabel(&full, LabelMode::Abstract).unwrap();
        group.bench_function(BenchmarkId::new("pv-to-lc", name), |b| b.iter(|| pv_to_lc(&p).unwrap()));
        group.bench_function(BenchmarkId::new("lc-to-pv", name), |b| b.iter(|| lc_to_pv(&partial).unwrap()));
        group.bench_function(BenchmarkId::new("lc-abstract-to-pv", name), |b| b.iter(|| lc_abstract_to_pv(&abs).unwrap()));
    }
    group.finish();
}

fn homomorphisms(c: &mut Criterion) {
    let (g, h) = (named::cycle(5), named::complete(4));
    c.bench_function("hom/c5-k4", |b| b.iter(|| count_hom(black_box(&g), black_box(&h))));
    c.bench_function("mono/direct", |b| b.iter(|| count_mono(&g, &named::complete(6), MonoMethod::Direct)));
    c.bench_function("mono/inversion", |b| b.iter(|| count_mono(&g, &named::complete(6), MonoMethod::Inversion)));
    c.bench_function("hom/scan-4", |b| b.iter(|| conjecture_scan(4).unwrap()));
}

fn scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scans");
    group.sample_size(10);
    group.bench_function("pe-5", |b| b.iter(|| pe_collisions(5, false).unwrap()));
    group.bench_function("lc-6", |b| b.iter(|| lc_collisions(6).unwrap()));
    group.finish();
}

criterion_group!(benches, posets, chromatic, constructions, homomorphisms, scans);
criterion_main!(benches);
