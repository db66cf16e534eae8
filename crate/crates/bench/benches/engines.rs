//! Benchmarks comparing the responsibility engines and the end-to-end
//! coverage pipeline on fixed inputs.

use std::collections::BTreeSet;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use respcov::circuit::{resp_binsearch, resp_brute, resp_readonce, Assignment, Circuit};
use respcov::cliquebench::{brute_max_clique, max_clique_via_resp, random_graph};
use respcov::compile::compile;
use respcov::coverage::{build_report, Engine};
use respcov::ctl::parse;
use respcov::kripke::{parse_structure, KripkeStructure};
use respcov::sample;

fn req_grant() -> KripkeStructure {
    parse_structure(include_str!("../../../fixtures/req_grant.json")).unwrap()
}

fn tree_and_assignment(leaves: usize) -> (Circuit, Assignment, String) {
    let tree = sample::random_literal_tree(7, leaves);
    let f = sample::random_assignment(11, tree.inputs());
    let x = tree.inputs()[0].clone();
    (tree, f, x)
}

fn bench_tree_engines(c: &mut Criterion) {
    let mut group = c.benchmark_group("literal_tree_resp");
    for leaves in [8usize, 12, 16] {
        let (tree, f, x) = tree_and_assignment(leaves);
        let all: BTreeSet<String> = tree.inputs().iter().cloned().collect();
        group.bench_function(format!("brute_{leaves}"), |b| {
            b.iter(|| {
                black_box(resp_brute(&tree, &x, tree.output(), &f, &all).unwrap());
            })
        });
        group.bench_function(format!("binsearch_{leaves}"), |b| {
            b.iter(|| {
                black_box(resp_binsearch(&tree, &x, &f).unwrap());
            })
        });
        group.bench_function(format!("readonce_{leaves}"), |b| {
            b.iter(|| {
                black_box(resp_readonce(&tree, &x, &f).unwrap());
            })
        });
    }
    group.finish();
}

fn bench_coverage_pipeline(c: &mut Criterion) {
    let k = req_grant();
    let phi = parse("AG(req -> AF grant)").unwrap();
    let mut group = c.benchmark_group("coverage_report");
    group.bench_function("direct", |b| {
        b.iter(|| black_box(build_report(&k, &phi, "grant", Engine::Direct, 1).unwrap()))
    });
    group.bench_function("circuit", |b| {
        b.iter(|| black_box(build_report(&k, &phi, "grant", Engine::Circuit, 1).unwrap()))
    });
    group.bench_function("compile_only", |b| {
        b.iter(|| black_box(compile(&k, &phi).unwrap()))
    });
    group.finish();
}

fn bench_clique(c: &mut Criterion) {
    let g = random_graph(8, 0.5, 42).unwrap();
    let mut group = c.benchmark_group("clique8");
    group.bench_function("via_responsibility", |b| {
        b.iter(|| black_box(max_clique_via_resp(&g)))
    });
    group.bench_function("brute_force", |b| {
        b.iter(|| black_box(brute_max_clique(&g).unwrap()))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_tree_engines,
    bench_coverage_pipeline,
    bench_clique
);
criterion_main!(benches);
