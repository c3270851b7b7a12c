use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use sriso_core::complex::{facet_ideal, stanley_reisner_ideal};
use sriso_core::extract::{build_transversal_matrix, find_nonzero_transversal};
use sriso_core::generate::{random_complex, random_gl_pair};
use sriso_core::ring_map::linear_parts;
use sriso_core::{extract_isomorphism, generate_bundle, GenParams, RingKind};

fn ideals(c: &mut Criterion) {
    let mut g = c.benchmark_group("ideals");
    for n in [6, 10, 14] {
        let complex = random_complex(n, 0.5, 11).unwrap();
        g.bench_with_input(BenchmarkId::new("stanley-reisner", n), &complex, |b, cx| {
            b.iter(|| stanley_reisner_ideal(black_box(cx)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("facet", n), &complex, |b, cx| b.iter(|| facet_ideal(black_box(cx))));
    }
    g.finish();
}

fn extraction(c: &mut Criterion) {
    let mut g = c.benchmark_group("extract");
    for kind in RingKind::ALL {
        for n in [5, 10] {
            let bundle = generate_bundle(&GenParams::new(n, kind, 5, 42)).unwrap();
            g.bench_with_input(BenchmarkId::new(kind.name(), n), &bundle, |b, bd| {
                b.iter(|| extract_isomorphism(black_box(&bd.pair), bd.kind).unwrap())
            });
        }
    }
    g.finish();
}

fn matching(c: &mut Criterion) {
    let mut g = c.benchmark_group("transversal");
    g.sample_size(20);
    for n in [50, 200] {
        let pair = random_gl_pair(n, 5).unwrap();
        let m = build_transversal_matrix(&linear_parts(&pair), pair.source().field()).unwrap();
        g.bench_with_input(BenchmarkId::new("gl-pair", n), &m, |b, m| {
            b.iter(|| find_nonzero_transversal(black_box(m)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, ideals, extraction, matching);
criterion_main!(benches);
