use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use cdr_core::charts::verify_alpha_identity;
use cdr_core::fock::FockSpace;
use cdr_core::graded::{parse_word, straighten};
use cdr_core::invariants::dimension_report;
use cdr_core::sections::{n4_ope_table, section, shifted_virasoro, SectionName};
use cdr_core::Letter;

fn products(c: &mut Criterion) {
    c.bench_function("L' bracket with itself", |b| {
        b.iter(|| {
            let space = FockSpace::new(2);
            let l = shifted_virasoro(&space).unwrap();
            black_box(space.lambda_bracket(&l, &l))
        })
    });
    c.bench_function("G∘0E on a fresh space", |b| {
        b.iter(|| {
            let space = FockSpace::new(2);
            let g = section(&space, SectionName::G).unwrap();
            let e = section(&space, SectionName::E).unwrap();
            black_box(space.circle(&g, 0, &e))
        })
    });
    c.bench_function("certified section table", |b| {
        b.iter(|| black_box(n4_ope_table(&FockSpace::new(2)).unwrap()))
    });
}

fn invariants(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariant dimensions");
    group.sample_size(10);
    for w in [2, 3] {
        group.bench_function(format!("w={w}"), |b| b.iter(|| black_box(dimension_report(w))));
    }
    group.finish();
    let word = parse_word("A[betadgamma] A[betadgamma]^(1) A[bc]").unwrap();
    c.bench_function("straighten a three-letter word", |b| b.iter(|| black_box(straighten(&word).unwrap())));
}

fn charts(c: &mut Criterion) {
    c.bench_function("chart law for (beta, dgamma, 1, 1)", |b| {
        b.iter(|| black_box(verify_alpha_identity(Letter::Beta, Letter::DGamma, 1, 1).unwrap()))
    });
}

criterion_group!(benches, products, invariants, charts);
criterion_main!(benches);
