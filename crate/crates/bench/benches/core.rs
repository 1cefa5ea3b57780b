use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use gcflab::gcf::{diagnostics, enclosure, GcfInput};
use gcflab::raney::{derive_table, run, Config, LrRuns};
use gcflab::rcf::{folding_normal_form, LetterEncoding};

fn convergents(c: &mut Criterion) {
    let input = GcfInput::period_doubling_13();
    let mut group = c.benchmark_group("convergents");
    for depth in [256usize, 1024, 4096] {
        group.bench_with_input(BenchmarkId::from_parameter(depth), &depth, |b, &depth| {
            b.iter(|| enclosure(black_box(&input), depth).unwrap())
        });
    }
    group.finish();
}

fn diagnostics_rows(c: &mut Criterion) {
    let input = GcfInput::period_doubling_13();
    c.bench_function("diagnostics/200", |b| {
        b.iter(|| diagnostics(black_box(&input), 200).unwrap().count())
    });
}

fn raney(c: &mut Criterion) {
    c.bench_function("derive_table/3", |b| {
        b.iter(|| derive_table(black_box(3), 16).unwrap())
    });
    c.bench_function("derive_table/7", |b| {
        b.iter(|| derive_table(black_box(7), 16).unwrap())
    });
    let start = Config::beta1();
    let word: LrRuns = "RLLR".repeat(256).parse().unwrap();
    c.bench_function("run/1024", |b| {
        b.iter(|| run(black_box(&start), black_box(&word)).unwrap())
    });
}

fn normalize(c: &mut Criterion) {
    let enc = LetterEncoding::canonical();
    let mut group = c.benchmark_group("folding_normal_form");
    for g in [8usize, 10, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(g), &g, |b, &g| {
            b.iter(|| folding_normal_form(black_box(g), &enc).unwrap())
        });
    }
    group.finish();
}

fn cross_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("cross_check");
    group.sample_size(10);
    group.bench_function("g10_depth1024", |b| {
        b.iter(|| gcflab::rcf::cross_check(black_box(10), 1024).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    convergents,
    diagnostics_rows,
    raney,
    normalize,
    cross_check
);
criterion_main!(benches);
