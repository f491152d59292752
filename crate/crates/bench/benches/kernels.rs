use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use kqsym::expand::{Basis, Expander};
use kqsym::finvar::specialize;
use kqsym::kqfam::{self, gq_finite, Families};
use kqsym::pairing::pair;
use kqsym_bench::{default_families, log_q, q_product};

fn series(c: &mut Criterion) {
    let log = log_q(8);
    let q = log.exp().unwrap();
    c.bench_function("zseries exp, order 8, D=8", |b| b.iter(|| black_box(&log).exp().unwrap()));
    c.bench_function("zseries invert, order 8, D=8", |b| b.iter(|| black_box(&q).invert().unwrap()));
    c.bench_function("q(beta) series, D=10", |b| b.iter(|| kqfam::q_beta_series(10, black_box(10))));
}

fn families(c: &mut Criterion) {
    c.bench_function("GQ6 series, D=10", |b| b.iter(|| kqfam::gq(black_box(6), 10)));
    c.bench_function("GQ6 in 3 variables by division", |b| b.iter(|| gq_finite(black_box(6), 3).unwrap()));
    let fam = default_families();
    let gq = fam.gq(6);
    c.bench_function("specialize GQ6 to 4 variables, D=10", |b| b.iter(|| specialize(black_box(&gq), 4)));
}

fn expansion(c: &mut Criterion) {
    let target = q_product(&Families::new(8));
    c.bench_function("expand q3 q2 q1 in qG_strict, D=8", |b| {
        b.iter(|| Expander::new(8).expand(black_box(&target), Basis::QGStrict).unwrap())
    });
    let gq2 = kqfam::gq(2, 6);
    c.bench_function("expand GQ2 in GQ_odd, D=6", |b| b.iter(|| Expander::new(6).expand_gq(black_box(&gq2)).unwrap()));
}

fn pairing(c: &mut Criterion) {
    let fam = Families::new(7);
    let (gq, gp) = (fam.gq(7), fam.gp(7));
    c.bench_function("pair GQ7 with gp7", |b| b.iter(|| pair(black_box(&gq), black_box(&gp)).unwrap()));
}

criterion_group!(benches, series, families, expansion, pairing);
criterion_main!(benches);
