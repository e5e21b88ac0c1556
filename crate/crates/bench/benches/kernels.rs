use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use finemu_core::arith::factor_poly_over_q;
use finemu_core::ellcurve::{ap, ap_bsgs, tate_local_data};
use finemu_core::galrep::{division_polynomial, stable_lines};
use finemu_core::quadfield::class_number_of_disc;
use finemu_core::Curve;

fn kernels(c: &mut Criterion) {
    let e11 = Curve::from_i64([0, -1, 1, -10, -20]).unwrap();
    let e201 = Curve::from_i64([1, 1, 0, -794, 8289]).unwrap();

    c.bench_function("ap naive l=9973", |b| b.iter(|| ap(black_box(&e11), 9973)));
    c.bench_function("ap bsgs l=1000003", |b| {
        b.iter(|| ap_bsgs(black_box(&e11), 1_000_003))
    });

    let psi5 = division_polynomial(&e11, 5).unwrap();
    let psi7 = division_polynomial(&e11, 7).unwrap();
    c.bench_function("factor psi_5 over Q", |b| {
        b.iter(|| factor_poly_over_q(black_box(&psi5)))
    });
    c.bench_function("factor psi_7 over Q", |b| {
        b.iter(|| factor_poly_over_q(black_box(&psi7)))
    });
    c.bench_function("stable lines 11a1 at 5", |b| {
        b.iter(|| stable_lines(black_box(&e11), None, 5))
    });

    c.bench_function("tate 201c1 at 67", |b| {
        b.iter(|| tate_local_data(black_box(&e201), 67))
    });
    let scaled = e201.scale_up(&6.into());
    c.bench_function("tate non-minimal at 3", |b| {
        b.iter(|| tate_local_data(black_box(&scaled), 3))
    });

    c.bench_function("class number disc -5624", |b| {
        b.iter(|| class_number_of_disc(black_box(-5624)))
    });
    c.bench_function("class number disc -1000003", |b| {
        b.iter(|| class_number_of_disc(black_box(-1_000_003)))
    });
}

criterion_group!(benches, kernels);
criterion_main!(benches);
