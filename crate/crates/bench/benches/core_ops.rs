use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use grasstilt_bench::{grass, partition};
use grasstilt_core::{
    bott, lr_coefficient_oracle, lr_expand, verify_prop3_sweep, verify_tilting_ext, GLWeight,
    PartitionBox, TwistedSchurBundle,
};

fn bench_lr(c: &mut Criterion) {
    let a = partition(&[3, 2, 1]);
    let b = partition(&[3, 2, 1]);
    c.bench_function("lr_expand 321x321", |bench| {
        bench.iter(|| lr_expand(black_box(&a), black_box(&b), None))
    });
    c.bench_function("lr_expand 321x321 rank 3", |bench| {
        bench.iter(|| lr_expand(black_box(&a), black_box(&b), Some(3)))
    });
    let g = partition(&[4, 3, 2, 2, 1]);
    c.bench_function("lr_oracle skew count", |bench| {
        bench.iter(|| lr_coefficient_oracle(black_box(&a), black_box(&b), black_box(&g)))
    });
}

fn bench_box_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate box 6x6", |bench| {
        bench.iter(|| PartitionBox::new(6, 6).enumerate())
    });
}

fn bench_bott(c: &mut Criterion) {
    let ctx = grass(3, 7);
    c.bench_function("bott sweep twists -6..=6", |bench| {
        bench.iter(|| {
            let gamma = partition(&[4, 2, 1]);
            for k in -6..=6i64 {
                let w = TwistedSchurBundle::new(gamma.clone(), k)
                    .weight(&ctx)
                    .unwrap();
                black_box(bott(&ctx, &w));
            }
        })
    });
    let dominant = GLWeight::new(&ctx, vec![5, 3, 1, 0, 0, 0, 0]).unwrap();
    c.bench_function("bott dominant shortcut", |bench| {
        bench.iter(|| bott(black_box(&ctx), black_box(&dominant)))
    });
}

fn bench_verifiers(c: &mut Criterion) {
    let small = grass(2, 4);
    c.bench_function("ext vanishing grass(2,4)", |bench| {
        bench.iter(|| verify_tilting_ext(black_box(&small), None, 1))
    });
    let medium = grass(3, 6);
    c.bench_function("ext vanishing grass(3,6)", |bench| {
        bench.iter(|| verify_tilting_ext(black_box(&medium), None, 1))
    });
    c.bench_function("prop3 sweep grass(2,5)", |bench| {
        bench.iter(|| verify_prop3_sweep(black_box(&grass(2, 5)), 2, 1))
    });
}

criterion_group!(
    benches,
    bench_lr,
    bench_box_enumeration,
    bench_bott,
    bench_verifiers
);
criterion_main!(benches);
