use std::hint::black_box;

use burau_atlas::algebra::{factor_mod_p, resultant};
use burau_atlas::localgeom::{distance_equation, CharMode, VertexKind};
use burau_atlas::search::{cell_resultant, order_polynomial};
use burau_atlas::{burau_of_word, BraidWord};
use burau_atlas_bench::xi;
use criterion::{criterion_group, criterion_main, Criterion};

fn algebra(c: &mut Criterion) {
    let e = distance_equation(VertexKind::I1, VertexKind::II1, 5, 23, CharMode::GenericOdd).unwrap().poly;
    c.bench_function("cell_resultant N=23", |b| b.iter(|| cell_resultant(black_box(&e), 23)));
    let phi = order_polynomial(26);
    c.bench_function("resultant deg 12", |b| b.iter(|| resultant(black_box(&phi), black_box(&order_polynomial(21))).unwrap()));
    c.bench_function("factor Φ26(−t) mod 53", |b| b.iter(|| factor_mod_p(black_box(&phi), 53).unwrap()));

    let w: BraidWord = "s1^5 s2^-3 s1 s2^7 s1^-2 s2 t^2".parse().unwrap();
    c.bench_function("burau_of_word", |b| b.iter(|| burau_of_word(black_box(&w))));

    let x = xi(5, "t^2+2t+4");
    c.bench_function("ring pow", |b| b.iter(|| black_box(&x).pow(1_000_003)));
}

criterion_group!(benches, algebra);
criterion_main!(benches);
