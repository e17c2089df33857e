use criterion::{criterion_group, criterion_main, Criterion};
use invar_bench::{cyclic, d8, torus};
use invar_core::groebner::reduced_basis;
use invar_core::invariants::king_generators;
use invar_core::MonomialOrder;

fn groebner(c: &mut Criterion) {
    let gens = cyclic(4);
    let ring = gens[0].ring().clone();
    c.bench_function("reduced_basis cyclic-4 grevlex", |b| {
        b.iter(|| reduced_basis(&ring, &gens, MonomialOrder::GrevLex).unwrap())
    });
}

fn finite(c: &mut Criterion) {
    let (group, ring) = d8();
    c.bench_function("king d8", |b| b.iter(|| king_generators(&group, &ring, MonomialOrder::GrevLex).unwrap()));
    let m = ring.parse("x^5*y^3").unwrap();
    c.bench_function("reynolds d8 degree 8", |b| b.iter(|| group.reynolds(&m).unwrap()));
    c.bench_function("molien d8 to degree 32", |b| b.iter(|| group.molien_series(32).unwrap()));
}

fn algebraic(c: &mut Criterion) {
    let spec = torus();
    c.bench_function("derksen ideal torus", |b| b.iter(|| spec.derksen_ideal().unwrap()));
    c.bench_function("invariant field torus", |b| b.iter(|| spec.invariant_field_generators().unwrap()));
}

criterion_group!(benches, groebner, finite, algebraic);
criterion_main!(benches);
