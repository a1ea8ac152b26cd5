//! Compares the three routes to a coupling coefficient — closed form,
//! projector-ratio pipeline, and brute-force oracle — and times the dense
//! projector series on a tensor-product space.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use higgs_cgc::exactnum::rat;
use higgs_cgc::{
    apply_series, cgc_closed_form, cgc_via_projector_ratio, oracle_cgc, CgcQuery, HalfInt,
    ProductSpace, ProjectorSpec, QuadraticSurd, Rational,
};

fn hi(t: i64) -> HalfInt {
    HalfInt::from_twice(t)
}

fn queries() -> Vec<CgcQuery> {
    let mut out = Vec::new();
    for beta2 in [Rational::from_integer(0.into()), rat(1, 10)] {
        for (tj1, tj2, tj, tm1, tm2) in
            [(4, 4, 2, 2, -2), (4, 4, 4, 0, 0), (3, 4, 3, 1, 0), (4, 3, 1, 2, -1)]
        {
            out.push(
                CgcQuery::new(hi(tj1), hi(tj2), hi(tj), hi(tm1), hi(tm2), beta2.clone())
                    .expect("valid query"),
            );
        }
    }
    out
}

fn bench_routes(c: &mut Criterion) {
    let qs = queries();
    let mut group = c.benchmark_group("cgc-routes");
    group.bench_function("closed-form", |b| {
        b.iter(|| {
            for q in &qs {
                black_box(cgc_closed_form(black_box(q)).unwrap());
            }
        })
    });
    group.bench_function("projector-ratio", |b| {
        b.iter(|| {
            for q in &qs {
                black_box(cgc_via_projector_ratio(black_box(q)).unwrap());
            }
        })
    });
    group.bench_function("oracle", |b| {
        b.iter(|| {
            for q in &qs {
                black_box(
                    oracle_cgc(q.j1, q.j2, &q.beta2, q.j, q.m1, q.m2).unwrap(),
                );
            }
        })
    });
    group.finish();
}

fn bench_projector_series(c: &mut Criterion) {
    let beta2 = rat(1, 10);
    let space = ProductSpace::new(&[hi(4), hi(4)], beta2.clone()).unwrap();
    let spec = ProjectorSpec::highest(hi(2), hi(0), beta2).unwrap();
    let mut input = vec![QuadraticSurd::zero(); space.dim()];
    let ket = space.index_of_ns(&[1, 3]);
    input[ket] = QuadraticSurd::one();
    c.bench_function("projector-series 2x2 block", |b| {
        b.iter(|| black_box(apply_series(&spec, &space, black_box(&input)).unwrap()))
    });
}

criterion_group!(benches, bench_routes, bench_projector_series);
criterion_main!(benches);
