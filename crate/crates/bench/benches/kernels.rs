use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use minkowski_core::angles::{ang_b, ang_p, ang_q, ang_s};
use minkowski_core::bisectors::{busemann_bisector, glogovskii_bisector};
use minkowski_core::functionals::{g_functional, sine, star_pair};
use minkowski_core::laws::{characterization_suite, SuiteConfig};
use minkowski_core::measures::dekster_tau;
use minkowski_core::{build_measure, regular_polygon, MeasureKind, NormedPlane, Vec2};

fn gauges(c: &mut Criterion) {
    let l4 = NormedPlane::lp(4.0).unwrap();
    let oct = regular_polygon(8, 0.1).unwrap();
    let v = Vec2::new(0.3, -1.7);
    c.bench_function("gauge/lp4", |b| b.iter(|| l4.gauge(black_box(v))));
    c.bench_function("gauge/octagon", |b| b.iter(|| oct.gauge(black_box(v))));
    c.bench_function("antinorm/lp4", |b| b.iter(|| l4.antinorm(black_box(v))));
}

fn functionals(c: &mut Criterion) {
    let l4 = NormedPlane::lp(4.0).unwrap();
    let (x, y) = (Vec2::new(1.0, 0.2), Vec2::new(0.4, 1.0));
    c.bench_function("sine/lp4", |b| b.iter(|| sine(&l4, black_box(x), black_box(y))));
    c.bench_function("star_pair/lp4", |b| b.iter(|| star_pair(&l4, black_box(x), black_box(y))));
    c.bench_function("g/lp4", |b| b.iter(|| g_functional(&l4, black_box(x), black_box(y))));
}

fn angles(c: &mut Criterion) {
    let l4 = NormedPlane::lp(4.0).unwrap();
    let (x, y) = (Vec2::new(1.0, 0.2), Vec2::new(-0.4, 1.0));
    c.bench_function("ang_p/lp4", |b| b.iter(|| ang_p(&l4, black_box(x), black_box(y))));
    c.bench_function("ang_s/lp4", |b| b.iter(|| ang_s(&l4, black_box(x), black_box(y))));
    c.bench_function("ang_b/lp4", |b| b.iter(|| ang_b(&l4, black_box(x), black_box(y))));
    c.bench_function("ang_q/lp4", |b| b.iter(|| ang_q(&l4, black_box(x), black_box(y))));
}

fn measures(c: &mut Criterion) {
    let l4 = NormedPlane::lp(4.0).unwrap();
    let hex = regular_polygon(6, 0.0).unwrap();
    c.bench_function("build_measure/lp4/arclen", |b| {
        b.iter(|| build_measure(&l4, MeasureKind::ArcLength, black_box(1024)))
    });
    c.bench_function("dekster_tau/hexagon", |b| b.iter(|| dekster_tau(&hex, black_box(1024))));
}

fn bisectors(c: &mut Criterion) {
    let l4 = NormedPlane::lp(4.0).unwrap();
    let (x, y) = (Vec2::new(1.0, 0.2), Vec2::new(-0.4, 1.0));
    c.bench_function("busemann/lp4", |b| b.iter(|| busemann_bisector(&l4, black_box(x), black_box(y))));
    c.bench_function("glogovskii/lp4", |b| {
        b.iter(|| glogovskii_bisector(&l4, black_box(x), black_box(y), 1e-12))
    });
}

fn laws(c: &mut Criterion) {
    let l4 = NormedPlane::lp(4.0).unwrap();
    let mut g = c.benchmark_group("laws");
    g.sample_size(10);
    g.bench_function("characterization/lp4", |b| {
        b.iter(|| characterization_suite(&l4, &SuiteConfig::with_seed(black_box(7))))
    });
    g.finish();
}

criterion_group!(benches, gauges, functionals, angles, measures, bisectors, laws);
criterion_main!(benches);
