use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use roegen_bench::{charge_sets, geodesic_states, metric_points, two_phase_instance};
use roegen_core::equilibrium::two_phase_solve;
use roegen_core::group::{carnot_compose_bch, GroupElement};
use roegen_core::horizon::{roundtrip_gap, HorizonFamily, HorizonKind, Labeling};
use roegen_core::subriemannian::{
    christoffel_closed, christoffel_fd, horizontal_lift_q, integrate_geodesic,
};

fn bench_christoffel(c: &mut Criterion) {
    let points = metric_points(256, 1);
    c.bench_function("christoffel_closed_256pts", |b| {
        b.iter(|| {
            for p in &points {
                black_box(christoffel_closed(black_box(p)).unwrap());
            }
        })
    });
    c.bench_function("christoffel_fd_256pts", |b| {
        b.iter(|| {
            for p in &points {
                black_box(christoffel_fd(black_box(p), 1e-5).unwrap());
            }
        })
    });
}

fn bench_geodesic(c: &mut Criterion) {
    let states = geodesic_states(4, 2);
    c.bench_function("rk4_unit_horizon_dt1e-3", |b| {
        b.iter(|| {
            for s in &states {
                black_box(integrate_geodesic(black_box(s), 1.0, 1e-3).unwrap());
            }
        })
    });
    let trajectories: Vec<_> = states
        .iter()
        .map(|s| integrate_geodesic(s, 1.0, 1e-3).unwrap())
        .collect();
    c.bench_function("horizontal_lift_1000_steps", |b| {
        b.iter(|| {
            for t in &trajectories {
                black_box(horizontal_lift_q(black_box(t), 0.0).unwrap());
            }
        })
    });
}

fn bench_two_phase(c: &mut Criterion) {
    let (m1, m2, totals, guess) = two_phase_instance();
    c.bench_function("two_phase_newton", |b| {
        b.iter(|| black_box(two_phase_solve((&m1, &m2), &totals, &guess).unwrap()))
    });
}

fn bench_horizon(c: &mut Criterion) {
    let kinds = [
        HorizonKind::new(HorizonFamily::ReissnerNordstrom, Labeling::Thermodynamic),
        HorizonKind::new(HorizonFamily::Kerr, Labeling::Thermodynamic),
        HorizonKind::new(HorizonFamily::Btz, Labeling::Thermodynamic),
    ];
    let sets: Vec<_> = (0..3).map(|f| charge_sets(1024, f, 3)).collect();
    c.bench_function("horizon_roundtrip_3x1024", |b| {
        b.iter(|| {
            for (kind, charges) in kinds.iter().zip(&sets) {
                for c in charges {
                    black_box(roundtrip_gap(kind, black_box(c)).unwrap());
                }
            }
        })
    });
}

fn bench_group(c: &mut Criterion) {
    let x = GroupElement::new(0.3, -1.2, 0.8, 2.0, -0.4);
    let y = GroupElement::new(-0.7, 0.5, 1.4, -0.9, 1.1);
    c.bench_function("carnot_bch_compose", |b| {
        b.iter(|| black_box(carnot_compose_bch(black_box(&x), black_box(&y))))
    });
}

criterion_group!(
    benches,
    bench_christoffel,
    bench_geodesic,
    bench_two_phase,
    bench_horizon,
    bench_group
);
criterion_main!(benches);
