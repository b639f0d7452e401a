use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use nilcortex::coadjoint::{jump_indices, orbit_dimension, Covector};
use nilcortex::cortex::{approximate_cortex, pullback_on_image, witness_sequence};
use nilcortex::exactmath::frac;
use nilcortex::gd::make_gd;
use nilcortex::sampling::RationalSampler;

fn layer_covector(seed: u64, n: usize) -> Covector {
    let mut sampler = RationalSampler::new(seed);
    let mut coords = sampler.vector(n);
    coords[0] = sampler.nonzero();
    Covector::new(coords)
}

fn bench_family(c: &mut Criterion) {
    c.bench_function("make_gd_6_validate", |b| {
        b.iter(|| {
            let g = make_gd(black_box(6)).unwrap();
            black_box(g.algebra().validate().jacobi_ok)
        })
    });

    let g6 = make_gd(6).unwrap();
    let ell6 = layer_covector(1, 24);
    c.bench_function("orbit_dimension_d6", |b| {
        b.iter(|| orbit_dimension(g6.algebra(), black_box(&ell6)).unwrap())
    });
    c.bench_function("jump_indices_d6", |b| {
        b.iter(|| jump_indices(g6.algebra(), black_box(&ell6)).unwrap())
    });

    c.bench_function("pullback_on_image_d6", |b| {
        b.iter(|| {
            assert!(pullback_on_image(black_box(6)).unwrap().is_zero());
        })
    });

    let mut sampler = RationalSampler::new(5);
    let d = 6usize;
    let n = 4 * d;
    let mut coords = vec![frac(0, 1); n];
    for j in 1..=d {
        coords[d + 2 * j - 2] = sampler.nonzero();
    }
    for i in 1..d {
        coords[d + 2 * i - 1] = sampler.rat();
    }
    let mut y2d = frac(0, 1);
    for i in 1..d {
        y2d += &coords[d + 2 * i - 1] / &coords[d + 2 * i - 2];
    }
    y2d *= &coords[d + 2 * d - 2];
    coords[d + 2 * d - 1] = y2d;
    let target = Covector::new(coords);
    let eps = [frac(1, 10), frac(1, 100), frac(1, 1000)];
    c.bench_function("witness_sequence_d6", |b| {
        b.iter(|| witness_sequence(black_box(6), &target, &eps).unwrap())
    });

    let h3 = nilcortex::liealg::LieAlgebra::heisenberg();
    c.bench_function("cloud_h3_1000", |b| {
        b.iter(|| approximate_cortex(&h3, black_box(1000), &[1.0, 0.5], (0.5, 2.0), 0).unwrap())
    });
}

criterion_group!(benches, bench_family);
criterion_main!(benches);
