//! Benchmarks for the hot paths: convolution, nullspace solving, and
//! decomposition certification.
//!
//! Run with `cargo bench -p incalg-bench`.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use incalg_bench::{chain, dense_element};
use incalg_core::decompose::certify;
use incalg_core::solver::{build_system, nullspace, random_coefficients};
use incalg_core::{ClassMember, MapClass, RingSpec};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn convolution(c: &mut Criterion) {
    let algebra = chain(6, RingSpec::Rationals);
    let a = dense_element(&algebra, 11);
    let b = dense_element(&algebra, 12);
    c.bench_function("convolve_chain6_rationals", |bench| {
        bench.iter(|| black_box(&a).convolve(black_box(&b)).expect("same algebra"))
    });
}

fn solving(c: &mut Criterion) {
    let mut group = c.benchmark_group("nullspace_pair_space");
    group.sample_size(10);
    for (name, ring) in [
        ("chain4_rationals", RingSpec::Rationals),
        ("chain4_gf5", RingSpec::ModN(5)),
    ] {
        let algebra = chain(4, ring);
        group.bench_function(name, |bench| {
            bench.iter(|| {
                let system =
                    build_system(black_box(&algebra), MapClass::GeneralizedJordanDerivation);
                nullspace(&system).expect("field ring")
            })
        });
    }
    group.finish();
}

fn certification(c: &mut Criterion) {
    let algebra = chain(4, RingSpec::Rationals);
    let system = build_system(&algebra, MapClass::GeneralizedJordanDerivation);
    let space = nullspace(&system).expect("field ring");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let coefficients = random_coefficients(algebra.ring(), space.dimension(), &mut rng);
    let member = space.sample(&coefficients).expect("coefficient count");
    let ClassMember::Pair(pair) = member else {
        unreachable!("pair class samples pairs");
    };
    c.bench_function("certify_chain4_rationals", |bench| {
        bench.iter(|| certify(black_box(&pair)).expect("hypotheses hold"))
    });
}

criterion_group!(benches, convolution, solving, certification);
criterion_main!(benches);
