use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use twoval_core::decompose::decompose;
use twoval_core::dominance::compatibility_witness;
use twoval_core::psi::random_spec;
use twoval_core::scf::{csp_witness, is_essentially_based_and_monotonic};
use twoval_core::{enumerate_committees, ProfileSpace, ScfTable, VoterSet};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.bench_function("profile-space-2x3", |b| {
        b.iter(|| ProfileSpace::with_default_labels(black_box(2), black_box(3)).unwrap())
    });
    for n in [3u32, 4] {
        let carrier = VoterSet::from_mask((1 << n) - 1);
        group.bench_function(format!("committees-{n}-voters"), |b| {
            b.iter(|| enumerate_committees(black_box(carrier)).unwrap())
        });
    }
    group.finish();
}

// The three predicates agree on every two-valued table; the interesting
// question is what that agreement costs per check style.
fn characterizations(c: &mut Criterion) {
    let f = ScfTable::iia_counterexample();
    let (a, b) = f.range_pair().unwrap();
    let mut group = c.benchmark_group("characterizations");
    group.bench_function("manipulation-search", |bch| {
        bch.iter(|| csp_witness(black_box(&f)))
    });
    group.bench_function("dominance-scan", |bch| {
        bch.iter(|| compatibility_witness(black_box(&f), a, b).unwrap())
    });
    group.bench_function("base-and-monotonicity", |bch| {
        bch.iter(|| is_essentially_based_and_monotonic(black_box(&f), a, b).unwrap())
    });
    group.finish();
}

fn decomposition(c: &mut Criterion) {
    let f = ScfTable::iia_counterexample();
    let (a, b) = f.range_pair().unwrap();
    let space = Arc::new(ProfileSpace::with_default_labels(2, 3).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let random_table =
        std::iter::repeat_with(|| random_spec(&space, &mut rng).unwrap().to_table().unwrap())
            .find(|t| t.range_pair().is_ok())
            .unwrap();

    let mut group = c.benchmark_group("decomposition");
    group.bench_function("fixture", |bch| {
        bch.iter(|| decompose(black_box(&f), a, b, None).unwrap())
    });
    group.bench_function("fixture-roundtrip", |bch| {
        bch.iter(|| {
            decompose(black_box(&f), a, b, None)
                .unwrap()
                .to_table()
                .unwrap()
        })
    });
    let (ra, rb) = random_table.range_pair().unwrap();
    group.bench_function("seeded-random-table", |bch| {
        bch.iter(|| decompose(black_box(&random_table), ra, rb, None).unwrap())
    });
    group.finish();
}

criterion_group!(benches, enumeration, characterizations, decomposition);
criterion_main!(benches);
