use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lights_fixture::verify::{playout_check_sequential, verify_range_sequential, PlayoutConfig};
use lights_fixture::{grundy_fast, Component, Run};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_range");
    group.sample_size(10);
    for len in [10u32, 12, 14] {
        group.bench_with_input(BenchmarkId::new("sequential", len), &len, |b, &len| {
            b.iter(|| verify_range_sequential(len))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", len), &len, |b, &len| {
            b.iter(|| lights_fixture::verify::verify_range_parallel(len))
        });
    }
    group.finish();
}

fn playout(c: &mut Criterion) {
    let config = PlayoutConfig { max_pieces: 10, max_components: 3, samples: 1000, seed: 42 };
    let mut group = c.benchmark_group("playout_check");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| playout_check_sequential(config)));
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| lights_fixture::verify::playout_check_parallel(config))
    });
    group.finish();
}

fn fast_scan(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let random = Component::from_runs(
        (0..1_000_000).map(|_| if rng.gen_bool(0.5) { Run::Bulbs(1) } else { Run::Sockets(1) }),
    );
    let full_scan = Component::from_runs((0..333_333).flat_map(|_| [Run::Bulbs(1), Run::Sockets(2)]));
    c.bench_function("grundy_fast/random_1e6", |b| b.iter(|| grundy_fast(&random)));
    c.bench_function("grundy_fast/full_scan_1e6", |b| b.iter(|| grundy_fast(&full_scan)));
}

criterion_group!(benches, verify, playout, fast_scan);
criterion_main!(benches);
