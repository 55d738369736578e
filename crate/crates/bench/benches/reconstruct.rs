use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use persym_bench::{generate_spectrum, FamilyKind, SpectrumFamily};
use persym_core::{reconstruct, Algorithm};
use std::hint::black_box;

fn reconstruction(c: &mut Criterion) {
    let mut group = c.benchmark_group("reconstruct");
    for n in [16, 64, 128, 256] {
        let spec = generate_spectrum(&SpectrumFamily::new(FamilyKind::SymmetricLinear, n)).unwrap();
        for alg in Algorithm::ALL {
            group.bench_with_input(BenchmarkId::new(alg.id(), n), &spec, |b, spec| {
                b.iter(|| reconstruct(black_box(spec), alg).ok())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, reconstruction);
criterion_main!(benches);
