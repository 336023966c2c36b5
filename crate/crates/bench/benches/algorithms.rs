use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use mdbs_bench::reference_cycle;
use mdbs_core::canonical::{canonical_generator, minimal_polynomial_of_cycle};
use mdbs_core::gamma::{cycle_to_sequence, enumerate_hamiltonian, ExhaustiveGuard};
use mdbs_core::gf2poly::build_f;
use mdbs_core::seqkit::berlekamp_massey;

fn polynomial_gcd(c: &mut Criterion) {
    let mut group = c.benchmark_group("gcd_with_f");
    for n in [8u32, 10, 12] {
        let h = reference_cycle(n);
        let g = canonical_generator(&h).unwrap();
        let f = build_f(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| black_box(&g).gcd(black_box(&f)).unwrap())
        });
    }
    group.finish();
}

fn berlekamp_massey_on_cycles(c: &mut Criterion) {
    let mut group = c.benchmark_group("berlekamp_massey");
    for n in [8u32, 10, 12] {
        let s = cycle_to_sequence(&reference_cycle(n));
        group.bench_with_input(BenchmarkId::from_parameter(n), &s, |b, s| {
            b.iter(|| berlekamp_massey(black_box(s)))
        });
    }
    group.finish();
}

fn canonical_generators(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_generator");
    for n in [8u32, 10, 12] {
        let h = reference_cycle(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| {
            b.iter(|| canonical_generator(black_box(h)).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_n5", |b| {
        b.iter(|| {
            enumerate_hamiltonian(5, None, ExhaustiveGuard::default())
                .unwrap()
                .count()
        })
    });
    c.bench_function("reports_n5", |b| {
        let cycles: Vec<_> = enumerate_hamiltonian(5, None, ExhaustiveGuard::default())
            .unwrap()
            .collect();
        b.iter(|| {
            cycles
                .iter()
                .map(|h| minimal_polynomial_of_cycle(h).unwrap().span)
                .sum::<usize>()
        })
    });
}

criterion_group!(
    benches,
    polynomial_gcd,
    berlekamp_massey_on_cycles,
    canonical_generators,
    enumeration
);
criterion_main!(benches);
