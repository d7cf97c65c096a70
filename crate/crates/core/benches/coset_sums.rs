use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hsmf_core::exec::Exec;
use hsmf_core::jacobi::{jacobi_cosets, skew_eisenstein, JacobiPoint, JacobiSeries};
use hsmf_core::siegel::{coset_reps, eisenstein_p, SiegelPoint};
use std::hint::black_box;

fn siegel(c: &mut Criterion) {
    let z = SiegelPoint::from_real([0.1, 1.2, -0.2, 0.15, 0.3, 1.1]).unwrap();
    let mut g = c.benchmark_group("siegel-eisenstein");
    g.sample_size(10);
    for bound in [3, 5] {
        let fam = coset_reps(bound).unwrap();
        for exec in [Exec::Sequential, Exec::Parallel] {
            g.bench_with_input(BenchmarkId::new(format!("{:?}", exec), bound), &fam, |b, fam| {
                b.iter(|| eisenstein_p(5, 0.0, black_box(&z), fam, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn jacobi(c: &mut Criterion) {
    let p = JacobiPoint::from_parts(0.1, 1.1, -0.2, 0.1).unwrap();
    let series = JacobiSeries::Skew { k: 5, seed: 0.0 };
    let mut g = c.benchmark_group("skew-eisenstein");
    g.sample_size(10);
    for bound in [4, 8] {
        let fam = jacobi_cosets(bound).unwrap();
        for exec in [Exec::Sequential, Exec::Parallel] {
            g.bench_with_input(BenchmarkId::new(format!("{:?}", exec), bound), &fam, |b, fam| {
                b.iter(|| skew_eisenstein(series, 1, black_box(&p), fam, exec).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, siegel, jacobi);
criterion_main!(benches);
